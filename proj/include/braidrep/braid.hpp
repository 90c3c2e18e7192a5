#ifndef BRAIDREP_BRAID_HPP
#define BRAIDREP_BRAID_HPP

#include <cstdint>
#include <vector>

#include "braidrep/common.hpp"

namespace braidrep {

// Permutations of {1..n} in one-line notation: perm[p-1] is the image of
// position p. Braid words compose left to right, so the permutation of a
// concatenation is compose(first, second).
using Perm = std::vector<int>;

Perm identity_perm(int n);
bool is_identity(const Perm& p);
// (a then b): result[p] = b[a[p]].
Perm compose(const Perm& a, const Perm& b);
Perm inverse_perm(const Perm& p);
// The half twist: p -> n+1-p.
Perm half_twist_perm(int n);
// Positions i with p(i) > p(i+1); equals the starting set of the
// permutation braid of p. The finishing set is descents(inverse_perm(p)).
std::vector<int> descents(const Perm& p);
// A reduced word for the permutation braid of p (letters are 1-based
// generator indices).
std::vector<int> perm_to_word(const Perm& p);

struct BraidLetter {
  int index;  // 1-based, in [1, strands-1]
  int sign;   // +1 or -1
  bool operator==(const BraidLetter&) const = default;
};

// A word in the Artin generators of B_n. Words are kept as written; the
// group element they represent is recovered through the Garside normal
// form below.
class BraidWord {
public:
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<BraidLetter> letters);
  static BraidWord generator(int strands, int index, int sign = 1);

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  BraidWord operator*(const BraidWord& o) const;
  BraidWord inverse() const;
  // Same letters, read in B_m for m >= strands.
  BraidWord on_strands(int m) const;

  int exponent_sum() const;
  Perm permutation() const;
  bool is_pure() const { return is_identity(permutation()); }

  // Letter-by-letter identity; group equality is braid_eq.
  bool operator==(const BraidWord& o) const = default;

private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

// Left-greedy Garside normal form: delta_pow half twists followed by
// left-weighted permutation factors, none trivial and none the half twist.
// Two words represent the same element of B_n iff their normal forms are
// identical.
struct BraidNormalForm {
  int strands = 1;
  int delta_pow = 0;
  std::vector<Perm> factors;

  bool operator==(const BraidNormalForm&) const = default;
  bool operator<(const BraidNormalForm& o) const;

  // A concrete word representing this element (deterministic).
  BraidWord canonical_word() const;
};

// Memoized per thread; safe to call concurrently.
const BraidNormalForm& garside_normal_form(const BraidWord& w);

bool braid_eq(const BraidWord& a, const BraidWord& b);

}  // namespace braidrep

#endif
