#ifndef BRAIDREP_SEMIDIRECT_HPP
#define BRAIDREP_SEMIDIRECT_HPP

#include "braidrep/braid.hpp"
#include "braidrep/freeword.hpp"

namespace braidrep {

// The action of B_n on F_n determined by the semidirect relations
//   g_{i+1} sigma_i = sigma_i g_i
//   g_i sigma_i     = sigma_i g_i g_{i+1} g_i^-1
//   g_j sigma_i     = sigma_i g_j          (j not in {i, i+1})
// so that sigma_i sends g_i -> g_{i+1}, g_{i+1} -> g_{i+1}^-1 g_i g_{i+1}.
// This is a left action: artin_act(a*b, w) = artin_act(a, artin_act(b, w)).
FreeWord artin_act(const BraidWord& b, const FreeWord& w);

// An element w * beta of F_n |x B_n in normal form. Equality compares the
// reduced free part and the Garside normal form of the braid part; the
// stored braid letters are just a representative.
class SemidirectElement {
public:
  SemidirectElement(FreeWord free, BraidWord braid);
  static SemidirectElement identity(int n);
  static SemidirectElement from_free(const FreeWord& w);
  static SemidirectElement from_braid(const BraidWord& b);

  int n() const { return free_.rank(); }
  const FreeWord& free_part() const { return free_; }
  const BraidWord& braid_part() const { return braid_; }
  const BraidNormalForm& braid_nf() const { return nf_; }
  bool is_identity() const { return free_.empty() && nf_.delta_pow == 0 && nf_.factors.empty(); }

  bool operator==(const SemidirectElement& o) const;
  bool operator<(const SemidirectElement& o) const;

private:
  FreeWord free_;
  BraidWord braid_;
  BraidNormalForm nf_;
};

// (w1, b1)(w2, b2) = (w1 * artin_act(b1, w2), b1 b2).
SemidirectElement sd_mul(const SemidirectElement& x, const SemidirectElement& y);
// (w, b)^-1 = (artin_act(b^-1, w^-1), b^-1).
SemidirectElement sd_inv(const SemidirectElement& x);

// The free generator g_i of F_n realized in B_{n+1}:
//   (sigma_n ... sigma_{i+1}) sigma_i^2 (sigma_n ... sigma_{i+1})^-1.
BraidWord embedded_free_generator(int n, int i);

// The injection F_n |x B_n -> B_{n+1}: g_i to the word above, sigma_i to
// sigma_i.
BraidWord embed_sd_into_braid(const SemidirectElement& x);

}  // namespace braidrep

#endif
