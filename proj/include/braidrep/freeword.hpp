#ifndef BRAIDREP_FREEWORD_HPP
#define BRAIDREP_FREEWORD_HPP

#include <vector>

#include "braidrep/common.hpp"

namespace braidrep {

struct FreeLetter {
  int index;  // 1-based, in [1, rank]
  int sign;   // +1 or -1
  bool operator==(const FreeLetter&) const = default;
  auto operator<=>(const FreeLetter&) const = default;
};

// A freely reduced word in the generators g_1..g_rank. Construction
// reduces, so adjacent x x^-1 pairs never survive.
class FreeWord {
public:
  explicit FreeWord(int rank);
  FreeWord(int rank, const std::vector<FreeLetter>& letters);
  static FreeWord generator(int rank, int index, int sign = 1);

  int rank() const { return rank_; }
  const std::vector<FreeLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  FreeWord operator*(const FreeWord& o) const;
  FreeWord inverse() const;
  FreeWord on_rank(int m) const;

  bool operator==(const FreeWord& o) const = default;
  auto operator<=>(const FreeWord& o) const = default;

private:
  int rank_;
  std::vector<FreeLetter> letters_;
};

// The unique freely reduced form of a raw letter list; idempotent.
FreeWord free_reduce(const std::vector<FreeLetter>& letters, int rank);

}  // namespace braidrep

#endif
