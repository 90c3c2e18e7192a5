#include "braidrep/freeword.hpp"

namespace braidrep {

FreeWord::FreeWord(int rank) : rank_(rank) {
  if (rank < 1) throw PreconditionError("free word needs rank >= 1");
}

FreeWord::FreeWord(int rank, const std::vector<FreeLetter>& letters)
    : rank_(rank) {
  if (rank < 1) throw PreconditionError("free word needs rank >= 1");
  letters_.reserve(letters.size());
  for (const auto& l : letters) {
    if (l.index < 1 || l.index > rank_)
      throw PreconditionError("free generator index " + std::to_string(l.index) +
                              " out of range for rank " + std::to_string(rank_));
    if (l.sign != 1 && l.sign != -1)
      throw PreconditionError("free letter sign must be +1 or -1");
    if (!letters_.empty() && letters_.back().index == l.index &&
        letters_.back().sign == -l.sign)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

FreeWord FreeWord::generator(int rank, int index, int sign) {
  return FreeWord(rank, {FreeLetter{index, sign}});
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  if (rank_ != o.rank_) throw PreconditionError("rank mismatch in free product");
  std::vector<FreeLetter> ls = letters_;
  ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
  return FreeWord(rank_, ls);
}

FreeWord FreeWord::inverse() const {
  std::vector<FreeLetter> ls(letters_.rbegin(), letters_.rend());
  for (auto& l : ls) l.sign = -l.sign;
  return FreeWord(rank_, ls);
}

FreeWord FreeWord::on_rank(int m) const {
  if (m < rank_) throw PreconditionError("cannot shrink rank of a free word");
  return FreeWord(m, letters_);
}

FreeWord free_reduce(const std::vector<FreeLetter>& letters, int rank) {
  return FreeWord(rank, letters);
}

}  // namespace braidrep
