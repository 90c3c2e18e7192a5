#include "braidrep/semidirect.hpp"

namespace braidrep {

namespace {

// Image of one free letter under one braid letter, appended to out.
void act_letter(const BraidLetter& b, const FreeLetter& f,
                std::vector<FreeLetter>& out) {
  int i = b.index;
  if (b.sign > 0) {
    if (f.index == i) {
      out.push_back({i + 1, f.sign});
    } else if (f.index == i + 1) {
      // g_{i+1} -> g_{i+1}^-1 g_i g_{i+1}
      if (f.sign > 0) {
        out.push_back({i + 1, -1});
        out.push_back({i, 1});
        out.push_back({i + 1, 1});
      } else {
        out.push_back({i + 1, -1});
        out.push_back({i, -1});
        out.push_back({i + 1, 1});
      }
    } else {
      out.push_back(f);
    }
  } else {
    if (f.index == i + 1) {
      out.push_back({i, f.sign});
    } else if (f.index == i) {
      // g_i -> g_i g_{i+1} g_i^-1
      if (f.sign > 0) {
        out.push_back({i, 1});
        out.push_back({i + 1, 1});
        out.push_back({i, -1});
      } else {
        out.push_back({i, 1});
        out.push_back({i + 1, -1});
        out.push_back({i, -1});
      }
    } else {
      out.push_back(f);
    }
  }
}

}  // namespace

FreeWord artin_act(const BraidWord& b, const FreeWord& w) {
  if (b.strands() != w.rank())
    throw PreconditionError("strand/rank mismatch in Artin action");
  std::vector<FreeLetter> cur(w.letters());
  std::vector<FreeLetter> next;
  // Left action: the rightmost braid letter acts first.
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    next.clear();
    next.reserve(cur.size() * 3);
    for (const auto& f : cur) act_letter(*it, f, next);
    cur = FreeWord(w.rank(), next).letters();
  }
  return FreeWord(w.rank(), cur);
}

SemidirectElement::SemidirectElement(FreeWord free, BraidWord braid)
    : free_(std::move(free)),
      braid_(std::move(braid)),
      nf_(garside_normal_form(braid_)) {
  if (free_.rank() != braid_.strands())
    throw PreconditionError("free rank and strand count must agree");
}

SemidirectElement SemidirectElement::identity(int n) {
  return SemidirectElement(FreeWord(n), BraidWord(n));
}

SemidirectElement SemidirectElement::from_free(const FreeWord& w) {
  return SemidirectElement(w, BraidWord(w.rank()));
}

SemidirectElement SemidirectElement::from_braid(const BraidWord& b) {
  return SemidirectElement(FreeWord(b.strands()), b);
}

bool SemidirectElement::operator==(const SemidirectElement& o) const {
  return free_ == o.free_ && nf_ == o.nf_;
}

bool SemidirectElement::operator<(const SemidirectElement& o) const {
  if (free_ != o.free_) return free_ < o.free_;
  return nf_ < o.nf_;
}

SemidirectElement sd_mul(const SemidirectElement& x, const SemidirectElement& y) {
  if (x.n() != y.n()) throw PreconditionError("size mismatch in semidirect product");
  return SemidirectElement(x.free_part() * artin_act(x.braid_part(), y.free_part()),
                           x.braid_part() * y.braid_part());
}

SemidirectElement sd_inv(const SemidirectElement& x) {
  BraidWord binv = x.braid_part().inverse();
  return SemidirectElement(artin_act(binv, x.free_part().inverse()), binv);
}

BraidWord embedded_free_generator(int n, int i) {
  if (i < 1 || i > n)
    throw PreconditionError("free generator index out of range");
  std::vector<BraidLetter> conj;
  for (int k = n; k >= i + 1; --k) conj.push_back({k, 1});
  std::vector<BraidLetter> ls = conj;
  ls.push_back({i, 1});
  ls.push_back({i, 1});
  for (auto it = conj.rbegin(); it != conj.rend(); ++it)
    ls.push_back({it->index, -1});
  return BraidWord(n + 1, std::move(ls));
}

BraidWord embed_sd_into_braid(const SemidirectElement& x) {
  int n = x.n();
  BraidWord out(n + 1);
  for (const auto& f : x.free_part().letters()) {
    BraidWord g = embedded_free_generator(n, f.index);
    out = out * (f.sign > 0 ? g : g.inverse());
  }
  for (const auto& l : x.braid_part().letters())
    out = out * BraidWord::generator(n + 1, l.index, l.sign);
  return out;
}

}  // namespace braidrep
