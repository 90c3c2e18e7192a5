#include "braidrep/braid.hpp"

#include <algorithm>
#include <unordered_map>

namespace braidrep {

Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  return p;
}

bool is_identity(const Perm& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] != i + 1) return false;
  return true;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i] - 1];
  return r;
}

Perm inverse_perm(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i] - 1] = static_cast<int>(i) + 1;
  return r;
}

Perm half_twist_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = n - i;
  return p;
}

std::vector<int> descents(const Perm& p) {
  std::vector<int> d;
  for (int i = 1; i < static_cast<int>(p.size()); ++i)
    if (p[i - 1] > p[i]) d.push_back(i);
  return d;
}

std::vector<int> perm_to_word(const Perm& p) {
  // Peel generators from the left: sigma_i divides the permutation braid
  // exactly at the descents of the one-line notation.
  std::vector<int> word;
  Perm q = p;
  for (;;) {
    int i = -1;
    for (int k = 1; k < static_cast<int>(q.size()); ++k)
      if (q[k - 1] > q[k]) {
        i = k;
        break;
      }
    if (i < 0) break;
    word.push_back(i);
    std::swap(q[i - 1], q[i]);
  }
  return word;
}

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw PreconditionError("braid word needs at least 1 strand");
}

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw PreconditionError("braid word needs at least 1 strand");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > strands_ - 1)
      throw PreconditionError("braid generator index " + std::to_string(l.index) +
                              " out of range for " + std::to_string(strands_) +
                              " strands");
    if (l.sign != 1 && l.sign != -1)
      throw PreconditionError("braid letter sign must be +1 or -1");
  }
}

BraidWord BraidWord::generator(int strands, int index, int sign) {
  return BraidWord(strands, {BraidLetter{index, sign}});
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  if (strands_ != o.strands_)
    throw PreconditionError("strand count mismatch in braid product");
  std::vector<BraidLetter> ls = letters_;
  ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
  return BraidWord(strands_, std::move(ls));
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> ls(letters_.rbegin(), letters_.rend());
  for (auto& l : ls) l.sign = -l.sign;
  return BraidWord(strands_, std::move(ls));
}

BraidWord BraidWord::on_strands(int m) const {
  if (m < strands_)
    throw PreconditionError("cannot shrink strand count of a braid word");
  return BraidWord(m, letters_);
}

int BraidWord::exponent_sum() const {
  int s = 0;
  for (const auto& l : letters_) s += l.sign;
  return s;
}

Perm BraidWord::permutation() const {
  Perm p = identity_perm(strands_);
  for (const auto& l : letters_) std::swap(p[l.index - 1], p[l.index]);
  return p;
}

bool BraidNormalForm::operator<(const BraidNormalForm& o) const {
  if (strands != o.strands) return strands < o.strands;
  if (delta_pow != o.delta_pow) return delta_pow < o.delta_pow;
  return factors < o.factors;
}

BraidWord BraidNormalForm::canonical_word() const {
  std::vector<BraidLetter> ls;
  std::vector<int> delta_word = perm_to_word(half_twist_perm(strands));
  for (int k = 0; k < std::abs(delta_pow); ++k) {
    if (delta_pow > 0) {
      for (int i : delta_word) ls.push_back({i, 1});
    } else {
      for (auto it = delta_word.rbegin(); it != delta_word.rend(); ++it)
        ls.push_back({*it, -1});
    }
  }
  for (const auto& f : factors)
    for (int i : perm_to_word(f)) ls.push_back({i, 1});
  return BraidWord(strands, std::move(ls));
}

namespace {

// tau(f) = delta^-1 f delta; an involution on permutation braids.
Perm tau(const Perm& f) {
  int n = static_cast<int>(f.size());
  Perm r(n);
  for (int p = 0; p < n; ++p) r[p] = n + 1 - f[n - 1 - p];
  return r;
}

struct NormalFormState {
  int n;
  int delta = 0;
  std::vector<Perm> factors;

  void push_positive(int i) {
    Perm s = identity_perm(n);
    std::swap(s[i - 1], s[i]);
    factors.push_back(std::move(s));
  }

  // sigma_i^-1 = delta^-1 (delta sigma_i^-1); conjugating the accumulated
  // factors moves the delta^-1 to the front. The complement delta sigma_i^-1
  // has one-line p -> s_i(w0(p)), i.e. the half twist with the values i, i+1
  // exchanged.
  void push_negative(int i) {
    for (auto& f : factors) f = tau(f);
    delta -= 1;
    Perm r = half_twist_perm(n);
    for (int p = 0; p < n; ++p) {
      if (r[p] == i)
        r[p] = i + 1;
      else if (r[p] == i + 1)
        r[p] = i;
    }
    factors.push_back(std::move(r));
  }

  void left_weight_all() {
    bool changed = true;
    while (changed) {
      changed = false;
      drop_identities();
      extract_deltas();
      for (int j = static_cast<int>(factors.size()) - 2; j >= 0; --j) {
        Perm& a = factors[j];
        Perm& b = factors[j + 1];
        for (;;) {
          Perm a_inv = inverse_perm(a);
          int move = -1;
          for (int i = 1; i < n; ++i) {
            if (b[i - 1] > b[i] && !(a_inv[i - 1] > a_inv[i])) {
              move = i;
              break;
            }
          }
          if (move < 0) break;
          // a <- a sigma_i (swap values), b <- sigma_i^-1 b (swap entries)
          for (int p = 0; p < n; ++p) {
            if (a[p] == move)
              a[p] = move + 1;
            else if (a[p] == move + 1)
              a[p] = move;
          }
          std::swap(b[move - 1], b[move]);
          changed = true;
        }
      }
    }
    drop_identities();
    extract_deltas();
  }

  void drop_identities() {
    factors.erase(std::remove_if(factors.begin(), factors.end(),
                                 [](const Perm& f) { return is_identity(f); }),
                  factors.end());
  }

  void extract_deltas() {
    Perm w0 = half_twist_perm(n);
    for (std::size_t j = 0; j < factors.size();) {
      if (factors[j] == w0) {
        for (std::size_t k = 0; k < j; ++k) factors[k] = tau(factors[k]);
        factors.erase(factors.begin() + static_cast<long>(j));
        delta += 1;
        j = 0;
      } else {
        ++j;
      }
    }
  }
};

BraidNormalForm compute_normal_form(const BraidWord& w) {
  NormalFormState st;
  st.n = w.strands();
  for (const auto& l : w.letters()) {
    if (l.sign > 0)
      st.push_positive(l.index);
    else
      st.push_negative(l.index);
  }
  st.left_weight_all();
  return BraidNormalForm{st.n, st.delta, std::move(st.factors)};
}

struct WordKey {
  int strands;
  std::vector<BraidLetter> letters;
  bool operator==(const WordKey&) const = default;
};

struct WordKeyHash {
  std::size_t operator()(const WordKey& k) const {
    std::size_t h = std::hash<int>()(k.strands);
    for (const auto& l : k.letters)
      h = h * 1000003u + static_cast<std::size_t>(l.index * 2 + (l.sign > 0));
    return h;
  }
};

}  // namespace

const BraidNormalForm& garside_normal_form(const BraidWord& w) {
  thread_local std::unordered_map<WordKey, BraidNormalForm, WordKeyHash> cache;
  WordKey key{w.strands(), w.letters()};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (cache.size() > 2'000'000) cache.clear();
  auto [ins, ok] = cache.emplace(std::move(key), compute_normal_form(w));
  return ins->second;
}

bool braid_eq(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw PreconditionError("strand count mismatch in braid comparison");
  return garside_normal_form(a) == garside_normal_form(b);
}

}  // namespace braidrep
