#include "braidrep/group_ring.hpp"

namespace braidrep {

GroupRingElement::GroupRingElement(int n, VarSetPtr vars)
    : n_(n), vars_(std::move(vars)) {
  if (n < 1) throw PreconditionError("group ring needs n >= 1");
}

GroupRingElement GroupRingElement::zero(int n, VarSetPtr vars) {
  return GroupRingElement(n, std::move(vars));
}

GroupRingElement GroupRingElement::one(int n, VarSetPtr vars) {
  GroupRingElement e(n, vars);
  e.terms_.emplace(SemidirectElement::identity(n), LaurentPoly::one(vars));
  return e;
}

GroupRingElement GroupRingElement::from_element(const SemidirectElement& g,
                                                VarSetPtr vars) {
  GroupRingElement e(g.n(), vars);
  e.terms_.emplace(g, LaurentPoly::one(vars));
  return e;
}

GroupRingElement GroupRingElement::from_free(const FreeWord& w, VarSetPtr vars) {
  return from_element(SemidirectElement::from_free(w), std::move(vars));
}

GroupRingElement GroupRingElement::from_braid(const BraidWord& b, VarSetPtr vars) {
  return from_element(SemidirectElement::from_braid(b), std::move(vars));
}

bool GroupRingElement::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_identity() &&
         terms_.begin()->second.is_one();
}

void GroupRingElement::add_term(const SemidirectElement& g, const LaurentPoly& c) {
  if (g.n() != n_) throw PreconditionError("n mismatch in group ring term");
  if (c.is_zero()) return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  if (n_ != o.n_) throw PreconditionError("n mismatch in group ring sum");
  GroupRingElement r = *this;
  for (const auto& [g, c] : o.terms_) r.add_term(g, c);
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  return *this + (-o);
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r(n_, vars_);
  for (const auto& [g, c] : terms_) r.terms_.emplace(g, -c);
  return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  if (n_ != o.n_) throw PreconditionError("n mismatch in group ring product");
  GroupRingElement r(n_, vars_);
  for (const auto& [g1, c1] : terms_)
    for (const auto& [g2, c2] : o.terms_) r.add_term(sd_mul(g1, g2), c1 * c2);
  return r;
}

GroupRingElement GroupRingElement::scaled(const LaurentPoly& c) const {
  GroupRingElement r(n_, vars_);
  if (c.is_zero()) return r;
  for (const auto& [g, c0] : terms_) {
    LaurentPoly prod = c0 * c;
    if (!prod.is_zero()) r.terms_.emplace(g, prod);
  }
  return r;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
  if (n_ != o.n_) return false;
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (!(it->first == jt->first)) return false;
    if (it->second != jt->second) return false;
  }
  return true;
}

GroupRingElement GroupRingElement::acted_by(const BraidWord& b) const {
  GroupRingElement r(n_, vars_);
  for (const auto& [g, c] : terms_) {
    if (!g.braid_part().empty() && !(g.braid_nf().delta_pow == 0 && g.braid_nf().factors.empty()))
      throw PreconditionError("Artin action on a term with nontrivial braid part");
    r.add_term(SemidirectElement::from_free(artin_act(b, g.free_part())), c);
  }
  return r;
}

GroupRingMatrix::GroupRingMatrix(int rows, int cols, int n, VarSetPtr vars)
    : rows_(rows), cols_(cols), n_(n), vars_(std::move(vars)) {
  if (rows < 1 || cols < 1) throw PreconditionError("matrix needs positive shape");
  entries_.assign(static_cast<std::size_t>(rows) * cols,
                  GroupRingElement::zero(n_, vars_));
}

GroupRingMatrix GroupRingMatrix::identity(int size, int n, VarSetPtr vars) {
  GroupRingMatrix m(size, size, n, vars);
  for (int i = 0; i < size; ++i) m.at(i, i) = GroupRingElement::one(n, vars);
  return m;
}

const GroupRingElement& GroupRingMatrix::at(int r, int c) const {
  return entries_[static_cast<std::size_t>(r) * cols_ + c];
}

GroupRingElement& GroupRingMatrix::at(int r, int c) {
  return entries_[static_cast<std::size_t>(r) * cols_ + c];
}

GroupRingMatrix GroupRingMatrix::operator*(const GroupRingMatrix& o) const {
  if (cols_ != o.rows_) throw PreconditionError("shape mismatch in matrix product");
  if (n_ != o.n_) throw PreconditionError("n mismatch in matrix product");
  GroupRingMatrix r(rows_, o.cols_, n_, vars_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const GroupRingElement& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const GroupRingElement& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + a * b;
      }
    }
  return r;
}

GroupRingMatrix GroupRingMatrix::operator+(const GroupRingMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw PreconditionError("shape mismatch in matrix sum");
  GroupRingMatrix r(rows_, cols_, n_, vars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
  return r;
}

GroupRingMatrix GroupRingMatrix::operator-(const GroupRingMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw PreconditionError("shape mismatch in matrix difference");
  GroupRingMatrix r(rows_, cols_, n_, vars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
  return r;
}

GroupRingMatrix GroupRingMatrix::scalar_lmul(const GroupRingElement& x) const {
  GroupRingMatrix r(rows_, cols_, n_, vars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = x * at(i, j);
  return r;
}

GroupRingMatrix GroupRingMatrix::scalar_rmul(const GroupRingElement& x) const {
  GroupRingMatrix r(rows_, cols_, n_, vars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) * x;
  return r;
}

GroupRingMatrix GroupRingMatrix::acted_by(const BraidWord& b) const {
  GroupRingMatrix r(rows_, cols_, n_, vars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).acted_by(b);
  return r;
}

bool GroupRingMatrix::operator==(const GroupRingMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw PreconditionError("shape mismatch in matrix comparison");
  if (n_ != o.n_) throw PreconditionError("n mismatch in matrix comparison");
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != o.at(i, j)) return false;
  return true;
}

bool GroupRingMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

}  // namespace braidrep
