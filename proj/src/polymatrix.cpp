#include "braidrep/polymatrix.hpp"

#include <map>

namespace braidrep {

PolyMatrix::PolyMatrix(int rows, int cols, VarSetPtr vars)
    : rows_(rows), cols_(cols), vars_(std::move(vars)) {
  if (rows < 1 || cols < 1) throw PreconditionError("matrix needs positive shape");
  entries_.assign(static_cast<std::size_t>(rows) * cols, LaurentPoly(vars_));
}

PolyMatrix PolyMatrix::identity(int size, VarSetPtr vars) {
  PolyMatrix m(size, size, vars);
  for (int i = 0; i < size; ++i) m.at(i, i) = LaurentPoly::one(vars);
  return m;
}

const LaurentPoly& PolyMatrix::at(int r, int c) const {
  return entries_[static_cast<std::size_t>(r) * cols_ + c];
}

LaurentPoly& PolyMatrix::at(int r, int c) {
  return entries_[static_cast<std::size_t>(r) * cols_ + c];
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw PreconditionError("shape mismatch in matrix product");
  if (!(*vars_ == *o.vars_)) {
    VarSetPtr merged = merge_varsets(vars_, o.vars_);
    return promoted(merged) * o.promoted(merged);
  }
  PolyMatrix r(rows_, o.cols_, vars_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const LaurentPoly& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const LaurentPoly& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw PreconditionError("shape mismatch in matrix sum");
  if (!(*vars_ == *o.vars_)) {
    VarSetPtr merged = merge_varsets(vars_, o.vars_);
    return promoted(merged) + o.promoted(merged);
  }
  PolyMatrix r(rows_, cols_, vars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  return *this + o.scaled(LaurentPoly::constant(-1, o.vars()));
}

PolyMatrix PolyMatrix::scaled(const LaurentPoly& c) const {
  if (!(*vars_ == *c.vars())) {
    VarSetPtr merged = merge_varsets(vars_, c.vars());
    return promoted(merged).scaled(c.promoted(merged));
  }
  PolyMatrix r(rows_, cols_, vars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) * c;
  return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  if (!(*vars_ == *o.vars_)) {
    VarSetPtr merged = merge_varsets(vars_, o.vars_);
    return promoted(merged) == o.promoted(merged);
  }
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] != o.entries_[i]) return false;
  return true;
}

bool PolyMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::substituted(std::size_t var_index,
                                   const Rational& value) const {
  PolyMatrix r(rows_, cols_, vars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).substitute(var_index, value);
  return r;
}

PolyMatrix PolyMatrix::promoted(const VarSetPtr& bigger) const {
  PolyMatrix r(rows_, cols_, bigger);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).promoted(bigger);
  return r;
}

LaurentPoly PolyMatrix::det_of(const std::vector<int>& row_ids,
                               const std::vector<int>& col_ids) const {
  // DP over column subsets, rows taken in order.
  int d = static_cast<int>(row_ids.size());
  if (d == 0) return LaurentPoly::one(vars_);
  std::map<unsigned, LaurentPoly> cur;
  cur[0u] = LaurentPoly::one(vars_);
  for (int r = 0; r < d; ++r) {
    std::map<unsigned, LaurentPoly> next;
    for (const auto& [mask, val] : cur) {
      for (int c = 0; c < d; ++c) {
        if (mask & (1u << c)) continue;
        const LaurentPoly& e = at(row_ids[r], col_ids[c]);
        if (e.is_zero()) continue;
        // Choosing column c for row r adds one inversion per already-used
        // column greater than c.
        int used_gt = 0;
        for (int c2 = c + 1; c2 < d; ++c2)
          if (mask & (1u << c2)) ++used_gt;
        LaurentPoly contrib = val * e;
        if (used_gt % 2 == 1) contrib = -contrib;
        unsigned m2 = mask | (1u << c);
        auto it = next.find(m2);
        if (it == next.end())
          next.emplace(m2, contrib);
        else
          it->second += contrib;
      }
    }
    cur = std::move(next);
  }
  unsigned full = d >= 32 ? 0u : ((1u << d) - 1u);
  auto it = cur.find(full);
  return it == cur.end() ? LaurentPoly::zero(vars_) : it->second;
}

LaurentPoly PolyMatrix::det() const {
  if (rows_ != cols_) throw PreconditionError("determinant of non-square matrix");
  if (rows_ > 16) throw PreconditionError("determinant dimension cap exceeded");
  std::vector<int> ids(rows_);
  for (int i = 0; i < rows_; ++i) ids[i] = i;
  return det_of(ids, ids);
}

LaurentPoly PolyMatrix::char_poly(const std::string& x_name) const {
  if (rows_ != cols_) throw PreconditionError("char poly of non-square matrix");
  if (vars_->index_of(x_name))
    throw PreconditionError("char poly variable already in ring: " + x_name);
  std::vector<std::string> names = vars_->names();
  names.push_back(x_name);
  VarSetPtr ext = VarSet::make(names);
  PolyMatrix m = promoted(ext);
  LaurentPoly x = LaurentPoly::variable(x_name, ext);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = -m.at(i, j);
    m.at(i, i) += x;
  }
  return m.det();
}

PolyMatrix PolyMatrix::inverse_unit_det() const {
  if (rows_ != cols_) throw PreconditionError("inverse of non-square matrix");
  if (rows_ > 8)
    throw PreconditionError(
        "exact inverse capped at dimension 8; supply inverse images explicitly");
  LaurentPoly d = det();
  if (!d.is_unit())
    throw PreconditionError("matrix determinant is not a unit: " + format_poly(d));
  LaurentPoly dinv = d.inverse();
  PolyMatrix inv(rows_, cols_, vars_);
  std::vector<int> rows_all, cols_all;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      rows_all.clear();
      cols_all.clear();
      for (int k = 0; k < rows_; ++k) {
        if (k != r) rows_all.push_back(k);
        if (k != c) cols_all.push_back(k);
      }
      LaurentPoly cof = det_of(rows_all, cols_all);
      if ((r + c) % 2 == 1) cof = -cof;
      inv.at(c, r) = cof * dinv;  // adjugate transposes indices
    }
  return inv;
}

PolyMatrix assemble_blocks(int rows, int cols,
                           const std::vector<PolyMatrix>& blocks) {
  if (blocks.empty() || static_cast<int>(blocks.size()) != rows * cols)
    throw PreconditionError("block count mismatch");
  int dr = blocks[0].rows(), dc = blocks[0].cols();
  VarSetPtr vars = blocks[0].vars();
  for (const auto& b : blocks) {
    if (b.rows() != dr || b.cols() != dc)
      throw PreconditionError("blocks must share a common shape");
    vars = merge_varsets(vars, b.vars());
  }
  PolyMatrix out(rows * dr, cols * dc, vars);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      PolyMatrix b = blocks[static_cast<std::size_t>(r) * cols + c].promoted(vars);
      for (int i = 0; i < dr; ++i)
        for (int j = 0; j < dc; ++j) out.at(r * dr + i, c * dc + j) = b.at(i, j);
    }
  return out;
}

}  // namespace braidrep
