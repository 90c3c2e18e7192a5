#include "braidrep/phi.hpp"

namespace braidrep {

namespace {

GroupRingElement gre_one(int n) {
  return GroupRingElement::one(n, VarSet::empty());
}

GroupRingElement gre_free(int n, int i, int sign = 1) {
  return GroupRingElement::from_free(FreeWord::generator(n, i, sign),
                                     VarSet::empty());
}

}  // namespace

GroupRingMatrix r_matrix(int i, int n) {
  if (i < 1 || i > n - 1)
    throw PreconditionError("R block index out of range");
  GroupRingMatrix m = GroupRingMatrix::identity(n, n, VarSet::empty());
  int r = i - 1;
  m.at(r, r) = GroupRingElement::zero(n, VarSet::empty());
  m.at(r, r + 1) = gre_free(n, i);
  m.at(r + 1, r) = gre_one(n);
  m.at(r + 1, r + 1) = gre_one(n) - gre_free(n, i);
  return m;
}

GroupRingMatrix r_matrix_inv(int i, int n) {
  if (i < 1 || i > n - 1)
    throw PreconditionError("R block index out of range");
  GroupRingMatrix m = GroupRingMatrix::identity(n, n, VarSet::empty());
  int r = i - 1;
  m.at(r, r) = gre_one(n) - gre_free(n, i, -1);
  m.at(r, r + 1) = gre_one(n);
  m.at(r + 1, r) = gre_free(n, i, -1);
  m.at(r + 1, r + 1) = GroupRingElement::zero(n, VarSet::empty());
  return m;
}

namespace {

GroupRingMatrix phi_letter(const BraidLetter& l, int n) {
  GroupRingElement scalar = GroupRingElement::from_braid(
      BraidWord::generator(n, l.index, l.sign), VarSet::empty());
  if (l.sign > 0) return r_matrix(l.index, n).scalar_lmul(scalar);
  return r_matrix_inv(l.index, n).scalar_rmul(scalar);
}

}  // namespace

UniversalImage phi(const BraidWord& b) {
  int n = b.strands();
  GroupRingMatrix m = GroupRingMatrix::identity(n, n, VarSet::empty());
  for (const auto& l : b.letters()) m = m * phi_letter(l, n);
  return UniversalImage{n, std::move(m)};
}

std::pair<GroupRingMatrix, BraidWord> factor_entries(const BraidWord& b) {
  int n = b.strands();
  GroupRingMatrix acc = GroupRingMatrix::identity(n, n, VarSet::empty());
  BraidWord prefix(n);
  for (const auto& l : b.letters()) {
    // Right-scalar form of the letter image: phi(sigma_i) = N sigma_i with
    // N = sigma_i |> R_i, and phi(sigma_i^-1) = R_i^-1 sigma_i^-1 as given.
    GroupRingMatrix block = l.sign > 0
        ? r_matrix(l.index, n).acted_by(BraidWord::generator(n, l.index, 1))
        : r_matrix_inv(l.index, n);
    acc = acc * block.acted_by(prefix);
    prefix = prefix * BraidWord::generator(n, l.index, l.sign);
  }
  return {std::move(acc), std::move(prefix)};
}

GroupRingMatrix s_matrix(int i, int n) {
  if (n < 2) throw PreconditionError("reduced construction needs n >= 2");
  if (i < 1 || i > n - 1)
    throw PreconditionError("S block index out of range");
  auto vars = VarSet::empty();
  int size = n - 1;
  GroupRingMatrix m = GroupRingMatrix::identity(size, n, vars);
  // S_i occupies rows/cols i-1, i, i+1; positions outside [1, n-1] are cut
  // off by the edge of the matrix. The corner entry is 1, which is what the
  // displayed inverse and the displayed edge matrix for sigma_1 force.
  GroupRingElement S[3][3] = {
      {gre_one(n), gre_free(n, i), GroupRingElement::zero(n, vars)},
      {GroupRingElement::zero(n, vars), -gre_free(n, i), GroupRingElement::zero(n, vars)},
      {GroupRingElement::zero(n, vars), gre_one(n), gre_one(n)}};
  for (int r = 0; r < 3; ++r) {
    int row = i - 1 + r;  // 1-based target index
    if (row < 1 || row > size) continue;
    for (int c = 0; c < 3; ++c) {
      int col = i - 1 + c;
      if (col < 1 || col > size) continue;
      m.at(row - 1, col - 1) = S[r][c];
    }
  }
  return m;
}

GroupRingMatrix s_matrix_inv(int i, int n) {
  if (n < 2) throw PreconditionError("reduced construction needs n >= 2");
  if (i < 1 || i > n - 1)
    throw PreconditionError("S block index out of range");
  auto vars = VarSet::empty();
  int size = n - 1;
  GroupRingMatrix m = GroupRingMatrix::identity(size, n, vars);
  GroupRingElement S[3][3] = {
      {gre_one(n), gre_one(n), GroupRingElement::zero(n, vars)},
      {GroupRingElement::zero(n, vars), -gre_free(n, i, -1), GroupRingElement::zero(n, vars)},
      {GroupRingElement::zero(n, vars), gre_free(n, i, -1), gre_one(n)}};
  for (int r = 0; r < 3; ++r) {
    int row = i - 1 + r;
    if (row < 1 || row > size) continue;
    for (int c = 0; c < 3; ++c) {
      int col = i - 1 + c;
      if (col < 1 || col > size) continue;
      m.at(row - 1, col - 1) = S[r][c];
    }
  }
  return m;
}

namespace {

GroupRingMatrix phi_r_letter(const BraidLetter& l, int n) {
  GroupRingElement scalar = GroupRingElement::from_braid(
      BraidWord::generator(n, l.index, l.sign), VarSet::empty());
  if (l.sign > 0) return s_matrix(l.index, n).scalar_lmul(scalar);
  return s_matrix_inv(l.index, n).scalar_rmul(scalar);
}

}  // namespace

UniversalImage phi_r(const BraidWord& b) {
  int n = b.strands();
  if (n < 2) throw PreconditionError("reduced construction needs n >= 2");
  GroupRingMatrix m = GroupRingMatrix::identity(n - 1, n, VarSet::empty());
  for (const auto& l : b.letters()) m = m * phi_r_letter(l, n);
  return UniversalImage{n, std::move(m)};
}

bool quadratic_check_universal(int i, int n) {
  if (i < 1 || i > n - 1)
    throw PreconditionError("generator index out of range");
  auto vars = VarSet::empty();
  UniversalImage u = phi(BraidWord::generator(n, i));
  SemidirectElement sigma = SemidirectElement::from_braid(BraidWord::generator(n, i));
  SemidirectElement sigma_g = sd_mul(sigma, SemidirectElement::from_free(FreeWord::generator(n, i)));
  GroupRingMatrix left =
      u.matrix + GroupRingMatrix::identity(n, n, vars).scalar_lmul(
                     GroupRingElement::from_element(sigma_g, vars));
  GroupRingMatrix right =
      u.matrix - GroupRingMatrix::identity(n, n, vars).scalar_lmul(
                     GroupRingElement::from_element(sigma, vars));
  return (left * right).is_zero();
}

}  // namespace braidrep
