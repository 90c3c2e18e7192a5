#ifndef BRAIDREP_PHI_HPP
#define BRAIDREP_PHI_HPP

#include <utility>

#include "braidrep/group_ring.hpp"

namespace braidrep {

// Image of a braid under the universal representation: an n x n (or
// (n-1) x (n-1) for the reduced variant) invertible matrix over
// Z[F_n |x B_n].
struct UniversalImage {
  int n;
  GroupRingMatrix matrix;
};

// The 2x2 block [[0, g_i], [1, 1-g_i]] embedded at rows/cols i, i+1 of the
// n x n identity, and its inverse [[1-g_i^-1, 1], [g_i^-1, 0]].
GroupRingMatrix r_matrix(int i, int n);
GroupRingMatrix r_matrix_inv(int i, int n);

// The universal representation:
//   phi(sigma_i)    = sigma_i . blockdiag(I, R_i, I)   (scalar on the left)
//   phi(sigma_i^-1) = blockdiag(I, R_i^-1, I) . sigma_i^-1
// extended multiplicatively over words; constant on braid-equal words.
UniversalImage phi(const BraidWord& b);

// The factorization phi(b) = A * b of every universal image: A has entries
// in Z[F_n], obtained by pushing the scalar braid letters to the right and
// conjugating each letter block by the preceding braid prefix.
std::pair<GroupRingMatrix, BraidWord> factor_entries(const BraidWord& b);

// The 3x3 block S_i = [[1, g_i, 0], [0, -g_i, 0], [0, 1, 0]] of the reduced
// construction, cut to the rows/cols of the (n-1)-square matrix that fall
// in range (indices i-1, i, i+1).
GroupRingMatrix s_matrix(int i, int n);
GroupRingMatrix s_matrix_inv(int i, int n);

// The reduced universal representation on (n-1) x (n-1) matrices.
UniversalImage phi_r(const BraidWord& b);

// Prop-style quadratic relation of the universal representation:
// (phi(sigma_i) + sigma_i g_i I)(phi(sigma_i) - sigma_i I) = 0.
bool quadratic_check_universal(int i, int n);

}  // namespace braidrep

#endif
