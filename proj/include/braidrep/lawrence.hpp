#ifndef BRAIDREP_LAWRENCE_HPP
#define BRAIDREP_LAWRENCE_HPP

#include "braidrep/representation.hpp"
#include "braidrep/subgroup.hpp"

namespace braidrep {

// Generators of the mixed braid group B_{n,m} <= B_{n+m} (braids whose
// permutation preserves the block partition {1..n} | {n+1..n+m}):
// sigma_1..sigma_{n-1}, sigma_n^2, sigma_{n+1}..sigma_{n+m-1}.
struct MixedBraidDescriptor {
  int n = 0;
  int m = 0;
  std::vector<std::pair<std::string, BraidWord>> generators;
};

MixedBraidDescriptor bnm_generators(int n, int m);

// True when the word's permutation keeps the first n endpoints among the
// first n positions.
bool preserves_partition(const BraidWord& w, int n);

// The C(n,m) basis indices a_1 < ... < a_m, enumerated lexicographically.
class LawrenceBasis {
public:
  LawrenceBasis(int n, int m);
  int size() const { return static_cast<int>(indices_.size()); }
  const std::vector<int>& index(int k) const { return indices_[k]; }
  int position(const std::vector<int>& idx) const;

private:
  int n_, m_;
  std::vector<std::vector<int>> indices_;
};

// Image of a braid word under the universal Lawrence representation: a
// C(n,m)-square matrix over Z[<q> x B_m]. The braid-part strand count of
// entries is max(m, 1); q is the Laurent variable "q".
GroupRingMatrix universal_lawrence(int n, int m, const BraidWord& b);
VarSetPtr lawrence_vars();

// Entrywise rho on the B_m factors; optionally substitutes a rational for q.
PolyMatrix specialize_lawrence(const GroupRingMatrix& u, const Representation& rho,
                               const std::optional<Rational>& qval = std::nullopt);

// (M + qI)(M - I) == 0, exactly.
bool hecke_quadratic_check(const PolyMatrix& M, const LaurentPoly& q);

// Image of an element of Z[<q> x B_m] in the Hecke algebra H_m(q): the
// coefficient of T_w for each permutation w, computed by the standard
// multiplication rule T_w T_j = T_{w s_j} when the length grows and
// (1-q) T_w + q T_{w s_j} otherwise. Terms must have trivial free parts.
std::map<Perm, LaurentPoly> hecke_reduce(const GroupRingElement& e);

// Equality in H_m(q). The universal Lawrence braid relations hold at this
// level (not over the group ring itself); see universal_lawrence_defect.
bool hecke_equal(const GroupRingElement& a, const GroupRingElement& b);
bool hecke_equal(const GroupRingMatrix& a, const GroupRingMatrix& b);

// The group-ring-level failure of the braid relation: the (top) corner of
// phi(s_i s_{i+1} s_i) - phi(s_{i+1} s_i s_{i+1}), which reduces to zero in
// H_m(q) but not in Z[<q> x B_m]. Returns the difference matrix.
GroupRingMatrix universal_lawrence_relation_defect(int n, int m, int i);

// Every nonzero entry of (phi(sigma_i) + qI)(phi(sigma_i) - I) over the
// universal Lawrence ring is (q + sigma_j)(1 - sigma_j) for some j.
bool lawrence_entry_claim(int n, int m, int i);

// One step of the recursive Lawrence construction: rho is a representation
// of B_{n,m+1} (fields n, m+1) supplying images for the bnm(n, m+1)
// generator names and for g1..g{n+m}; b is a word in B_{n,m} written so
// that sigma_n appears only as adjacent same-sign pairs. Output dimension
// is (n+m)*dim.
PolyMatrix lawrence_step(const Representation& rho, const BraidWord& b);

// The full tower of Thm-5.3 shape: from a representation of B_m and a
// parameter q to a representation of B_n of dimension
// (n+m-1)!/(n-1)! * dim(V).
Representation lawrence_tower(const Representation& rho_bm, const LaurentPoly& q,
                              int n);

// Evaluate the tower on an arbitrary partition-preserving word without
// going through stored generator images (used to exercise the homomorphism
// property on relator-inserted words).
PolyMatrix lawrence_tower_eval(const Representation& rho_bm, const LaurentPoly& q,
                               int n, const BraidWord& word);

// (n+m-1)!/(n-1)!
long lawrence_dimension(int n, int m);

}  // namespace braidrep

#endif
