#ifndef BRAIDREP_REPRESENTATION_HPP
#define BRAIDREP_REPRESENTATION_HPP

#include <map>
#include <optional>
#include <string>

#include "braidrep/phi.hpp"
#include "braidrep/polymatrix.hpp"

namespace braidrep {

enum class GroupKind { Bn, Pn, Bnm, FnBn, FnPn, FnBnm };

std::string group_kind_name(GroupKind k);
GroupKind group_kind_from_name(const std::string& s);

// A finite-dimensional representation: named generators mapped to square
// matrices over a common scalar ring. Generator names follow the word
// grammar: "s3", "g1" and their inverses "s3^-1", "g1^-1"; mixed braid
// groups add "s3^2" / "s3^-2"; pure braid generators are "a1_2".
//
// Inverse images are derived on demand (adjugate, unit determinant) when a
// file or builder only supplies the forward image.
class Representation {
public:
  Representation(GroupKind kind, int n, int m, int dim, VarSetPtr vars);

  GroupKind kind() const { return kind_; }
  int n() const { return n_; }
  int m() const { return m_; }
  int dim() const { return dim_; }
  const VarSetPtr& vars() const { return vars_; }
  const std::map<std::string, PolyMatrix>& images() const { return images_; }

  void set_image(const std::string& name, PolyMatrix img);
  bool has_image(const std::string& name) const;
  // Throws PreconditionError on a missing image (after attempting to derive
  // an inverse from the forward image).
  const PolyMatrix& image(const std::string& name) const;

  // True when every stored image is the identity matrix; such a
  // representation evaluates every group element to the identity.
  bool all_images_identity() const;

  // Letterwise evaluation. Braid evaluation uses the s<i> images; if those
  // are absent but the representation is trivial in the sense above, any
  // word evaluates to the identity.
  PolyMatrix eval_braid(const BraidWord& w) const;
  PolyMatrix eval_free(const FreeWord& w) const;
  PolyMatrix eval_element(const SemidirectElement& g) const;

  PolyMatrix identity_matrix() const { return PolyMatrix::identity(dim_, vars_); }

  // All generators mapped to the identity.
  static Representation trivial(GroupKind kind, int n, int m, int dim,
                                VarSetPtr vars);
  // The one-dimensional representation of F_n |x B_n with sigma_i -> s,
  // g_i -> t.
  static Representation one_dim_st(int n);

private:
  GroupKind kind_;
  int n_, m_, dim_;
  VarSetPtr vars_;
  std::map<std::string, PolyMatrix> images_;
  mutable std::map<std::string, PolyMatrix> derived_;
};

// sigma_i / g_i image names.
std::string braid_gen_name(int i, int sign = 1);
std::string free_gen_name(int i, int sign = 1);

// Entrywise application of rho to a universal image; the result is the
// (rows*dim) x (cols*dim) block matrix. rho must evaluate every group
// element occurring in the entries (an F_n |x B_n representation for plain
// phi / phi_r images).
PolyMatrix specialize(const UniversalImage& u, const Representation& rho);

// Closed-form unreduced Burau matrices with parameters (s, t): the ordered
// product of s*blockdiag(I, [[0, t], [1, 1-t]], I) over the word. Kept
// independent of phi/specialize so the two can check each other.
PolyMatrix burau_oracle(int n, const BraidWord& b);
VarSetPtr burau_vars();

// Thm-2.5-style rescaling: g images scaled by t (a unit), sigma images
// unchanged.
Representation rescale_rep(const Representation& rho, const LaurentPoly& t);

// From a representation of B_{n+1} to one of F_n |x B_n through the
// standard embedding.
Representation restrict_from_bn1(const Representation& rho);

// One construction step: representation of F_n |x B_n to representation of
// B_n with sigma_i -> specialize(phi(sigma_i)).
Representation lm_step(const Representation& rho);

// Iterated restrict -> rescale -> construct, one parameter per step.
Representation lm_tower(const Representation& base,
                        const std::vector<LaurentPoly>& params, int n_target);

// Checks the defining relations available for the representation's kind:
// inverse pairs, braid relations when sigma images exist, and the
// semidirect relations for the F_n |x B_n kinds. Returns a description of
// the first failure, or nullopt.
std::optional<std::string> verify_representation(const Representation& rho);

}  // namespace braidrep

#endif
