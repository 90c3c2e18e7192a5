#ifndef BRAIDREP_SUBGROUP_HPP
#define BRAIDREP_SUBGROUP_HPP

#include "braidrep/representation.hpp"

namespace braidrep {

// A word in named subgroup generators: (name, +1/-1) pairs.
using GeneratorWord = std::vector<std::pair<std::string, int>>;

// A subgroup of B_n described by named generating braid words. Membership
// of arbitrary words is the caller's responsibility; operations take words
// already written in the generators.
struct SubgroupDescriptor {
  int n = 1;
  std::vector<std::pair<std::string, BraidWord>> generators;

  const BraidWord& generator(const std::string& name) const;
  BraidWord expand(const GeneratorWord& w) const;
};

// The whole braid group as a subgroup of itself (generators s1..s{n-1}).
SubgroupDescriptor full_braid_subgroup(int n);

// The pure braid group with the band generators
// a<i>_<j> = (sigma_{j-1}...sigma_{i+1}) sigma_i^2 (...)^-1, 1 <= i < j <= n.
SubgroupDescriptor pure_braid_subgroup(int n);
BraidWord pure_generator(int n, int i, int j);

// The free generators g_i of the subgroup of P_{n+1} whose first n strands
// are straight, as braid words on n+1 strands.
std::vector<BraidWord> free_in_pure_generators(int n);

// The subgroup construction: factor phi(b) = A * b, apply rho to
// the Z[F_n] entries and to the braid part evaluated through the generator
// names. Multiplicative on the subgroup.
PolyMatrix lm_subgroup(const SubgroupDescriptor& G, const Representation& rho,
                       const GeneratorWord& word);

// The n-parameter rescaling of a representation of P_{n+1}: g_i images
// scaled by t_i, P_n images untouched. The output representation evaluates
// braid parts through the input (pure words only).
Representation gassner_rescale(const Representation& rho,
                               const std::vector<LaurentPoly>& t);

// The Gassner-family matrix of a pure braid word. Rejects non-pure input.
PolyMatrix gassner(const Representation& rho, const std::vector<LaurentPoly>& t,
                   const BraidWord& b);

// Convenience: symbolic t_1..t_n over the trivial one-dimensional input,
// i.e. the unreduced Gassner representation itself.
PolyMatrix gassner_matrix(int n, const BraidWord& b);
VarSetPtr gassner_vars(int n);

}  // namespace braidrep

#endif
