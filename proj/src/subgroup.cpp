#include "braidrep/subgroup.hpp"

namespace braidrep {

const BraidWord& SubgroupDescriptor::generator(const std::string& name) const {
  for (const auto& [gname, word] : generators)
    if (gname == name) return word;
  throw PreconditionError("word not expressed in subgroup generators: " + name);
}

BraidWord SubgroupDescriptor::expand(const GeneratorWord& w) const {
  BraidWord out(n);
  for (const auto& [name, sign] : w) {
    const BraidWord& g = generator(name);
    out = out * (sign > 0 ? g : g.inverse());
  }
  return out;
}

SubgroupDescriptor full_braid_subgroup(int n) {
  SubgroupDescriptor G;
  G.n = n;
  for (int i = 1; i <= n - 1; ++i)
    G.generators.emplace_back(braid_gen_name(i), BraidWord::generator(n, i));
  return G;
}

BraidWord pure_generator(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n))
    throw PreconditionError("pure generator needs 1 <= i < j <= n");
  std::vector<BraidLetter> conj;
  for (int k = j - 1; k >= i + 1; --k) conj.push_back({k, 1});
  std::vector<BraidLetter> ls = conj;
  ls.push_back({i, 1});
  ls.push_back({i, 1});
  for (auto it = conj.rbegin(); it != conj.rend(); ++it)
    ls.push_back({it->index, -1});
  return BraidWord(n, std::move(ls));
}

SubgroupDescriptor pure_braid_subgroup(int n) {
  SubgroupDescriptor G;
  G.n = n;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      G.generators.emplace_back(
          "a" + std::to_string(i) + "_" + std::to_string(j),
          pure_generator(n, i, j));
  return G;
}

std::vector<BraidWord> free_in_pure_generators(int n) {
  std::vector<BraidWord> gens;
  gens.reserve(n);
  for (int i = 1; i <= n; ++i) gens.push_back(embedded_free_generator(n, i));
  return gens;
}

namespace {

// Apply rho to the Z[F_n] entry matrix A of the factorization phi(b) = A*b,
// then attach the braid-part image on the right of every block.
PolyMatrix apply_factored(const GroupRingMatrix& A, const Representation& rho,
                          const PolyMatrix& braid_image) {
  VarSetPtr vars = merge_varsets(A.vars(), rho.vars());
  int dim = rho.dim();
  std::vector<PolyMatrix> blocks;
  blocks.reserve(static_cast<std::size_t>(A.rows()) * A.cols());
  for (int r = 0; r < A.rows(); ++r)
    for (int c = 0; c < A.cols(); ++c) {
      PolyMatrix block(dim, dim, vars);
      for (const auto& [g, coef] : A.at(r, c).terms())
        block = block + rho.eval_free(g.free_part()).scaled(coef);
      blocks.push_back(block * braid_image);
    }
  return assemble_blocks(A.rows(), A.cols(), blocks);
}

}  // namespace

PolyMatrix lm_subgroup(const SubgroupDescriptor& G, const Representation& rho,
                       const GeneratorWord& word) {
  BraidWord b = G.expand(word);
  auto [A, braid] = factor_entries(b);
  (void)braid;
  PolyMatrix braid_image = rho.identity_matrix();
  for (const auto& [name, sign] : word) {
    const BraidWord& gen = G.generator(name);
    std::string img_name = name;
    if (sign < 0) {
      auto pos = name.find('^');
      img_name = pos == std::string::npos
                     ? name + "^-1"
                     : name.substr(0, pos) + "^-" + name.substr(pos + 1);
    }
    if (rho.has_image(img_name) || rho.has_image(name)) {
      braid_image = braid_image * rho.image(img_name);
    } else {
      // fall back to sigma-letter evaluation of the expanded word
      braid_image =
          braid_image * rho.eval_braid(sign > 0 ? gen : gen.inverse());
    }
  }
  return apply_factored(A, rho, braid_image);
}

Representation gassner_rescale(const Representation& rho,
                               const std::vector<LaurentPoly>& t) {
  int n1 = rho.n();
  if (n1 < 2) throw PreconditionError("rescaling needs at least 2 strands");
  int n = n1 - 1;
  if (static_cast<int>(t.size()) != n)
    throw PreconditionError("need exactly " + std::to_string(n) +
                            " rescale parameters, got " +
                            std::to_string(t.size()));
  VarSetPtr vars = rho.vars();
  for (const auto& ti : t) vars = merge_varsets(vars, ti.vars());
  Representation out(GroupKind::FnPn, n, 0, rho.dim(), vars);

  // Braid-part images: P_n sits inside P_{n+1} by a trailing straight
  // strand, so sigma-letter evaluation carries over unchanged.
  for (const auto& [name, img] : rho.images())
    if (!name.empty() && name[0] != 'g') out.set_image(name, img.promoted(vars));

  for (int i = 1; i <= n; ++i) {
    BraidWord gi = embedded_free_generator(n, i);
    LaurentPoly ti = t[static_cast<std::size_t>(i) - 1].promoted(vars);
    out.set_image(free_gen_name(i), rho.eval_braid(gi).promoted(vars).scaled(ti));
    out.set_image(free_gen_name(i, -1),
                  rho.eval_braid(gi.inverse()).promoted(vars).scaled(ti.inverse()));
  }
  return out;
}

PolyMatrix gassner(const Representation& rho, const std::vector<LaurentPoly>& t,
                   const BraidWord& b) {
  if (!b.is_pure())
    throw PreconditionError("gassner input word must be pure");
  int n1 = rho.n();
  int n = n1 - 1;
  if (b.strands() != n)
    throw PreconditionError("word must live in B_" + std::to_string(n));
  Representation rescaled = gassner_rescale(rho, t);
  auto [A, braid] = factor_entries(b);
  (void)braid;
  return apply_factored(A, rescaled, rescaled.eval_braid(b));
}

VarSetPtr gassner_vars(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
  return VarSet::make(names);
}

PolyMatrix gassner_matrix(int n, const BraidWord& b) {
  VarSetPtr vars = gassner_vars(n);
  Representation triv =
      Representation::trivial(GroupKind::Pn, n + 1, 0, 1, vars);
  std::vector<LaurentPoly> t;
  for (int i = 1; i <= n; ++i)
    t.push_back(LaurentPoly::variable("t" + std::to_string(i), vars));
  return gassner(triv, t, b);
}

}  // namespace braidrep
