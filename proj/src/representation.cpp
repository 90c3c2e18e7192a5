#include "braidrep/representation.hpp"

#include <algorithm>

namespace braidrep {

std::string group_kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::Bn: return "Bn";
    case GroupKind::Pn: return "Pn";
    case GroupKind::Bnm: return "Bnm";
    case GroupKind::FnBn: return "FnBn";
    case GroupKind::FnPn: return "FnPn";
    case GroupKind::FnBnm: return "FnBnm";
  }
  return "?";
}

GroupKind group_kind_from_name(const std::string& s) {
  if (s == "Bn") return GroupKind::Bn;
  if (s == "Pn") return GroupKind::Pn;
  if (s == "Bnm") return GroupKind::Bnm;
  if (s == "FnBn") return GroupKind::FnBn;
  if (s == "FnPn") return GroupKind::FnPn;
  if (s == "FnBnm") return GroupKind::FnBnm;
  throw ParseError("unknown group kind: " + s);
}

std::string braid_gen_name(int i, int sign) {
  return "s" + std::to_string(i) + (sign < 0 ? "^-1" : "");
}

std::string free_gen_name(int i, int sign) {
  return "g" + std::to_string(i) + (sign < 0 ? "^-1" : "");
}

Representation::Representation(GroupKind kind, int n, int m, int dim,
                               VarSetPtr vars)
    : kind_(kind), n_(n), m_(m), dim_(dim), vars_(std::move(vars)) {
  if (n < 1 || dim < 1)
    throw PreconditionError("representation needs n >= 1 and dim >= 1");
}

void Representation::set_image(const std::string& name, PolyMatrix img) {
  if (img.rows() != dim_ || img.cols() != dim_)
    throw PreconditionError("image of " + name + " must be " +
                            std::to_string(dim_) + "x" + std::to_string(dim_));
  derived_.clear();
  images_.insert_or_assign(name, img.promoted(vars_));
}

bool Representation::has_image(const std::string& name) const {
  return images_.count(name) > 0;
}

namespace {

// "s3^-1" -> ("s3", true); "s3^-2" -> ("s3^2", true).
std::optional<std::string> forward_name_of_inverse(const std::string& name) {
  auto pos = name.find("^-");
  if (pos == std::string::npos) return std::nullopt;
  std::string exp = name.substr(pos + 2);
  std::string base = name.substr(0, pos);
  if (exp == "1") return base;
  return base + "^" + exp;
}

}  // namespace

const PolyMatrix& Representation::image(const std::string& name) const {
  auto it = images_.find(name);
  if (it != images_.end()) return it->second;
  auto dit = derived_.find(name);
  if (dit != derived_.end()) return dit->second;
  if (auto fwd = forward_name_of_inverse(name)) {
    auto fit = images_.find(*fwd);
    if (fit != images_.end()) {
      auto [ins, ok] = derived_.emplace(name, fit->second.inverse_unit_det());
      return ins->second;
    }
  }
  throw PreconditionError("missing generator image: " + name);
}

bool Representation::all_images_identity() const {
  if (images_.empty()) return true;
  return std::all_of(images_.begin(), images_.end(),
                     [](const auto& kv) { return kv.second.is_identity(); });
}

PolyMatrix Representation::eval_braid(const BraidWord& w) const {
  PolyMatrix acc = identity_matrix();
  for (const auto& l : w.letters()) {
    std::string name = braid_gen_name(l.index, l.sign);
    if (!has_image(name) && !has_image(braid_gen_name(l.index))) {
      if (all_images_identity()) return identity_matrix();
      throw PreconditionError("missing generator image: " + name);
    }
    acc = acc * image(name);
  }
  return acc;
}

PolyMatrix Representation::eval_free(const FreeWord& w) const {
  PolyMatrix acc = identity_matrix();
  for (const auto& l : w.letters()) acc = acc * image(free_gen_name(l.index, l.sign));
  return acc;
}

PolyMatrix Representation::eval_element(const SemidirectElement& g) const {
  // Evaluate through the canonical word so the result depends only on the
  // canonical form, whether or not the images satisfy the relations.
  return eval_free(g.free_part()) * eval_braid(g.braid_nf().canonical_word());
}

Representation Representation::trivial(GroupKind kind, int n, int m, int dim,
                                       VarSetPtr vars) {
  Representation rho(kind, n, m, dim, vars);
  PolyMatrix id = PolyMatrix::identity(dim, vars);
  auto add_sigma = [&](int i) {
    rho.set_image(braid_gen_name(i), id);
    rho.set_image(braid_gen_name(i, -1), id);
  };
  switch (kind) {
    case GroupKind::Bn:
    case GroupKind::Pn:
      for (int i = 1; i <= n - 1; ++i) add_sigma(i);
      break;
    case GroupKind::Bnm:
      for (int i = 1; i <= n + m - 1; ++i)
        if (i != n) add_sigma(i);
      if (m >= 1) {
        rho.set_image("s" + std::to_string(n) + "^2", id);
        rho.set_image("s" + std::to_string(n) + "^-2", id);
      }
      break;
    case GroupKind::FnBn:
    case GroupKind::FnPn:
    case GroupKind::FnBnm:
      for (int i = 1; i <= n - 1; ++i) add_sigma(i);
      for (int i = 1; i <= n; ++i) {
        rho.set_image(free_gen_name(i), id);
        rho.set_image(free_gen_name(i, -1), id);
      }
      break;
  }
  return rho;
}

Representation Representation::one_dim_st(int n) {
  VarSetPtr vars = burau_vars();
  Representation rho(GroupKind::FnBn, n, 0, 1, vars);
  LaurentPoly s = LaurentPoly::variable("s", vars);
  LaurentPoly t = LaurentPoly::variable("t", vars);
  PolyMatrix ms(1, 1, vars), mt(1, 1, vars), msi(1, 1, vars), mti(1, 1, vars);
  ms.at(0, 0) = s;
  mt.at(0, 0) = t;
  msi.at(0, 0) = s.inverse();
  mti.at(0, 0) = t.inverse();
  for (int i = 1; i <= n - 1; ++i) {
    rho.set_image(braid_gen_name(i), ms);
    rho.set_image(braid_gen_name(i, -1), msi);
  }
  for (int i = 1; i <= n; ++i) {
    rho.set_image(free_gen_name(i), mt);
    rho.set_image(free_gen_name(i, -1), mti);
  }
  return rho;
}

PolyMatrix specialize(const UniversalImage& u, const Representation& rho) {
  const GroupRingMatrix& M = u.matrix;
  VarSetPtr vars = merge_varsets(M.vars(), rho.vars());
  int dim = rho.dim();
  // The braid parts of a universal image repeat across terms; evaluate each
  // normal form once.
  std::map<BraidNormalForm, PolyMatrix> braid_cache;
  auto braid_image = [&](const SemidirectElement& g) -> const PolyMatrix& {
    auto it = braid_cache.find(g.braid_nf());
    if (it != braid_cache.end()) return it->second;
    return braid_cache
        .emplace(g.braid_nf(), rho.eval_braid(g.braid_nf().canonical_word()))
        .first->second;
  };
  std::vector<PolyMatrix> blocks;
  blocks.reserve(static_cast<std::size_t>(M.rows()) * M.cols());
  for (int r = 0; r < M.rows(); ++r)
    for (int c = 0; c < M.cols(); ++c) {
      PolyMatrix block(dim, dim, vars);
      for (const auto& [g, coef] : M.at(r, c).terms())
        block = block + (rho.eval_free(g.free_part()) * braid_image(g)).scaled(coef);
      blocks.push_back(std::move(block));
    }
  return assemble_blocks(M.rows(), M.cols(), blocks);
}

VarSetPtr burau_vars() {
  static const VarSetPtr v = VarSet::make({"s", "t"});
  return v;
}

PolyMatrix burau_oracle(int n, const BraidWord& b) {
  if (b.strands() != n) throw PreconditionError("strand count mismatch");
  VarSetPtr vars = burau_vars();
  LaurentPoly s = LaurentPoly::variable("s", vars);
  LaurentPoly t = LaurentPoly::variable("t", vars);
  LaurentPoly one = LaurentPoly::one(vars);
  PolyMatrix acc = PolyMatrix::identity(n, vars);
  for (const auto& l : b.letters()) {
    PolyMatrix g = PolyMatrix::identity(n, vars);
    int i = l.index - 1;
    if (l.sign > 0) {
      g.at(i, i) = LaurentPoly::zero(vars);
      g.at(i, i + 1) = t;
      g.at(i + 1, i) = one;
      g.at(i + 1, i + 1) = one - t;
      g = g.scaled(s);
    } else {
      g.at(i, i) = one - t.inverse();
      g.at(i, i + 1) = one;
      g.at(i + 1, i) = t.inverse();
      g.at(i + 1, i + 1) = LaurentPoly::zero(vars);
      g = g.scaled(s.inverse());
    }
    acc = acc * g;
  }
  return acc;
}

Representation rescale_rep(const Representation& rho, const LaurentPoly& t) {
  if (rho.kind() != GroupKind::FnBn && rho.kind() != GroupKind::FnPn &&
      rho.kind() != GroupKind::FnBnm)
    throw PreconditionError("rescaling needs a semidirect-product representation");
  VarSetPtr vars = merge_varsets(rho.vars(), t.vars());
  Representation out(rho.kind(), rho.n(), rho.m(), rho.dim(), vars);
  LaurentPoly tp = t.promoted(vars);
  LaurentPoly tinv = tp.inverse();
  for (const auto& [name, img] : rho.images()) {
    if (name.size() >= 1 && name[0] == 'g') {
      bool inv = name.find("^-1") != std::string::npos;
      out.set_image(name, img.promoted(vars).scaled(inv ? tinv : tp));
    } else {
      out.set_image(name, img.promoted(vars));
    }
  }
  return out;
}

Representation restrict_from_bn1(const Representation& rho) {
  int n1 = rho.n();
  if (n1 < 2) throw PreconditionError("restriction needs at least 2 strands");
  int n = n1 - 1;
  Representation out(GroupKind::FnBn, n, 0, rho.dim(), rho.vars());
  for (int i = 1; i <= n - 1; ++i) {
    out.set_image(braid_gen_name(i),
                  rho.eval_braid(BraidWord::generator(n1, i)));
    out.set_image(braid_gen_name(i, -1),
                  rho.eval_braid(BraidWord::generator(n1, i, -1)));
  }
  for (int i = 1; i <= n; ++i) {
    BraidWord g = embedded_free_generator(n, i);
    out.set_image(free_gen_name(i), rho.eval_braid(g));
    out.set_image(free_gen_name(i, -1), rho.eval_braid(g.inverse()));
  }
  return out;
}

Representation lm_step(const Representation& rho) {
  if (rho.kind() != GroupKind::FnBn)
    throw PreconditionError("construction step needs an F_n |x B_n representation");
  int n = rho.n();
  Representation out(GroupKind::Bn, n, 0, n * rho.dim(),
                     merge_varsets(VarSet::empty(), rho.vars()));
  for (int i = 1; i <= n - 1; ++i) {
    out.set_image(braid_gen_name(i),
                  specialize(phi(BraidWord::generator(n, i)), rho));
    out.set_image(braid_gen_name(i, -1),
                  specialize(phi(BraidWord::generator(n, i, -1)), rho));
  }
  return out;
}

Representation lm_tower(const Representation& base,
                        const std::vector<LaurentPoly>& params, int n_target) {
  if (base.kind() != GroupKind::Bn)
    throw PreconditionError("tower base must be a braid group representation");
  int steps = base.n() - n_target;
  if (steps < 0) throw PreconditionError("tower target exceeds base strand count");
  if (static_cast<int>(params.size()) != steps)
    throw PreconditionError("tower needs one rescale parameter per step, got " +
                            std::to_string(params.size()) + " for " +
                            std::to_string(steps) + " steps");
  Representation cur = base;
  for (int k = 0; k < steps; ++k)
    cur = lm_step(rescale_rep(restrict_from_bn1(cur), params[k]));
  return cur;
}

namespace {

std::optional<std::string> check_eq(const PolyMatrix& a, const PolyMatrix& b,
                                    const std::string& what) {
  if (a == b) return std::nullopt;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!(a.at(i, j) == b.at(i, j)))
        return what + " fails at entry (" + std::to_string(i + 1) + "," +
               std::to_string(j + 1) + ")";
  return what + " fails";
}

}  // namespace

std::optional<std::string> verify_representation(const Representation& rho) {
  // Inverse pairs for every forward image that has a stored inverse.
  for (const auto& [name, img] : rho.images()) {
    if (name.find("^-") != std::string::npos) continue;
    std::string inv = name + "^-1";
    auto pos = name.find('^');
    if (pos != std::string::npos)  // "s3^2" -> "s3^-2"
      inv = name.substr(0, pos) + "^-" + name.substr(pos + 1);
    if (!rho.has_image(inv)) continue;
    if (auto bad = check_eq(img * rho.image(inv), rho.identity_matrix(),
                            "inverse pair " + name))
      return bad;
  }

  bool sigma_letters = true;
  for (int i = 1; i <= rho.n() - 1 && sigma_letters; ++i)
    if (!rho.has_image(braid_gen_name(i))) sigma_letters = false;

  if (sigma_letters) {
    int n = rho.n();
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 1; j <= n - 1; ++j) {
        const PolyMatrix& a = rho.image(braid_gen_name(i));
        const PolyMatrix& b = rho.image(braid_gen_name(j));
        if (j == i + 1) {
          if (auto bad = check_eq(a * b * a, b * a * b,
                                  "braid relation (" + std::to_string(i) + "," +
                                      std::to_string(j) + ")"))
            return bad;
        } else {
          if (auto bad = check_eq(a * b, b * a,
                                  "commuting relation (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")"))
            return bad;
        }
      }
  }

  if ((rho.kind() == GroupKind::FnBn || rho.kind() == GroupKind::FnPn) &&
      sigma_letters) {
    // The three semidirect relations, letterwise.
    int n = rho.n();
    for (int i = 1; i <= n - 1; ++i) {
      const PolyMatrix& s = rho.image(braid_gen_name(i));
      for (int j = 1; j <= n; ++j) {
        const PolyMatrix& g = rho.image(free_gen_name(j));
        PolyMatrix lhs = g * s;
        PolyMatrix rhs(1, 1, rho.vars());
        if (j == i + 1) {
          rhs = s * rho.image(free_gen_name(i));
        } else if (j == i) {
          rhs = s * rho.image(free_gen_name(i)) * rho.image(free_gen_name(i + 1)) *
                rho.image(free_gen_name(i, -1));
        } else {
          rhs = s * g;
        }
        if (auto bad = check_eq(lhs, rhs,
                                "semidirect relation (sigma_" + std::to_string(i) +
                                    ", g_" + std::to_string(j) + ")"))
          return bad;
      }
    }
  }
  return std::nullopt;
}

}  // namespace braidrep
