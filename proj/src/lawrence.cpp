#include "braidrep/lawrence.hpp"

#include <algorithm>
#include <map>

namespace braidrep {

MixedBraidDescriptor bnm_generators(int n, int m) {
  if (n < 0 || m < 0) throw PreconditionError("B_{n,m} needs n, m >= 0");
  MixedBraidDescriptor d;
  d.n = n;
  d.m = m;
  int total = std::max(n + m, 1);
  for (int i = 1; i <= n - 1; ++i)
    d.generators.emplace_back(braid_gen_name(i), BraidWord::generator(total, i));
  if (n >= 1 && m >= 1) {
    BraidWord sq(total, {BraidLetter{n, 1}, BraidLetter{n, 1}});
    d.generators.emplace_back("s" + std::to_string(n) + "^2", sq);
  }
  for (int i = n + 1; i <= n + m - 1; ++i)
    d.generators.emplace_back(braid_gen_name(i), BraidWord::generator(total, i));
  return d;
}

bool preserves_partition(const BraidWord& w, int n) {
  Perm p = w.permutation();
  for (int i = 0; i < n && i < static_cast<int>(p.size()); ++i)
    if (p[i] > n) return false;
  return true;
}

LawrenceBasis::LawrenceBasis(int n, int m) : n_(n), m_(m) {
  if (m < 0 || m > n) throw PreconditionError("Lawrence basis needs 0 <= m <= n");
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i + 1;
  if (m == 0) {
    indices_.push_back({});
    return;
  }
  for (;;) {
    indices_.push_back(idx);
    int k = m - 1;
    while (k >= 0 && idx[k] == n - (m - 1 - k)) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

int LawrenceBasis::position(const std::vector<int>& idx) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), idx);
  if (it == indices_.end() || *it != idx)
    throw PreconditionError("basis index not found");
  return static_cast<int>(it - indices_.begin());
}

VarSetPtr lawrence_vars() {
  static const VarSetPtr v = VarSet::make({"q"});
  return v;
}

namespace {

bool contains(const std::vector<int>& idx, int value) {
  return std::binary_search(idx.begin(), idx.end(), value);
}

std::vector<int> replaced(const std::vector<int>& idx, int from, int to) {
  std::vector<int> out = idx;
  for (int& x : out)
    if (x == from) x = to;
  std::sort(out.begin(), out.end());
  return out;
}

// Column action of one letter on the universal Lawrence basis.
GroupRingMatrix lawrence_letter(const LawrenceBasis& basis, int mb, int m,
                                const BraidLetter& l) {
  VarSetPtr vars = lawrence_vars();
  LaurentPoly q = LaurentPoly::variable("q", vars);
  LaurentPoly one = LaurentPoly::one(vars);
  int size = basis.size();
  GroupRingMatrix M(size, size, mb, vars);
  int i = l.index;
  for (int col = 0; col < size; ++col) {
    const std::vector<int>& a = basis.index(col);
    bool has_i = contains(a, i);
    bool has_i1 = contains(a, i + 1);
    auto put = [&](const std::vector<int>& target, const LaurentPoly& c,
                   const GroupRingElement* g = nullptr) {
      GroupRingElement e = g ? g->scaled(c)
                             : GroupRingElement::one(mb, vars).scaled(c);
      M.at(basis.position(target), col) = M.at(basis.position(target), col) + e;
    };
    if (has_i && has_i1) {
      // sigma_{j+1} of the B_m scalar factor, j = #entries below i.
      int j = 0;
      for (int x : a)
        if (x < i) ++j;
      if (j + 1 > m - 1)
        throw PreconditionError("Lawrence scalar index out of range");
      GroupRingElement sig = GroupRingElement::from_braid(
          BraidWord::generator(mb, j + 1, l.sign), vars);
      put(a, one, &sig);
    } else if (l.sign > 0) {
      if (has_i) {
        put(replaced(a, i, i + 1), one);
      } else if (has_i1) {
        put(replaced(a, i + 1, i), q);
        put(a, one - q);
      } else {
        put(a, one);
      }
    } else {
      if (has_i1) {
        put(replaced(a, i + 1, i), one);
      } else if (has_i) {
        put(replaced(a, i, i + 1), q.inverse());
        put(a, one - q.inverse());
      } else {
        put(a, one);
      }
    }
  }
  return M;
}

}  // namespace

GroupRingMatrix universal_lawrence(int n, int m, const BraidWord& b) {
  if (m < 0 || m > n) throw PreconditionError("universal Lawrence needs 0 <= m <= n");
  if (b.strands() != n)
    throw PreconditionError("word must live in B_" + std::to_string(n));
  LawrenceBasis basis(n, m);
  int mb = std::max(m, 1);  // strand count of the B_m scalar factor
  GroupRingMatrix acc =
      GroupRingMatrix::identity(basis.size(), mb, lawrence_vars());
  for (const auto& l : b.letters()) acc = acc * lawrence_letter(basis, mb, m, l);
  return acc;
}

PolyMatrix specialize_lawrence(const GroupRingMatrix& u, const Representation& rho,
                               const std::optional<Rational>& qval) {
  VarSetPtr vars = merge_varsets(u.vars(), rho.vars());
  int dim = rho.dim();
  std::vector<PolyMatrix> blocks;
  blocks.reserve(static_cast<std::size_t>(u.rows()) * u.cols());
  for (int r = 0; r < u.rows(); ++r)
    for (int c = 0; c < u.cols(); ++c) {
      PolyMatrix block(dim, dim, vars);
      for (const auto& [g, coef] : u.at(r, c).terms()) {
        if (!g.free_part().empty())
          throw PreconditionError("Lawrence entries must be pure braid-part terms");
        block = block + rho.eval_braid(g.braid_part()).scaled(coef);
      }
      blocks.push_back(std::move(block));
    }
  PolyMatrix out = assemble_blocks(u.rows(), u.cols(), blocks);
  if (qval) {
    auto qi = out.vars()->index_of("q");
    if (qi) out = out.substituted(*qi, *qval);
  }
  return out;
}

namespace {

int inversions(const Perm& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

using HeckeElement = std::map<Perm, LaurentPoly>;

void hecke_add(HeckeElement& into, const Perm& w, const LaurentPoly& c) {
  auto it = into.find(w);
  if (it == into.end()) {
    if (!c.is_zero()) into.emplace(w, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) into.erase(it);
  }
}

// Right multiplication by T_j^{±1} in the T_w basis.
HeckeElement hecke_mul_gen(const HeckeElement& x, int j, int sign,
                           const LaurentPoly& q) {
  LaurentPoly one = LaurentPoly::one(q.vars());
  HeckeElement out;
  for (const auto& [w, c] : x) {
    Perm ws = w;
    for (auto& v : ws)
      if (v == j)
        v = j + 1;
      else if (v == j + 1)
        v = j;
    bool longer = inversions(ws) > inversions(w);
    if (sign > 0) {
      if (longer) {
        hecke_add(out, ws, c);
      } else {
        hecke_add(out, w, c * (one - q));
        hecke_add(out, ws, c * q);
      }
    } else {
      // T_w T_j^-1 via T_j^-1 = q^-1 T_j - (1-q) q^-1
      if (longer) {
        LaurentPoly qinv = q.inverse();
        hecke_add(out, ws, c * qinv);
        hecke_add(out, w, -c * (one - q) * qinv);
      } else {
        hecke_add(out, ws, c);
      }
    }
  }
  return out;
}

}  // namespace

std::map<Perm, LaurentPoly> hecke_reduce(const GroupRingElement& e) {
  VarSetPtr vars = merge_varsets(e.vars(), lawrence_vars());
  LaurentPoly q = LaurentPoly::variable("q", vars);
  HeckeElement total;
  for (const auto& [g, coef] : e.terms()) {
    if (!g.free_part().empty())
      throw PreconditionError("Hecke reduction needs pure braid-part terms");
    HeckeElement x;
    x.emplace(identity_perm(g.n()), coef.promoted(vars));
    for (const auto& l : g.braid_part().letters())
      x = hecke_mul_gen(x, l.index, l.sign, q);
    for (const auto& [w, c] : x) hecke_add(total, w, c);
  }
  return total;
}

bool hecke_equal(const GroupRingElement& a, const GroupRingElement& b) {
  return hecke_reduce(a) == hecke_reduce(b);
}

bool hecke_equal(const GroupRingMatrix& a, const GroupRingMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (!hecke_equal(a.at(r, c), b.at(r, c))) return false;
  return true;
}

GroupRingMatrix universal_lawrence_relation_defect(int n, int m, int i) {
  if (i < 1 || i + 1 > n - 1)
    throw PreconditionError("relation needs adjacent generators");
  BraidWord lhs(n, {{i, 1}, {i + 1, 1}, {i, 1}});
  BraidWord rhs(n, {{i + 1, 1}, {i, 1}, {i + 1, 1}});
  return universal_lawrence(n, m, lhs) - universal_lawrence(n, m, rhs);
}

bool hecke_quadratic_check(const PolyMatrix& M, const LaurentPoly& q) {
  if (M.rows() != M.cols())
    throw PreconditionError("Hecke check needs a square matrix");
  VarSetPtr vars = merge_varsets(M.vars(), q.vars());
  PolyMatrix A = M.promoted(vars);
  PolyMatrix I = PolyMatrix::identity(M.rows(), vars);
  return ((A + I.scaled(q.promoted(vars))) * (A - I)).is_zero();
}

bool lawrence_entry_claim(int n, int m, int i) {
  if (i < 1 || i > n - 1) throw PreconditionError("generator index out of range");
  VarSetPtr vars = lawrence_vars();
  LaurentPoly q = LaurentPoly::variable("q", vars);
  int mb = std::max(m, 1);
  GroupRingMatrix U = universal_lawrence(n, m, BraidWord::generator(n, i));
  GroupRingMatrix I = GroupRingMatrix::identity(U.rows(), mb, vars);
  GroupRingMatrix E =
      (U + I.scalar_lmul(GroupRingElement::one(mb, vars).scaled(q))) * (U - I);
  if (E.is_zero()) return true;
  // Candidate values (q + sigma_j)(1 - sigma_j) for each scalar generator,
  // up to sign (the product comes out as (sigma_j + q)(sigma_j - 1)).
  std::vector<GroupRingElement> candidates;
  for (int j = 1; j <= m - 1; ++j) {
    GroupRingElement sj =
        GroupRingElement::from_braid(BraidWord::generator(mb, j), vars);
    GroupRingElement one = GroupRingElement::one(mb, vars);
    GroupRingElement cand = (one.scaled(q) + sj) * (one - sj);
    candidates.push_back(cand);
    candidates.push_back(-cand);
  }
  for (int r = 0; r < E.rows(); ++r)
    for (int c = 0; c < E.cols(); ++c) {
      const GroupRingElement& e = E.at(r, c);
      if (e.is_zero()) continue;
      bool matched = false;
      for (const auto& cand : candidates)
        if (e == cand) {
          matched = true;
          break;
        }
      if (!matched) return false;
    }
  return true;
}

namespace {

// Greedy evaluation of a B_{n,m} word through named generator images:
// sigma_n is only consumed as adjacent same-sign pairs.
PolyMatrix eval_bnm_word(const Representation& rho, const BraidWord& b, int n) {
  PolyMatrix acc = rho.identity_matrix();
  const auto& ls = b.letters();
  for (std::size_t k = 0; k < ls.size(); ++k) {
    if (ls[k].index != n) {
      acc = acc * rho.image(braid_gen_name(ls[k].index, ls[k].sign));
      continue;
    }
    if (k + 1 < ls.size() && ls[k + 1].index == n && ls[k + 1].sign == ls[k].sign) {
      std::string name = "s" + std::to_string(n) +
                         (ls[k].sign > 0 ? "^2" : "^-2");
      acc = acc * rho.image(name);
      ++k;
    } else {
      throw PreconditionError(
          "word not expressed in B_{n,m} generators: isolated s" +
          std::to_string(n));
    }
  }
  return acc;
}

}  // namespace

PolyMatrix lawrence_step(const Representation& rho, const BraidWord& b) {
  int n = rho.n();
  int m = rho.m() - 1;  // rho lives on B_{n,m+1}
  if (rho.kind() != GroupKind::Bnm && rho.kind() != GroupKind::FnBnm)
    throw PreconditionError("lawrence_step needs a mixed braid group representation");
  if (m < 0) throw PreconditionError("lawrence_step needs rho on B_{n,m+1}, m >= 0");
  if (b.strands() != n + m)
    throw PreconditionError("word must live in B_" + std::to_string(n + m));
  if (!preserves_partition(b, n))
    throw PreconditionError("word does not preserve the {1..n} | {n+1..n+m} partition");
  auto [A, braid] = factor_entries(b);
  (void)braid;
  PolyMatrix braid_image = eval_bnm_word(rho, b, n);
  VarSetPtr vars = merge_varsets(A.vars(), rho.vars());
  int dim = rho.dim();
  std::vector<PolyMatrix> blocks;
  for (int r = 0; r < A.rows(); ++r)
    for (int c = 0; c < A.cols(); ++c) {
      PolyMatrix block(dim, dim, vars);
      for (const auto& [g, coef] : A.at(r, c).terms())
        block = block + rho.eval_free(g.free_part()).scaled(coef);
      blocks.push_back(block * braid_image);
    }
  return assemble_blocks(A.rows(), A.cols(), blocks);
}

namespace {

// The recursive tower. Level j holds representations of B_{n,j} on n+j
// strands; level m is rho' with rho'(sigma_i)=1 (i<n), rho'(sigma_n^2)=q,
// rho'(sigma_{n+i})=rho(sigma_i), evaluated on raw words through the
// cross-block linking number and the deletion of the first n strands.
class Tower {
public:
  Tower(const Representation& base, const LaurentPoly& q, int n)
      : base_(base), n_(n), m_(base.n()) {
    vars_ = merge_varsets(base.vars(), q.vars());
    q_ = q.promoted(vars_);
  }

  int levels() const { return m_; }

  PolyMatrix eval(int level, const BraidWord& w) {
    if (level == m_) return eval_bottom(w);
    if (w.strands() != n_ + level)
      throw PreconditionError("tower word strand mismatch");
    auto [A, braid] = factor_entries(w);
    (void)braid;
    PolyMatrix braid_image = eval(level + 1, w.on_strands(n_ + level + 1));
    int dim = braid_image.rows();
    std::vector<PolyMatrix> blocks;
    for (int r = 0; r < A.rows(); ++r)
      for (int c = 0; c < A.cols(); ++c) {
        PolyMatrix block(dim, dim, vars_);
        for (const auto& [g, coef] : A.at(r, c).terms())
          block = block + eval_free(level, g.free_part()).scaled(coef);
        blocks.push_back(block * braid_image);
      }
    return assemble_blocks(A.rows(), A.cols(), blocks);
  }

private:
  // Dimension of eval(level, .) output: base dim times (n+level)...(n+m-1).
  int out_dim(int level) const {
    int d = base_.dim();
    for (int v = n_ + level; v <= n_ + m_ - 1; ++v) d *= v;
    return d;
  }

  PolyMatrix eval_free(int level, const FreeWord& w) {
    PolyMatrix acc = PolyMatrix::identity(out_dim(level + 1), vars_);
    for (const auto& l : w.letters())
      acc = acc * free_image(level, l.index, l.sign);
    return acc;
  }

  // Image at `level` of the free generator g_k of F_{n+level}, i.e. the
  // level+1 evaluation of (sigma_{n+level} ... sigma_{k+1}) sigma_k^2 (...)^-1.
  const PolyMatrix& free_image(int level, int k, int sign) {
    auto key = std::make_tuple(level, k, sign);
    auto it = gcache_.find(key);
    if (it != gcache_.end()) return it->second;
    BraidWord g = embedded_free_generator(n_ + level, k);
    PolyMatrix img = eval(level + 1, sign > 0 ? g : g.inverse());
    return gcache_.emplace(key, std::move(img)).first->second;
  }

  // rho'(w) = q^(lk(w)/2) * rho(delete first n strands of w).
  PolyMatrix eval_bottom(const BraidWord& w) {
    if (w.strands() != n_ + m_)
      throw PreconditionError("tower word strand mismatch");
    if (!preserves_partition(w, n_))
      throw PreconditionError("word does not preserve the block partition");
    std::vector<int> strand_at(w.strands());
    for (int p = 0; p < w.strands(); ++p) strand_at[p] = p;  // 0-based ids
    int lk = 0;
    std::vector<BraidLetter> projected;
    for (const auto& l : w.letters()) {
      int p = l.index - 1;
      int a = strand_at[p], b = strand_at[p + 1];
      bool a2 = a >= n_, b2 = b >= n_;
      if (a2 != b2) {
        lk += l.sign;
      } else if (a2 && b2) {
        int r = 1;
        for (int t = 0; t < p; ++t)
          if (strand_at[t] >= n_) ++r;
        projected.push_back({r, l.sign});
      }
      std::swap(strand_at[p], strand_at[p + 1]);
    }
    if (lk % 2 != 0)
      throw PreconditionError("odd cross-block linking in a mixed braid word");
    PolyMatrix img =
        base_.eval_braid(BraidWord(std::max(m_, 1), projected)).promoted(vars_);
    return img.scaled(q_.pow(lk / 2));
  }

  Representation base_;
  int n_, m_;
  VarSetPtr vars_;
  LaurentPoly q_{VarSet::empty()};
  std::map<std::tuple<int, int, int>, PolyMatrix> gcache_;
};

}  // namespace

long lawrence_dimension(int n, int m) {
  long k = 1;
  for (int v = n; v <= n + m - 1; ++v) k *= v;
  return k;
}

Representation lawrence_tower(const Representation& rho_bm, const LaurentPoly& q,
                              int n) {
  if (rho_bm.kind() != GroupKind::Bn)
    throw PreconditionError("tower base must be a braid group representation");
  if (rho_bm.n() < 1) throw PreconditionError("tower base needs m >= 1");
  Tower tower(rho_bm, q, n);
  VarSetPtr vars = merge_varsets(rho_bm.vars(), q.vars());
  Representation out(GroupKind::Bn, n, 0,
                     static_cast<int>(lawrence_dimension(n, rho_bm.n())) *
                         rho_bm.dim(),
                     vars);
  for (int i = 1; i <= n - 1; ++i) {
    out.set_image(braid_gen_name(i),
                  tower.eval(0, BraidWord::generator(n, i)));
    out.set_image(braid_gen_name(i, -1),
                  tower.eval(0, BraidWord::generator(n, i, -1)));
  }
  return out;
}

PolyMatrix lawrence_tower_eval(const Representation& rho_bm, const LaurentPoly& q,
                               int n, const BraidWord& word) {
  Tower tower(rho_bm, q, n);
  return tower.eval(0, word);
}

}  // namespace braidrep
