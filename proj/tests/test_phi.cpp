#include "doctest.h"

#include "braidrep/representation.hpp"
#include "braidrep/text_io.hpp"
#include "test_util.hpp"

using namespace braidrep;
using testutil::insert_relator;
using testutil::random_braid_word;

namespace {

BraidWord bw(int strands, const std::string& text) {
  return parse_braid_word(text, strands);
}

GroupRingElement gre_free_word(int n, const std::string& text) {
  return GroupRingElement::from_free(parse_free_word(text, n), VarSet::empty());
}

// Recombine a factorization (A, b) into a group-ring matrix A * b.
GroupRingMatrix recombine(const GroupRingMatrix& A, const BraidWord& b) {
  return A.scalar_rmul(GroupRingElement::from_braid(b, A.vars()));
}

}  // namespace

TEST_CASE("R blocks match their displays") {
  GroupRingMatrix R = r_matrix(1, 2);
  CHECK(R.at(0, 0).is_zero());
  CHECK(R.at(0, 1) == gre_free_word(2, "g1"));
  CHECK(R.at(1, 0).is_one());
  CHECK(R.at(1, 1) == GroupRingElement::one(2, VarSet::empty()) - gre_free_word(2, "g1"));

  GroupRingMatrix Rinv = r_matrix_inv(1, 2);
  CHECK(Rinv.at(0, 0) ==
        GroupRingElement::one(2, VarSet::empty()) - gre_free_word(2, "g1^-1"));
  CHECK(Rinv.at(0, 1).is_one());
  CHECK(Rinv.at(1, 0) == gre_free_word(2, "g1^-1"));
  CHECK(Rinv.at(1, 1).is_zero());

  // n=3, i=2: block sits at rows/cols 2,3
  GroupRingMatrix R2 = r_matrix(2, 3);
  CHECK(R2.at(0, 0).is_one());
  CHECK(R2.at(1, 2) == gre_free_word(3, "g2"));
  CHECK_THROWS_AS(r_matrix(2, 2), PreconditionError);
}

TEST_CASE("phi of the identity and of inverses") {
  CHECK(phi(BraidWord(3)).matrix == GroupRingMatrix::identity(3, 3, VarSet::empty()));
  CHECK(phi(bw(2, "s1 s1^-1")).matrix ==
        GroupRingMatrix::identity(2, 2, VarSet::empty()));
  CHECK(phi(bw(2, "s1^-1 s1")).matrix ==
        GroupRingMatrix::identity(2, 2, VarSet::empty()));
}

TEST_CASE("phi braid relations, small sizes") {
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 1; j <= n - 1; ++j) {
        if (j == i + 1) {
          BraidWord lhs(n, {{i, 1}, {j, 1}, {i, 1}});
          BraidWord rhs(n, {{j, 1}, {i, 1}, {j, 1}});
          CHECK(phi(lhs).matrix == phi(rhs).matrix);
        } else {
          BraidWord lhs(n, {{i, 1}, {j, 1}});
          BraidWord rhs(n, {{j, 1}, {i, 1}});
          CHECK(phi(lhs).matrix == phi(rhs).matrix);
        }
      }
}

TEST_CASE("phi is constant on braid-equal words") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> len(1, 10);
  for (int n = 2; n <= 4; ++n) {
    Representation st = Representation::one_dim_st(n);
    std::uniform_int_distribution<int> num(1, 9);
    for (int rep = 0; rep < 34; ++rep) {
      BraidWord w = random_braid_word(n, len(rng), rng);
      UniversalImage a = phi(w);
      UniversalImage b = phi(insert_relator(w, rng));
      CHECK(a.matrix == b.matrix);
      // the specialized images at a random rational point agree as well
      PolyMatrix pa = specialize(a, st);
      PolyMatrix pb = specialize(b, st);
      Rational sv(num(rng), num(rng)), tv(num(rng), num(rng));
      CHECK(pa.substituted(0, sv).substituted(1, tv) ==
            pb.substituted(0, sv).substituted(1, tv));
    }
  }
}

TEST_CASE("factor_entries on generators and squares") {
  // phi(sigma_1) = sigma_1 R_1 = A sigma_1 with the entries conjugated
  // through the letter: sigma_1 g_1 = g_2 sigma_1, so A = [[0,g2],[1,1-g2]].
  auto [A1, b1] = factor_entries(bw(2, "s1"));
  GroupRingElement one = GroupRingElement::one(2, VarSet::empty());
  GroupRingElement g2 = gre_free_word(2, "g2");
  CHECK(A1.at(0, 0).is_zero());
  CHECK(A1.at(0, 1) == g2);
  CHECK(A1.at(1, 0) == one);
  CHECK(A1.at(1, 1) == one - g2);
  CHECK(braid_eq(b1, bw(2, "s1")));
  CHECK(recombine(A1, b1) == phi(bw(2, "s1")).matrix);

  auto [Ae, be] = factor_entries(BraidWord(3));
  CHECK(Ae == GroupRingMatrix::identity(3, 3, VarSet::empty()));
  CHECK(be.empty());

  // phi(sigma_1^2) = A sigma_1^2 with A = (sigma_1 |> R_1)(sigma_1^2 |> R_1):
  // writing b = g2^-1 g1 g2, the product expands by hand to
  // [[g2, g2 - g1 g2], [1 - g2, b + (1-g2)(1-b)]], and the bottom-right
  // entry simplifies to 1 - g2 + g1 g2.
  auto [A, b] = factor_entries(bw(2, "s1 s1"));
  GroupRingElement g1g2 = gre_free_word(2, "g1 g2");
  CHECK(A.at(0, 0) == g2);
  CHECK(A.at(0, 1) == g2 - g1g2);
  CHECK(A.at(1, 0) == one - g2);
  CHECK(A.at(1, 1) == one - g2 + g1g2);
  CHECK(recombine(A, b) == phi(bw(2, "s1 s1")).matrix);
}

TEST_CASE("factor_entries recombines to phi") {
  std::mt19937 rng(47);
  for (int n = 2; n <= 5; ++n)
    for (int rep = 0; rep < 12; ++rep) {
      BraidWord w = random_braid_word(n, 7, rng);
      auto [A, b] = factor_entries(w);
      CHECK(b == w);
      // entries of A are pure Z[F_n] terms
      for (int r = 0; r < A.rows(); ++r)
        for (int c = 0; c < A.cols(); ++c)
          for (const auto& [g, coef] : A.at(r, c).terms())
            CHECK(g.braid_nf() == garside_normal_form(BraidWord(n)));
      CHECK(recombine(A, w) == phi(w).matrix);
    }
}

TEST_CASE("specializing to the one-dimensional (s,t) representation") {
  Representation rho = Representation::one_dim_st(2);
  PolyMatrix m = specialize(phi(bw(2, "s1")), rho);
  auto vars = m.vars();
  CHECK(m.at(0, 0).is_zero());
  CHECK(m.at(0, 1) == parse_poly("s*t", vars));
  CHECK(m.at(1, 0) == parse_poly("s", vars));
  CHECK(m.at(1, 1) == parse_poly("s - s*t", vars));

  // s = t = 1 collapses to the permutation matrix
  PolyMatrix p = m.substituted(*vars->index_of("s"), 1)
                     .substituted(*vars->index_of("t"), 1);
  CHECK(p.at(0, 0).is_zero());
  CHECK(p.at(0, 1).is_one());
  CHECK(p.at(1, 0).is_one());
  CHECK(p.at(1, 1).is_zero());
}

TEST_CASE("specialize with arbitrary rational images is relation-blind") {
  // Any entrywise application of a map agrees on braid-equal words because
  // phi itself is; exercised with 2x2 rational images.
  auto vars = VarSet::empty();
  Representation rho(GroupKind::FnBn, 3, 0, 2, vars);
  std::mt19937 rng(51);
  std::uniform_int_distribution<int> num(-3, 3);
  auto random_invertible = [&] {
    for (;;) {
      PolyMatrix m(2, 2, vars);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          m.at(r, c) = LaurentPoly::constant(Rational(num(rng), 1 + (rng() % 3)), vars);
      if (!m.det().is_zero()) return m;
    }
  };
  for (int i = 1; i <= 2; ++i) {
    PolyMatrix s = random_invertible();
    rho.set_image(braid_gen_name(i), s);
    rho.set_image(braid_gen_name(i, -1), s.inverse_unit_det());
  }
  for (int i = 1; i <= 3; ++i) {
    PolyMatrix g = random_invertible();
    rho.set_image(free_gen_name(i), g);
    rho.set_image(free_gen_name(i, -1), g.inverse_unit_det());
  }
  CHECK(specialize(phi(bw(3, "s1 s2 s1")), rho) ==
        specialize(phi(bw(3, "s2 s1 s2")), rho));
}

TEST_CASE("burau oracle closed forms") {
  VarSetPtr vars = burau_vars();
  PolyMatrix m = burau_oracle(2, bw(2, "s1"));
  CHECK(m.at(0, 0).is_zero());
  CHECK(m.at(0, 1) == parse_poly("s*t", vars));
  CHECK(m.at(1, 0) == parse_poly("s", vars));
  CHECK(m.at(1, 1) == parse_poly("s - s*t", vars));

  CHECK(burau_oracle(3, BraidWord(3)) == PolyMatrix::identity(3, vars));

  PolyMatrix sq = burau_oracle(2, bw(2, "s1 s1"));
  CHECK(sq.at(0, 0) == parse_poly("s^2*t", vars));
  CHECK(sq.at(0, 1) == parse_poly("s^2*t - s^2*t^2", vars));
  CHECK(sq.at(1, 0) == parse_poly("s^2 - s^2*t", vars));
  CHECK(sq.at(1, 1) == parse_poly("s^2 - s^2*t + s^2*t^2", vars));
}

TEST_CASE("specialize is multiplicative in the word") {
  std::mt19937 rng(163);
  for (int n = 2; n <= 4; ++n) {
    Representation rho = Representation::one_dim_st(n);
    for (int rep = 0; rep < 8; ++rep) {
      BraidWord b1 = random_braid_word(n, 5, rng);
      BraidWord b2 = random_braid_word(n, 5, rng);
      CHECK(specialize(phi(b1 * b2), rho) ==
            specialize(phi(b1), rho) * specialize(phi(b2), rho));
    }
  }
}

TEST_CASE("specialize(phi) agrees with the burau oracle") {
  std::mt19937 rng(53);
  for (int n = 2; n <= 4; ++n) {
    Representation rho = Representation::one_dim_st(n);
    for (int rep = 0; rep < 10; ++rep) {
      BraidWord w = random_braid_word(n, 8, rng);
      CHECK(specialize(phi(w), rho) == burau_oracle(n, w).promoted(
                merge_varsets(VarSet::empty(), burau_vars())));
    }
  }
}

TEST_CASE("row-sum eigenvector at s = 1") {
  VarSetPtr vars = burau_vars();
  std::mt19937 rng(59);
  for (int n = 2; n <= 5; ++n)
    for (int rep = 0; rep < 6; ++rep) {
      BraidWord w = random_braid_word(n, 6, rng);
      PolyMatrix m = burau_oracle(n, w);
      LaurentPoly expected =
          LaurentPoly::variable("s", vars).pow(w.exponent_sum());
      for (int c = 0; c < n; ++c) {
        LaurentPoly colsum = LaurentPoly::zero(vars);
        for (int r = 0; r < n; ++r) colsum += m.at(r, c);
        CHECK(colsum == expected);
      }
    }
}

TEST_CASE("rescaling") {
  Representation triv = Representation::trivial(GroupKind::FnBn, 2, 0, 1,
                                                VarSet::empty());
  auto tvars = VarSet::make({"t"});
  LaurentPoly t = LaurentPoly::variable("t", tvars);
  Representation scaled = rescale_rep(triv, t);
  CHECK(scaled.image("g1").at(0, 0) == t.promoted(scaled.vars()));
  CHECK(scaled.image("s1").at(0, 0).is_one());
  CHECK(!verify_representation(scaled));

  // t = 1 leaves the representation unchanged
  Representation same = rescale_rep(triv, LaurentPoly::one(VarSet::empty()));
  CHECK(same.image("g1").is_identity());

  // relation check still passes after scaling a 2-dim representation
  Representation rho = restrict_from_bn1(
      Representation::trivial(GroupKind::Bn, 3, 0, 2, VarSet::empty()));
  CHECK(!verify_representation(rescale_rep(rho, t)));
}

TEST_CASE("restriction from B_{n+1}") {
  // trivial in, trivial out
  Representation triv3 = Representation::trivial(GroupKind::Bn, 3, 0, 1,
                                                 VarSet::empty());
  Representation r = restrict_from_bn1(triv3);
  CHECK(r.kind() == GroupKind::FnBn);
  CHECK(r.n() == 2);
  CHECK(r.image("g1").is_identity());
  CHECK(!verify_representation(r));

  // 1-dim rho(sigma_i) = c: g_i -> c^2, sigma_i -> c
  auto cvars = VarSet::make({"c"});
  Representation rho(GroupKind::Bn, 3, 0, 1, cvars);
  LaurentPoly c = LaurentPoly::variable("c", cvars);
  PolyMatrix mc(1, 1, cvars), mci(1, 1, cvars);
  mc.at(0, 0) = c;
  mci.at(0, 0) = c.inverse();
  for (int i = 1; i <= 2; ++i) {
    rho.set_image(braid_gen_name(i), mc);
    rho.set_image(braid_gen_name(i, -1), mci);
  }
  Representation res = restrict_from_bn1(rho);
  CHECK(res.image("g1").at(0, 0) == c * c);
  CHECK(res.image("g2").at(0, 0) == c * c);
  CHECK(res.image("s1").at(0, 0) == c);
  CHECK(!verify_representation(res));

  // unreduced Burau of B_3 at s=1 restricts to a consistent representation
  Representation burau3(GroupKind::Bn, 3, 0, 3, burau_vars());
  for (int i = 1; i <= 2; ++i) {
    burau3.set_image(braid_gen_name(i),
                     burau_oracle(3, bw(3, "s" + std::to_string(i)))
                         .substituted(0, 1));
    burau3.set_image(braid_gen_name(i, -1),
                     burau_oracle(3, bw(3, "s" + std::to_string(i) + "^-1"))
                         .substituted(0, 1));
  }
  Representation res2 = restrict_from_bn1(burau3);
  CHECK(!verify_representation(res2));
}

TEST_CASE("the iterated tower") {
  // one step from the trivial representation of B_3 gives unreduced Burau
  // at s = 1
  Representation base = Representation::trivial(GroupKind::Bn, 3, 0, 1,
                                                VarSet::empty());
  auto tvars = VarSet::make({"t"});
  LaurentPoly t = LaurentPoly::variable("t", tvars);
  Representation tower = lm_tower(base, {t}, 2);
  CHECK(tower.dim() == 2);
  PolyMatrix expected = burau_oracle(2, bw(2, "s1")).substituted(0, 1);
  CHECK(tower.image("s1") == expected);

  // zero steps: base unchanged
  Representation same = lm_tower(base, {}, 3);
  CHECK(same.dim() == 1);

  // two steps from trivial B_4: a 6-dimensional representation of B_2
  auto t2vars = VarSet::make({"t", "u"});
  Representation base4 = Representation::trivial(GroupKind::Bn, 4, 0, 1,
                                                 VarSet::empty());
  Representation six = lm_tower(
      base4,
      {LaurentPoly::variable("t", t2vars), LaurentPoly::variable("u", t2vars)},
      2);
  CHECK(six.dim() == 6);
  CHECK(!verify_representation(six));
  CHECK(six.image("s1") * six.image("s1^-1") ==
        PolyMatrix::identity(6, six.vars()));

  CHECK_THROWS_AS(lm_tower(base, {t}, 3), PreconditionError);
}

TEST_CASE("verify_representation reports failures") {
  Representation rho = Representation::one_dim_st(3);
  CHECK(!verify_representation(rho));
  // break a relation
  auto vars = rho.vars();
  PolyMatrix bad(1, 1, vars);
  bad.at(0, 0) = parse_poly("s + 1", vars);
  rho.set_image("g1", bad);
  auto msg = verify_representation(rho);
  REQUIRE(msg.has_value());
  CHECK(msg->find("fails") != std::string::npos);
}

TEST_CASE("reduced blocks match their displays") {
  // n=3: phi_r(sigma_1) block [[-g1, 0], [1, 1]]
  GroupRingMatrix S1 = s_matrix(1, 3);
  GroupRingElement one = GroupRingElement::one(3, VarSet::empty());
  CHECK(S1.at(0, 0) == -gre_free_word(3, "g1"));
  CHECK(S1.at(0, 1).is_zero());
  CHECK(S1.at(1, 0) == one);
  CHECK(S1.at(1, 1) == one);
  // n=3: phi_r(sigma_2) block [[1, g2], [0, -g2]]
  GroupRingMatrix S2 = s_matrix(2, 3);
  CHECK(S2.at(0, 0) == one);
  CHECK(S2.at(0, 1) == gre_free_word(3, "g2"));
  CHECK(S2.at(1, 0).is_zero());
  CHECK(S2.at(1, 1) == -gre_free_word(3, "g2"));
  // interior block for n=4, i=2: the 3x3 S block with corner entry 1 (the
  // value forced by the displayed inverse)
  GroupRingMatrix S = s_matrix(2, 4);
  CHECK(S.at(0, 0) == GroupRingElement::one(4, VarSet::empty()));
  CHECK(S.at(0, 1) == gre_free_word(4, "g2"));
  CHECK(S.at(1, 1) == -gre_free_word(4, "g2"));
  CHECK(S.at(2, 1) == GroupRingElement::one(4, VarSet::empty()));
  CHECK(S.at(2, 2) == GroupRingElement::one(4, VarSet::empty()));
  // blocks invert each other
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i <= n - 1; ++i)
      CHECK(s_matrix(i, n) * s_matrix_inv(i, n) ==
            GroupRingMatrix::identity(n - 1, n, VarSet::empty()));
}

TEST_CASE("phi_r relations and identity") {
  CHECK(phi_r(BraidWord(3)).matrix ==
        GroupRingMatrix::identity(2, 3, VarSet::empty()));
  for (int n = 2; n <= 4; ++n) {
    for (int i = 1; i <= n - 1; ++i) {
      BraidWord w(n, {{i, 1}, {i, -1}});
      CHECK(phi_r(w).matrix == GroupRingMatrix::identity(n - 1, n, VarSet::empty()));
    }
    for (int i = 1; i <= n - 2; ++i) {
      BraidWord lhs(n, {{i, 1}, {i + 1, 1}, {i, 1}});
      BraidWord rhs(n, {{i + 1, 1}, {i, 1}, {i + 1, 1}});
      CHECK(phi_r(lhs).matrix == phi_r(rhs).matrix);
    }
  }
}

TEST_CASE("reduced and unreduced characteristic polynomials") {
  std::mt19937 rng(61);
  std::uniform_int_distribution<int> num(1, 7);
  Representation rho3 = Representation::one_dim_st(3);
  for (int rep = 0; rep < 5; ++rep) {
    BraidWord w = random_braid_word(3, 6, rng);
    PolyMatrix full = specialize(phi(w), rho3);
    PolyMatrix red = specialize(phi_r(w), rho3);
    for (int trial = 0; trial < 3; ++trial) {
      Rational sv(num(rng), num(rng));
      Rational tv(num(rng), num(rng));
      auto si = *full.vars()->index_of("s");
      auto ti = *full.vars()->index_of("t");
      PolyMatrix fm = full.substituted(si, sv).substituted(ti, tv);
      PolyMatrix rm = red.substituted(si, sv).substituted(ti, tv);
      LaurentPoly cf = fm.char_poly();
      LaurentPoly cr = rm.char_poly();
      Rational spow = 1;
      for (int k = 0; k < std::abs(w.exponent_sum()); ++k)
        spow *= w.exponent_sum() > 0 ? sv : Rational(1) / sv;
      LaurentPoly factor = LaurentPoly::variable("x", cf.vars()) -
                           LaurentPoly::constant(spow, cf.vars());
      CHECK(cf == factor * cr.promoted(cf.vars()));
    }
  }
}

TEST_CASE("universal quadratic relation") {
  CHECK(quadratic_check_universal(1, 2));
  CHECK(quadratic_check_universal(2, 3));
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i <= n - 1; ++i) CHECK(quadratic_check_universal(i, n));

  // mutating g_i to g_i^2 in the left factor breaks it
  int n = 2, i = 1;
  auto vars = VarSet::empty();
  UniversalImage u = phi(BraidWord::generator(n, i));
  SemidirectElement sigma = SemidirectElement::from_braid(BraidWord::generator(n, i));
  FreeWord gi = FreeWord::generator(n, i);
  SemidirectElement sigma_g2 =
      sd_mul(sigma, SemidirectElement::from_free(gi * gi));
  GroupRingMatrix left =
      u.matrix + GroupRingMatrix::identity(n, n, vars).scalar_lmul(
                     GroupRingElement::from_element(sigma_g2, vars));
  GroupRingMatrix right =
      u.matrix - GroupRingMatrix::identity(n, n, vars).scalar_lmul(
                     GroupRingElement::from_element(sigma, vars));
  CHECK_FALSE((left * right).is_zero());
}
