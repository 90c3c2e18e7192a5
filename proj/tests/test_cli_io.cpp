#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "braidrep/lawrence.hpp"
#include "braidrep/text_io.hpp"

using namespace braidrep;

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code;
  std::string output;
};

fs::path temp_dir() {
  fs::path d = fs::temp_directory_path() / "braidrep_cli_tests";
  fs::create_directories(d);
  return d;
}

CliResult run_cli(const std::string& args) {
  const char* cli = std::getenv("BRAIDREP_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "BRAIDREP_CLI must point at the binary");
  fs::path out = temp_dir() / "out.txt";
  std::string cmd = std::string(cli) + " " + args + " > " + out.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::ostringstream ss;
  ss << in.rdbuf();
  return {code, ss.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  fs::path p = temp_dir() / name;
  std::ofstream out(p);
  out << content;
  return p.string();
}

bool reps_equal(const Representation& a, const Representation& b) {
  if (a.kind() != b.kind() || a.n() != b.n() || a.m() != b.m() ||
      a.dim() != b.dim())
    return false;
  if (!(*a.vars() == *b.vars())) return false;
  if (a.images().size() != b.images().size()) return false;
  for (const auto& [name, img] : a.images()) {
    auto it = b.images().find(name);
    if (it == b.images().end() || !(img == it->second)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("group ring formatting") {
  auto vars = VarSet::empty();
  GroupRingElement s1 =
      GroupRingElement::from_braid(BraidWord::generator(2, 1), vars);
  GroupRingElement g2s1 = GroupRingElement::from_element(
      SemidirectElement(FreeWord::generator(2, 2), BraidWord::generator(2, 1)),
      vars);
  CHECK(format_group_ring(s1 - g2s1) == "s1 - g2 s1");
  CHECK(format_group_ring(GroupRingElement::zero(2, vars)) == "0");
  CHECK(format_group_ring(GroupRingElement::one(2, vars)) == "1");
  GroupRingElement q1 = GroupRingElement::one(1, lawrence_vars())
                            .scaled(parse_poly("1 - q", lawrence_vars()));
  CHECK(format_group_ring(q1) == "(-q + 1)");
}

TEST_CASE("matrix formats") {
  PolyMatrix m = burau_oracle(2, parse_braid_word("s1", 2));
  CHECK(format_matrix(m, MatrixFormat::Plain) ==
        "[0, s*t]\n[s, -s*t + s]\n");
  std::string latex = format_matrix(m, MatrixFormat::Latex);
  CHECK(latex.find("\\begin{pmatrix}") == 0);
  CHECK(latex.find("s t") != std::string::npos);
  std::string json = format_matrix(m, MatrixFormat::Json);
  CHECK(json.find("\"rows\": 2") != std::string::npos);
  CHECK_THROWS_AS(matrix_format_from_name("csv"), ParseError);
}

TEST_CASE("representation files round trip") {
  Representation rho = Representation::one_dim_st(3);
  std::string text = save_representation(rho);
  Representation back = load_representation(text);
  CHECK(reps_equal(rho, back));
  CHECK(save_representation(back) == text);

  // a larger one with polynomial entries
  Representation burau(GroupKind::Bn, 3, 0, 3, burau_vars());
  for (int i = 1; i <= 2; ++i) {
    burau.set_image(braid_gen_name(i),
                    burau_oracle(3, BraidWord::generator(3, i)));
    burau.set_image(braid_gen_name(i, -1),
                    burau_oracle(3, BraidWord::generator(3, i, -1)));
  }
  std::string t2 = save_representation(burau);
  CHECK(save_representation(load_representation(t2)) == t2);

  CHECK_THROWS_AS(load_representation("{"), ParseError);
  CHECK_THROWS_AS(load_representation("{\"format_version\": 2}"), ParseError);
}

TEST_CASE("cli gen") {
  CliResult r = run_cli("gen burau --n 2 --word \"s1\" --params symbolic");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "[0, s*t]\n[s, -s*t + s]\n");

  r = run_cli("gen burau --n 2 --word \"s1\" --params s=1,t=2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "[0, 2]\n[1, -1]\n");

  r = run_cli("gen burau --n 3 --word \"\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "[1, 0, 0]\n[0, 1, 0]\n[0, 0, 1]\n");

  r = run_cli("gen lawrence --n 3 --m 2 --word \"s1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "[s1, 0, 0]\n[0, 0, q]\n[0, 1, (-q + 1)]\n");

  r = run_cli("gen reduced --n 3 --word \"s1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "[-g2 s1, 0]\n[s1, s1]\n");

  // malformed word: exit 2
  r = run_cli("gen burau --n 2 --word \"x1\"");
  CHECK(r.exit_code == 2);
  // bad flags: exit 2
  r = run_cli("gen burau");
  CHECK(r.exit_code == 2);
  // non-pure gassner word: exit 3
  r = run_cli("gen gassner --n 2 --word \"s1\"");
  CHECK(r.exit_code == 3);
}

TEST_CASE("cli output is deterministic") {
  CliResult a = run_cli("gen universal --n 3 --word \"s1 s2^-1 s1\"");
  CliResult b = run_cli("gen universal --n 3 --word \"s1 s2^-1 s1\"");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CliResult c = run_cli("gen gassner --n 3 --word \"s1 s1 s2 s2\"");
  CliResult d = run_cli("gen gassner --n 3 --word \"s1 s1 s2 s2\"");
  CHECK(c.output == d.output);
}

TEST_CASE("cli verify") {
  CliResult r = run_cli("verify braid-relations --n 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);

  r = run_cli("verify quadratic --n 3");
  CHECK(r.exit_code == 0);

  r = run_cli("verify reduced --n 3");
  CHECK(r.exit_code == 0);

  r = run_cli("verify gassner --n 3");
  CHECK(r.exit_code == 0);

  r = run_cli("verify hecke --n 3 --m 2");
  CHECK(r.exit_code == 0);

  r = run_cli("verify nonsense --n 3");
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli verify hecke with a representation file") {
  // unreduced Burau of B_2 at t = q
  VarSetPtr qv = lawrence_vars();
  Representation rho(GroupKind::Bn, 2, 0, 2, qv);
  PolyMatrix g(2, 2, qv);
  g.at(0, 0) = LaurentPoly::zero(qv);
  g.at(0, 1) = LaurentPoly::variable("q", qv);
  g.at(1, 0) = LaurentPoly::one(qv);
  g.at(1, 1) = LaurentPoly::one(qv) - LaurentPoly::variable("q", qv);
  rho.set_image("s1", g);
  rho.set_image("s1^-1", g.inverse_unit_det());
  std::string path = write_temp("burau_q.rep", save_representation(rho));

  CliResult r = run_cli("verify hecke --n 3 --m 2 --rep " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("cli apply lm") {
  Representation triv =
      Representation::trivial(GroupKind::FnBn, 2, 0, 1, VarSet::empty());
  std::string path = write_temp("triv_fnbn.rep", save_representation(triv));
  fs::path out = temp_dir() / "lm_out.rep";

  CliResult r = run_cli("apply --rep " + path +
                        " --construction lm --params t --out " + out.string());
  CHECK(r.exit_code == 0);
  std::ifstream in(out);
  std::ostringstream ss;
  ss << in.rdbuf();
  Representation built = load_representation(ss.str());
  CHECK(built.dim() == 2);
  // equals unreduced Burau at s=1
  CHECK(built.image("s1") ==
        burau_oracle(2, parse_braid_word("s1", 2)).substituted(0, 1));
}

TEST_CASE("cli apply gassner") {
  Representation triv = Representation::trivial(GroupKind::Pn, 3, 0, 1,
                                                VarSet::empty());
  std::string path = write_temp("triv_p3.rep", save_representation(triv));
  fs::path out = temp_dir() / "gassner_out.rep";
  CliResult r = run_cli("apply --rep " + path +
                        " --construction gassner --params t1,t2 --out " +
                        out.string());
  CHECK(r.exit_code == 0);
  std::ifstream in(out);
  std::ostringstream ss;
  ss << in.rdbuf();
  Representation built = load_representation(ss.str());
  CHECK(built.dim() == 2);
  REQUIRE(built.has_image("a1_2"));
  PolyMatrix a12 = built.image("a1_2");
  auto vars = a12.vars();
  CHECK(a12.at(0, 0) == parse_poly("t2", vars));
  CHECK(a12.at(1, 1) == parse_poly("1 - t2 + t1*t2", vars));

  // wrong group kind: exit 3
  CliResult bad = run_cli("apply --rep " + path + " --construction lm");
  CHECK(bad.exit_code == 3);
}

TEST_CASE("cli apply iterated tower") {
  Representation triv =
      Representation::trivial(GroupKind::Bn, 4, 0, 1, VarSet::empty());
  std::string path = write_temp("triv_b4.rep", save_representation(triv));
  fs::path out = temp_dir() / "tower_out.rep";
  CliResult r = run_cli("apply --rep " + path +
                        " --construction tower --iterations 2 --params t,u "
                        "--out " +
                        out.string());
  CHECK(r.exit_code == 0);
  std::ifstream in(out);
  std::ostringstream ss;
  ss << in.rdbuf();
  Representation built = load_representation(ss.str());
  CHECK(built.dim() == 6);
  CHECK(built.n() == 2);
  CHECK(!verify_representation(built));

  // parameter count must match the step count
  CliResult bad = run_cli("apply --rep " + path +
                          " --construction tower --iterations 2 --params t");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cli apply subgroup") {
  // an FnPn input: the rescaled trivial representation of P_3
  VarSetPtr vars = gassner_vars(2);
  Representation triv = Representation::trivial(GroupKind::Pn, 3, 0, 1, vars);
  Representation resc = gassner_rescale(
      triv, {LaurentPoly::variable("t1", vars), LaurentPoly::variable("t2", vars)});
  std::string path = write_temp("fnp2.rep", save_representation(resc));
  CliResult r = run_cli("apply --rep " + path + " --construction subgroup");
  CHECK(r.exit_code == 0);
  Representation built = load_representation(r.output);
  REQUIRE(built.has_image("a1_2"));
  CHECK(built.image("a1_2") ==
        gassner_matrix(2, BraidWord(2, {{1, 1}, {1, 1}})));
}

TEST_CASE("cli apply lawrence tower") {
  auto qt = VarSet::make({"t"});
  Representation rho(GroupKind::Bn, 2, 0, 1, qt);
  PolyMatrix mt(1, 1, qt), mti(1, 1, qt);
  mt.at(0, 0) = LaurentPoly::variable("t", qt);
  mti.at(0, 0) = mt.at(0, 0).inverse();
  rho.set_image("s1", mt);
  rho.set_image("s1^-1", mti);
  std::string path = write_temp("b2_t.rep", save_representation(rho));
  fs::path out = temp_dir() / "lk_out.rep";
  CliResult r = run_cli("apply --rep " + path +
                        " --construction lawrence --n 3 --params q --out " +
                        out.string());
  CHECK(r.exit_code == 0);
  std::ifstream in(out);
  std::ostringstream ss;
  ss << in.rdbuf();
  Representation built = load_representation(ss.str());
  CHECK(built.dim() == 12);
  CHECK(!verify_representation(built));
}
