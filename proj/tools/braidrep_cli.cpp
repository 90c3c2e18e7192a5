// Command-line interface: exact braid-group representation matrices
// (gen), symbolic identity suites (verify), and representation-file
// constructions (apply).

#include <CLI11.hpp>
#include <cctype>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "braidrep/lawrence.hpp"
#include "braidrep/text_io.hpp"

using namespace braidrep;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

struct ParamAssignments {
  bool symbolic = true;
  std::vector<std::pair<std::string, Rational>> values;
};

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return Rational(Integer(text.substr(0, slash)),
                    Integer(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError("bad rational literal: " + text);
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

ParamAssignments parse_assignments(const std::string& text) {
  ParamAssignments p;
  if (text.empty() || text == "symbolic") return p;
  p.symbolic = false;
  for (const auto& item : split(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected var=value in --params, got '" + item + "'");
    p.values.emplace_back(item.substr(0, eq), parse_rational(item.substr(eq + 1)));
  }
  return p;
}

bool looks_symbolic(const std::string& item) {
  return !item.empty() && !std::isdigit(static_cast<unsigned char>(item[0])) &&
         item[0] != '-';
}

// Items for tower-style parameter lists: bare names are symbolic variables,
// anything else is a rational literal.
std::vector<LaurentPoly> parse_param_list(const std::string& text, int expected) {
  std::vector<std::string> items =
      text.empty() ? std::vector<std::string>{} : split(text, ',');
  if (static_cast<int>(items.size()) != expected)
    throw ParseError("expected " + std::to_string(expected) +
                     " comma-separated parameters, got " +
                     std::to_string(items.size()));
  std::vector<std::string> names;
  for (const auto& it : items)
    if (looks_symbolic(it)) names.push_back(it);
  VarSetPtr vars = VarSet::make(names);
  std::vector<LaurentPoly> out;
  for (const auto& it : items) {
    if (looks_symbolic(it))
      out.push_back(LaurentPoly::variable(it, vars));
    else
      out.push_back(LaurentPoly::constant(parse_rational(it), vars));
  }
  return out;
}

PolyMatrix substituted_all(PolyMatrix m, const ParamAssignments& p) {
  for (const auto& [name, value] : p.values) {
    auto idx = m.vars()->index_of(name);
    if (!idx) throw ParseError("unknown parameter: " + name);
    m = m.substituted(*idx, value);
  }
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw PreconditionError("cannot write file: " + out_path);
  out << text;
}

BraidWord random_word(int n, int len, std::mt19937& rng) {
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<BraidLetter> ls;
  for (int k = 0; k < len; ++k) ls.push_back({idx(rng), sgn(rng) ? 1 : -1});
  return BraidWord(n, std::move(ls));
}

BraidWord random_pure(int n, int factors, std::mt19937& rng) {
  std::uniform_int_distribution<int> idx(1, n);
  BraidWord out(n);
  for (int k = 0; k < factors; ++k) {
    int i = idx(rng), j = idx(rng);
    while (i == j) j = idx(rng);
    if (i > j) std::swap(i, j);
    out = out * pure_generator(n, i, j);
  }
  return out;
}

int run_gen(const std::string& kind, int n, int m, const std::string& word_text,
            const std::string& params_text, const std::string& format_name,
            const std::string& out_path) {
  MatrixFormat fmt = matrix_format_from_name(format_name);
  ParamAssignments params = parse_assignments(params_text);
  std::string out;

  if (kind == "burau") {
    BraidWord w = parse_braid_word(word_text, n);
    out = format_matrix(substituted_all(burau_oracle(n, w), params), fmt);
  } else if (kind == "gassner") {
    BraidWord w = parse_braid_word(word_text, n);
    if (!w.is_pure())
      throw PreconditionError("gassner needs a pure braid word");
    out = format_matrix(substituted_all(gassner_matrix(n, w), params), fmt);
  } else if (kind == "lawrence") {
    BraidWord w = parse_braid_word(word_text, n);
    GroupRingMatrix u = universal_lawrence(n, m, w);
    if (!params.symbolic)
      throw ParseError(
          "gen lawrence emits the universal matrix; use verify hecke or "
          "apply --construction lawrence for specializations");
    out = format_matrix(u, fmt);
  } else if (kind == "universal" || kind == "reduced") {
    BraidWord w = parse_braid_word(word_text, n);
    UniversalImage u = kind == "universal" ? phi(w) : phi_r(w);
    if (params.symbolic) {
      out = format_matrix(u.matrix, fmt);
    } else {
      PolyMatrix s = specialize(u, Representation::one_dim_st(n));
      out = format_matrix(substituted_all(s, params), fmt);
    }
  } else {
    throw ParseError("unknown gen kind: " + kind);
  }
  write_output(out, out_path);
  return 0;
}

struct Reporter {
  int failures = 0;
  void line(const std::string& what, bool ok) {
    std::cout << (ok ? "PASS  " : "FAIL  ") << what << "\n";
    if (!ok) ++failures;
  }
};

int run_verify(const std::string& suite, int n, int m,
               const std::string& rep_path) {
  Reporter rep;
  std::mt19937 rng(2026);

  auto braid_relation_suite = [&](auto image_of, const std::string& tag) {
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 1; j <= n - 1; ++j) {
        std::string si = "s" + std::to_string(i), sj = "s" + std::to_string(j);
        if (j == i + 1) {
          BraidWord lhs(n, {{i, 1}, {j, 1}, {i, 1}});
          BraidWord rhs(n, {{j, 1}, {i, 1}, {j, 1}});
          rep.line(tag + "(" + si + " " + sj + " " + si + ") = " + tag + "(" +
                       sj + " " + si + " " + sj + ")",
                   image_of(lhs) == image_of(rhs));
        } else {
          BraidWord lhs(n, {{i, 1}, {j, 1}});
          BraidWord rhs(n, {{j, 1}, {i, 1}});
          rep.line(tag + "(" + si + " " + sj + ") = " + tag + "(" + sj + " " +
                       si + ")",
                   image_of(lhs) == image_of(rhs));
        }
      }
    for (int i = 1; i <= n - 1; ++i) {
      BraidWord w(n, {{i, 1}, {i, -1}});
      rep.line(tag + "(s" + std::to_string(i) + " s" + std::to_string(i) +
                   "^-1) = I",
               image_of(w) == image_of(BraidWord(n)));
    }
  };

  if (suite == "braid-relations") {
    braid_relation_suite([](const BraidWord& w) { return phi(w).matrix; }, "phi");
  } else if (suite == "reduced") {
    if (n < 2) throw PreconditionError("reduced suite needs n >= 2");
    braid_relation_suite([](const BraidWord& w) { return phi_r(w).matrix; },
                         "phi_r");
    Representation st = Representation::one_dim_st(n);
    std::uniform_int_distribution<int> num(1, 9);
    for (int trial = 0; trial < 3; ++trial) {
      BraidWord w = random_word(n, 6, rng);
      PolyMatrix full = specialize(phi(w), st);
      PolyMatrix red = specialize(phi_r(w), st);
      Rational sv(num(rng), num(rng)), tv(num(rng), num(rng));
      auto si = *full.vars()->index_of("s");
      auto ti = *full.vars()->index_of("t");
      LaurentPoly cf = full.substituted(si, sv).substituted(ti, tv).char_poly();
      LaurentPoly cr = red.substituted(si, sv).substituted(ti, tv).char_poly();
      Rational spow = 1;
      for (int k = 0; k < std::abs(w.exponent_sum()); ++k)
        spow *= w.exponent_sum() > 0 ? sv : Rational(1) / sv;
      LaurentPoly factor = LaurentPoly::variable("x", cf.vars()) -
                           LaurentPoly::constant(spow, cf.vars());
      rep.line("char(rho+) = (x - s^e) char(rho_r+) at random (s,t), word \"" +
                   format_braid_word(w) + "\"",
               cf == factor * cr.promoted(cf.vars()));
    }
  } else if (suite == "quadratic") {
    for (int i = 1; i <= n - 1; ++i)
      rep.line("(phi(s" + std::to_string(i) + ") + s g I)(phi(s" +
                   std::to_string(i) + ") - s I) = 0",
               quadratic_check_universal(i, n));
  } else if (suite == "hecke") {
    if (m < 0 || m > n) throw PreconditionError("hecke suite needs 0 <= m <= n");
    VarSetPtr qv = lawrence_vars();
    LaurentPoly q = LaurentPoly::variable("q", qv);
    std::vector<std::pair<std::string, Representation>> inputs;
    if (!rep_path.empty()) {
      inputs.emplace_back(rep_path, load_representation(read_file(rep_path)));
    } else {
      Representation one(GroupKind::Bn, std::max(m, 1), 0, 1, qv);
      Representation negq(GroupKind::Bn, std::max(m, 1), 0, 1, qv);
      PolyMatrix m1 = PolyMatrix::identity(1, qv), mq(1, 1, qv), mqi(1, 1, qv);
      mq.at(0, 0) = -q;
      mqi.at(0, 0) = mq.at(0, 0).inverse();
      for (int i = 1; i <= m - 1; ++i) {
        one.set_image(braid_gen_name(i), m1);
        one.set_image(braid_gen_name(i, -1), m1);
        negq.set_image(braid_gen_name(i), mq);
        negq.set_image(braid_gen_name(i, -1), mqi);
      }
      inputs.emplace_back("one-dimensional rho = 1", one);
      inputs.emplace_back("one-dimensional rho = -q", negq);
    }
    for (const auto& [name, rho] : inputs) {
      bool input_ok = true;
      for (int i = 1; i <= m - 1; ++i)
        if (rho.has_image(braid_gen_name(i)))
          input_ok =
              input_ok && hecke_quadratic_check(rho.image(braid_gen_name(i)), q);
      rep.line("input satisfies (M + qI)(M - I) = 0: " + name, input_ok);
      for (int i = 1; i <= n - 1; ++i) {
        PolyMatrix M = specialize_lawrence(
            universal_lawrence(n, m, BraidWord::generator(n, i)), rho,
            std::nullopt);
        rep.line(
            "rho+(s" + std::to_string(i) + ") satisfies the quadratic, " + name,
            hecke_quadratic_check(M, q));
      }
    }
    for (int i = 1; i <= n - 1; ++i)
      rep.line("entry claim for (phi(s" + std::to_string(i) + ")+qI)(phi(s" +
                   std::to_string(i) + ")-I)",
               lawrence_entry_claim(n, m, i));
  } else if (suite == "gassner") {
    VarSetPtr vars = gassner_vars(n);
    Representation triv =
        Representation::trivial(GroupKind::Pn, n + 1, 0, 1, vars);
    std::vector<LaurentPoly> t;
    for (int i = 1; i <= n; ++i)
      t.push_back(LaurentPoly::variable("t" + std::to_string(i), vars));
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        PolyMatrix mj = gassner(triv, t, pure_generator(n, i, j));
        rep.line("det gassner(a" + std::to_string(i) + "_" + std::to_string(j) +
                     ") = t" + std::to_string(i) + "*t" + std::to_string(j),
                 mj.det() == t[i - 1] * t[j - 1]);
      }
    auto tv = VarSet::make({"t"});
    Representation trivt =
        Representation::trivial(GroupKind::Pn, n + 1, 0, 1, tv);
    std::vector<LaurentPoly> teq(n, LaurentPoly::variable("t", tv));
    for (int trial = 0; trial < 3; ++trial) {
      BraidWord w = random_pure(n, 2, rng);
      rep.line("all-equal parameters match Burau at s=1, word \"" +
                   format_braid_word(w) + "\"",
               gassner(trivt, teq, w) == burau_oracle(n, w).substituted(0, 1));
      BraidWord w2 = random_pure(n, 1, rng);
      rep.line("multiplicative on pure words",
               gassner(trivt, teq, w * w2) ==
                   gassner(trivt, teq, w) * gassner(trivt, teq, w2));
    }
  } else {
    throw ParseError("unknown verify suite: " + suite);
  }

  std::cout << (rep.failures == 0
                    ? "all checks passed"
                    : std::to_string(rep.failures) + " check(s) failed")
            << "\n";
  return rep.failures == 0 ? 0 : kExitVerifyFailed;
}

std::string inverse_name(const std::string& name) {
  auto caret = name.find('^');
  return caret == std::string::npos
             ? name + "^-1"
             : name.substr(0, caret) + "^-" + name.substr(caret + 1);
}

int run_apply(const std::string& rep_path, const std::string& construction,
              int n_target, int iterations, const std::string& params_text,
              const std::string& out_path) {
  Representation rho = load_representation(read_file(rep_path));
  std::optional<Representation> result;

  if (construction == "lm") {
    if (rho.kind() != GroupKind::FnBn)
      throw PreconditionError("lm needs an FnBn representation file");
    if (!params_text.empty() && params_text != "symbolic")
      result = lm_step(rescale_rep(rho, parse_param_list(params_text, 1)[0]));
    else
      result = lm_step(rho);
  } else if (construction == "gassner") {
    if (rho.kind() != GroupKind::Pn)
      throw PreconditionError("gassner needs a Pn representation file");
    int n = rho.n() - 1;
    std::vector<LaurentPoly> t = parse_param_list(params_text, n);
    for (const auto& [name, word] : pure_braid_subgroup(n).generators) {
      PolyMatrix img = gassner(rho, t, word);
      if (!result)
        result = Representation(GroupKind::Pn, n, 0, img.rows(), img.vars());
      result->set_image(name, img);
      result->set_image(inverse_name(name), gassner(rho, t, word.inverse()));
    }
  } else if (construction == "subgroup") {
    if (rho.kind() != GroupKind::FnPn)
      throw PreconditionError("subgroup needs an FnPn representation file");
    int n = rho.n();
    SubgroupDescriptor G = pure_braid_subgroup(n);
    for (const auto& [name, word] : G.generators) {
      PolyMatrix img = lm_subgroup(G, rho, {{name, 1}});
      if (!result)
        result = Representation(GroupKind::Pn, n, 0, img.rows(), img.vars());
      result->set_image(name, img);
      result->set_image(inverse_name(name), lm_subgroup(G, rho, {{name, -1}}));
    }
  } else if (construction == "lawrence-step") {
    if (rho.kind() != GroupKind::Bnm)
      throw PreconditionError("lawrence-step needs a Bnm representation file");
    int n = rho.n(), m = rho.m() - 1;
    if (m < 0) throw PreconditionError("input must live on B_{n,m+1} with m >= 0");
    for (const auto& [name, word] : bnm_generators(n, m).generators) {
      PolyMatrix img = lawrence_step(rho, word);
      if (!result)
        result = Representation(GroupKind::Bnm, n, m, img.rows(), img.vars());
      result->set_image(name, img);
      result->set_image(inverse_name(name), lawrence_step(rho, word.inverse()));
    }
    if (!result)
      throw PreconditionError("B_{n,m} has no generators for n+m < 2");
  } else if (construction == "lawrence" || construction == "lawrence-tower") {
    if (rho.kind() != GroupKind::Bn)
      throw PreconditionError("the Lawrence tower needs a Bn representation file");
    LaurentPoly q = params_text.empty()
                        ? LaurentPoly::variable("q", lawrence_vars())
                        : parse_param_list(params_text, 1)[0];
    result = lawrence_tower(rho, q, n_target);
  } else if (construction == "tower") {
    if (rho.kind() != GroupKind::Bn)
      throw PreconditionError("the tower needs a Bn representation file");
    std::vector<LaurentPoly> params = parse_param_list(params_text, iterations);
    result = lm_tower(rho, params, rho.n() - iterations);
  } else {
    throw ParseError("unknown construction: " + construction);
  }

  write_output(save_representation(*result), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact braid group representations: the universal construction, its "
      "subgroup/Gassner and Lawrence variants, and symbolic verification"};
  app.require_subcommand(1);

  std::string kind, word_text, params_text, format_name = "plain", out_path;
  std::string suite, rep_path, construction;
  int n = 2, m = 0, iterations = 1, n_target = 2;

  CLI::App* gen = app.add_subcommand("gen", "emit representation matrices");
  gen->add_option("kind", kind, "burau|gassner|lawrence|universal|reduced")
      ->required();
  gen->add_option("--n", n, "strand count")->required();
  gen->add_option("--m", m, "Lawrence basis size (gen lawrence)");
  gen->add_option("--word", word_text, "braid word, e.g. \"s1 s2^-1\"");
  gen->add_option("--params", params_text,
                  "symbolic (default) or var=value list, e.g. s=1,t=2/3");
  gen->add_option("--format", format_name, "plain|json|latex");
  gen->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run identity suites");
  verify
      ->add_option("suite", suite,
                   "braid-relations|quadratic|hecke|reduced|gassner")
      ->required();
  verify->add_option("--n", n, "strand count")->required();
  verify->add_option("--m", m, "scalar braid group size (hecke)");
  verify->add_option("--rep", rep_path, "representation file (hecke input)");

  CLI::App* apply = app.add_subcommand("apply", "run a construction on a file");
  apply->add_option("--rep", rep_path, "input representation file")->required();
  apply
      ->add_option("--construction", construction,
                   "lm|subgroup|gassner|lawrence-step|lawrence|tower")
      ->required();
  apply->add_option("--n", n_target, "target strand count (lawrence)");
  apply->add_option("--iterations", iterations, "tower steps");
  apply->add_option("--params", params_text,
                    "comma list: variable names or rationals");
  apply->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (gen->parsed())
      return run_gen(kind, n, m, word_text, params_text, format_name, out_path);
    if (verify->parsed()) return run_verify(suite, n, m, rep_path);
    if (apply->parsed())
      return run_apply(rep_path, construction, n_target, iterations,
                       params_text, out_path);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return 0;
}
