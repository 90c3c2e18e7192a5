#include "braidrep/text_io.hpp"

#include <nlohmann/json.hpp>
#include <cctype>
#include <sstream>

namespace braidrep {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::pair<int, int>> parse_letters(const std::string& text,
                                               char prefix, int max_index) {
  std::vector<std::pair<int, int>> letters;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok.empty() || tok[0] != prefix)
      throw ParseError(std::string("expected '") + prefix + "<i>' token, got '" +
                       tok + "'");
    std::size_t pos = 1;
    std::size_t caret = tok.find('^');
    std::string idx_str = tok.substr(pos, caret == std::string::npos
                                              ? std::string::npos
                                              : caret - pos);
    int exp = 1;
    if (caret != std::string::npos) {
      try {
        exp = std::stoi(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw ParseError("bad exponent in token '" + tok + "'");
      }
    }
    int idx = 0;
    try {
      idx = std::stoi(idx_str);
    } catch (const std::exception&) {
      throw ParseError("bad generator index in token '" + tok + "'");
    }
    if (idx < 1 || idx > max_index)
      throw ParseError("generator index out of range in token '" + tok + "'");
    if (exp == 0) continue;
    int sign = exp > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(exp); ++k) letters.emplace_back(idx, sign);
  }
  return letters;
}

}  // namespace

BraidWord parse_braid_word(const std::string& text, int strands) {
  std::vector<BraidLetter> ls;
  for (auto [i, s] : parse_letters(text, 's', strands - 1))
    ls.push_back({i, s});
  return BraidWord(strands, std::move(ls));
}

FreeWord parse_free_word(const std::string& text, int rank) {
  std::vector<FreeLetter> ls;
  for (auto [i, s] : parse_letters(text, 'g', rank)) ls.push_back({i, s});
  return FreeWord(rank, ls);
}

std::string format_braid_word(const BraidWord& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) os << ' ';
    first = false;
    os << 's' << l.index;
    if (l.sign < 0) os << "^-1";
  }
  return os.str();
}

std::string format_free_word(const FreeWord& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) os << ' ';
    first = false;
    os << 'g' << l.index;
    if (l.sign < 0) os << "^-1";
  }
  return os.str();
}

std::string format_element(const SemidirectElement& g) {
  std::string free = format_free_word(g.free_part());
  std::string braid = format_braid_word(g.braid_nf().canonical_word());
  if (free.empty() && braid.empty()) return "1";
  if (free.empty()) return braid;
  if (braid.empty()) return free;
  return free + " " + braid;
}

std::string format_group_ring(const GroupRingElement& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, coef] : e.terms()) {
    std::string atom = format_element(g);
    bool identity_atom = atom == "1";
    // Single-term coefficients fold their sign into the join.
    bool fold = coef.is_unit();
    LaurentPoly mag = coef;
    bool negative = false;
    if (fold) {
      const auto& c = coef.terms().begin()->second;
      if (c < 0) {
        negative = true;
        mag = -coef;
      }
    }
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    std::string cs = format_poly(mag);
    if (identity_atom) {
      os << (fold ? cs : "(" + cs + ")");
    } else if (mag.is_one()) {
      os << atom;
    } else if (fold) {
      os << cs << "*" << atom;
    } else {
      os << "(" << cs << ")*" << atom;
    }
  }
  return os.str();
}

MatrixFormat matrix_format_from_name(const std::string& name) {
  if (name == "plain") return MatrixFormat::Plain;
  if (name == "json") return MatrixFormat::Json;
  if (name == "latex") return MatrixFormat::Latex;
  throw ParseError("unknown format: " + name + " (expected plain|json|latex)");
}

namespace {

std::string latexify(const std::string& entry) {
  // s<i> -> \sigma_{i}, g<i> -> g_{i}, ^-1 -> ^{-1}, * -> \, juxtaposition.
  std::string out;
  for (std::size_t i = 0; i < entry.size(); ++i) {
    char c = entry[i];
    if ((c == 's' || c == 'g') && i + 1 < entry.size() &&
        std::isdigit(static_cast<unsigned char>(entry[i + 1]))) {
      std::string idx;
      std::size_t j = i + 1;
      while (j < entry.size() && std::isdigit(static_cast<unsigned char>(entry[j])))
        idx += entry[j++];
      out += (c == 's' ? std::string("\\sigma_{") : std::string("g_{")) + idx + "}";
      i = j - 1;
    } else if (c == '^') {
      std::string exp;
      std::size_t j = i + 1;
      if (j < entry.size() && entry[j] == '-') exp += entry[j++];
      while (j < entry.size() && std::isdigit(static_cast<unsigned char>(entry[j])))
        exp += entry[j++];
      out += "^{" + exp + "}";
      i = j - 1;
    } else if (c == '*') {
      out += ' ';
    } else {
      out += c;
    }
  }
  return out;
}

template <typename EntryFn>
std::string format_matrix_impl(int rows, int cols, EntryFn entry,
                               MatrixFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case MatrixFormat::Plain:
      for (int r = 0; r < rows; ++r) {
        os << '[';
        for (int c = 0; c < cols; ++c) {
          if (c) os << ", ";
          os << entry(r, c);
        }
        os << "]\n";
      }
      break;
    case MatrixFormat::Json: {
      json j;
      j["rows"] = rows;
      j["cols"] = cols;
      json e = json::array();
      for (int r = 0; r < rows; ++r) {
        json row = json::array();
        for (int c = 0; c < cols; ++c) row.push_back(entry(r, c));
        e.push_back(row);
      }
      j["entries"] = e;
      os << j.dump(2) << '\n';
      break;
    }
    case MatrixFormat::Latex:
      os << "\\begin{pmatrix}\n";
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
          if (c) os << " & ";
          os << latexify(entry(r, c));
        }
        os << (r + 1 < rows ? " \\\\" : "") << '\n';
      }
      os << "\\end{pmatrix}\n";
      break;
  }
  return os.str();
}

}  // namespace

std::string format_matrix(const PolyMatrix& m, MatrixFormat fmt) {
  return format_matrix_impl(
      m.rows(), m.cols(),
      [&](int r, int c) { return format_poly(m.at(r, c)); }, fmt);
}

std::string format_matrix(const GroupRingMatrix& m, MatrixFormat fmt) {
  return format_matrix_impl(
      m.rows(), m.cols(),
      [&](int r, int c) { return format_group_ring(m.at(r, c)); }, fmt);
}

std::string save_representation(const Representation& rho) {
  json j;
  j["format_version"] = 1;
  json grp;
  grp["kind"] = group_kind_name(rho.kind());
  grp["n"] = rho.n();
  if (rho.kind() == GroupKind::Bnm || rho.kind() == GroupKind::FnBnm)
    grp["m"] = rho.m();
  j["group"] = grp;
  j["scalar_ring"] = rho.vars()->names();
  j["dim"] = rho.dim();
  json gens = json::object();
  for (const auto& [name, img] : rho.images()) {
    json mat = json::array();
    for (int r = 0; r < img.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < img.cols(); ++c) row.push_back(format_poly(img.at(r, c)));
      mat.push_back(row);
    }
    gens[name] = mat;
  }
  j["generators"] = gens;
  return j.dump(2) + "\n";
}

Representation load_representation(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad representation file: ") + e.what());
  }
  try {
    if (j.at("format_version").get<int>() != 1)
      throw ParseError("unsupported format_version");
    GroupKind kind = group_kind_from_name(j.at("group").at("kind").get<std::string>());
    int n = j.at("group").at("n").get<int>();
    int m = j.at("group").value("m", 0);
    std::vector<std::string> ring =
        j.at("scalar_ring").get<std::vector<std::string>>();
    int dim = j.at("dim").get<int>();
    VarSetPtr vars = VarSet::make(ring);
    Representation rho(kind, n, m, dim, vars);
    for (const auto& [name, mat] : j.at("generators").items()) {
      if (!mat.is_array() || static_cast<int>(mat.size()) != dim)
        throw ParseError("generator " + name + " is not a " +
                         std::to_string(dim) + "-row matrix");
      PolyMatrix img(dim, dim, vars);
      for (int r = 0; r < dim; ++r) {
        if (!mat[r].is_array() || static_cast<int>(mat[r].size()) != dim)
          throw ParseError("generator " + name + " row " + std::to_string(r) +
                           " is not " + std::to_string(dim) + " entries");
        for (int c = 0; c < dim; ++c)
          img.at(r, c) = parse_poly(mat[r][c].get<std::string>(), vars);
      }
      rho.set_image(name, std::move(img));
    }
    return rho;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad representation file: ") + e.what());
  }
}

}  // namespace braidrep
