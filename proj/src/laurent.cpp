#include "braidrep/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace braidrep {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw PreconditionError("duplicate variable name: " + names_[i]);
}

VarSetPtr VarSet::make(std::vector<std::string> names) {
  return std::make_shared<const VarSet>(std::move(names));
}

VarSetPtr VarSet::empty() {
  static const VarSetPtr e = std::make_shared<const VarSet>();
  return e;
}

std::optional<std::size_t> VarSet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

VarSetPtr merge_varsets(const VarSetPtr& a, const VarSetPtr& b) {
  if (*a == *b) return a;
  std::vector<std::string> names = a->names();
  for (const auto& n : b->names())
    if (!a->index_of(n)) names.push_back(n);
  return VarSet::make(std::move(names));
}

LaurentPoly LaurentPoly::constant(const Rational& c, VarSetPtr vars) {
  LaurentPoly p(std::move(vars));
  if (c != 0) p.terms_[Exponents(p.vars_->size(), 0)] = c;
  return p;
}

LaurentPoly LaurentPoly::one(VarSetPtr vars) {
  return constant(1, std::move(vars));
}

LaurentPoly LaurentPoly::monomial(const Rational& c, std::size_t var_index,
                                  int power, VarSetPtr vars) {
  LaurentPoly p(std::move(vars));
  if (var_index >= p.vars_->size())
    throw PreconditionError("variable index out of range");
  if (c != 0) {
    Exponents e(p.vars_->size(), 0);
    e[var_index] = power;
    p.terms_[e] = c;
  }
  return p;
}

LaurentPoly LaurentPoly::variable(const std::string& name, VarSetPtr vars) {
  auto idx = vars->index_of(name);
  if (!idx) throw PreconditionError("unknown variable: " + name);
  return monomial(1, *idx, 1, std::move(vars));
}

bool LaurentPoly::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  return c == 1 && std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational LaurentPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw PreconditionError("polynomial is not constant");
  return terms_.begin()->second;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_->size())
    throw PreconditionError("exponent vector width mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_[e] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (!(*vars_ == *o.vars_)) {
    auto [a, b] = aligned(*this, o);
    return a + b;
  }
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  *this = *this + o;
  return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (!(*vars_ == *o.vars_)) {
    auto [a, b] = aligned(*this, o);
    return a * b;
  }
  LaurentPoly r(vars_);
  Exponents e(vars_->size());
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (!(*vars_ == *o.vars_)) {
    auto [a, b] = aligned(*this, o);
    return a.terms_ == b.terms_;
  }
  return terms_ == o.terms_;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e == 0) return one(vars_);
  LaurentPoly base = e < 0 ? inverse() : *this;
  int k = e < 0 ? -e : e;
  LaurentPoly r = one(vars_);
  for (int i = 0; i < k; ++i) r = r * base;
  return r;
}

LaurentPoly LaurentPoly::inverse() const {
  if (!is_unit())
    throw PreconditionError("not a unit in the Laurent ring: " + format_poly(*this));
  const auto& [e, c] = *terms_.begin();
  LaurentPoly r(vars_);
  Exponents ne(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
  r.terms_[ne] = Rational(1) / c;
  return r;
}

LaurentPoly LaurentPoly::substitute(std::size_t var_index,
                                    const Rational& value) const {
  if (var_index >= vars_->size())
    throw PreconditionError("variable index out of range");
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    int k = e[var_index];
    if (k < 0 && value == 0)
      throw PreconditionError("substituting 0 into a negative exponent");
    Rational factor = 1;
    Rational base = k < 0 ? Rational(1) / value : value;
    for (int i = 0; i < std::abs(k); ++i) factor *= base;
    Exponents ne = e;
    ne[var_index] = 0;
    r.add_term(ne, c * factor);
  }
  return r;
}

Rational LaurentPoly::eval(const std::vector<Rational>& values) const {
  if (values.size() != vars_->size())
    throw PreconditionError("eval needs one value per variable");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (values[i] == 0)
        throw PreconditionError("evaluating variable " + vars_->name(i) +
                                " at 0 with nonzero exponent");
      Rational base = e[i] < 0 ? Rational(1) / values[i] : values[i];
      for (int k = 0; k < std::abs(e[i]); ++k) term *= base;
    }
    total += term;
  }
  return total;
}

LaurentPoly LaurentPoly::promoted(const VarSetPtr& bigger) const {
  if (*vars_ == *bigger) return *this;
  std::vector<std::size_t> where(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto idx = bigger->index_of(vars_->name(i));
    if (!idx)
      throw PreconditionError("variable " + vars_->name(i) +
                              " missing from extended ring");
    where[i] = *idx;
  }
  LaurentPoly r(bigger);
  for (const auto& [e, c] : terms_) {
    Exponents ne(bigger->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
    r.terms_[ne] = c;
  }
  return r;
}

std::pair<LaurentPoly, LaurentPoly> aligned(const LaurentPoly& a,
                                            const LaurentPoly& b) {
  VarSetPtr merged = merge_varsets(a.vars(), b.vars());
  return {a.promoted(merged), b.promoted(merged)};
}

std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

namespace {

int total_degree(const LaurentPoly::Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

// Print order: descending grade, then descending lex on exponent vectors.
bool print_before(const LaurentPoly::Exponents& a,
                  const LaurentPoly::Exponents& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

}  // namespace

std::string format_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<const std::pair<const LaurentPoly::Exponents, Rational>*> ts;
  for (const auto& t : p.terms()) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](const auto* x, const auto* y) {
    return print_before(x->first, y->first);
  });

  std::ostringstream os;
  bool first = true;
  for (const auto* t : ts) {
    const auto& [e, c] = *t;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string f = p.vars()->name(i);
      if (e[i] != 1) f += "^" + std::to_string(e[i]);
      factors.push_back(f);
    }
    if (factors.empty()) {
      os << format_rational(mag);
    } else {
      bool coef = mag != 1;
      if (coef) os << format_rational(mag) << "*";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) os << "*";
        os << factors[i];
      }
    }
  }
  return os.str();
}

namespace {

struct PolyLexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    skip_ws();
    return s[pos++];
  }

  Integer integer() {
    skip_ws();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-'))
      neg = s[pos++] == '-';
    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      digits += s[pos++];
    if (digits.empty()) throw ParseError("expected integer in polynomial: " + s);
    Integer v(digits);
    return neg ? -v : v;
  }

  std::string identifier() {
    skip_ws();
    std::string id;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      id += s[pos++];
    return id;
  }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text, const VarSetPtr& vars) {
  PolyLexer lex{text};
  LaurentPoly result(vars);
  bool any = false;
  while (!lex.done()) {
    int sign = 1;
    char c = lex.peek();
    if (c == '+' || c == '-') {
      lex.take();
      sign = c == '-' ? -1 : 1;
    } else if (any) {
      throw ParseError("expected '+' or '-' between terms: " + text);
    }
    any = true;

    Rational coef = sign;
    LaurentPoly::Exponents expo(vars->size(), 0);
    bool saw_factor = false;
    bool expect_factor = true;
    while (expect_factor) {
      char p = lex.peek();
      if (std::isdigit(static_cast<unsigned char>(p))) {
        Integer num = lex.integer();
        Integer den = 1;
        if (lex.peek() == '/') {
          lex.take();
          den = lex.integer();
          if (den == 0) throw ParseError("zero denominator: " + text);
        }
        coef *= Rational(num, den);
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(p)) || p == '_') {
        std::string name = lex.identifier();
        auto idx = vars->index_of(name);
        if (!idx) throw ParseError("unknown variable '" + name + "' in: " + text);
        int power = 1;
        if (lex.peek() == '^') {
          lex.take();
          power = static_cast<int>(lex.integer());
        }
        expo[*idx] += power;
        saw_factor = true;
      } else {
        throw ParseError("expected coefficient or variable in: " + text);
      }
      if (lex.peek() == '*') {
        lex.take();
      } else {
        expect_factor = false;
      }
    }
    if (!saw_factor) throw ParseError("empty term in: " + text);
    result.add_term(expo, coef);
  }
  if (!any && !text.empty()) {
    // e.g. text was all spaces
  }
  if (!any) throw ParseError("empty polynomial text");
  return result;
}

}  // namespace braidrep
