#ifndef BRAIDREP_LAURENT_HPP
#define BRAIDREP_LAURENT_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "braidrep/common.hpp"

namespace braidrep {

// An ordered set of variable names. Polynomials over different variable
// sets never mix silently; extend_vars/aligned is the explicit ring
// extension.
class VarSet {
public:
  VarSet() = default;
  explicit VarSet(std::vector<std::string> names);

  static std::shared_ptr<const VarSet> make(std::vector<std::string> names);
  static std::shared_ptr<const VarSet> empty();

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const VarSet& other) const { return names_ == other.names_; }

private:
  std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

// Union of two variable sets, keeping a's declaration order and appending
// the variables of b that are new.
VarSetPtr merge_varsets(const VarSetPtr& a, const VarSetPtr& b);

// A multivariate Laurent polynomial: finitely many terms, each a rational
// coefficient on an integer exponent vector (negative exponents allowed).
// The zero polynomial has no terms.
class LaurentPoly {
public:
  using Exponents = std::vector<int>;

  LaurentPoly() : vars_(VarSet::empty()) {}
  explicit LaurentPoly(VarSetPtr vars) : vars_(std::move(vars)) {}

  static LaurentPoly constant(const Rational& c, VarSetPtr vars);
  static LaurentPoly zero(VarSetPtr vars) { return LaurentPoly(std::move(vars)); }
  static LaurentPoly one(VarSetPtr vars);
  // The monomial c * var^power.
  static LaurentPoly monomial(const Rational& c, std::size_t var_index,
                              int power, VarSetPtr vars);
  static LaurentPoly variable(const std::string& name, VarSetPtr vars);

  const VarSetPtr& vars() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // A unit of the Laurent ring: a single term with nonzero coefficient.
  bool is_unit() const { return terms_.size() == 1; }
  bool is_constant() const;
  // The value when the polynomial is constant.
  Rational constant_value() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);

  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly pow(int e) const;  // negative e requires a unit
  // Inverse when this is a unit; throws PreconditionError otherwise.
  LaurentPoly inverse() const;

  // Substitute one variable by a nonzero rational; the exponent slot of the
  // variable collapses to 0 and the variable stays declared.
  LaurentPoly substitute(std::size_t var_index, const Rational& value) const;
  // Full evaluation; requires a value for every variable that occurs.
  Rational eval(const std::vector<Rational>& values) const;

  // Same polynomial over an extended variable set (name-matched).
  LaurentPoly promoted(const VarSetPtr& bigger) const;

  void add_term(const Exponents& e, const Rational& c);

private:
  VarSetPtr vars_;
  std::map<Exponents, Rational> terms_;
};

// Two polynomials re-expressed over the merged variable set.
std::pair<LaurentPoly, LaurentPoly> aligned(const LaurentPoly& a,
                                            const LaurentPoly& b);

// Text grammar: terms joined by '+'/'-', each term
// [<rational>][*]<var>^<int> factors joined by '*', e.g. "3*t1^2*q^-1 - 2".
// Printing orders terms by descending total degree, ties broken
// lexicographically on the exponent vector (variables in declaration
// order); parse(print(p)) == p.
std::string format_poly(const LaurentPoly& p);
LaurentPoly parse_poly(const std::string& text, const VarSetPtr& vars);

std::string format_rational(const Rational& r);

}  // namespace braidrep

#endif
