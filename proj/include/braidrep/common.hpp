#ifndef BRAIDREP_COMMON_HPP
#define BRAIDREP_COMMON_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace braidrep {

// All scalar arithmetic is exact. Coefficients stay integral until a
// specialization introduces denominators.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Malformed textual input (words, polynomials, representation files).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented precondition was violated (size mismatch, non-pure word,
// missing generator image, ...).
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace braidrep

#endif
