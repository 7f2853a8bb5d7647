#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>
#include <string_view>

namespace radonlike {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "-p/q" or a plain integer; the result is canonicalized.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

/// Exact 2^e for any integer e.
Rational pow2(long exponent);

Rational power(const Rational& base, unsigned long exponent);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace radonlike

// Storage-only support for rational matrices; arithmetic on these goes through
// the explicit elimination routines, never Eigen expressions.
namespace Eigen {
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};
}  // namespace Eigen

namespace radonlike {
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
}  // namespace radonlike
