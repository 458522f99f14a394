#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace eswap {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// q^e for integer e of either sign; q must be nonzero when e < 0.
Rational rational_pow(const Rational& q, long e);

/// C_n = binom(2n, n)/(n+1).
BigInt catalan(int n);

}  // namespace eswap
