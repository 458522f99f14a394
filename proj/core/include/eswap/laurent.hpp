#pragma once

#include <map>
#include <string>

#include "eswap/rational.hpp"

namespace eswap {

/// Exact polynomial in c and 1/c with big-rational coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(Rational v);
    static LaurentPoly monomial(Rational coeff, long exponent);

    void add_term(long exponent, const Rational& coeff);

    const std::map<long, Rational>& terms() const { return terms_; }
    Rational coefficient(long exponent) const;
    bool is_zero() const { return terms_.empty(); }

    Rational evaluate(const Rational& c) const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    bool operator==(const LaurentPoly&) const = default;

    /// Canonical form, ascending exponents: "c^-2 + 2", "c^-1", "0".
    std::string to_string() const;

private:
    std::map<long, Rational> terms_;
};

}  // namespace eswap
