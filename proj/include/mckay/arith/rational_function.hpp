#pragma once

#include "mckay/arith/polynomial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mckay {

/// Quotient of integer polynomials, kept reduced: gcd(numerator,
/// denominator) = 1 and the denominator has positive leading coefficient.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(BigInt(1)) {}
    RationalFunction(IntPoly numerator)  // NOLINT: polynomials are rational functions
        : num_(std::move(numerator)), den_(BigInt(1))
    {
    }
    /// Throws ArithmeticError when the denominator is zero.
    RationalFunction(IntPoly numerator, IntPoly denominator);

    [[nodiscard]] const IntPoly& numerator() const { return num_; }
    [[nodiscard]] const IntPoly& denominator() const { return den_; }

    [[nodiscard]] bool is_polynomial() const { return den_.degree() == 0 && den_.leading() == 1; }
    /// Throws ArithmeticError unless is_polynomial().
    [[nodiscard]] IntPoly to_polynomial() const;

    /// f(t^k).
    [[nodiscard]] RationalFunction substitute_power(std::size_t k) const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    /// Structural equality of the reduced forms (equivalent to rational_eq).
    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    [[nodiscard]] std::string to_string(const std::string& var = "t") const;

private:
    IntPoly num_;
    IntPoly den_;
};

/// f^k for any integer k; negative k requires f != 0.
RationalFunction pow(const RationalFunction& f, int k);

/// Equality as rational functions by cross multiplication, independent of
/// the reduced representation.
bool rational_eq(const RationalFunction& f, const RationalFunction& g);

/// Product of (1 - t^e)^b over (e, b) pairs; b may be negative.
RationalFunction cyclotomic_factor_product(const std::vector<std::pair<unsigned, int>>& factors);

}  // namespace mckay
