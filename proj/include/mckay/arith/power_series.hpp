#pragma once

#include "mckay/arith/rational_function.hpp"

#include <vector>

namespace mckay {

/// Truncated power series a_0 + a_1 t + ... + a_order t^order.
class PowerSeries {
public:
    PowerSeries() : PowerSeries(0) {}
    explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}
    /// coeffs.size() - 1 becomes the truncation order; coeffs must be non-empty.
    explicit PowerSeries(std::vector<Rational> coeffs);

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    Rational& operator[](std::size_t i) { return coeffs_[i]; }

    /// Same series cut to a lower order.
    [[nodiscard]] PowerSeries truncated(std::size_t order) const;

    /// True when every coefficient is a non-negative integer.
    [[nodiscard]] bool is_natural() const;

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    /// Cauchy product, truncated to the smaller order.
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

/// Taylor expansion at 0. Throws ArithmeticError when the denominator
/// vanishes at t = 0.
PowerSeries series_expand(const RationalFunction& f, std::size_t order);

/// Taylor expansion of an integer polynomial.
PowerSeries series_expand(const IntPoly& p, std::size_t order);

}  // namespace mckay
