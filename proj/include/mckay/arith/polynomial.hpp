#pragma once

// Dense univariate polynomials, templated on the coefficient ring.
//
// Coefficients are stored in ascending degree with no trailing zeros, so the
// zero polynomial is the empty sequence and structural equality is equality
// of polynomials.

#include "mckay/arith/numeric.hpp"

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace mckay {

namespace detail {
// Unqualified so that coefficient types declared later are found through ADL.
template <typename Coeff>
bool coeff_is_zero(const Coeff& c)
{
    return is_zero(c);
}
}  // namespace detail

template <typename Coeff>
class Polynomial {
public:
    using coefficient_type = Coeff;

    Polynomial() = default;

    Polynomial(const Coeff& constant)  // NOLINT: implicit, polynomials contain their ring
    {
        if (!detail::coeff_is_zero(constant)) coeffs_.push_back(constant);
    }

    template <std::integral I>
    Polynomial(I constant)  // NOLINT: lets Eigen write Scalar(0) and Scalar(1)
        : Polynomial(Coeff(static_cast<long>(constant)))
    {
    }

    explicit Polynomial(std::vector<Coeff> ascending) : coeffs_(std::move(ascending)) { trim(); }

    static Polynomial monomial(const Coeff& c, std::size_t degree)
    {
        if (detail::coeff_is_zero(c)) return {};
        std::vector<Coeff> v(degree + 1, Coeff(0L));
        v[degree] = c;
        return Polynomial(std::move(v));
    }

    /// The indeterminate t.
    static Polynomial variable() { return monomial(Coeff(1L), 1); }

    /// Degree, with -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] std::size_t size() const { return coeffs_.size(); }
    [[nodiscard]] const std::vector<Coeff>& coefficients() const { return coeffs_; }

    [[nodiscard]] Coeff coefficient(std::size_t i) const
    {
        return i < coeffs_.size() ? coeffs_[i] : Coeff(0L);
    }

    [[nodiscard]] const Coeff& leading() const { return coeffs_.back(); }

    template <typename X>
    [[nodiscard]] X evaluate(const X& x) const
    {
        X acc(0L);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = X(acc * x + X(*it));
        return acc;
    }

    /// p(t^k).
    [[nodiscard]] Polynomial substitute_power(std::size_t k) const
    {
        if (is_zero() || k == 1) return *this;
        std::vector<Coeff> v(static_cast<std::size_t>(degree()) * k + 1, Coeff(0L));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
        return Polynomial(std::move(v));
    }

    /// Terms of degree <= max_degree.
    [[nodiscard]] Polynomial truncated(std::size_t max_degree) const
    {
        if (coeffs_.size() <= max_degree + 1) return *this;
        return Polynomial(std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0L));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0L));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Polynomial& o)
    {
        *this = *this * o;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator-(Polynomial a)
    {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0L));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (detail::coeff_is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(v));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void trim()
    {
        while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

template <typename Coeff>
bool is_zero(const Polynomial<Coeff>& p)
{
    return p.is_zero();
}

template <typename Coeff>
Polynomial<Coeff> pow(const Polynomial<Coeff>& base, unsigned exponent)
{
    Polynomial<Coeff> result(Coeff(1L));
    Polynomial<Coeff> b = base;
    while (exponent > 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent > 0) b *= b;
    }
    return result;
}

using IntPoly = Polynomial<BigInt>;
using RatPoly = Polynomial<Rational>;

/// 1 - t^e.
IntPoly one_minus_t_pow(unsigned e);

/// Positive gcd of the coefficients (0 for the zero polynomial).
BigInt content(const IntPoly& p);

/// p / content(p), with positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

/// Quotient a / b when b divides a in Z[t]; throws ArithmeticError otherwise.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

/// True when b divides a in Z[t].
bool divides(const IntPoly& b, const IntPoly& a);

/// Pseudo-remainder of a by b (multiplies a by powers of lc(b) as needed).
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Greatest common divisor in Z[t], normalized with positive leading
/// coefficient. Euclid over Q carried out as a primitive remainder sequence.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

IntPoly to_int_poly(const RatPoly& p);  // throws ArithmeticError on a non-integer coefficient
RatPoly to_rat_poly(const IntPoly& p);

/// Coefficients reversed within a window of the given length: t^(length-1) p(1/t).
IntPoly reversed(const IntPoly& p, std::size_t length);

/// Human-readable form such as "1 - 2*t + t^3".
std::string to_string(const IntPoly& p, const std::string& var = "t");

inline IntPoly exact_div(const IntPoly& a, const IntPoly& b) { return divide_exact(a, b); }

}  // namespace mckay

MCKAY_EIGEN_EXACT_SCALAR(mckay::IntPoly, 0)
