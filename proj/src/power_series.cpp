#include "mckay/arith/power_series.hpp"

#include <algorithm>

namespace mckay {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) throw ArithmeticError("power series needs at least one coefficient");
}

PowerSeries PowerSeries::truncated(std::size_t order) const
{
    if (order > this->order()) throw ArithmeticError("cannot extend a truncated series");
    return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

bool PowerSeries::is_natural() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.get_den() == 1 && sgn(c) >= 0; });
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b)
{
    PowerSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) r[i] = a[i] + b[i];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b)
{
    PowerSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) r[i] = a[i] - b[i];
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
{
    PowerSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; i + j <= r.order(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

PowerSeries series_expand(const IntPoly& p, std::size_t order)
{
    PowerSeries r(order);
    for (std::size_t i = 0; i <= order && i < p.size(); ++i) r[i] = p.coefficients()[i];
    return r;
}

PowerSeries series_expand(const RationalFunction& f, std::size_t order)
{
    const IntPoly& num = f.numerator();
    const IntPoly& den = f.denominator();
    const BigInt d0 = den.coefficient(0);
    if (d0 == 0) throw ArithmeticError("series_expand: denominator vanishes at t = 0");

    // den * s = num, solved coefficient by coefficient.
    PowerSeries s(order);
    for (std::size_t k = 0; k <= order; ++k) {
        Rational acc(num.coefficient(k));
        const std::size_t top = std::min<std::size_t>(k, den.size() - 1);
        for (std::size_t j = 1; j <= top; ++j) acc -= Rational(den.coefficients()[j]) * s[k - j];
        s[k] = acc / d0;
    }
    return s;
}

}  // namespace mckay
