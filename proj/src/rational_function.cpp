#include "mckay/arith/rational_function.hpp"

namespace mckay {

RationalFunction::RationalFunction(IntPoly numerator, IntPoly denominator)
{
    if (denominator.is_zero()) throw ArithmeticError("rational function with zero denominator");
    if (numerator.is_zero()) {
        den_ = IntPoly(BigInt(1));
        return;
    }
    const IntPoly g = gcd(numerator, denominator);
    if (!(g.degree() == 0 && g.leading() == 1)) {
        numerator = divide_exact(numerator, g);
        denominator = divide_exact(denominator, g);
    }
    if (denominator.leading() < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    num_ = std::move(numerator);
    den_ = std::move(denominator);
}

IntPoly RationalFunction::to_polynomial() const
{
    if (!is_polynomial()) throw ArithmeticError("rational function is not a polynomial: " + to_string());
    return num_;
}

RationalFunction RationalFunction::substitute_power(std::size_t k) const
{
    // Substitution t -> t^k preserves coprimality, so no new gcd is needed.
    RationalFunction r;
    r.num_ = num_.substitute_power(k);
    r.den_ = den_.substitute_power(k);
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
{
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
{
    if (b.num_.is_zero()) throw ArithmeticError("division by the zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

std::string RationalFunction::to_string(const std::string& var) const
{
    if (is_polynomial()) return mckay::to_string(num_, var);
    return "(" + mckay::to_string(num_, var) + ") / (" + mckay::to_string(den_, var) + ")";
}

RationalFunction pow(const RationalFunction& f, int k)
{
    if (k >= 0) {
        return {pow(f.numerator(), static_cast<unsigned>(k)), pow(f.denominator(), static_cast<unsigned>(k))};
    }
    if (f.numerator().is_zero()) throw ArithmeticError("negative power of zero");
    return {pow(f.denominator(), static_cast<unsigned>(-k)), pow(f.numerator(), static_cast<unsigned>(-k))};
}

bool rational_eq(const RationalFunction& f, const RationalFunction& g)
{
    return f.numerator() * g.denominator() == g.numerator() * f.denominator();
}

RationalFunction cyclotomic_factor_product(const std::vector<std::pair<unsigned, int>>& factors)
{
    IntPoly num(BigInt(1));
    IntPoly den(BigInt(1));
    for (const auto& [e, b] : factors) {
        if (e == 0) throw ArithmeticError("factor (1 - t^0) is zero");
        if (b >= 0)
            num *= pow(one_minus_t_pow(e), static_cast<unsigned>(b));
        else
            den *= pow(one_minus_t_pow(e), static_cast<unsigned>(-b));
    }
    return {std::move(num), std::move(den)};
}

}  // namespace mckay
