#include "mckay/arith/polynomial.hpp"

#include "mckay/arith/modular.hpp"

#include <sstream>

namespace mckay {

namespace {

// Degree of gcd(a, b) modulo p, or -2 when p divides a leading coefficient.
int modular_gcd_degree(const IntPoly& a, const IntPoly& b, modular::Residue p)
{
    auto reduce = [p](const IntPoly& f) {
        std::vector<modular::Residue> v;
        v.reserve(f.size());
        const BigInt pp(static_cast<unsigned long>(p));
        for (const auto& c : f.coefficients()) {
            BigInt r = c % pp;
            if (r < 0) r += pp;
            v.push_back(r.get_ui());
        }
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    };
    auto x = reduce(a);
    auto y = reduce(b);
    if (static_cast<int>(x.size()) != a.degree() + 1 || static_cast<int>(y.size()) != b.degree() + 1)
        return -2;
    while (!y.empty()) {
        // x <- x mod y
        const auto inv_lead = modular::inverse(y.back(), p);
        while (x.size() >= y.size()) {
            const auto factor = modular::mul(x.back(), inv_lead, p);
            const std::size_t shift = x.size() - y.size();
            for (std::size_t i = 0; i < y.size(); ++i)
                x[i + shift] = modular::sub(x[i + shift], modular::mul(factor, y[i], p), p);
            while (!x.empty() && x.back() == 0) x.pop_back();
        }
        std::swap(x, y);
    }
    return static_cast<int>(x.size()) - 1;
}

}  // namespace

IntPoly one_minus_t_pow(unsigned e)
{
    if (e == 0) return {};
    std::vector<BigInt> v(e + 1, BigInt(0));
    v[0] = 1;
    v[e] -= 1;
    return IntPoly(std::move(v));
}

BigInt content(const IntPoly& p)
{
    BigInt g = 0;
    for (const auto& c : p.coefficients()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& p)
{
    if (p.is_zero()) return p;
    BigInt c = content(p);
    if (p.leading() < 0) c = -c;
    if (c == 1) return p;
    std::vector<BigInt> v;
    v.reserve(p.size());
    for (const auto& x : p.coefficients()) v.push_back(exact_div(x, c));
    return IntPoly(std::move(v));
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw ArithmeticError("polynomial division is not exact");
    std::vector<BigInt> rem = a.coefficients();
    const auto db = static_cast<std::size_t>(b.degree());
    std::vector<BigInt> quot(rem.size() - db, BigInt(0));
    const BigInt& lb = b.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const BigInt& top = rem[k + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
            throw ArithmeticError("polynomial division is not exact");
        BigInt q = exact_div(top, lb);
        for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= q * b.coefficients()[i];
        quot[k] = std::move(q);
    }
    for (const auto& r : rem)
        if (r != 0) throw ArithmeticError("polynomial division is not exact");
    return IntPoly(std::move(quot));
}

bool divides(const IntPoly& b, const IntPoly& a)
{
    try {
        (void)divide_exact(a, b);
        return true;
    } catch (const ArithmeticError&) {
        return false;
    }
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero()) throw ArithmeticError("pseudo-remainder by zero");
    std::vector<BigInt> r = a.coefficients();
    const auto db = static_cast<std::size_t>(b.degree());
    const BigInt& lb = b.leading();
    const auto& bc = b.coefficients();
    while (!r.empty() && r.size() > db) {
        const BigInt lr = r.back();
        const std::size_t shift = r.size() - 1 - db;
        for (auto& c : r) c *= lb;
        for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= lr * bc[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return IntPoly(std::move(r));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero()) return primitive_part(b) * IntPoly(content(b));
    if (b.is_zero()) return primitive_part(a) * IntPoly(content(a));

    BigInt c;
    const BigInt ca = content(a);
    const BigInt cb = content(b);
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());

    IntPoly x = primitive_part(a);
    IntPoly y = primitive_part(b);
    if (x.degree() < y.degree()) std::swap(x, y);
    if (y.degree() == 0) return IntPoly(c);

    // A coprime image modulo a good prime certifies a trivial gcd.
    for (modular::Residue p : {2147483647ULL, 2147483629ULL, 2147483587ULL}) {
        const int d = modular_gcd_degree(x, y, p);
        if (d == 0) return IntPoly(c);
        if (d > 0) break;
    }

    while (!y.is_zero()) {
        IntPoly r = pseudo_remainder(x, y);
        x = std::move(y);
        y = primitive_part(r);
    }
    return primitive_part(x) * IntPoly(c);
}

IntPoly to_int_poly(const RatPoly& p)
{
    std::vector<BigInt> v;
    v.reserve(p.size());
    for (const auto& c : p.coefficients()) {
        if (c.get_den() != 1) throw ArithmeticError("non-integer polynomial coefficient " + c.get_str());
        v.push_back(c.get_num());
    }
    return IntPoly(std::move(v));
}

RatPoly to_rat_poly(const IntPoly& p)
{
    std::vector<Rational> v;
    v.reserve(p.size());
    for (const auto& c : p.coefficients()) v.emplace_back(c);
    return RatPoly(std::move(v));
}

IntPoly reversed(const IntPoly& p, std::size_t length)
{
    std::vector<BigInt> v(length, BigInt(0));
    for (std::size_t i = 0; i < p.size() && i < length; ++i) v[length - 1 - i] = p.coefficients()[i];
    return IntPoly(std::move(v));
}

std::string to_string(const IntPoly& p, const std::string& var)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const BigInt& c = p.coefficients()[i];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

}  // namespace mckay
