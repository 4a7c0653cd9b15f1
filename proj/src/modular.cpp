#include "mckay/arith/modular.hpp"

namespace mckay::modular {

Residue pow(Residue base, std::uint64_t exponent, Residue p)
{
    Residue result = 1 % p;
    base %= p;
    while (exponent > 0) {
        if (exponent & 1U) result = mul(result, base, p);
        base = mul(base, base, p);
        exponent >>= 1U;
    }
    return result;
}

Residue inverse(Residue a, Residue p)
{
    a %= p;
    if (a == 0) throw ArithmeticError("modular inverse of zero");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw ArithmeticError("residue is not invertible");
    return reduce(t, p);
}

Residue reduce(std::int64_t v, Residue p)
{
    const auto m = static_cast<std::int64_t>(p);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return static_cast<Residue>(r);
}

Residue reduce(const Rational& v, Residue p)
{
    const BigInt pp(static_cast<unsigned long>(p));
    BigInt num = v.get_num() % pp;
    if (num < 0) num += pp;
    BigInt den = v.get_den() % pp;
    if (den == 0) throw ArithmeticError("prime divides a denominator");
    return mul(num.get_ui(), inverse(den.get_ui(), p), p);
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t next_prime_congruent_one(std::uint64_t modulus, std::uint64_t lower_bound)
{
    std::uint64_t p = (lower_bound / modulus) * modulus + 1;
    while (p <= lower_bound || !is_prime(p)) p += modulus;
    return p;
}

Residue primitive_root(Residue p)
{
    if (p == 2) return 1;
    const auto factors = prime_factors(p - 1);
    for (Residue g = 2; g < p; ++g) {
        bool ok = true;
        for (auto q : factors) {
            if (pow(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw ArithmeticError("no primitive root found");
}

Residue root_of_unity(std::uint64_t n, Residue p)
{
    if ((p - 1) % n != 0) throw ArithmeticError("n does not divide p - 1");
    return pow(primitive_root(p), (p - 1) / n, p);
}

std::int64_t symmetric_lift(Residue v, Residue p)
{
    const auto s = static_cast<std::int64_t>(v);
    return (v > p / 2) ? s - static_cast<std::int64_t>(p) : s;
}

}  // namespace mckay::modular
