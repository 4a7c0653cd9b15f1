#include "mckay/arith/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace mckay {

int euler_phi(int n)
{
    if (n < 1) throw ArithmeticError("euler_phi: n must be positive");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

IntPoly cyclotomic_polynomial(int n)
{
    if (n < 1) throw ArithmeticError("cyclotomic_polynomial: n must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d.
    IntPoly result = -one_minus_t_pow(static_cast<unsigned>(n));
    for (int d = 1; d < n; ++d)
        if (n % d == 0) result = divide_exact(result, cyclotomic_polynomial(d));
    return result;
}

CyclotomicField::CyclotomicField(int n) : conductor_(n), degree_(euler_phi(n)), phi_(cyclotomic_polynomial(n))
{
    const auto d = static_cast<std::size_t>(degree_);
    std::vector<std::int64_t> low(d);
    for (std::size_t i = 0; i < d; ++i) low[i] = phi_.coefficient(i).get_si();

    powers_.assign(static_cast<std::size_t>(n), std::vector<std::int64_t>(d, 0));
    powers_[0][0] = 1;
    if (d == 1 && n == 1) return;
    for (int k = 1; k < n; ++k) {
        const auto& prev = powers_[static_cast<std::size_t>(k - 1)];
        auto& cur = powers_[static_cast<std::size_t>(k)];
        const std::int64_t top = prev[d - 1];
        for (std::size_t i = d - 1; i > 0; --i) cur[i] = prev[i - 1];
        cur[0] = 0;
        // x^d = -(low[0] + ... + low[d-1] x^(d-1))
        for (std::size_t i = 0; i < d; ++i) cur[i] -= top * low[i];
    }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int n)
{
    if (n < 1) throw ArithmeticError("conductor must be positive");
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const CyclotomicField>> fields;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = fields.find(n);
    if (it != fields.end()) return it->second;
    auto field = std::make_shared<const CyclotomicField>(n);
    fields.emplace(n, field);
    return field;
}

Cyclotomic::Cyclotomic() : Cyclotomic(Rational(0)) {}

Cyclotomic::Cyclotomic(long v) : Cyclotomic(Rational(v)) {}

Cyclotomic::Cyclotomic(const BigInt& v) : Cyclotomic(Rational(v)) {}

Cyclotomic::Cyclotomic(const Rational& v) : field_(CyclotomicField::get(1)), coeffs_{v}
{
    coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs))
{
}

std::vector<Rational> Cyclotomic::reduce_exponents(const CyclotomicField& field,
                                                   const std::vector<Rational>& by_power)
{
    const auto n = static_cast<std::size_t>(field.conductor());
    const auto d = static_cast<std::size_t>(field.degree());
    std::vector<Rational> folded(std::min(n, by_power.size()));
    for (std::size_t k = 0; k < by_power.size(); ++k) {
        if (sgn(by_power[k]) == 0) continue;
        folded[k % n] += by_power[k];
    }
    std::vector<Rational> out(d);
    for (std::size_t k = 0; k < folded.size(); ++k) {
        const Rational& c = folded[k];
        if (sgn(c) == 0) continue;
        if (k < d) {
            out[k] += c;
            continue;
        }
        const auto& pw = field.power(static_cast<int>(k));
        for (std::size_t i = 0; i < d; ++i)
            if (pw[i] != 0) out[i] += c * pw[i];
    }
    return out;
}

Cyclotomic Cyclotomic::zeta(int n, long k)
{
    auto field = CyclotomicField::get(n);
    long e = k % n;
    if (e < 0) e += n;
    std::vector<Rational> by_power(static_cast<std::size_t>(e) + 1);
    by_power[static_cast<std::size_t>(e)] = 1;
    auto coeffs = reduce_exponents(*field, by_power);
    return {std::move(field), std::move(coeffs)};
}

Cyclotomic Cyclotomic::from_coefficients(int n, const std::vector<Rational>& coeffs)
{
    auto field = CyclotomicField::get(n);
    std::vector<Rational> canonical(coeffs);
    for (auto& c : canonical) c.canonicalize();
    auto reduced = reduce_exponents(*field, canonical);
    return {std::move(field), std::move(reduced)};
}

Cyclotomic Cyclotomic::lifted(int m) const
{
    const int n = conductor();
    if (m == n) return *this;
    if (m % n != 0) throw ArithmeticError("lift target is not a multiple of the conductor");
    const auto step = static_cast<std::size_t>(m / n);
    std::vector<Rational> by_power((coeffs_.size() - 1) * step + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) by_power[i * step] = coeffs_[i];
    return from_coefficients(m, by_power);
}

bool Cyclotomic::is_zero() const
{
    for (const auto& c : coeffs_)
        if (sgn(c) != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const
{
    if (!is_rational()) throw ArithmeticError("cyclotomic number is not rational: " + to_string());
    return coeffs_[0];
}

Cyclotomic Cyclotomic::galois(long k) const
{
    const long n = conductor();
    long kk = k % n;
    if (kk < 0) kk += n;
    if (std::gcd(kk, n) != 1 && n > 1) throw ArithmeticError("galois: exponent not coprime to conductor");
    std::vector<Rational> by_power(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        by_power[(static_cast<long>(i) * kk) % n] += coeffs_[i];
    }
    return {field_, reduce_exponents(*field_, by_power)};
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Rational Cyclotomic::norm() const
{
    const int n = conductor();
    Cyclotomic acc(1L);
    for (int a = 1; a <= std::max(n, 1); ++a)
        if (std::gcd(a, n) == 1) acc *= galois(a);
    return acc.rational_value();
}

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero()) throw ArithmeticError("inverse of zero in a cyclotomic field");
    const int n = conductor();
    Cyclotomic others(1L);
    for (int a = 2; a < n; ++a)
        if (std::gcd(a, n) == 1) others *= galois(a);
    const Rational nrm = (*this * others).rational_value();
    return others * Cyclotomic(Rational(1 / nrm));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o)
{
    if (conductor() != o.conductor()) {
        const int m = std::lcm(conductor(), o.conductor());
        *this = lifted(m);
        return *this += o.lifted(m);
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o)
{
    if (conductor() != o.conductor()) {
        const int m = std::lcm(conductor(), o.conductor());
        *this = lifted(m);
        return *this -= o.lifted(m);
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.conductor() != b.conductor()) {
        if (a.conductor() == 1 && a.is_rational()) {
            Cyclotomic r = b;
            for (auto& c : r.coeffs_) c *= a.coeffs_[0];
            return r;
        }
        if (b.conductor() == 1) return b * a;
        const int m = std::lcm(a.conductor(), b.conductor());
        return a.lifted(m) * b.lifted(m);
    }
    const std::size_t d = a.coeffs_.size();
    std::vector<Rational> prod(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (sgn(b.coeffs_[j]) == 0) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    if (prod.size() <= d) {
        prod.resize(d);
        return {a.field_, std::move(prod)};
    }
    return {a.field_, Cyclotomic::reduce_exponents(*a.field_, prod)};
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o)
{
    *this = *this * o;
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o)
{
    *this = *this * o.inverse();
    return *this;
}

Cyclotomic operator-(const Cyclotomic& a)
{
    Cyclotomic r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.conductor() == b.conductor()) return a.coeffs_ == b.coeffs_;
    const int m = std::lcm(a.conductor(), b.conductor());
    return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

std::strong_ordering canonical_compare(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.conductor() != b.conductor()) {
        const int m = std::lcm(a.conductor(), b.conductor());
        return canonical_compare(a.lifted(m), b.lifted(m));
    }
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Cyclotomic::to_string(const std::string& var) const
{
    std::ostringstream os;
    bool first = true;
    const std::string z = var + std::to_string(conductor());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        const Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << z;
        if (i > 1) os << "^" << i;
    }
    return first ? "0" : os.str();
}

IntPoly to_int_poly(const CycloPoly& p)
{
    std::vector<BigInt> v;
    v.reserve(p.size());
    for (const auto& c : p.coefficients()) {
        if (!c.is_rational()) throw ConsistencyError("expected a rational polynomial, found coefficient " + c.to_string());
        const Rational r = c.rational_value();
        if (r.get_den() != 1) throw ConsistencyError("expected an integer polynomial, found coefficient " + r.get_str());
        v.push_back(r.get_num());
    }
    return IntPoly(std::move(v));
}

}  // namespace mckay
