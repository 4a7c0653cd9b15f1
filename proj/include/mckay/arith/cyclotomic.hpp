#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// An element is stored in the power basis 1, z, ..., z^(phi(N)-1) of
// Q[x]/Phi_N(x) with rational coefficients. Operands of different conductors
// are lifted to the lcm of the conductors; no automatic descent to a smaller
// field is attempted, equality and ordering compare after lifting.

#include "mckay/arith/numeric.hpp"
#include "mckay/arith/polynomial.hpp"

#include <compare>
#include <memory>
#include <string>
#include <vector>

namespace mckay {

/// Euler's totient.
int euler_phi(int n);

/// The N-th cyclotomic polynomial Phi_N, monic of degree phi(N).
IntPoly cyclotomic_polynomial(int n);

/// Immutable description of Q(zeta_N): Phi_N and the reduction table for
/// powers x^k, phi(N) <= k < N.
class CyclotomicField {
public:
    /// Shared instance for conductor n (thread-safe memo).
    static std::shared_ptr<const CyclotomicField> get(int n);

    [[nodiscard]] int conductor() const { return conductor_; }
    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] const IntPoly& minimal_polynomial() const { return phi_; }

    /// Coordinates of x^k in the power basis, 0 <= k < N.
    [[nodiscard]] const std::vector<std::int64_t>& power(int k) const { return powers_[k]; }

    explicit CyclotomicField(int n);

private:
    int conductor_;
    int degree_;
    IntPoly phi_;
    std::vector<std::vector<std::int64_t>> powers_;
};

class Cyclotomic {
public:
    Cyclotomic();
    Cyclotomic(long v);             // NOLINT: integers embed in every field
    Cyclotomic(const Rational& v);  // NOLINT
    Cyclotomic(const BigInt& v);    // NOLINT

    /// zeta_N^k.
    static Cyclotomic zeta(int n, long k = 1);

    /// Element of Q(zeta_N) from power-basis coordinates. Longer inputs are
    /// reduced modulo Phi_N.
    static Cyclotomic from_coefficients(int n, const std::vector<Rational>& coeffs);

    [[nodiscard]] int conductor() const { return field_->conductor(); }
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// The same element expressed in Q(zeta_m); n must divide m.
    [[nodiscard]] Cyclotomic lifted(int m) const;

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_rational() const;
    /// Throws ArithmeticError unless is_rational().
    [[nodiscard]] Rational rational_value() const;

    /// Complex conjugation zeta -> zeta^-1.
    [[nodiscard]] Cyclotomic conj() const;
    /// Galois automorphism zeta -> zeta^k, gcd(k, N) = 1.
    [[nodiscard]] Cyclotomic galois(long k) const;
    /// Throws ArithmeticError for zero.
    [[nodiscard]] Cyclotomic inverse() const;
    /// Field norm down to Q.
    [[nodiscard]] Rational norm() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend Cyclotomic operator-(const Cyclotomic& a);

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Total order: lexicographic on coordinates at the common conductor.
    friend std::strong_ordering canonical_compare(const Cyclotomic& a, const Cyclotomic& b);

    [[nodiscard]] std::string to_string(const std::string& var = "z") const;

private:
    Cyclotomic(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs);

    static std::vector<Rational> reduce_exponents(const CyclotomicField& field,
                                                  const std::vector<Rational>& by_power);

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Rational> coeffs_;
};

inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }
inline Cyclotomic conj(const Cyclotomic& c) { return c.conj(); }
inline Cyclotomic exact_div(const Cyclotomic& a, const Cyclotomic& b) { return a / b; }
inline std::string to_string(const Cyclotomic& c) { return c.to_string(); }

using CycloPoly = Polynomial<Cyclotomic>;

/// Integer polynomial from one whose coefficients are rational integers;
/// throws ConsistencyError otherwise.
IntPoly to_int_poly(const CycloPoly& p);

}  // namespace mckay

MCKAY_EIGEN_EXACT_SCALAR(mckay::Cyclotomic, 0)
