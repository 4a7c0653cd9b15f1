#pragma once

// Word-size prime-field helpers. Moduli stay below 2^32 so that a product of
// two residues fits in 64 bits.

#include "mckay/arith/numeric.hpp"

#include <cstdint>
#include <vector>

namespace mckay::modular {

using Residue = std::uint64_t;

inline Residue add(Residue a, Residue b, Residue p) { return (a + b) % p; }
inline Residue sub(Residue a, Residue b, Residue p) { return (a + p - b) % p; }
inline Residue mul(Residue a, Residue b, Residue p)
{
    return static_cast<Residue>(static_cast<unsigned __int128>(a) * b % p);
}

Residue pow(Residue base, std::uint64_t exponent, Residue p);

/// Multiplicative inverse; throws ArithmeticError for 0.
Residue inverse(Residue a, Residue p);

/// Reduction of a signed integer into [0, p).
Residue reduce(std::int64_t v, Residue p);

/// Reduction of a rational number; throws ArithmeticError when p divides the
/// denominator.
Residue reduce(const Rational& v, Residue p);

bool is_prime(std::uint64_t n);

std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Smallest prime p > lower_bound with p = 1 (mod modulus).
std::uint64_t next_prime_congruent_one(std::uint64_t modulus, std::uint64_t lower_bound);

/// Smallest generator of the multiplicative group of F_p.
Residue primitive_root(Residue p);

/// Deterministic primitive n-th root of unity in F_p (requires n | p - 1).
Residue root_of_unity(std::uint64_t n, Residue p);

/// Symmetric lift into (-p/2, p/2].
std::int64_t symmetric_lift(Residue v, Residue p);

}  // namespace mckay::modular
