#pragma once

// Arbitrary-precision scalars and the glue that lets them live inside Eigen
// dense objects.

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mckay {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Division by zero, non-invertible element, or an operation outside its domain.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/// An internal cross-check failed; the result would have been wrong.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

inline bool is_zero(const BigInt& v) { return sgn(v) == 0; }
inline bool is_zero(const Rational& v) { return sgn(v) == 0; }

/// Exact quotient a / b; b must divide a.
inline BigInt exact_div(const BigInt& a, const BigInt& b)
{
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Rational exact_div(const Rational& a, const Rational& b) { return Rational(a / b); }

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<std::int64_t>;
using IntVector = DenseVector<std::int64_t>;

}  // namespace mckay

/// Declares NumTraits for an exact (non floating point) scalar type so that
/// it can be stored in Eigen matrices and combined with Eigen expressions.
#define MCKAY_EIGEN_EXACT_SCALAR(TYPE, IS_INTEGER)                            \
    namespace Eigen {                                                          \
    template <>                                                                \
    struct NumTraits<TYPE> : GenericNumTraits<TYPE> {                          \
        typedef TYPE Real;                                                     \
        typedef TYPE NonInteger;                                               \
        typedef TYPE Nested;                                                   \
        typedef TYPE Literal;                                                  \
        enum {                                                                 \
            IsComplex = 0,                                                     \
            IsInteger = IS_INTEGER,                                            \
            IsSigned = 1,                                                      \
            RequireInitialization = 1,                                         \
            ReadCost = 8,                                                      \
            AddCost = 16,                                                      \
            MulCost = 64                                                       \
        };                                                                     \
        static inline Real epsilon() { return Real(0); }                       \
        static inline Real dummy_precision() { return Real(0); }               \
        static inline int digits10() { return 0; }                             \
    };                                                                         \
    }

MCKAY_EIGEN_EXACT_SCALAR(mpz_class, 1)
MCKAY_EIGEN_EXACT_SCALAR(mpq_class, 0)
