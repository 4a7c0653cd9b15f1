#pragma once

// Stream operators so that doctest prints exact values in failure messages.

#include "mckay/arith/cyclotomic.hpp"
#include "mckay/arith/power_series.hpp"
#include "mckay/arith/rational_function.hpp"

#include <ostream>

namespace mckay {

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

inline std::ostream& operator<<(std::ostream& os, const PowerSeries& s)
{
    os << "[";
    for (std::size_t i = 0; i <= s.order(); ++i) os << (i ? ", " : "") << s[i].get_str();
    return os << "]";
}

/// Integer polynomial from ascending coefficients.
inline IntPoly ip(std::initializer_list<long> coeffs)
{
    std::vector<BigInt> v;
    for (long c : coeffs) v.emplace_back(c);
    return IntPoly(std::move(v));
}

inline const IntPoly& t_var()
{
    static const IntPoly t = IntPoly::variable();
    return t;
}

}  // namespace mckay
