#pragma once

// Small generator sets built directly in code for the group-level tests.

#include "mckay/groups/matrix_group.hpp"

#include <initializer_list>

namespace mckay::fixture {

inline Cyclotomic z(int n, long k = 1) { return Cyclotomic::zeta(n, k); }
inline Cyclotomic q(long a, long b = 1) { return Cyclotomic(Rational(a, b)); }

inline GroupElement mat(int n, std::initializer_list<Cyclotomic> entries)
{
    GroupElement m(n, n);
    auto it = entries.begin();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = *it++;
    return m;
}

inline GroupElement cyclic_permutation()
{
    return mat(3, {q(0), q(1), q(0), q(0), q(0), q(1), q(1), q(0), q(0)});
}

/// Delta(3 n^2)
inline std::vector<GroupElement> delta3(int n)
{
    return {cyclic_permutation(), mat(3, {z(n), q(0), q(0), q(0), z(n, -1), q(0), q(0), q(0), q(1)})};
}

/// Delta(6 n^2)
inline std::vector<GroupElement> delta6(int n)
{
    auto g = delta3(n);
    g.push_back(mat(3, {q(0), q(-1), q(0), q(-1), q(0), q(0), q(0), q(0), q(-1)}));
    return g;
}

inline std::vector<GroupElement> cyclic_sl2(int l) { return {mat(2, {z(l), q(0), q(0), z(l, -1)})}; }

inline std::vector<GroupElement> binary_dihedral(int n)
{
    return {mat(2, {z(2 * n), q(0), q(0), z(2 * n, -1)}), mat(2, {q(0), q(1), q(-1), q(0)})};
}

inline std::vector<GroupElement> binary_icosahedral()
{
    const Cyclotomic sqrt5 = q(1) + q(2) * z(5) + q(2) * z(5, 4);
    const Cyclotomic s = sqrt5 * q(1, 5);
    const Cyclotomic a = z(5) - z(5, 4);
    const Cyclotomic b = z(5, 2) - z(5, 3);
    return {mat(2, {z(5, 3), q(0), q(0), z(5, 2)}), mat(2, {-(a * s), b * s, b * s, a * s})};
}

}  // namespace mckay::fixture
