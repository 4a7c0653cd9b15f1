#include "mckay/groups/character_table.hpp"

#include <algorithm>
#include <cmath>

namespace mckay {

namespace {

using modular::Residue;
using Vec = std::vector<Residue>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vec>& rows, Residue p)
{
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const Residue inv = modular::inverse(rows[r][c], p);
        for (auto& x : rows[r]) x = modular::mul(x, inv, p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Residue f = rows[i][c];
            for (std::size_t k = 0; k < cols; ++k) rows[i][k] = modular::sub(rows[i][k], modular::mul(f, rows[r][k], p), p);
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

// Basis of {x : A x = 0} for a square matrix given by rows.
std::vector<Vec> nullspace(std::vector<Vec> a, Residue p)
{
    const std::size_t n = a.size();
    const auto pivots = rref(a, p);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec x(n, 0);
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = modular::sub(0, a[r][free], p);
        basis.push_back(std::move(x));
    }
    return basis;
}

// A subspace of F_p^k kept in reduced echelon form.
struct Subspace {
    std::vector<Vec> basis;
    std::vector<std::size_t> pivots;
};

Subspace make_subspace(std::vector<Vec> vectors, Residue p)
{
    Subspace s;
    s.pivots = rref(vectors, p);
    s.basis = std::move(vectors);
    return s;
}

// Splits a subspace invariant under m into eigenspaces of m.
std::vector<Subspace> split(const Subspace& space, const std::vector<Vec>& m, Residue p)
{
    const std::size_t d = space.basis.size();
    const std::size_t k = m.size();
    // restricted action: column b holds the coordinates of m * basis[b]
    std::vector<Vec> action(d, Vec(d, 0));
    for (std::size_t b = 0; b < d; ++b) {
        Vec image(k, 0);
        for (std::size_t i = 0; i < k; ++i) {
            Residue s = 0;
            for (std::size_t l = 0; l < k; ++l) s = modular::add(s, modular::mul(m[i][l], space.basis[b][l], p), p);
            image[i] = s;
        }
        for (std::size_t a = 0; a < d; ++a) action[a][b] = image[space.pivots[a]];
    }

    std::vector<Subspace> parts;
    std::size_t found = 0;
    for (Residue lambda = 0; lambda < p && found < d; ++lambda) {
        auto shifted = action;
        for (std::size_t a = 0; a < d; ++a) shifted[a][a] = modular::sub(shifted[a][a], lambda, p);
        const auto kernel = nullspace(std::move(shifted), p);
        if (kernel.empty()) continue;
        std::vector<Vec> vectors;
        for (const auto& coords : kernel) {
            Vec v(k, 0);
            for (std::size_t b = 0; b < d; ++b) {
                if (coords[b] == 0) continue;
                for (std::size_t l = 0; l < k; ++l)
                    v[l] = modular::add(v[l], modular::mul(coords[b], space.basis[b][l], p), p);
            }
            vectors.push_back(std::move(v));
        }
        found += vectors.size();
        parts.push_back(make_subspace(std::move(vectors), p));
    }
    if (found != d) throw ConsistencyError("class matrix is not diagonalisable over the Dixon prime field");
    return parts;
}

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b, const ConjugacyClasses& classes,
                         std::size_t group_order)
{
    Cyclotomic sum;
    for (std::size_t c = 0; c < classes.count(); ++c)
        sum += Cyclotomic(static_cast<long>(classes.sizes[c])) * a[c] * b[c].conj();
    return sum * Cyclotomic(Rational(1, static_cast<unsigned long>(group_order)));
}

std::vector<std::vector<std::vector<std::uint64_t>>> class_constants(const MatrixGroup& group,
                                                                     const ConjugacyClasses& classes)
{
    const std::size_t k = classes.count();
    std::vector<std::vector<std::vector<std::uint64_t>>> c(k, std::vector<std::vector<std::uint64_t>>(k, std::vector<std::uint64_t>(k, 0)));
    for (std::size_t target = 0; target < k; ++target) {
        const auto z = classes.representatives[target];
        for (MatrixGroup::Index x = 0; x < group.order(); ++x) {
            const auto y = group.multiply(group.inverse(x), z);
            ++c[classes.class_of[x]][classes.class_of[y]][target];
        }
    }
    return c;
}

CharacterTable character_table(const MatrixGroup& group, const ConjugacyClasses& classes)
{
    const std::size_t k = classes.count();
    const std::uint64_t order = group.order();
    const auto e = static_cast<std::uint64_t>(group.exponent());

    CharacterTable table;
    table.conductor = static_cast<int>(e);
    const std::uint64_t bound = 2 * isqrt(order) + 1;
    const Residue p = modular::next_prime_congruent_one(e, bound);
    table.prime = p;

    const auto constants = class_constants(group, classes);

    std::vector<Vec> identity_rows(k, Vec(k, 0));
    for (std::size_t i = 0; i < k; ++i) identity_rows[i][i] = 1;
    std::vector<Subspace> spaces{make_subspace(identity_rows, p)};

    for (std::size_t j = 1; j < k; ++j) {
        if (std::all_of(spaces.begin(), spaces.end(), [](const Subspace& s) { return s.basis.size() == 1; })) break;
        std::vector<Vec> m(k, Vec(k, 0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t l = 0; l < k; ++l) m[i][l] = constants[j][i][l] % p;
        std::vector<Subspace> refined;
        for (const auto& s : spaces) {
            if (s.basis.size() == 1) {
                refined.push_back(s);
                continue;
            }
            for (auto& part : split(s, m, p)) refined.push_back(std::move(part));
        }
        spaces = std::move(refined);
    }
    if (spaces.size() != k) throw ConsistencyError("class matrices do not separate the irreducible characters");

    // Fourier lifting data: classes of g^q for q = 0..e-1.
    std::vector<std::vector<std::size_t>> powers(e);
    for (std::uint64_t q = 0; q < e; ++q) powers[q] = power_map(group, classes, static_cast<long>(q));
    const Residue z = modular::root_of_unity(e, p);
    const Residue z_inv = modular::inverse(z, p);
    const Residue e_inv = modular::inverse(e % p, p);

    struct Row {
        int degree;
        ClassFunction values;
    };
    std::vector<Row> rows;
    for (const auto& s : spaces) {
        Vec omega = s.basis.front();
        if (omega[0] == 0) throw ConsistencyError("central character vanishes at the identity");
        const Residue scale = modular::inverse(omega[0], p);
        for (auto& x : omega) x = modular::mul(x, scale, p);

        Residue sum = 0;
        for (std::size_t i = 0; i < k; ++i) {
            const Residue term = modular::mul(omega[i], omega[classes.inverse_class[i]], p);
            sum = modular::add(sum, modular::mul(term, modular::inverse(classes.sizes[i] % p, p), p), p);
        }
        const Residue d_squared = modular::mul(order % p, modular::inverse(sum, p), p);
        std::uint64_t degree = 0;
        for (std::uint64_t d = 1; d * d <= order; ++d)
            if ((d * d) % p == d_squared) {
                degree = d;
                break;
            }
        if (degree == 0) throw ConsistencyError("no admissible character degree");

        Vec chi(k);
        for (std::size_t i = 0; i < k; ++i)
            chi[i] = modular::mul(modular::mul(omega[i], degree % p, p), modular::inverse(classes.sizes[i] % p, p), p);

        ClassFunction values(k);
        for (std::size_t c = 0; c < k; ++c) {
            std::vector<Rational> by_power(e);
            for (std::uint64_t l = 0; l < e; ++l) {
                Residue acc = 0;
                const Residue step = modular::pow(z_inv, l, p);
                Residue w = 1;
                for (std::uint64_t q = 0; q < e; ++q) {
                    acc = modular::add(acc, modular::mul(chi[powers[q][c]], w, p), p);
                    w = modular::mul(w, step, p);
                }
                const Residue m = modular::mul(acc, e_inv, p);
                if (m > degree) throw ConsistencyError("eigenvalue multiplicity exceeds the character degree");
                by_power[l] = Rational(static_cast<unsigned long>(m));
            }
            values[c] = Cyclotomic::from_coefficients(static_cast<int>(e), by_power);
        }
        rows.push_back({static_cast<int>(degree), std::move(values)});
    }

    const Cyclotomic one(1L);
    auto is_trivial = [&one](const Row& r) {
        return std::all_of(r.values.begin(), r.values.end(), [&one](const Cyclotomic& v) { return v == one; });
    };
    std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
        const bool ta = is_trivial(a);
        const bool tb = is_trivial(b);
        if (ta != tb) return ta;
        if (a.degree != b.degree) return a.degree < b.degree;
        for (std::size_t c = 0; c < a.values.size(); ++c) {
            const auto cmp = canonical_compare(a.values[c], b.values[c]);
            if (cmp != 0) return cmp < 0;
        }
        return false;
    });
    if (!is_trivial(rows.front())) throw ConsistencyError("trivial character missing");

    std::uint64_t square_sum = 0;
    for (auto& r : rows) {
        square_sum += static_cast<std::uint64_t>(r.degree) * static_cast<std::uint64_t>(r.degree);
        table.degrees.push_back(r.degree);
        table.rows.push_back(std::move(r.values));
    }
    if (square_sum != order) throw ConsistencyError("degree squares do not sum to the group order");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            const auto ip = inner_product(table.rows[i], table.rows[j], classes, order);
            if (ip != Cyclotomic(i == j ? 1L : 0L)) throw ConsistencyError("character table fails row orthogonality");
        }
    return table;
}

ClassFunction natural_character(const MatrixGroup& group, const ConjugacyClasses& classes)
{
    ClassFunction chi;
    chi.reserve(classes.count());
    for (const auto rep : classes.representatives) {
        const auto& g = group.element(rep);
        Cyclotomic tr;
        for (Eigen::Index i = 0; i < g.rows(); ++i) tr += g(i, i);
        chi.push_back(std::move(tr));
    }
    return chi;
}

}  // namespace mckay
