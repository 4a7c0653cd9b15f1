#include "mckay/groups/matrix_group.hpp"

#include "mckay/arith/determinant.hpp"

#include <deque>
#include <numeric>

namespace mckay {

namespace {

GroupElement exact_product(const GroupElement& a, const GroupElement& b)
{
    const Eigen::Index n = a.rows();
    GroupElement c(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            Cyclotomic s = a(i, 0) * b(0, j);
            for (Eigen::Index k = 1; k < n; ++k) s += a(i, k) * b(k, j);
            c(i, j) = std::move(s);
        }
    return c;
}

bool exact_equal(const GroupElement& a, const GroupElement& b)
{
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

}  // namespace

std::size_t MatrixGroup::FingerprintHash::operator()(const Fingerprint& f) const
{
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto v : f) h = (h ^ v) * 0x100000001b3ULL;
    return h;
}

MatrixGroup::Fingerprint MatrixGroup::fingerprint(const GroupElement& g) const
{
    Fingerprint f{};
    for (int i = 0; i < dimension_; ++i)
        for (int j = 0; j < dimension_; ++j) {
            const Cyclotomic& c = g(i, j);
            const int step = conductor_ / c.conductor();
            modular::Residue acc = 0;
            const auto& coeffs = c.coefficients();
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                if (sgn(coeffs[k]) == 0) continue;
                const auto term = modular::mul(modular::reduce(coeffs[k], prime_),
                                               zeta_powers_[(k * static_cast<std::size_t>(step)) % conductor_], prime_);
                acc = modular::add(acc, term, prime_);
            }
            f[static_cast<std::size_t>(i * dimension_ + j)] = acc;
        }
    return f;
}

MatrixGroup::Fingerprint MatrixGroup::fingerprint_product(const Fingerprint& a, const Fingerprint& b) const
{
    Fingerprint c{};
    const auto n = static_cast<std::size_t>(dimension_);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            modular::Residue s = 0;
            for (std::size_t k = 0; k < n; ++k) s = modular::add(s, modular::mul(a[i * n + k], b[k * n + j], prime_), prime_);
            c[i * n + j] = s;
        }
    return c;
}

MatrixGroup::Index MatrixGroup::power(Index a, long k) const
{
    const long o = orders_[a];
    long e = k % o;
    if (e < 0) e += o;
    Index r = 0;
    for (long i = 0; i < e; ++i) r = multiply(r, a);
    return r;
}

std::optional<MatrixGroup::Index> MatrixGroup::find(const GroupElement& g) const
{
    if (g.rows() != dimension_ || g.cols() != dimension_) return std::nullopt;
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index j = 0; j < g.cols(); ++j)
            if (conductor_ % g(i, j).conductor() != 0) return std::nullopt;
    Fingerprint f;
    try {
        f = fingerprint(g);
    } catch (const ArithmeticError&) {
        return std::nullopt;
    }
    auto it = index_.find(f);
    if (it == index_.end() || !exact_equal(elements_[it->second], g)) return std::nullopt;
    return it->second;
}

MatrixGroup generate_group(const std::vector<GroupElement>& generators, std::size_t order_bound, int dimension)
{
    MatrixGroup g;
    if (generators.empty()) {
        if (dimension < 1 || dimension > 3) throw GroupError("trivial group needs a dimension between 1 and 3");
        g.dimension_ = dimension;
    } else {
        g.dimension_ = static_cast<int>(generators.front().rows());
        if (g.dimension_ < 1 || g.dimension_ > 3) throw GroupError("generators must be of size 1, 2 or 3");
    }
    if (order_bound == 0) throw GroupError("order bound must be positive");

    for (const auto& m : generators) {
        if (m.rows() != g.dimension_ || m.cols() != g.dimension_)
            throw GroupError("generators must be square matrices of a common size");
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j) g.conductor_ = std::lcm(g.conductor_, m(i, j).conductor());
        if (laplace_det(m) != Cyclotomic(1L)) throw GroupError("generator with determinant different from 1");
    }

    // The smallest prime above 2^31 with q = 1 (mod N) that no denominator hits.
    std::uint64_t q = std::uint64_t{1} << 31;
    for (;;) {
        q = modular::next_prime_congruent_one(static_cast<std::uint64_t>(g.conductor_), q);
        bool usable = true;
        for (const auto& m : generators)
            for (Eigen::Index i = 0; i < m.rows() && usable; ++i)
                for (Eigen::Index j = 0; j < m.cols() && usable; ++j)
                    for (const auto& c : m(i, j).coefficients())
                        if (c.get_den() % BigInt(static_cast<unsigned long>(q)) == 0) usable = false;
        if (usable) break;
    }
    g.prime_ = q;
    const auto root = modular::root_of_unity(static_cast<std::uint64_t>(g.conductor_), q);
    g.zeta_powers_.resize(static_cast<std::size_t>(g.conductor_));
    g.zeta_powers_[0] = 1;
    for (std::size_t k = 1; k < g.zeta_powers_.size(); ++k) g.zeta_powers_[k] = modular::mul(g.zeta_powers_[k - 1], root, q);

    auto add_element = [&g](GroupElement m, const MatrixGroup::Fingerprint& f) {
        const auto idx = static_cast<MatrixGroup::Index>(g.elements_.size());
        g.elements_.push_back(std::move(m));
        g.fingerprints_.push_back(f);
        g.index_.emplace(f, idx);
        return idx;
    };

    {
        GroupElement id(g.dimension_, g.dimension_);
        for (int i = 0; i < g.dimension_; ++i)
            for (int j = 0; j < g.dimension_; ++j) id(i, j) = Cyclotomic(i == j ? 1L : 0L);
        const auto f = g.fingerprint(id);
        add_element(std::move(id), f);
    }

    // Right multiplication by generators, breadth first.
    std::vector<MatrixGroup::Fingerprint> gen_prints;
    for (const auto& m : generators) gen_prints.push_back(g.fingerprint(m));
    for (std::size_t cursor = 0; cursor < g.elements_.size(); ++cursor) {
        for (const auto& gen : generators) {
            GroupElement prod = exact_product(g.elements_[cursor], gen);
            const auto f = g.fingerprint(prod);
            auto it = g.index_.find(f);
            if (it != g.index_.end()) {
                if (!exact_equal(g.elements_[it->second], prod))
                    throw ConsistencyError("fingerprint collision between distinct group elements");
                continue;
            }
            if (g.elements_.size() >= order_bound)
                throw GroupError("group not finite within bound " + std::to_string(order_bound));
            add_element(std::move(prod), f);
        }
    }
    for (const auto& f : gen_prints) g.generators_.push_back(g.index_.at(f));

    const std::size_t n = g.elements_.size();
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto it = g.index_.find(g.fingerprint_product(g.fingerprints_[a], g.fingerprints_[b]));
            if (it == g.index_.end()) throw ConsistencyError("group is not closed under multiplication");
            g.table_[a * n + b] = it->second;
        }

    g.inverses_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (g.table_[a * n + b] == 0) {
                g.inverses_[a] = static_cast<MatrixGroup::Index>(b);
                break;
            }

    g.orders_.assign(n, 1);
    for (std::size_t a = 0; a < n; ++a) {
        MatrixGroup::Index x = static_cast<MatrixGroup::Index>(a);
        int k = 1;
        while (x != 0) {
            x = g.table_[x * n + a];
            ++k;
        }
        g.orders_[a] = k;
        g.exponent_ = std::lcm(g.exponent_, k);
    }
    return g;
}

ConjugacyClasses conjugacy_classes(const MatrixGroup& group)
{
    const std::size_t n = group.order();
    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    ConjugacyClasses cc;
    cc.class_of.assign(n, unassigned);
    for (std::size_t start = 0; start < n; ++start) {
        if (cc.class_of[start] != unassigned) continue;
        const std::size_t id = cc.representatives.size();
        cc.representatives.push_back(static_cast<MatrixGroup::Index>(start));
        std::size_t size = 0;
        std::deque<MatrixGroup::Index> queue{static_cast<MatrixGroup::Index>(start)};
        cc.class_of[start] = id;
        while (!queue.empty()) {
            const auto x = queue.front();
            queue.pop_front();
            ++size;
            for (const auto s : group.generator_indices()) {
                const auto y = group.multiply(group.multiply(s, x), group.inverse(s));
                if (cc.class_of[y] == unassigned) {
                    cc.class_of[y] = id;
                    queue.push_back(y);
                }
            }
        }
        cc.sizes.push_back(size);
    }
    cc.inverse_class.resize(cc.count());
    for (std::size_t c = 0; c < cc.count(); ++c) cc.inverse_class[c] = cc.class_of[group.inverse(cc.representatives[c])];
    return cc;
}

std::vector<std::size_t> power_map(const MatrixGroup& group, const ConjugacyClasses& classes, long k)
{
    std::vector<std::size_t> out(classes.count());
    for (std::size_t c = 0; c < classes.count(); ++c) out[c] = classes.class_of[group.power(classes.representatives[c], k)];
    return out;
}

}  // namespace mckay
