#pragma once

// Finite matrix groups over cyclotomic fields, generated by closure.
//
// Elements are stored exactly. For the combinatorics (multiplication table,
// inverses, conjugation) every element also carries a fingerprint: its image
// under a ring map Z[1/D][zeta_N] -> F_q for a large prime q = 1 (mod N).
// Distinct elements have distinct fingerprints (checked during generation),
// and the map is multiplicative, so products can be looked up by fingerprint.

#include "mckay/arith/cyclotomic.hpp"
#include "mckay/arith/modular.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace mckay {

using GroupElement = DenseMatrix<Cyclotomic>;

class GroupError : public Error {
public:
    using Error::Error;
};

class MatrixGroup {
public:
    using Index = std::uint32_t;

    [[nodiscard]] int dimension() const { return dimension_; }
    [[nodiscard]] std::size_t order() const { return elements_.size(); }
    /// Least common multiple of the conductors of all generator entries.
    [[nodiscard]] int conductor() const { return conductor_; }

    /// Breadth-first order from the identity; element 0 is the identity.
    [[nodiscard]] const std::vector<GroupElement>& elements() const { return elements_; }
    [[nodiscard]] const GroupElement& element(Index i) const { return elements_[i]; }
    [[nodiscard]] const std::vector<Index>& generator_indices() const { return generators_; }

    [[nodiscard]] Index multiply(Index a, Index b) const { return table_[static_cast<std::size_t>(a) * order() + b]; }
    [[nodiscard]] Index inverse(Index a) const { return inverses_[a]; }
    [[nodiscard]] Index power(Index a, long k) const;
    [[nodiscard]] int element_order(Index a) const { return orders_[a]; }
    /// lcm of the element orders.
    [[nodiscard]] int exponent() const { return exponent_; }

    /// Index of an arbitrary matrix if it belongs to the group (exact check).
    [[nodiscard]] std::optional<Index> find(const GroupElement& g) const;

private:
    friend MatrixGroup generate_group(const std::vector<GroupElement>& generators, std::size_t order_bound,
                                      int dimension);

    using Fingerprint = std::array<modular::Residue, 9>;
    struct FingerprintHash {
        std::size_t operator()(const Fingerprint& f) const;
    };

    [[nodiscard]] Fingerprint fingerprint(const GroupElement& g) const;
    [[nodiscard]] Fingerprint fingerprint_product(const Fingerprint& a, const Fingerprint& b) const;

    int dimension_ = 0;
    int conductor_ = 1;
    modular::Residue prime_ = 0;
    std::vector<modular::Residue> zeta_powers_;
    std::vector<GroupElement> elements_;
    std::vector<Fingerprint> fingerprints_;
    std::unordered_map<Fingerprint, Index, FingerprintHash> index_;
    std::vector<Index> generators_;
    std::vector<Index> table_;
    std::vector<Index> inverses_;
    std::vector<int> orders_;
    int exponent_ = 1;
};

/// Closure of the generators under multiplication. All generators must be
/// square of one dimension with determinant 1. Throws GroupError when the
/// closure exceeds order_bound ("not finite within bound"). The dimension
/// argument is only consulted for an empty generator list, which yields the
/// trivial group.
MatrixGroup generate_group(const std::vector<GroupElement>& generators, std::size_t order_bound,
                           int dimension = 0);

struct ConjugacyClasses {
    /// Least element index in each class; classes sorted by representative,
    /// so the identity class comes first.
    std::vector<MatrixGroup::Index> representatives;
    std::vector<std::size_t> sizes;
    /// Element index -> class index.
    std::vector<std::size_t> class_of;
    /// Class index -> class of the inverses.
    std::vector<std::size_t> inverse_class;

    [[nodiscard]] std::size_t count() const { return representatives.size(); }
};

ConjugacyClasses conjugacy_classes(const MatrixGroup& group);

/// Class of g^k for the representative g of each class: power_map(k)[c].
std::vector<std::size_t> power_map(const MatrixGroup& group, const ConjugacyClasses& classes, long k);

}  // namespace mckay
