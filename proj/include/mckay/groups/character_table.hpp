#pragma once

#include "mckay/groups/matrix_group.hpp"

#include <cstdint>
#include <vector>

namespace mckay {

/// A class function, indexed by class.
using ClassFunction = std::vector<Cyclotomic>;

struct CharacterTable {
    /// Irreducible characters; row 0 is the trivial character, the rest
    /// sorted by degree and then lexicographically on their values.
    std::vector<ClassFunction> rows;
    std::vector<int> degrees;
    /// Dixon prime used for the modular eigenvector computation.
    std::uint64_t prime = 0;
    /// All values lie in Q(zeta_conductor); this is the group exponent.
    int conductor = 1;

    [[nodiscard]] std::size_t size() const { return rows.size(); }
};

/// (1/|G|) sum_c |C_c| a(c) conj(b(c)).
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b, const ConjugacyClasses& classes,
                         std::size_t group_order);

/// Character table by Dixon's method. Throws ConsistencyError if the result
/// fails the orthogonality relations or the degree-square sum.
CharacterTable character_table(const MatrixGroup& group, const ConjugacyClasses& classes);

/// Traces of the class representatives.
ClassFunction natural_character(const MatrixGroup& group, const ConjugacyClasses& classes);

/// Class constants c[j][i][k] = #{x in C_j : x^-1 z_k in C_i}, z_k the
/// representative of class k.
std::vector<std::vector<std::vector<std::uint64_t>>> class_constants(const MatrixGroup& group,
                                                                     const ConjugacyClasses& classes);

}  // namespace mckay
