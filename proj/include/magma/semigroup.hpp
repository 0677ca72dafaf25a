#pragma once

/// Structural analysis of semigroups: the translation-kernel relations,
/// decomposition of the product part into a rectangular band of
/// commutative groups, inflation detection, and the three-factor
/// normal form of such a band.
///
/// Relations (all element pairs range over the stated universe):
///   alpha on A:   a ~ b  iff  a*x == b*x and x*a == x*b for every x
///   Phi on A:     x ~ y  iff  x*z == y*z for some z
///   Psi on A:     x ~ y  iff  z*x == z*y for some z
///   X on A*A:     x ~ y  iff  some idempotent z has z*x == x and z*y == y
///   Y on A*A:     x ~ y  iff  some idempotent z has x*z == x and y*z == y
///   Z on A*A:     X and Y together
/// The existential relations need not be equivalences in general; each
/// result carries its diagnosis instead of a forced transitive closure.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "magma/cayley_table.hpp"
#include "magma/congruence.hpp"
#include "magma/partition.hpp"
#include "magma/verdict.hpp"

namespace magma {

/// A binary relation over a listed subset of elements, with its
/// equivalence diagnosis. Reflexivity and symmetry are checked too, since
/// the existential relations can fail reflexivity on degenerate inputs.
struct ElementRelation {
    std::string name;
    std::vector<Elem> universe;  ///< ascending
    std::vector<char> adjacency;  ///< universe.size()^2, row-major
    bool reflexive = true;
    bool symmetric = true;
    bool transitive = true;

    bool related_by_index(int i, int j) const {
        return adjacency[static_cast<std::size_t>(i) * universe.size() + j] != 0;
    }
    /// Index of an element in the universe; -1 when absent.
    int index_of(Elem a) const;
    bool related(Elem a, Elem b) const;
    bool equivalence() const { return reflexive && symmetric && transitive; }
    /// Partition over universe indices. Requires equivalence().
    Partition to_partition() const;
    /// Classes as element lists, ordered by least element. Requires
    /// equivalence().
    std::vector<std::vector<Elem>> element_classes() const;
};

/// The kernel relation alpha (always an equivalence), as a partition of A.
/// Requires an associative table.
Partition relation_alpha(const CayleyTable& t);

struct PhiPsiRelations {
    ElementRelation phi, psi;
    /// Whether the existential forms coincide with the universal forms
    /// (x*z == y*z for every z, respectively z*x == z*y for every z).
    bool exists_equals_forall = false;
};
PhiPsiRelations relations_phi_psi(const CayleyTable& t);

struct XYZRelations {
    ElementRelation x, y, z;
};
/// X, Y, Z over the product part A*A. Requires an associative table.
XYZRelations relations_xyz(const CayleyTable& t);

/// b*c*A == b*A and A*b*c == A*c as sets, for all b, c. (The finiteness
/// precondition such set equalities substitute for is automatic here.)
struct StarConditionReport {
    bool pointwise = true;
    std::optional<std::pair<Elem, Elem>> witness;  ///< failing (b, c)
};
StarConditionReport star_condition(const CayleyTable& t);

/// First pair of idempotents whose product is not idempotent.
std::optional<std::pair<Elem, Elem>> idempotents_closed_witness(
    const CayleyTable& t);
bool idempotents_closed(const CayleyTable& t);

/// x*y != x*f*y for an idempotent f.
struct InsertionWitness {
    Elem x, y, f;
};
/// In an Abelian semigroup idempotents can be inserted into any product.
std::optional<InsertionWitness> idempotent_insertion_witness(
    const CayleyTable& t);

struct RectBandBlock {
    int row = 0, col = 0;
    Elem identity = 0;
    std::vector<Elem> elements;  ///< ascending
};

/// The product part C = A*A split into a rows x cols grid of commutative
/// groups: X-classes are the rows, Y-classes the columns, Z-classes the
/// blocks, and block(i,l) * block(j,m) lands inside block(i,m).
struct RectBandDecomposition {
    std::vector<Elem> universe;  ///< C = A*A, ascending
    int rows = 0, cols = 0;
    std::vector<RectBandBlock> blocks;  ///< row-major grid order
    std::vector<int> block_index;       ///< per element of A; -1 outside C

    const RectBandBlock& block_at(int row, int col) const {
        return blocks[static_cast<std::size_t>(row) * cols + col];
    }
    /// The block's operation as a standalone table (elements reindexed in
    /// ascending order).
    CayleyTable block_table(const CayleyTable& t, int index) const;
};

struct RectBandResult {
    std::optional<RectBandDecomposition> decomposition;
    std::string failure;  ///< empty on success
};

/// Attempts the grid decomposition of A*A described above. Requires an
/// associative table; failures report which structural step broke.
RectBandResult rect_band_of_abelian_groups(const CayleyTable& t);

/// A as an inflation of its product part: every element acts exactly like
/// its representative in B = A*A (rep fixes B pointwise).
struct InflationStructure {
    std::vector<Elem> base;           ///< B = A*A, ascending
    std::vector<Elem> representative;  ///< size order(), rep[b] == b on B

    std::vector<std::vector<Elem>> fibers() const;
};

struct InflationResult {
    std::optional<InflationStructure> structure;
    std::optional<Elem> orphan;  ///< element alpha-related to nothing in B
};
InflationResult inflation_base(const CayleyTable& t);

enum class SemigroupAbelianFailure {
    none,
    idempotents_not_closed,
    product_part_not_band_of_groups,
    not_inflation_of_product_part,
};
const char* to_string(SemigroupAbelianFailure f);

struct SemigroupAbelianResult {
    bool abelian = false;
    SemigroupAbelianFailure failure = SemigroupAbelianFailure::none;
    std::string detail;  ///< human-readable witness description
};

/// Fast Abelian decision for semigroups: idempotents multiply to
/// idempotents, A*A decomposes into a rectangular band of commutative
/// groups, and A is an inflation of A*A.
SemigroupAbelianResult semigroup_abelian_fast(const CayleyTable& t);

/// Finite Abelian semigroups are Hamiltonian; otherwise falls back to the
/// oracle.
RoutedVerdict semigroup_hamiltonian_fast(const CayleyTable& t,
                                         const SubuniverseCaps& caps = {});

/// The band rewritten as group x leftzero(rows) x rightzero(cols): each
/// element c maps to (h, i, j) where (i, j) is its block and
/// h = e00 * c * e00 projects into the block at (0, 0). The mapping is
/// verified to be an isomorphism onto the direct product, bit for bit.
struct HijFactorization {
    CayleyTable group;  ///< the (0,0) block, reindexed
    int rows = 0, cols = 0;
    std::vector<Elem> universe;              ///< C, ascending
    std::vector<std::array<int, 3>> coords;  ///< (h, i, j) per universe entry

    /// Index of (h, i, j) in the direct product table.
    int product_index(const std::array<int, 3>& hij) const {
        return (hij[0] * rows + hij[1]) * cols + hij[2];
    }
};

/// Requires idempotents_closed(t) on top of a valid decomposition; throws
/// std::invalid_argument otherwise and std::logic_error if the verified
/// isomorphism check ever fails.
HijFactorization hij_factorization(const CayleyTable& t,
                                   const RectBandDecomposition& d);

}  // namespace magma
