#pragma once

/// Congruence generation, subuniverse enumeration, and the block test
/// underlying the Hamiltonian decision.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "magma/cayley_table.hpp"
#include "magma/partition.hpp"

namespace magma {

namespace detail {

/// Least congruence of the operation `mul` on {0..m-1} containing `seed`.
/// Worklist over effected merges: each newly merged pair is translated by
/// every element on both sides until nothing new merges. A pair merged
/// later inherits the translations of the merges that caused it, so the
/// fixpoint is compatible with `mul` on both sides.
template <typename Mul>
Partition congruence_closure(int m, Mul&& mul,
                             const std::vector<std::pair<int, int>>& seed) {
    UnionFind uf(m);
    std::vector<std::pair<int, int>> work;
    auto push = [&](int a, int b) {
        if (uf.unite(a, b))
            work.emplace_back(a, b);
    };
    for (auto [a, b] : seed)
        push(a, b);
    while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        for (int a = 0; a < m; ++a) {
            push(mul(a, x), mul(a, y));
            push(mul(x, a), mul(y, a));
        }
    }
    return uf.to_partition();
}

}  // namespace detail

/// Least congruence of t containing the given pairs.
Partition generated_congruence(const CayleyTable& t,
                               const std::vector<std::pair<Elem, Elem>>& pairs);

/// x ~ x2 and y ~ y2 but x*y and x2*y2 fall in different classes.
struct CongruenceViolation {
    Elem x, x2, y, y2;
};

/// Checks compatibility of a partition with the operation.
std::optional<CongruenceViolation> congruence_violation(const CayleyTable& t,
                                                        const Partition& p);
bool is_congruence(const CayleyTable& t, const Partition& p);

/// Least subset containing `seed` and closed under the operation, sorted.
std::vector<Elem> subuniverse_closure(const CayleyTable& t,
                                      const std::vector<Elem>& seed);

struct SubuniverseCaps {
    int max_order = 12;
    std::size_t max_sets = 100000;
};

struct SubuniverseFamily {
    /// All non-empty closed subsets found, sorted by (size, elements).
    std::vector<std::vector<Elem>> sets;
    /// False when a cap cut the enumeration short.
    bool complete = true;
};

/// Enumerates every non-empty closed subset by growing closed sets one
/// generator at a time, starting from singleton closures. Any closed set
/// is reached from the closure of its own elements, so the family is
/// complete whenever no cap triggers.
SubuniverseFamily all_subuniverses(const CayleyTable& t,
                                   const SubuniverseCaps& caps = {});

/// True when `block` (a non-empty closed subset) is a class of some
/// congruence, equivalently a class of the congruence its square
/// generates. Throws std::invalid_argument when `block` is not closed.
bool is_block_of_some_congruence(const CayleyTable& t,
                                 const std::vector<Elem>& block);

}  // namespace magma
