#pragma once

/// Quasigroup analysis through the loop derived at a base point.
///
/// For a quasigroup and a base element a, let R(x) = x*a and L(x) = a*x
/// (both permutations). The derived operation x + y = R^-1(x) * L^-1(y)
/// is a loop with identity a*a, and x*y = R(x) + L(y) reconstructs the
/// original table. The residual maps r and l defined by r(x) + a = R^-1(x)
/// and l(x) + a = L^-1(x) measure how far the translations are from
/// +-translations: the quasigroup is Abelian exactly when + is a
/// commutative group and both residuals are automorphisms of it.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "magma/cayley_table.hpp"
#include "magma/congruence.hpp"
#include "magma/partition.hpp"
#include "magma/verdict.hpp"

namespace magma {

struct LoopDerivation {
    Elem base;                      ///< the chosen a
    Elem zero;                      ///< a*a, identity of +
    std::vector<Elem> right_translation;      ///< R(x) = x*a
    std::vector<Elem> left_translation;       ///< L(x) = a*x
    std::vector<Elem> right_translation_inv;  ///< R^-1
    std::vector<Elem> left_translation_inv;   ///< L^-1
    std::vector<Elem> residual_right;         ///< r, r(x) + a = R^-1(x)
    std::vector<Elem> residual_left;          ///< l, l(x) + a = L^-1(x)
    CayleyTable plus;                         ///< x + y

    Elem add(Elem x, Elem y) const { return plus.at(x, y); }
};

/// Builds the derived loop at `base`. Requires a quasigroup; verifies the
/// reconstruction identities and throws std::logic_error if they fail.
LoopDerivation derive_loop(const CayleyTable& t, Elem base);

/// Orders of the permutations R^-1 and R / L^-1 and L at the base point
/// (a permutation and its inverse share one order): least k >= 1 with the
/// k-fold composition equal to the identity map.
std::pair<long long, long long> translation_inverse_order(const CayleyTable& t,
                                                          Elem base);

enum class LoopFailure {
    none,
    plus_not_associative,
    plus_not_commutative,
    right_residual_not_automorphism,
    left_residual_not_automorphism,
};

const char* to_string(LoopFailure f);

struct QuasigroupAbelianResult {
    bool abelian = false;
    Elem base = 0;
    LoopFailure failure = LoopFailure::none;
    /// For plus_not_associative: (x, y, z); otherwise (x, y, unused).
    std::vector<Elem> witness;
};

/// Fast Abelian decision for quasigroups through the derived loop at
/// `base` (default 0). The verdict is independent of the base point.
QuasigroupAbelianResult quasigroup_abelian_fast(const CayleyTable& t,
                                                std::optional<Elem> base = {});

/// How many x solve x*x = v, for each v. In an Abelian quasigroup every
/// value is hit by the same number of squares or by none at all, so a
/// non-uniform spectrum certifies "not Abelian" (necessary condition
/// only).
struct SquareRootSpectrum {
    std::vector<int> counts;
    bool uniform = false;
};
SquareRootSpectrum square_root_spectrum(const CayleyTable& t);

/// Abelian quasigroups are Hamiltonian, so a positive fast Abelian check
/// settles the question; otherwise falls back to the oracle.
RoutedVerdict quasigroup_hamiltonian_fast(const CayleyTable& t,
                                          const SubuniverseCaps& caps = {});

/// For an Abelian quasigroup, a closed subset B, and a in B: the + cosets
/// of B form a congruence with B itself as a class. Throws
/// std::invalid_argument when the preconditions fail.
Partition coset_congruence(const CayleyTable& t, const std::vector<Elem>& B,
                           Elem a);

}  // namespace magma
