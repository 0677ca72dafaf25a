#pragma once

/// Ground-truth deciders for the Abelian and Hamiltonian properties, plus
/// the semigroup-specific auxiliary checks they are validated against.
///
/// An operation is *Abelian* when every polynomial t built from it
/// satisfies the term condition: t(u, cs) == t(u, ds) implies
/// t(v, cs) == t(v, ds) for all u, v and parameter tuples cs, ds. It is
/// *Hamiltonian* when every non-empty closed subset is a class of some
/// congruence.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "magma/cayley_table.hpp"
#include "magma/congruence.hpp"
#include "magma/verdict.hpp"

namespace magma {

/// Decides the term condition without enumerating terms: on the square of
/// the table (componentwise pairs), the congruence generated by gluing
/// (a, a) ~ (b, b) for all a, b collapses (t(u, cs), t(u, ds)) with
/// (t(v, cs), t(v, ds)) for every polynomial t, because unary polynomials
/// of the square act componentwise with independent parameters. The
/// operation is Abelian exactly when the class of the diagonal stays the
/// diagonal. Returns undetermined when order^2 exceeds `max_square`.
Truth abelian_oracle(const CayleyTable& t, long max_square = 64L * 64L);

/// A binary-operation term over one distinguished variable x and
/// parameters y1, y2, ...; leaves are variables, internal nodes products.
class PolynomialTerm {
  public:
    static PolynomialTerm variable();
    static PolynomialTerm parameter(int k);  // k >= 1
    static PolynomialTerm product(const PolynomialTerm& l,
                                  const PolynomialTerm& r);

    /// Number of distinct parameters (the largest y-index used).
    int param_count() const noexcept { return params_; }
    int height() const noexcept { return height_; }
    bool uses_variable() const noexcept { return uses_x_; }

    Elem eval(const CayleyTable& t, Elem x, std::span<const Elem> ys) const;

    /// Prefix notation, e.g. "(* y1 x)".
    std::string to_string() const;

  private:
    PolynomialTerm() = default;
    struct Node {
        int var;  // 0 = x, k > 0 = y_k, -1 = product
        int left = -1, right = -1;
    };
    std::vector<Node> nodes_;
    int root_ = -1;
    int params_ = 0;
    int height_ = 0;
    bool uses_x_ = false;
};

/// A verified failure of the term condition.
struct TCWitness {
    PolynomialTerm term;
    Elem u, v;
    std::vector<Elem> c, d;
    Elem t_u_c, t_u_d, t_v_c, t_v_d;

    /// Re-evaluates the four values: t(u,c) == t(u,d) but t(v,c) != t(v,d).
    bool verify(const CayleyTable& t) const;
};

struct TCSearchOptions {
    int max_height = 3;       ///< term tree height (a lone leaf has height 1)
    int max_params = 3;       ///< distinct parameters per term
    long exhaustive_budget = 200000;  ///< full scan when n^(2k+1) fits
    int samples = 20000;      ///< random parameter draws per term otherwise
    std::uint64_t seed = 0;
};

/// Searches terms by increasing height for a term-condition violation.
/// Deterministic for fixed options. A nullopt result is only evidence,
/// not proof, that no violation exists within the budget.
std::optional<TCWitness> tc_violation_search(const CayleyTable& t,
                                             const TCSearchOptions& opts = {});

struct HamiltonianResult {
    Truth verdict = Truth::undetermined;
    /// A closed subset that is a class of no congruence (verdict == no).
    std::optional<std::vector<Elem>> offender;
};

/// Tests every enumerated subuniverse with is_block_of_some_congruence.
/// A cap hit downgrades a positive answer to undetermined; a negative
/// answer stands as soon as one offender is found.
HamiltonianResult hamiltonian_oracle(const CayleyTable& t,
                                     const SubuniverseCaps& caps = {});

/// side == left:  u*b == u*c but v*b != v*c;
/// side == right: b*u == c*u but b*v != c*v.
struct StationarityWitness {
    enum class Side { left, right };
    Side side;
    Elem u, v, b, c;
};

/// A semigroup is stationary when equal translates stay equal: u*b == u*c
/// for one u forces v*b == v*c for every v, and dually. Requires an
/// associative table.
std::optional<StationarityWitness> stationarity_witness(const CayleyTable& t);
bool is_stationary(const CayleyTable& t);

/// a*u*b == c*u*d for one u but a*v*b != c*v*d for some v.
struct SandwichViolation {
    Elem a, b, c, d, u, v;
};

/// The middle factor of a sandwich product never matters to equality:
/// a*u*b == c*u*d for some u implies a*v*b == c*v*d for all v. Requires
/// an associative table.
std::optional<SandwichViolation> sandwich_violation(const CayleyTable& t);

/// Stationarity plus the sandwich implication; for semigroups this is
/// equivalent to being Abelian.
bool abelian_semigroup_criterion(const CayleyTable& t);

/// Least exponents 1 <= i < j with a^i == a^j (powers associate to the
/// left; minimal i first, then minimal j). Requires an associative table.
struct PeriodicityWitness {
    Elem element;
    int i, j;
};
PeriodicityWitness periodicity_witness(const CayleyTable& t, Elem a);

}  // namespace magma
