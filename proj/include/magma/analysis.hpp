#pragma once

/// End-to-end analysis of one table: classification, Abelian and
/// Hamiltonian verdicts along every applicable route, structural
/// payloads, and the JSON report the command-line tool prints.

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "magma/cayley_table.hpp"
#include "magma/congruence.hpp"
#include "magma/verdict.hpp"

namespace magma {

/// Fast Abelian decision for groupoids with an identity element: Abelian
/// means associative, commutative, and uniquely divisible (at finite
/// order, a commutative group). Requires identity_of(t) to exist.
struct IdentityGroupoidResult {
    bool abelian = false;
    std::string detail;  ///< which predicate failed, with a witness
};
IdentityGroupoidResult identity_groupoid_abelian_fast(const CayleyTable& t);

struct AnalysisOptions {
    bool fast_only = false;    ///< skip the oracles
    bool oracle_only = false;  ///< skip the structural fast routes
    std::optional<Elem> base;  ///< base point for quasigroup analysis
    SubuniverseCaps caps;      ///< Hamiltonian oracle caps
    std::uint64_t seed = 0;    ///< term-witness search seed
    /// Attach a searched term-condition witness to negative Abelian
    /// verdicts (small orders only).
    bool attach_tc_witness = true;
    /// Include the structural payload in the report.
    bool include_structure = true;
};

struct Analysis {
    ClassificationReport classification;
    Truth abelian = Truth::undetermined;
    Route abelian_route = Route::none;
    Truth hamiltonian = Truth::undetermined;
    Route hamiltonian_route = Route::none;
    /// False when two determinate routes disagreed; the report then
    /// carries the conflicting verdicts.
    bool consistent = true;
    nlohmann::json report;
};

/// Runs every applicable route: the structural fast path for the table's
/// class, the sandwich criterion for semigroups, and the ground-truth
/// oracles; verdicts are cross-checked.
Analysis analyze(const CayleyTable& t, const AnalysisOptions& opts = {});

/// 0 normally, 2 when routes disagreed (input errors are the caller's 1).
int exit_code(const Analysis& a);

/// Human-readable rendering of an analysis report.
std::string render_text(const Analysis& a);

/// Structural payload: "quasigroup" (derived loop), "semigroup"
/// (relations, band, inflation, factorization), or "auto" (semigroup when
/// associative, else quasigroup). Throws std::invalid_argument when the
/// table fits no requested class.
nlohmann::json decomposition_report(const CayleyTable& t, const std::string& as,
                                    std::optional<Elem> base = {});
std::string render_decomposition_text(const nlohmann::json& payload);

/// 64-bit FNV-1a of the canonical serialization, as 16 hex digits.
std::string table_digest(const CayleyTable& t);

}  // namespace magma
