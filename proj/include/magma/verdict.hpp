#pragma once

#include <optional>
#include <vector>

namespace magma {

/// Three-valued answer for deciders that may hit search caps. An
/// `undetermined` result means the search was cut off, never that the
/// property failed.
enum class Truth { yes, no, undetermined };

inline const char* to_string(Truth t) {
    switch (t) {
        case Truth::yes: return "true";
        case Truth::no: return "false";
        default: return "undetermined";
    }
}

/// Which decision path produced a verdict.
enum class Route {
    none,
    oracle,                ///< ground-truth decider
    identity_theorem,      ///< structure theorem for groupoids with identity
    quasigroup_theorem,    ///< derived-loop criterion for quasigroups
    semigroup_theorem,     ///< inflation-of-rectangular-band criterion
    semigroup_criterion,   ///< stationarity + sandwich implication
};

inline const char* to_string(Route r) {
    switch (r) {
        case Route::oracle: return "oracle";
        case Route::identity_theorem: return "identity-theorem";
        case Route::quasigroup_theorem: return "quasigroup-theorem";
        case Route::semigroup_theorem: return "semigroup-theorem";
        case Route::semigroup_criterion: return "semigroup-criterion";
        default: return "none";
    }
}

/// A verdict together with the route that produced it. `offender` is the
/// failing subuniverse for negative Hamiltonian verdicts.
struct RoutedVerdict {
    Truth verdict = Truth::undetermined;
    Route route = Route::none;
    std::optional<std::vector<int>> offender;
};

}  // namespace magma
