#pragma once
#include <optional>
#include <string>
#include <vector>

#include "superym/assoc_model.hpp"
#include "superym/presentation.hpp"

namespace sym {

// Cyclic derivatives of W against build_relations, generator by generator.
struct SuperpotentialReport {
    std::vector<bool> matches;
    bool ok() const;
};
SuperpotentialReport superpotential_check(const SymPresentation& p);

struct SusyReport {
    bool quartic_zero = false;
    bool equivariant = false;
    // in_ideal[c][g]: cyclic derivative of d_c(W) along generator g lies in <R>.
    std::vector<std::vector<bool>> in_ideal;
    bool all_in_ideal() const;
    // The criterion: derivations preserve <R> exactly when the quartic form vanishes.
    bool consistent() const { return all_in_ideal() == quartic_zero; }
};
SusyReport susy_check(const SymPresentation& p, const std::optional<std::vector<Matrix>>& tilde_override = std::nullopt);

struct SemidirectReport {
    bool d_preserves_relation = false;   // d(h relation) in the ideal of TV(h)
    bool relation_maps_to_ideal = false; // psi^-1(h relation) = -r_{0,1}
    bool intertwines = false;            // psi^-1 d - [x1, psi^-1] vanishes modulo <R> on generators
    int max_weight = 0;
    bool ok() const { return d_preserves_relation && relation_maps_to_ideal && intertwines; }
};
SemidirectReport semidirect_check(const SymPresentation& p, int max_weight = 10);

}  // namespace sym
