#pragma once

#include "interact/core.hpp"

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace interact::zoo {

// Direct constructors. Parametrized ones throw Error(domain) on out-of-range parameters.
[[nodiscard]] Interaction exclusion();
[[nodiscard]] Interaction k_exclusion(int kappa);
[[nodiscard]] Interaction multi_species(int kappa);
[[nodiscard]] Interaction glauber();
/// Lattice gas with energy, built as exclusion v (kappa-1)-exclusion glued at 1 ~ 0.
[[nodiscard]] Interaction lge(int kappa);
/// Same interaction from its explicit move rules.
[[nodiscard]] Interaction lge_explicit(int kappa);
/// N-fold box product of the kappa-exclusion; states are occupation tuples, row-major.
[[nodiscard]] Interaction n_lane(int kappa, int lanes);
[[nodiscard]] Interaction n_lane_explicit(int kappa, int lanes);
[[nodiscard]] Interaction two_species_annihilation();
[[nodiscard]] Interaction fig14();
[[nodiscard]] Interaction new_interaction();
[[nodiscard]] Interaction mips();
[[nodiscard]] Interaction complete(int kappa);
[[nodiscard]] Interaction singleton();
/// kappa-fold wedge of the exclusion interaction along 0.
[[nodiscard]] Interaction wedge_power_exclusion(int kappa);

struct ZooEntry {
    std::string name;
    std::size_t arity = 0;
    std::string params_help;
    std::string summary;
    std::function<Interaction(std::span<const int>)> builder;
    std::function<std::size_t(std::span<const int>)> expected_dim;
    std::function<bool(std::span<const int>)> expected_separable;
    /// Parameter tuples exercised by the zoo-wide audits (|S| <= 5).
    std::vector<std::vector<int>> samples;
};

[[nodiscard]] const std::vector<ZooEntry>& entries();

/// Throws Error(domain) for an unknown name or a wrong parameter count.
[[nodiscard]] const ZooEntry& entry(std::string_view name);

[[nodiscard]] Interaction build(std::string_view name, std::span<const int> params = {});

/// Human-facing class label, e.g. "2-exclusion", "multi-species-3", "2-lane-1-exclusion".
[[nodiscard]] std::string display_name(std::string_view name, std::span<const int> params = {});

/// Named interactions used to label classification classes, in priority order.
struct Named {
    std::string label;
    Interaction interaction;
};
[[nodiscard]] std::vector<Named> named_of_size(std::size_t states);

} // namespace interact::zoo
