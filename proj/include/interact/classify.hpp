#pragma once

#include "interact/core.hpp"
#include "interact/relations.hpp"

#include <optional>
#include <string>
#include <vector>

namespace interact {

/// Largest kappa accepted by classify (|S| = kappa + 1 states).
inline constexpr int kMaxClassifyKappa = 4;

struct ClassRecord {
    CanonicalForm canonical;
    /// Completion of the canonical basis on states 0..kappa.
    Interaction representative;
    std::size_t dim = 0;
    bool separable = false;
    std::optional<std::string> name;
};

struct ClassCatalog {
    int kappa = 0;
    /// Sorted by dim descending, then canonical form ascending.
    std::vector<ClassRecord> classes;
};

/// All equivalence classes of interactions on {0..kappa}, found by merging
/// conserved fibers downward from the multi-species interaction.
/// Results are memoized; throws Error(resource) outside 1 <= kappa <= 4.
[[nodiscard]] const ClassCatalog& classify(int kappa, bool separable_only = false);

[[nodiscard]] std::vector<ClassRecord> classes_at_dim(int kappa, std::size_t dim);

/// The class of `inter` in the catalog for its state count.
[[nodiscard]] std::optional<ClassRecord> identify(const Interaction& inter);

} // namespace interact
