#pragma once

#include "interact/core.hpp"
#include "interact/linalg.hpp"

#include <span>

namespace interact {

/// Basis of the conserved quantities of an interaction modulo constants.
///
/// Every vector is normalized by xi(state 0) = 0, which picks one representative
/// per class modulo constant functions. The vectors are in reduced row echelon
/// form, so two interactions have the same conserved space iff their bases
/// compare equal.
struct ConservedBasis {
    StateSet states;
    RationalMatrix vectors;

    [[nodiscard]] std::size_t dim() const noexcept { return vectors.size(); }

    /// Pivot column of each row (ascending, never 0).
    [[nodiscard]] std::vector<std::size_t> pivots() const;

    bool operator==(const ConservedBasis&) const = default;
};

/// Solves xi(s1) + xi(s2) = xi(s1') + xi(s2') over every edge, together with
/// xi(0) = 0, in exact rational arithmetic.
[[nodiscard]] ConservedBasis compute_consv(const Interaction& inter);

/// xi(s1) + xi(s2).
[[nodiscard]] Rational pair_sum(std::span<const Rational> xi, Vertex v);

/// Sum of xi over the sites of a configuration.
[[nodiscard]] Rational config_sum(std::span<const Rational> xi, std::span<const std::size_t> eta);

/// True iff xi satisfies the conservation law on every edge.
[[nodiscard]] bool is_conserved(const Interaction& inter, std::span<const Rational> xi);

/// Conserved values of a vertex: (pair_sum(b, v) for each basis vector b).
[[nodiscard]] RationalVector conserved_values(const ConservedBasis& basis, Vertex v);

} // namespace interact
