#pragma once

#include "interact/consv.hpp"
#include "interact/core.hpp"

namespace interact {

/// The largest interaction with the same conserved quantities: every pair of
/// vertices with equal conserved values is joined, self-loops included. Its
/// component cells are exactly the fibers of the conserved-value map.
[[nodiscard]] Interaction completion(const Interaction& inter);

/// Completion built directly from a basis of conserved quantities.
[[nodiscard]] Interaction completion_of_basis(const ConservedBasis& basis);

/// phi plus the edge s <-> t. Requires some conserved quantity to separate s and t,
/// so the conserved dimension drops by exactly one; throws Error(domain) otherwise.
[[nodiscard]] Interaction merge(const Interaction& inter, Vertex s, Vertex t);

struct WedgeSpec {
    Interaction left;
    Interaction right;
    std::size_t base_left = 0;
    std::size_t base_right = 0;
};

/// Wedge sum glued at base_left ~ base_right.
///
/// Index layout: the left states keep their indices (the glued state sits at
/// base_left); the right states other than base_right follow in order. Edges are
/// phi_left, phi_right re-indexed, and every swap (s,s') <-> (s',s) with s in the
/// left block and s' != s in the right block.
[[nodiscard]] Interaction wedge(const WedgeSpec& spec);

/// Index of right-hand state `s` inside wedge(spec).
[[nodiscard]] std::size_t wedge_right_index(const WedgeSpec& spec, std::size_t s);

/// Box product on S1 x S2, state (i, j) at index i * |S2| + j. One factor moves
/// along its own interaction while the other factor's pair stays fixed.
[[nodiscard]] Interaction box(const Interaction& left, const Interaction& right);

} // namespace interact
