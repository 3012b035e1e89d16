#pragma once

#include "interact/configspace.hpp"
#include "interact/core.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testing_support {

/// Seed for randomized tests; fixed by default, overridable with --seed=N.
std::uint64_t seed();
void set_seed(std::uint64_t s);

/// Random interaction on n states with up to `max_pairs` random vertex pairs joined.
interact::Interaction random_interaction(std::mt19937_64& rng, std::size_t n, std::size_t max_pairs);

/// Random connected site graph on n sites: a random tree plus a few extra edges.
interact::SiteGraph random_connected_graph(std::mt19937_64& rng, std::size_t n);

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
std::size_t bareiss_rank(std::vector<std::vector<long long>> m);

/// Conserved dimension from one constraint row per edge plus xi(0) = 0, via bareiss_rank.
std::size_t oracle_consv_dim(const interact::Interaction& inter);

/// Connected components of (S x S, phi) by plain depth-first search; returns a
/// label per vertex index (labels are the least vertex index of the component).
std::vector<std::size_t> oracle_components(const interact::Interaction& inter);

/// Edge multiset comparison under sigma, coded without Interaction::has_edge.
bool oracle_is_isomorphism(const interact::Interaction& a, const interact::Interaction& b,
                           const std::vector<std::size_t>& sigma);

/// All states reachable from eta in (S^X, Phi_E) by explicit breadth-first search.
std::vector<std::vector<std::size_t>> oracle_reachable(const interact::Interaction& inter,
                                                       const interact::SiteGraph& g,
                                                       const std::vector<std::size_t>& eta);

} // namespace testing_support
