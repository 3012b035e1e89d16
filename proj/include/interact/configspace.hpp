#pragma once

#include "interact/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace interact {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;
inline constexpr std::string_view kDefaultFamily = "paths:2..5,cycles:3..4";

/// Finite symmetric directed graph (X, E) of sites.
class SiteGraph {
public:
    /// Symmetric closure of `edges`; throws Error(domain) on an out-of-range site or a loop.
    SiteGraph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges, std::string name = {});

    static SiteGraph path(std::size_t n);     // n >= 1; path(1) is a single site
    static SiteGraph cycle(std::size_t n);    // n >= 3
    static SiteGraph star(std::size_t n);     // n >= 1 sites, centre 0
    static SiteGraph complete(std::size_t n); // n >= 1

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    /// Directed edges, both orientations, sorted.
    [[nodiscard]] const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
    [[nodiscard]] bool connected() const noexcept { return connected_; }
    [[nodiscard]] const std::string& name() const noexcept { return name_; }

private:
    std::size_t n_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    bool connected_ = false;
    std::string name_;
};

/// eta in S^X: one state index per site.
struct Configuration {
    std::vector<std::size_t> values;

    auto operator<=>(const Configuration&) const = default;
};

[[nodiscard]] std::string to_string(const Configuration& eta);

struct ConfigSpaceAnalysis {
    Interaction interaction;
    SiteGraph site_graph;
    /// Configurations are numbered lexicographically, site 0 most significant.
    std::size_t config_count = 0;
    /// Partitions of the configurations, cells numbered by their least configuration.
    std::vector<std::size_t> component_of;
    std::size_t component_count = 0;
    std::vector<std::size_t> fiber_of;
    std::size_t fiber_count = 0;
    bool match = false;
    /// Lexicographically least (eta, eta') with eta < eta', equal conserved sums, different components.
    std::optional<std::pair<Configuration, Configuration>> witness;

    [[nodiscard]] Configuration configuration(std::size_t index) const;
};

/// Builds (S^X, Phi_E) exhaustively. Throws Error(domain) if g is disconnected and
/// Error(resource) if |S|^|X| exceeds `budget`.
[[nodiscard]] ConfigSpaceAnalysis analyze_config_space(const Interaction& inter, const SiteGraph& g,
                                                       std::uint64_t budget = kDefaultBudget);

/// Parses e.g. "paths:2..5,cycles:3..4,stars:3..4,complete:3".
[[nodiscard]] std::vector<SiteGraph> parse_family(std::string_view spec);

struct IqGraphResult {
    std::string graph;
    std::size_t config_count = 0;
    std::size_t component_count = 0;
    std::size_t fiber_count = 0;
    bool match = false;
};

/// PASS only certifies the listed graphs; FAIL is a genuine counterexample.
struct IqReport {
    bool pass = true;
    std::vector<IqGraphResult> graphs;
    std::optional<std::string> witness_graph;
    std::optional<std::pair<Configuration, Configuration>> witness;
};

/// Runs analyze_config_space over the family in order and stops at the first mismatch.
[[nodiscard]] IqReport check_iq_bounded(const Interaction& inter, const std::vector<SiteGraph>& family,
                                        std::uint64_t budget = kDefaultBudget);

/// eta^sigma with eta^sigma_z = eta_{sigma(z)}. Throws Error(domain) unless sigma is a bijection.
[[nodiscard]] Configuration shuffle(const Configuration& eta, const std::vector<std::size_t>& sigma);

/// The two necessary conditions for irreducible quantification read off the
/// one-site and two-site graphs.
struct DerivedChecks {
    bool separable = false;
    bool exchangeable = false;

    [[nodiscard]] bool passed() const noexcept { return separable && exchangeable; }
};

[[nodiscard]] DerivedChecks derived_checks(const Interaction& inter);

} // namespace interact
