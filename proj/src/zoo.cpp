#include "interact/zoo.hpp"

#include "interact/algebra.hpp"
#include "interact/error.hpp"

#include <algorithm>

namespace interact::zoo {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw Error(ErrorKind::domain, what);
    }
}

Interaction relabel(const Interaction& inter, std::vector<std::string> labels) {
    return make_interaction(StateSet(std::move(labels)), inter.edges());
}

} // namespace

Interaction exclusion() {
    return make_interaction(StateSet::range(2), std::vector<Edge>{{{1, 0}, {0, 1}}});
}

Interaction k_exclusion(int kappa) {
    require(kappa >= 0, "k-exclusion needs kappa >= 0");
    const auto k = static_cast<std::size_t>(kappa);
    std::vector<Edge> edges;
    for (std::size_t j = 1; j <= k; ++j) {
        for (std::size_t m = 0; m < k; ++m) {
            edges.push_back({{j, m}, {j - 1, m + 1}});
        }
    }
    return make_interaction(StateSet::range(k + 1), edges);
}

Interaction multi_species(int kappa) {
    require(kappa >= 1, "multi-species needs kappa >= 1");
    const auto k = static_cast<std::size_t>(kappa);
    std::vector<Edge> edges;
    for (std::size_t j = 0; j <= k; ++j) {
        for (std::size_t m = 0; m <= k; ++m) {
            if (j != m) {
                edges.push_back({{j, m}, {m, j}});
            }
        }
    }
    return make_interaction(StateSet::range(k + 1), edges);
}

Interaction glauber() {
    // Single spin flips on {-1, 1}^2: index 0 is -1, index 1 is +1.
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            edges.push_back({{a, b}, {1 - a, b}});
            edges.push_back({{a, b}, {a, 1 - b}});
        }
    }
    return make_interaction(StateSet({"-1", "1"}), edges);
}

Interaction lge(int kappa) {
    require(kappa >= 2, "lge needs kappa >= 2");
    auto w = wedge({exclusion(), k_exclusion(kappa - 1), 1, 0});
    return relabel(w, StateSet::range(static_cast<std::size_t>(kappa) + 1).labels());
}

Interaction lge_explicit(int kappa) {
    require(kappa >= 2, "lge needs kappa >= 2");
    const auto k = static_cast<std::size_t>(kappa);
    std::vector<Edge> edges;
    // Energy hops between occupied sites.
    for (std::size_t j = 2; j <= k; ++j) {
        for (std::size_t m = 1; m < k; ++m) {
            edges.push_back({{j, m}, {j - 1, m + 1}});
        }
    }
    // Vacant and zero-energy states swap with everything.
    for (std::size_t j = 0; j <= 1; ++j) {
        for (std::size_t m = 0; m <= k; ++m) {
            if (j != m) {
                edges.push_back({{j, m}, {m, j}});
            }
        }
    }
    return make_interaction(StateSet::range(k + 1), edges);
}

namespace {

std::vector<std::string> tuple_labels(std::size_t kappa, std::size_t lanes) {
    std::vector<std::vector<std::size_t>> tuples{{}};
    for (std::size_t l = 0; l < lanes; ++l) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& t : tuples) {
            for (std::size_t m = 0; m <= kappa; ++m) {
                auto u = t;
                u.push_back(m);
                next.push_back(std::move(u));
            }
        }
        tuples = std::move(next);
    }
    std::vector<std::string> labels;
    for (const auto& t : tuples) {
        std::string s = "(";
        for (std::size_t i = 0; i < t.size(); ++i) {
            s += (i ? "," : "") + std::to_string(t[i]);
        }
        labels.push_back(s + ")");
    }
    return labels;
}

} // namespace

Interaction n_lane(int kappa, int lanes) {
    require(kappa >= 1 && lanes >= 1, "n-lane needs kappa >= 1 and N >= 1");
    auto acc = k_exclusion(kappa);
    for (int i = 1; i < lanes; ++i) {
        acc = box(acc, k_exclusion(kappa));
    }
    return relabel(acc, tuple_labels(static_cast<std::size_t>(kappa), static_cast<std::size_t>(lanes)));
}

Interaction n_lane_explicit(int kappa, int lanes) {
    require(kappa >= 1 && lanes >= 1, "n-lane needs kappa >= 1 and N >= 1");
    const auto k = static_cast<std::size_t>(kappa);
    const auto n = static_cast<std::size_t>(lanes);
    std::size_t states = 1;
    for (std::size_t i = 0; i < n; ++i) {
        states *= k + 1;
    }
    // Lane i has place value (k+1)^(n-1-i).
    std::vector<std::size_t> place(n, 1);
    for (std::size_t i = n - 1; i-- > 0;) {
        place[i] = place[i + 1] * (k + 1);
    }
    const auto digit = [&](std::size_t s, std::size_t lane) { return (s / place[lane]) % (k + 1); };
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < states; ++a) {
        for (std::size_t b = 0; b < states; ++b) {
            for (std::size_t lane = 0; lane < n; ++lane) {
                if (digit(a, lane) >= 1 && digit(b, lane) < k) {
                    edges.push_back({{a, b}, {a - place[lane], b + place[lane]}});
                }
            }
        }
    }
    return make_interaction(StateSet(tuple_labels(k, n)), edges);
}

Interaction two_species_annihilation() {
    // Indices: 0 = -1, 1 = 0, 2 = +1.
    const std::vector<Edge> edges{
        {{0, 1}, {1, 0}},
        {{2, 1}, {1, 2}},
        {{2, 0}, {1, 1}},
        {{1, 1}, {0, 2}},
    };
    return make_interaction(StateSet({"-1", "0", "+1"}), edges);
}

Interaction fig14() {
    // Separable and exchangeable with conserved xi(j) = j, but (2,2) is cut off
    // from (1,3) and (3,1), so equal totals are not always reachable.
    std::vector<Edge> edges = multi_species(3).edges();
    edges.push_back({{1, 1}, {0, 2}});
    edges.push_back({{1, 2}, {0, 3}});
    return make_interaction(StateSet::range(4), edges);
}

Interaction new_interaction() {
    std::vector<Edge> edges = lge(3).edges();
    edges.push_back({{1, 1}, {0, 3}});
    return make_interaction(StateSet::range(4), edges);
}

Interaction mips() {
    // Exclusion glued at its occupied state to the spin -1 of the Glauber interaction.
    auto w = wedge({exclusion(), glauber(), 1, 0});
    return relabel(w, {"0", "-", "+"});
}

Interaction complete(int kappa) {
    require(kappa >= 0, "complete needs kappa >= 0");
    const auto n = static_cast<std::size_t>(kappa) + 1;
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n * n; ++u) {
        for (std::size_t v = u + 1; v < n * n; ++v) {
            edges.push_back({{u / n, u % n}, {v / n, v % n}});
        }
    }
    return make_interaction(StateSet::range(n), edges);
}

Interaction singleton() {
    return make_interaction(StateSet::range(1), std::vector<Edge>{});
}

Interaction wedge_power_exclusion(int kappa) {
    require(kappa >= 1, "wedge power needs kappa >= 1");
    auto acc = exclusion();
    for (int i = 1; i < kappa; ++i) {
        acc = wedge({acc, exclusion(), 0, 0});
    }
    return acc;
}

namespace {

std::size_t as_size(int x) {
    return static_cast<std::size_t>(x);
}

std::vector<ZooEntry> make_entries() {
    const auto fixed = [](std::size_t d) { return [d](std::span<const int>) { return d; }; };
    const auto flag = [](bool b) { return [b](std::span<const int>) { return b; }; };
    std::vector<ZooEntry> out;
    out.push_back({"exclusion", 0, "", "simple exclusion on {0,1}",
                   [](std::span<const int>) { return exclusion(); }, fixed(1), flag(true), {{}}});
    out.push_back({"k-exclusion", 1, "kappa", "generalized exclusion with maximal occupancy kappa",
                   [](std::span<const int> p) { return k_exclusion(p[0]); }, fixed(1), flag(true),
                   {{1}, {2}, {3}, {4}}});
    out.push_back({"multi-species", 1, "kappa", "multi-species exclusion: every (j,k) swaps to (k,j)",
                   [](std::span<const int> p) { return multi_species(p[0]); },
                   [](std::span<const int> p) { return as_size(p[0]); }, flag(true), {{1}, {2}, {3}, {4}}});
    out.push_back({"glauber", 0, "", "single spin flips on {-1,1}",
                   [](std::span<const int>) { return glauber(); }, fixed(0), flag(false), {{}}});
    out.push_back({"lge", 1, "kappa", "lattice gas with energy: exclusion v (kappa-1)-exclusion",
                   [](std::span<const int> p) { return lge(p[0]); }, fixed(2), flag(true), {{2}, {3}, {4}}});
    out.push_back({"n-lane", 2, "kappa,N", "N-lane kappa-exclusion (N-fold box product)",
                   [](std::span<const int> p) { return n_lane(p[0], p[1]); },
                   [](std::span<const int> p) { return as_size(p[1]); }, flag(true), {{1, 1}, {1, 2}, {2, 1}}});
    out.push_back({"two-species-annihilation", 0, "", "two species with annihilation and creation on {-1,0,+1}",
                   [](std::span<const int>) { return two_species_annihilation(); }, fixed(1), flag(true), {{}}});
    out.push_back({"fig14", 0, "", "separable, exchangeable, equivalent to 3-exclusion, not irreducibly quantified",
                   [](std::span<const int>) { return fig14(); }, fixed(1), flag(true), {{}}});
    out.push_back({"new-interaction", 0, "", "3-lge plus (1,1) <-> (0,3); conserves 2xi^1+3xi^2+4xi^3",
                   [](std::span<const int>) { return new_interaction(); }, fixed(1), flag(true), {{}}});
    out.push_back({"mips", 0, "", "exclusion v glauber (motility-induced phase separation)",
                   [](std::span<const int>) { return mips(); }, fixed(1), flag(false), {{}}});
    out.push_back({"complete", 1, "kappa", "complete graph on S x S",
                   [](std::span<const int> p) { return complete(p[0]); }, fixed(0),
                   [](std::span<const int> p) { return p[0] == 0; }, {{1}, {2}, {3}}});
    out.push_back({"singleton", 0, "", "the interaction on one state",
                   [](std::span<const int>) { return singleton(); }, fixed(0), flag(true), {{}}});
    return out;
}

} // namespace

const std::vector<ZooEntry>& entries() {
    static const std::vector<ZooEntry> all = make_entries();
    return all;
}

const ZooEntry& entry(std::string_view name) {
    for (const auto& e : entries()) {
        if (e.name == name) {
            return e;
        }
    }
    throw Error(ErrorKind::domain, "unknown zoo interaction '" + std::string(name) + "'");
}

Interaction build(std::string_view name, std::span<const int> params) {
    const auto& e = entry(name);
    if (params.size() != e.arity) {
        throw Error(ErrorKind::domain, "zoo interaction '" + e.name + "' takes " + std::to_string(e.arity) +
                                           " parameter(s), got " + std::to_string(params.size()));
    }
    return e.builder(params);
}

std::string display_name(std::string_view name, std::span<const int> params) {
    const auto p = [&](std::size_t i) { return std::to_string(params[i]); };
    if (name == "k-exclusion" && params.size() == 1) {
        return params[0] == 1 ? "exclusion" : p(0) + "-exclusion";
    }
    if (name == "multi-species" && params.size() == 1) {
        return params[0] == 1 ? "exclusion" : "multi-species-" + p(0);
    }
    if (name == "lge" && params.size() == 1) {
        return p(0) + "-lge";
    }
    if (name == "n-lane" && params.size() == 2) {
        return p(1) + "-lane-" + p(0) + "-exclusion";
    }
    if (name == "complete" && params.size() == 1) {
        return "complete";
    }
    return std::string(name);
}

std::vector<Named> named_of_size(std::size_t states) {
    std::vector<Named> out;
    const int kappa = static_cast<int>(states) - 1;
    const auto add = [&](std::string_view name, std::vector<int> params) {
        out.push_back({display_name(name, params), build(name, params)});
    };
    if (states == 2) {
        add("exclusion", {});
        add("glauber", {});
    }
    if (kappa >= 2) {
        add("multi-species", {kappa});
        add("k-exclusion", {kappa});
    }
    if (kappa >= 3) {
        add("lge", {kappa});
    }
    for (int lanes = 2; lanes <= 3; ++lanes) {
        for (int k = 1; k <= 2; ++k) {
            std::size_t size = 1;
            for (int i = 0; i < lanes; ++i) {
                size *= static_cast<std::size_t>(k + 1);
            }
            if (size == states) {
                add("n-lane", {k, lanes});
            }
        }
    }
    if (states == 4) {
        add("new-interaction", {});
    }
    if (states == 3) {
        add("mips", {});
    }
    if (kappa >= 1) {
        add("complete", {kappa});
    }
    return out;
}

} // namespace interact::zoo
