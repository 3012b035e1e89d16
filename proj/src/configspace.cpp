#include "interact/configspace.hpp"

#include "interact/consv.hpp"
#include "interact/error.hpp"
#include "interact/relations.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace interact {

SiteGraph::SiteGraph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges, std::string name)
    : n_(n), name_(std::move(name)) {
    if (n == 0) {
        throw Error(ErrorKind::domain, "site graph needs at least one site");
    }
    DisjointSets sets(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw Error(ErrorKind::domain, "site edge (" + std::to_string(u) + "," + std::to_string(v) +
                                               ") out of range for " + std::to_string(n) + " sites");
        }
        if (u == v) {
            throw Error(ErrorKind::domain, "site edge (" + std::to_string(u) + "," + std::to_string(v) + ") is a loop");
        }
        edges_.emplace_back(u, v);
        edges_.emplace_back(v, u);
        sets.unite(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    connected_ = true;
    for (std::size_t x = 0; x < n; ++x) {
        connected_ = connected_ && sets.find(x) == 0;
    }
    if (name_.empty()) {
        name_ = "graph(" + std::to_string(n) + ")";
    }
}

namespace {

void require_sites(std::size_t n, std::size_t min, const char* kind) {
    if (n < min) {
        throw Error(ErrorKind::domain, std::string(kind) + " needs at least " + std::to_string(min) + " sites");
    }
}

std::string named(const char* kind, std::size_t n) {
    return std::string(kind) + "(" + std::to_string(n) + ")";
}

} // namespace

SiteGraph SiteGraph::path(std::size_t n) {
    require_sites(n, 1, "path");
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t x = 0; x + 1 < n; ++x) {
        e.emplace_back(x, x + 1);
    }
    return SiteGraph(n, std::move(e), named("path", n));
}

SiteGraph SiteGraph::cycle(std::size_t n) {
    require_sites(n, 3, "cycle");
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t x = 0; x < n; ++x) {
        e.emplace_back(x, (x + 1) % n);
    }
    return SiteGraph(n, std::move(e), named("cycle", n));
}

SiteGraph SiteGraph::star(std::size_t n) {
    require_sites(n, 1, "star");
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t x = 1; x < n; ++x) {
        e.emplace_back(0, x);
    }
    return SiteGraph(n, std::move(e), named("star", n));
}

SiteGraph SiteGraph::complete(std::size_t n) {
    require_sites(n, 1, "complete graph");
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            e.emplace_back(x, y);
        }
    }
    return SiteGraph(n, std::move(e), named("complete", n));
}

std::string to_string(const Configuration& eta) {
    std::string s = "(";
    for (std::size_t i = 0; i < eta.values.size(); ++i) {
        s += (i ? "," : "") + std::to_string(eta.values[i]);
    }
    return s + ")";
}

Configuration ConfigSpaceAnalysis::configuration(std::size_t index) const {
    const std::size_t q = interaction.size();
    Configuration eta{std::vector<std::size_t>(site_graph.size())};
    for (std::size_t x = site_graph.size(); x-- > 0;) {
        eta.values[x] = index % q;
        index /= q;
    }
    return eta;
}

ConfigSpaceAnalysis analyze_config_space(const Interaction& inter, const SiteGraph& g, std::uint64_t budget) {
    if (!g.connected()) {
        throw Error(ErrorKind::domain, "site graph " + g.name() + " is not connected");
    }
    const std::size_t q = inter.size();
    const std::size_t n = g.size();
    std::uint64_t count = 1;
    for (std::size_t x = 0; x < n; ++x) {
        if (count > budget / q) {
            throw Error(ErrorKind::resource, "configuration space " + std::to_string(q) + "^" + std::to_string(n) +
                                                 " on " + g.name() + " exceeds budget " + std::to_string(budget));
        }
        count *= q;
    }
    if (count > budget) {
        throw Error(ErrorKind::resource, "configuration space exceeds budget " + std::to_string(budget));
    }

    ConfigSpaceAnalysis out{inter, g, 0, {}, 0, {}, 0, false, std::nullopt};
    out.config_count = static_cast<std::size_t>(count);
    std::vector<std::size_t> place(n, 1);
    for (std::size_t x = n - 1; x-- > 0;) {
        place[x] = place[x + 1] * q;
    }
    const auto digit = [&](std::size_t idx, std::size_t x) { return (idx / place[x]) % q; };

    DisjointSets sets(out.config_count);
    for (std::size_t idx = 0; idx < out.config_count; ++idx) {
        for (const auto& [u, v] : g.edges()) {
            const std::size_t a = digit(idx, u);
            const std::size_t b = digit(idx, v);
            const std::size_t base = idx - a * place[u] - b * place[v];
            for (std::size_t w : inter.neighbors(inter.index({a, b}))) {
                const Vertex to = inter.vertex(w);
                sets.unite(idx, base + to.first * place[u] + to.second * place[v]);
            }
        }
    }
    out.component_of.resize(out.config_count);
    std::vector<std::size_t> root_cell(out.config_count, SIZE_MAX);
    for (std::size_t idx = 0; idx < out.config_count; ++idx) {
        auto& cell = root_cell[sets.find(idx)];
        if (cell == SIZE_MAX) {
            cell = out.component_count++;
        }
        out.component_of[idx] = cell;
    }

    // Fibers of the conserved sums, with each basis vector scaled to integers.
    const auto basis = compute_consv(inter);
    const auto rows = integer_rows(basis.vectors);
    std::vector<std::vector<long>> xi(rows.size(), std::vector<long>(q));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t s = 0; s < q; ++s) {
            xi[r][s] = rows[r][s].get_si();
        }
    }
    std::map<std::vector<long>, std::size_t> fiber_ids;
    std::vector<long> key(rows.size());
    out.fiber_of.resize(out.config_count);
    for (std::size_t idx = 0; idx < out.config_count; ++idx) {
        std::fill(key.begin(), key.end(), 0);
        for (std::size_t x = 0; x < n; ++x) {
            const std::size_t s = digit(idx, x);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                key[r] += xi[r][s];
            }
        }
        const auto [it, inserted] = fiber_ids.emplace(key, fiber_ids.size());
        out.fiber_of[idx] = it->second;
    }
    out.fiber_count = fiber_ids.size();
    out.match = out.component_count == out.fiber_count;

    if (!out.match) {
        std::vector<std::vector<std::size_t>> members(out.fiber_count);
        for (std::size_t idx = 0; idx < out.config_count; ++idx) {
            members[out.fiber_of[idx]].push_back(idx);
        }
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (const auto& m : members) {
            // uniform[i]: the common component of m[i..], or SIZE_MAX if they differ.
            std::vector<std::size_t> uniform(m.size() + 1, SIZE_MAX);
            for (std::size_t i = m.size(); i-- > 0;) {
                const std::size_t c = out.component_of[m[i]];
                uniform[i] = (i + 1 == m.size() || uniform[i + 1] == c) ? c : SIZE_MAX;
            }
            for (std::size_t i = 0; i + 1 < m.size(); ++i) {
                const std::size_t c = out.component_of[m[i]];
                if (uniform[i + 1] == c) {
                    continue;
                }
                std::size_t j = i + 1;
                while (out.component_of[m[j]] == c) {
                    ++j;
                }
                if (!best || std::pair(m[i], m[j]) < *best) {
                    best = std::pair(m[i], m[j]);
                }
                break;
            }
        }
        out.witness = std::pair(out.configuration(best->first), out.configuration(best->second));
    }
    return out;
}

namespace {

std::size_t parse_count(std::string_view text, std::string_view item) {
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw Error(ErrorKind::domain, "bad graph family item '" + std::string(item) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
    }
    while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

std::vector<SiteGraph> parse_family(std::string_view spec) {
    std::vector<SiteGraph> out;
    while (!spec.empty()) {
        const auto comma = spec.find(',');
        const auto item = trim(spec.substr(0, comma));
        spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw Error(ErrorKind::domain, "bad graph family item '" + std::string(item) + "' (expected kind:range)");
        }
        const auto kind = item.substr(0, colon);
        const auto range = item.substr(colon + 1);
        const auto dots = range.find("..");
        const std::size_t lo = parse_count(range.substr(0, dots), item);
        const std::size_t hi = dots == std::string_view::npos ? lo : parse_count(range.substr(dots + 2), item);
        if (lo > hi) {
            throw Error(ErrorKind::domain, "empty range in graph family item '" + std::string(item) + "'");
        }
        for (std::size_t n = lo; n <= hi; ++n) {
            if (kind == "paths" || kind == "path") {
                out.push_back(SiteGraph::path(n));
            } else if (kind == "cycles" || kind == "cycle") {
                out.push_back(SiteGraph::cycle(n));
            } else if (kind == "stars" || kind == "star") {
                out.push_back(SiteGraph::star(n));
            } else if (kind == "complete") {
                out.push_back(SiteGraph::complete(n));
            } else {
                throw Error(ErrorKind::domain, "unknown graph kind '" + std::string(kind) + "'");
            }
        }
    }
    if (out.empty()) {
        throw Error(ErrorKind::domain, "empty graph family");
    }
    return out;
}

IqReport check_iq_bounded(const Interaction& inter, const std::vector<SiteGraph>& family, std::uint64_t budget) {
    IqReport report;
    for (const auto& g : family) {
        const auto a = analyze_config_space(inter, g, budget);
        report.graphs.push_back({g.name(), a.config_count, a.component_count, a.fiber_count, a.match});
        if (!a.match) {
            report.pass = false;
            report.witness_graph = g.name();
            report.witness = a.witness;
            break;
        }
    }
    return report;
}

Configuration shuffle(const Configuration& eta, const std::vector<std::size_t>& sigma) {
    const std::size_t n = eta.values.size();
    if (sigma.size() != n) {
        throw Error(ErrorKind::domain, "site permutation has the wrong length");
    }
    std::vector<bool> seen(n, false);
    for (auto z : sigma) {
        if (z >= n || seen[z]) {
            throw Error(ErrorKind::domain, "site permutation is not a bijection");
        }
        seen[z] = true;
    }
    Configuration out{std::vector<std::size_t>(n)};
    for (std::size_t z = 0; z < n; ++z) {
        out.values[z] = eta.values[sigma[z]];
    }
    return out;
}

DerivedChecks derived_checks(const Interaction& inter) {
    return {is_separable(inter), is_exchangeable(inter)};
}

} // namespace interact
