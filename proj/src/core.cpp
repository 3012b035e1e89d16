#include "interact/core.hpp"

#include "interact/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace interact {

StateSet::StateSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw Error(ErrorKind::domain, "state set must not be empty");
    }
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second) {
            throw Error(ErrorKind::domain, "duplicate state label '" + l + "'");
        }
    }
}

StateSet StateSet::range(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
    }
    return StateSet(std::move(labels));
}

std::optional<std::size_t> StateSet::index_of(const std::string& label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

std::string to_string(Vertex v) {
    return "(" + std::to_string(v.first) + "," + std::to_string(v.second) + ")";
}

Interaction::Interaction(StateSet states, std::vector<Edge> edges)
    : states_(std::move(states)), edges_(std::move(edges)) {
    const std::size_t nv = vertex_count();
    offsets_.assign(nv + 1, 0);
    for (const auto& e : edges_) {
        ++offsets_[index(e.from) + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    targets_.reserve(edges_.size());
    // edges_ is sorted by (from, to), so targets come out grouped and ascending.
    for (const auto& e : edges_) {
        targets_.push_back(index(e.to));
    }
}

bool Interaction::has_edge(Vertex from, Vertex to) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{from, to});
}

std::span<const std::size_t> Interaction::neighbors(std::size_t vertex_index) const {
    return std::span<const std::size_t>(targets_).subspan(
        offsets_.at(vertex_index), offsets_.at(vertex_index + 1) - offsets_.at(vertex_index));
}

Interaction make_interaction(StateSet states, std::span<const Edge> raw_edges) {
    const std::size_t n = states.size();
    std::vector<Edge> edges;
    edges.reserve(raw_edges.size() * 2);
    for (const auto& e : raw_edges) {
        if (e.from.first >= n || e.from.second >= n || e.to.first >= n || e.to.second >= n) {
            throw Error(ErrorKind::domain, "edge " + to_string(e.from) + "->" + to_string(e.to) +
                                               " has a state index out of range for " +
                                               std::to_string(n) + " states");
        }
        edges.push_back(e);
        edges.push_back({e.to, e.from});
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Interaction(std::move(states), std::move(edges));
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

void DisjointSets::unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
        return;
    }
    if (b < a) {
        std::swap(a, b);
    }
    parent_[b] = a;
}

ComponentPartition::ComponentPartition(std::size_t state_count, std::vector<std::size_t> cell_of)
    : n_(state_count), cell_of_(std::move(cell_of)) {
    std::size_t cells = 0;
    for (auto c : cell_of_) {
        cells = std::max(cells, c + 1);
    }
    cells_.resize(cells);
    for (std::size_t i = 0; i < cell_of_.size(); ++i) {
        cells_[cell_of_[i]].push_back({i / n_, i % n_});
    }
}

ComponentPartition components(const Interaction& inter) {
    const std::size_t nv = inter.vertex_count();
    DisjointSets sets(nv);
    for (const auto& e : inter.edges()) {
        sets.unite(inter.index(e.from), inter.index(e.to));
    }
    // Roots are least members, so scanning in vertex order numbers cells by least vertex.
    std::vector<std::size_t> cell_of(nv);
    std::vector<std::size_t> number(nv, nv);
    std::size_t next = 0;
    for (std::size_t v = 0; v < nv; ++v) {
        const auto r = sets.find(v);
        if (number[r] == nv) {
            number[r] = next++;
        }
        cell_of[v] = number[r];
    }
    return ComponentPartition(inter.size(), std::move(cell_of));
}

bool same_component(const Interaction& inter, Vertex s, Vertex t) {
    const auto n = inter.size();
    if (s.first >= n || s.second >= n || t.first >= n || t.second >= n) {
        throw Error(ErrorKind::domain, "vertex out of range");
    }
    if (s == t) {
        return true;
    }
    const auto parts = components(inter);
    return parts.cell_of(s) == parts.cell_of(t);
}

} // namespace interact
