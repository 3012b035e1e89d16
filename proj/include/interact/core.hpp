#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace interact {

/// Ordered, duplicate-free list of local-state names. The position of a label is
/// its index everywhere else in the library; labels are presentation only.
class StateSet {
public:
    explicit StateSet(std::vector<std::string> labels);

    /// {"0", "1", ..., "n-1"}
    static StateSet range(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
    [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
    [[nodiscard]] std::optional<std::size_t> index_of(const std::string& label) const;

    bool operator==(const StateSet&) const = default;

private:
    std::vector<std::string> labels_;
};

/// A vertex of S x S, i.e. the pair of states on the two ends of a site edge.
struct Vertex {
    std::size_t first = 0;
    std::size_t second = 0;

    auto operator<=>(const Vertex&) const = default;
};

struct Edge {
    Vertex from;
    Vertex to;

    auto operator<=>(const Edge&) const = default;
};

/// A symmetric directed graph on S x S. Construct through make_interaction.
class Interaction {
public:
    [[nodiscard]] const StateSet& states() const noexcept { return states_; }
    [[nodiscard]] std::size_t size() const noexcept { return states_.size(); }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return size() * size(); }

    /// Sorted lexicographically; closed under reversal.
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }

    [[nodiscard]] std::size_t index(Vertex v) const noexcept { return v.first * size() + v.second; }
    [[nodiscard]] Vertex vertex(std::size_t index) const noexcept { return {index / size(), index % size()}; }

    [[nodiscard]] bool has_edge(Vertex from, Vertex to) const;

    /// Targets (as vertex indices) of the edges leaving `vertex_index`, ascending.
    [[nodiscard]] std::span<const std::size_t> neighbors(std::size_t vertex_index) const;

    bool operator==(const Interaction& other) const {
        return states_ == other.states_ && edges_ == other.edges_;
    }

private:
    friend Interaction make_interaction(StateSet states, std::span<const Edge> raw_edges);

    Interaction(StateSet states, std::vector<Edge> edges);

    StateSet states_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> targets_;
};

/// Symmetric closure of `raw_edges`. Self-loops are kept if given.
/// Throws Error(domain) naming the first edge with an out-of-range state index.
[[nodiscard]] Interaction make_interaction(StateSet states, std::span<const Edge> raw_edges);

/// Connected components of (S x S, phi), ignoring edge direction and self-loops.
/// Cells are numbered by their lexicographically least vertex.
class ComponentPartition {
public:
    ComponentPartition(std::size_t state_count, std::vector<std::size_t> cell_of);

    [[nodiscard]] std::size_t cell_count() const noexcept { return cells_.size(); }
    [[nodiscard]] std::size_t cell_of(Vertex v) const { return cell_of_.at(v.first * n_ + v.second); }
    [[nodiscard]] const std::vector<Vertex>& cell(std::size_t i) const { return cells_.at(i); }
    [[nodiscard]] const std::vector<std::vector<Vertex>>& cells() const noexcept { return cells_; }

    bool operator==(const ComponentPartition&) const = default;

private:
    std::size_t n_;
    std::vector<std::size_t> cell_of_;
    std::vector<std::vector<Vertex>> cells_;
};

[[nodiscard]] ComponentPartition components(const Interaction& inter);

[[nodiscard]] bool same_component(const Interaction& inter, Vertex s, Vertex t);

[[nodiscard]] std::string to_string(Vertex v);

/// Minimal union-find over dense indices; the representative of a set is its least element.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n);

    std::size_t find(std::size_t x);
    void unite(std::size_t a, std::size_t b);

private:
    std::vector<std::size_t> parent_;
};

} // namespace interact
