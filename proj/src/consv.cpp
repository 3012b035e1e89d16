#include "interact/consv.hpp"

#include "interact/error.hpp"

namespace interact {

std::vector<std::size_t> ConservedBasis::pivots() const {
    std::vector<std::size_t> out;
    out.reserve(vectors.size());
    for (const auto& row : vectors) {
        std::size_t j = 0;
        while (j < row.size() && sgn(row[j]) == 0) {
            ++j;
        }
        out.push_back(j);
    }
    return out;
}

ConservedBasis compute_consv(const Interaction& inter) {
    const std::size_t n = inter.size();
    // One constraint per non-root vertex of each component is equivalent to one per edge.
    const auto parts = components(inter);
    RationalMatrix constraints;
    RationalVector anchor(n, 0);
    anchor[0] = 1;
    constraints.push_back(anchor);
    for (const auto& cell : parts.cells()) {
        const Vertex root = cell.front();
        for (std::size_t i = 1; i < cell.size(); ++i) {
            RationalVector row(n, 0);
            row[cell[i].first] += 1;
            row[cell[i].second] += 1;
            row[root.first] -= 1;
            row[root.second] -= 1;
            constraints.push_back(std::move(row));
        }
    }
    return ConservedBasis{inter.states(), nullspace(std::move(constraints), n)};
}

Rational pair_sum(std::span<const Rational> xi, Vertex v) {
    if (v.first >= xi.size() || v.second >= xi.size()) {
        throw Error(ErrorKind::domain, "vertex " + to_string(v) + " out of range");
    }
    return xi[v.first] + xi[v.second];
}

Rational config_sum(std::span<const Rational> xi, std::span<const std::size_t> eta) {
    Rational total = 0;
    for (auto s : eta) {
        total += xi[s];
    }
    return total;
}

bool is_conserved(const Interaction& inter, std::span<const Rational> xi) {
    if (xi.size() != inter.size()) {
        throw Error(ErrorKind::domain, "conserved-quantity candidate has " + std::to_string(xi.size()) +
                                           " entries for " + std::to_string(inter.size()) + " states");
    }
    for (const auto& e : inter.edges()) {
        if (pair_sum(xi, e.from) != pair_sum(xi, e.to)) {
            return false;
        }
    }
    return true;
}

RationalVector conserved_values(const ConservedBasis& basis, Vertex v) {
    RationalVector out;
    out.reserve(basis.dim());
    for (const auto& b : basis.vectors) {
        out.push_back(b[v.first] + b[v.second]);
    }
    return out;
}

} // namespace interact
