#include "interact/algebra.hpp"

#include "interact/error.hpp"

#include <algorithm>
#include <map>

namespace interact {

Interaction completion_of_basis(const ConservedBasis& basis) {
    const std::size_t n = basis.states.size();
    std::map<RationalVector, std::vector<Vertex>> fibers;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            fibers[conserved_values(basis, {a, b})].push_back({a, b});
        }
    }
    std::vector<Edge> edges;
    for (const auto& [values, members] : fibers) {
        for (const auto& s : members) {
            for (const auto& t : members) {
                edges.push_back({s, t});
            }
        }
    }
    return make_interaction(basis.states, edges);
}

Interaction completion(const Interaction& inter) {
    return completion_of_basis(compute_consv(inter));
}

Interaction merge(const Interaction& inter, Vertex s, Vertex t) {
    const auto basis = compute_consv(inter);
    if (s.first >= inter.size() || s.second >= inter.size() || t.first >= inter.size() ||
        t.second >= inter.size()) {
        throw Error(ErrorKind::domain, "merge vertex out of range");
    }
    if (conserved_values(basis, s) == conserved_values(basis, t)) {
        throw Error(ErrorKind::domain, "merge has no effect on Consv: " + to_string(s) + " and " +
                                           to_string(t) + " lie in one conserved fiber");
    }
    std::vector<Edge> edges = inter.edges();
    edges.push_back({s, t});
    return make_interaction(inter.states(), edges);
}

std::size_t wedge_right_index(const WedgeSpec& spec, std::size_t s) {
    if (s == spec.base_right) {
        return spec.base_left;
    }
    return spec.left.size() + (s < spec.base_right ? s : s - 1);
}

Interaction wedge(const WedgeSpec& spec) {
    if (spec.base_left >= spec.left.size() || spec.base_right >= spec.right.size()) {
        throw Error(ErrorKind::domain, "wedge base point out of range");
    }
    const std::size_t n1 = spec.left.size();
    const std::size_t n2 = spec.right.size();

    std::vector<std::string> labels = spec.left.states().labels();
    for (std::size_t s = 0; s < n2; ++s) {
        if (s == spec.base_right) {
            continue;
        }
        std::string l = spec.right.states().label(s);
        while (std::find(labels.begin(), labels.end(), l) != labels.end()) {
            l += "'";
        }
        labels.push_back(std::move(l));
    }

    std::vector<Edge> edges = spec.left.edges();
    const auto map = [&](Vertex v) {
        return Vertex{wedge_right_index(spec, v.first), wedge_right_index(spec, v.second)};
    };
    for (const auto& e : spec.right.edges()) {
        edges.push_back({map(e.from), map(e.to)});
    }
    for (std::size_t a = 0; a < n1; ++a) {
        for (std::size_t b = 0; b < n2; ++b) {
            const auto c = wedge_right_index(spec, b);
            if (a == c) {
                continue;
            }
            edges.push_back({{a, c}, {c, a}});
        }
    }
    return make_interaction(StateSet(std::move(labels)), edges);
}

Interaction box(const Interaction& left, const Interaction& right) {
    const std::size_t n1 = left.size();
    const std::size_t n2 = right.size();
    std::vector<std::string> labels;
    labels.reserve(n1 * n2);
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n2; ++j) {
            labels.push_back("(" + left.states().label(i) + "," + right.states().label(j) + ")");
        }
    }
    const auto idx = [n2](std::size_t i, std::size_t j) { return i * n2 + j; };

    std::vector<Edge> edges;
    edges.reserve(left.edges().size() * n2 * n2 + right.edges().size() * n1 * n1);
    // Left factor moves; the right pair (b1, b2) is carried along unchanged.
    for (const auto& e : left.edges()) {
        for (std::size_t b1 = 0; b1 < n2; ++b1) {
            for (std::size_t b2 = 0; b2 < n2; ++b2) {
                edges.push_back({{idx(e.from.first, b1), idx(e.from.second, b2)},
                                 {idx(e.to.first, b1), idx(e.to.second, b2)}});
            }
        }
    }
    for (const auto& e : right.edges()) {
        for (std::size_t a1 = 0; a1 < n1; ++a1) {
            for (std::size_t a2 = 0; a2 < n1; ++a2) {
                edges.push_back({{idx(a1, e.from.first), idx(a2, e.from.second)},
                                 {idx(a1, e.to.first), idx(a2, e.to.second)}});
            }
        }
    }
    return make_interaction(StateSet(std::move(labels)), edges);
}

} // namespace interact
