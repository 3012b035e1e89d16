#include "support.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <utility>

namespace testing_support {

namespace {
std::uint64_t g_seed = 20240611;
}

std::uint64_t seed() {
    return g_seed;
}

void set_seed(std::uint64_t s) {
    g_seed = s;
}

interact::Interaction random_interaction(std::mt19937_64& rng, std::size_t n, std::size_t max_pairs) {
    std::uniform_int_distribution<std::size_t> state(0, n - 1);
    std::uniform_int_distribution<std::size_t> count(0, max_pairs);
    std::vector<interact::Edge> edges;
    const std::size_t m = count(rng);
    for (std::size_t i = 0; i < m; ++i) {
        edges.push_back({{state(rng), state(rng)}, {state(rng), state(rng)}});
    }
    return interact::make_interaction(interact::StateSet::range(n), edges);
}

interact::SiteGraph random_connected_graph(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t x = 1; x < n; ++x) {
        edges.emplace_back(std::uniform_int_distribution<std::size_t>(0, x - 1)(rng), x);
    }
    if (n >= 3) {
        std::uniform_int_distribution<std::size_t> site(0, n - 1);
        const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, n - 2)(rng);
        for (std::size_t i = 0; i < extra; ++i) {
            const auto u = site(rng);
            const auto v = site(rng);
            if (u != v) {
                edges.emplace_back(u, v);
            }
        }
    }
    return interact::SiteGraph(n, edges, "random(" + std::to_string(n) + ")");
}

std::size_t bareiss_rank(std::vector<std::vector<long long>> m) {
    if (m.empty()) {
        return 0;
    }
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    __int128 prev = 1;
    std::vector<std::vector<__int128>> a(rows, std::vector<__int128>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            a[i][j] = m[i][j];
        }
    }
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

std::size_t oracle_consv_dim(const interact::Interaction& inter) {
    const std::size_t n = inter.size();
    std::vector<std::vector<long long>> rows;
    std::vector<long long> anchor(n, 0);
    anchor[0] = 1;
    rows.push_back(anchor);
    for (const auto& e : inter.edges()) {
        std::vector<long long> r(n, 0);
        r[e.from.first] += 1;
        r[e.from.second] += 1;
        r[e.to.first] -= 1;
        r[e.to.second] -= 1;
        rows.push_back(std::move(r));
    }
    return n - bareiss_rank(std::move(rows));
}

std::vector<std::size_t> oracle_components(const interact::Interaction& inter) {
    const std::size_t n = inter.size();
    const std::size_t v = n * n;
    std::vector<std::vector<std::size_t>> adj(v);
    for (const auto& e : inter.edges()) {
        const auto a = e.from.first * n + e.from.second;
        const auto b = e.to.first * n + e.to.second;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<std::size_t> label(v, SIZE_MAX);
    for (std::size_t s = 0; s < v; ++s) {
        if (label[s] != SIZE_MAX) {
            continue;
        }
        std::vector<std::size_t> stack{s};
        label[s] = s;
        while (!stack.empty()) {
            const auto x = stack.back();
            stack.pop_back();
            for (auto y : adj[x]) {
                if (label[y] == SIZE_MAX) {
                    label[y] = s;
                    stack.push_back(y);
                }
            }
        }
    }
    return label;
}

bool oracle_is_isomorphism(const interact::Interaction& a, const interact::Interaction& b,
                           const std::vector<std::size_t>& sigma) {
    using Key = std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>;
    std::multiset<Key> mapped;
    std::multiset<Key> target;
    for (const auto& e : a.edges()) {
        mapped.insert({{sigma[e.from.first], sigma[e.from.second]}, {sigma[e.to.first], sigma[e.to.second]}});
    }
    for (const auto& e : b.edges()) {
        target.insert({{e.from.first, e.from.second}, {e.to.first, e.to.second}});
    }
    return mapped == target;
}

std::vector<std::vector<std::size_t>> oracle_reachable(const interact::Interaction& inter,
                                                       const interact::SiteGraph& g,
                                                       const std::vector<std::size_t>& eta) {
    std::set<std::vector<std::size_t>> seen{eta};
    std::deque<std::vector<std::size_t>> queue{eta};
    while (!queue.empty()) {
        const auto cur = queue.front();
        queue.pop_front();
        for (const auto& [u, v] : g.edges()) {
            for (const auto& e : inter.edges()) {
                if (e.from.first == cur[u] && e.from.second == cur[v]) {
                    auto next = cur;
                    next[u] = e.to.first;
                    next[v] = e.to.second;
                    if (seen.insert(next).second) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    return {seen.begin(), seen.end()};
}

} // namespace testing_support
