#include <doctest.h>

#include "interact/algebra.hpp"
#include "interact/error.hpp"
#include "interact/relations.hpp"
#include "interact/zoo.hpp"
#include "support.hpp"

#include <random>

using namespace interact;

namespace {

RationalVector row(std::initializer_list<long> xs) {
    RationalVector v;
    for (long x : xs) {
        v.emplace_back(x);
    }
    return v;
}

bool subset(const Interaction& a, const Interaction& b) {
    for (const auto& e : a.edges()) {
        if (!b.has_edge(e.from, e.to)) {
            return false;
        }
    }
    return true;
}

std::vector<Interaction> small_zoo() {
    std::vector<Interaction> out;
    for (const auto& e : zoo::entries()) {
        for (const auto& p : e.samples) {
            auto inter = e.builder(p);
            if (inter.size() <= 4) {
                out.push_back(std::move(inter));
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("completion of exclusion") {
    const auto hat = completion(zoo::exclusion());
    const auto parts = components(hat);
    REQUIRE(parts.cell_count() == 3);
    CHECK(parts.cell(1) == std::vector<Vertex>{{0, 1}, {1, 0}});
    // All equal-fiber pairs, self-loops included: 1 + 4 + 1.
    CHECK(hat.edges().size() == 6);
    CHECK(hat.has_edge({0, 0}, {0, 0}));
}

TEST_CASE("completion of ms^3 plus (1,1) <-> (3,3)") {
    const auto phi = make_interaction(StateSet::range(4), [] {
        auto e = zoo::multi_species(3).edges();
        e.push_back({{1, 1}, {3, 3}});
        return e;
    }());
    const auto hat = completion(phi);
    const auto parts = components(hat);
    const auto& cell = parts.cell(parts.cell_of({1, 1}));
    CHECK(cell == std::vector<Vertex>{{1, 1}, {1, 3}, {3, 1}, {3, 3}});
    CHECK_FALSE(same_component(phi, {1, 3}, {3, 3}));
    CHECK_FALSE(same_component(hat, {2, 2}, {1, 3}));
}

TEST_CASE("completion properties on random interactions") {
    std::mt19937_64 rng(testing_support::seed() + 10);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const auto phi = testing_support::random_interaction(rng, n, 2 * n);
        const auto hat = completion(phi);
        CHECK(subset(phi, hat));
        const auto basis = compute_consv(phi);
        CHECK(compute_consv(hat) == basis);
        CHECK(completion(hat) == hat);
        // Cells of the completion are the conserved fibers.
        for (std::size_t a = 0; a < n * n; ++a) {
            for (std::size_t b = 0; b < n * n; ++b) {
                const bool same_values = conserved_values(basis, phi.vertex(a)) == conserved_values(basis, phi.vertex(b));
                CHECK(same_component(hat, phi.vertex(a), phi.vertex(b)) == same_values);
            }
        }
    }
}

TEST_CASE("merge lowers the dimension by one") {
    const auto ms2 = merge(zoo::multi_species(2), {1, 1}, {0, 2});
    CHECK(compute_consv(ms2).vectors == RationalMatrix{row({0, 1, 2})});

    const auto ms3 = merge(zoo::multi_species(3), {2, 2}, {1, 3});
    RationalMatrix span{row({0, 1, 1, 1}), row({0, 0, 1, 2})};
    rref(span);
    CHECK(compute_consv(ms3).vectors == span);

    const auto lge = merge(zoo::lge(3), {1, 1}, {0, 3});
    CHECK(compute_consv(lge).vectors == RationalMatrix{RationalVector{0, 1, Rational(3, 2), 2}});

    try {
        (void)merge(zoo::exclusion(), {0, 1}, {1, 0});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("no effect on Consv") != std::string::npos);
    }

    std::mt19937_64 rng(testing_support::seed() + 11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 3;
        const auto phi = testing_support::random_interaction(rng, n, n);
        const auto basis = compute_consv(phi);
        const Vertex s = phi.vertex(rng() % (n * n));
        const Vertex t = phi.vertex(rng() % (n * n));
        if (conserved_values(basis, s) == conserved_values(basis, t)) {
            CHECK_THROWS_AS((void)merge(phi, s, t), Error);
        } else {
            CHECK(compute_consv(merge(phi, s, t)).dim() + 1 == basis.dim());
        }
    }
}

TEST_CASE("wedge layout and examples") {
    const WedgeSpec spec{zoo::exclusion(), zoo::exclusion(), 0, 0};
    const auto w = wedge(spec);
    CHECK(w.size() == 3);
    CHECK(w.states().labels() == std::vector<std::string>{"0", "1", "1'"});
    CHECK(wedge_right_index(spec, 0) == 0);
    CHECK(wedge_right_index(spec, 1) == 2);
    const auto sigma = isomorphic(w, zoo::multi_species(2));
    REQUIRE(sigma);
    CHECK(testing_support::oracle_is_isomorphism(w, zoo::multi_species(2), *sigma));

    const auto lge = wedge({zoo::exclusion(), zoo::k_exclusion(2), 1, 0});
    CHECK(compute_consv(lge).dim() == 2);
    CHECK(isomorphic(lge, zoo::lge_explicit(3)).has_value());

    CHECK_THROWS_AS((void)wedge({zoo::exclusion(), zoo::exclusion(), 2, 0}), Error);
}

TEST_CASE("wedge powers of exclusion are multi-species") {
    for (int k = 1; k <= 4; ++k) {
        const auto sigma = isomorphic(zoo::wedge_power_exclusion(k), zoo::multi_species(k));
        REQUIRE(sigma);
        CHECK(testing_support::oracle_is_isomorphism(zoo::wedge_power_exclusion(k), zoo::multi_species(k), *sigma));
    }
}

TEST_CASE("wedge dimension law over the small zoo, every base point") {
    const auto items = small_zoo();
    for (const auto& a : items) {
        for (const auto& b : items) {
            const auto ca = compute_consv(a).dim();
            const auto cb = compute_consv(b).dim();
            for (std::size_t i = 0; i < a.size(); ++i) {
                for (std::size_t j = 0; j < b.size(); ++j) {
                    CHECK(compute_consv(wedge({a, b, i, j})).dim() == ca + cb);
                }
            }
        }
    }
}

TEST_CASE("wedge dimension law on random pairs") {
    std::mt19937_64 rng(testing_support::seed() + 12);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = testing_support::random_interaction(rng, 1 + rng() % 4, 6);
        const auto b = testing_support::random_interaction(rng, 1 + rng() % 4, 6);
        const auto w = wedge({a, b, rng() % a.size(), rng() % b.size()});
        CHECK(compute_consv(w).dim() == compute_consv(a).dim() + compute_consv(b).dim());
    }
}

TEST_CASE("box product") {
    const auto two_lane = box(zoo::exclusion(), zoo::exclusion());
    CHECK(two_lane.size() == 4);
    CHECK(two_lane.states().label(2) == "(1,0)");
    CHECK(compute_consv(two_lane).dim() == 2);
    CHECK(is_exchangeable(two_lane));
    CHECK(isomorphic(two_lane, zoo::n_lane_explicit(1, 2)).has_value());

    const auto single = zoo::singleton();
    for (const auto& phi : {zoo::exclusion(), zoo::lge(3), zoo::fig14()}) {
        CHECK(isomorphic(box(single, phi), phi).has_value());
        CHECK(isomorphic(box(phi, single), phi).has_value());
    }
}

TEST_CASE("box dimension law when a factor is exchangeable") {
    const auto items = small_zoo();
    std::size_t checked = 0;
    for (const auto& a : items) {
        for (const auto& b : items) {
            if (!is_exchangeable(a) && !is_exchangeable(b)) {
                continue;
            }
            const auto p = box(a, b);
            CHECK(compute_consv(p).dim() == compute_consv(a).dim() + compute_consv(b).dim());
            if (is_exchangeable(a) && is_exchangeable(b)) {
                CHECK(is_exchangeable(p));
            }
            ++checked;
        }
    }
    CHECK(checked > 100);
}
