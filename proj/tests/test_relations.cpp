#include <doctest.h>

#include "interact/algebra.hpp"
#include "interact/error.hpp"
#include "interact/relations.hpp"
#include "interact/zoo.hpp"
#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace interact;

namespace {

Interaction relabel(const Interaction& phi, const std::vector<std::size_t>& sigma) {
    std::vector<Edge> edges;
    for (const auto& e : phi.edges()) {
        edges.push_back({{sigma[e.from.first], sigma[e.from.second]}, {sigma[e.to.first], sigma[e.to.second]}});
    }
    return make_interaction(StateSet::range(phi.size()), edges);
}

// xi o map == xi modulo constants, for every basis vector xi of phi.
bool fixes_each_vector(const Interaction& phi, const std::vector<std::size_t>& map) {
    for (const auto& xi : compute_consv(phi).vectors) {
        for (std::size_t s = 0; s < map.size(); ++s) {
            if (xi[map[s]] - xi[map[0]] != xi[s] - xi[0]) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

TEST_CASE("canonical forms") {
    CHECK(canonical_form(zoo::exclusion()) == canonical_form(relabel(zoo::exclusion(), {1, 0})));
    CHECK(canonical_form(zoo::two_species_annihilation()) == canonical_form(zoo::k_exclusion(2)));
    CHECK(canonical_form(zoo::glauber()) == canonical_form(zoo::complete(1)));
    CHECK(canonical_form(zoo::glauber()).dim == 0);
    CHECK(format(canonical_form(zoo::exclusion())) == "dim 1\n0 1\n");

    const auto big = make_interaction(StateSet::range(8), std::vector<Edge>{});
    try {
        (void)canonical_form(big);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::resource);
        CHECK(std::string(e.what()).find("state set too large for canonicalization") != std::string::npos);
    }
}

TEST_CASE("canonical form is invariant under every relabeling of the zoo") {
    for (const auto& entry : zoo::entries()) {
        for (const auto& p : entry.samples) {
            const auto phi = entry.builder(p);
            if (phi.size() > 4) {
                continue;
            }
            const auto form = canonical_form(phi);
            std::vector<std::size_t> sigma(phi.size());
            std::iota(sigma.begin(), sigma.end(), std::size_t{0});
            do {
                CHECK(canonical_form(relabel(phi, sigma)) == form);
            } while (std::next_permutation(sigma.begin(), sigma.end()));
        }
    }
}

TEST_CASE("equivalent") {
    std::mt19937_64 rng(testing_support::seed() + 20);
    for (int trial = 0; trial < 50; ++trial) {
        const auto phi = testing_support::random_interaction(rng, 1 + rng() % 4, 6);
        CHECK(equivalent(phi, completion(phi)));
    }
    CHECK_FALSE(equivalent(zoo::k_exclusion(2), zoo::multi_species(2)));
    CHECK_FALSE(equivalent(zoo::exclusion(), zoo::k_exclusion(2)));

    // Joining two diagonals and joining (a,c) with (b,c) give the same class.
    const auto diag = merge(zoo::multi_species(3), {2, 2}, {3, 3});
    const auto side = merge(zoo::multi_species(3), {2, 0}, {3, 0});
    CHECK(equivalent(diag, side));
    CHECK_FALSE(equivalent(diag, merge(zoo::multi_species(3), {2, 2}, {1, 3})));
}

TEST_CASE("equivalent is an equivalence relation on |S| <= 3") {
    std::mt19937_64 rng(testing_support::seed() + 21);
    std::vector<Interaction> pool;
    for (int i = 0; i < 40; ++i) {
        pool.push_back(testing_support::random_interaction(rng, 3, 5));
    }
    for (const auto& a : pool) {
        CHECK(equivalent(a, a));
        for (const auto& b : pool) {
            CHECK(equivalent(a, b) == equivalent(b, a));
            for (const auto& c : pool) {
                if (equivalent(a, b) && equivalent(b, c)) {
                    CHECK(equivalent(a, c));
                }
            }
        }
    }
}

TEST_CASE("isomorphic") {
    const auto sigma = isomorphic(zoo::two_species_annihilation(), zoo::k_exclusion(2));
    REQUIRE(sigma);
    CHECK(*sigma == std::vector<std::size_t>{0, 1, 2});

    CHECK(isomorphic(zoo::multi_species(2), wedge({zoo::exclusion(), zoo::exclusion(), 0, 0})).has_value());

    // Equivalent but never isomorphic: brute force over all 4! bijections.
    const auto a = zoo::k_exclusion(3);
    const auto b = zoo::fig14();
    CHECK(equivalent(a, b));
    CHECK_FALSE(isomorphic(a, b).has_value());
    std::vector<std::size_t> perm{0, 1, 2, 3};
    do {
        CHECK_FALSE(testing_support::oracle_is_isomorphism(a, b, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("isomorphic implies equivalent") {
    std::mt19937_64 rng(testing_support::seed() + 22);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const auto a = testing_support::random_interaction(rng, n, 5);
        std::vector<std::size_t> sigma(n);
        std::iota(sigma.begin(), sigma.end(), std::size_t{0});
        std::shuffle(sigma.begin(), sigma.end(), rng);
        const auto b = relabel(a, sigma);
        const auto found = isomorphic(a, b);
        REQUIRE(found);
        CHECK(testing_support::oracle_is_isomorphism(a, b, *found));
        CHECK(equivalent(a, b));
        const auto c = testing_support::random_interaction(rng, n, 5);
        if (isomorphic(a, c)) {
            CHECK(equivalent(a, c));
        }
    }
}

TEST_CASE("weak equivalence") {
    const auto diag = merge(zoo::multi_species(3), {2, 2}, {3, 3});
    const auto w = weakly_equivalent(diag, zoo::multi_species(2));
    REQUIRE(w);
    // The pullbacks really are mutually inverse: iota'^* iota^* = id on both sides.
    std::vector<std::size_t> round_a(4);
    for (std::size_t s = 0; s < 4; ++s) {
        round_a[s] = w->backward[w->forward[s]];
    }
    CHECK(fixes_each_vector(diag, round_a));
    std::vector<std::size_t> round_b(3);
    for (std::size_t s = 0; s < 3; ++s) {
        round_b[s] = w->forward[w->backward[s]];
    }
    CHECK(fixes_each_vector(zoo::multi_species(2), round_b));

    CHECK(weakly_equivalent(zoo::complete(1), zoo::singleton()).has_value());
    CHECK_FALSE(weakly_equivalent(zoo::exclusion(), zoo::multi_species(2)).has_value());
    CHECK_THROWS_AS((void)weakly_equivalent(zoo::multi_species(5), zoo::exclusion()), Error);
}

TEST_CASE("equivalent implies weakly equivalent") {
    std::mt19937_64 rng(testing_support::seed() + 23);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        const auto a = testing_support::random_interaction(rng, n, 4);
        const auto b = completion(a);
        CHECK(weakly_equivalent(a, b).has_value());
    }
}

TEST_CASE("separability and exchangeability") {
    CHECK(is_separable(zoo::exclusion()));
    CHECK_FALSE(is_separable(zoo::glauber()));
    CHECK_FALSE(is_separable(merge(zoo::multi_species(3), {2, 2}, {3, 3})));

    for (int k = 1; k <= 4; ++k) {
        CHECK(is_exchangeable(zoo::multi_species(k)));
    }
    CHECK_FALSE(is_exchangeable(make_interaction(StateSet::range(2), std::vector<Edge>{{{0, 1}, {1, 1}}})));

    std::mt19937_64 rng(testing_support::seed() + 24);
    for (int trial = 0; trial < 100; ++trial) {
        const auto phi = testing_support::random_interaction(rng, 1 + rng() % 4, 6);
        CHECK(is_exchangeable(completion(phi)));
        CHECK(is_separable(completion(phi)) == is_separable(phi));
    }
}
