#pragma once

#include "interact/consv.hpp"
#include "interact/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace interact {

/// Largest state set accepted by the permutation searches ((|S|)! candidates).
inline constexpr std::size_t kMaxCanonicalStates = 7;
/// Largest state set on either side of the weak-equivalence map search.
inline constexpr std::size_t kMaxWeakStates = 5;

/// Class key for equivalence: the least RREF basis of the conserved space over
/// all relabelings of the states. Ordered by size, then dim, then entries by value.
struct CanonicalForm {
    std::size_t size = 0;
    std::size_t dim = 0;
    RationalMatrix matrix;

    bool operator==(const CanonicalForm&) const = default;
    bool operator<(const CanonicalForm& other) const;
};

[[nodiscard]] CanonicalForm canonical_form(const ConservedBasis& basis);
[[nodiscard]] CanonicalForm canonical_form(const Interaction& inter);

/// Dimension line followed by one line per basis row, entries "p/q" separated by spaces.
[[nodiscard]] std::string format(const CanonicalForm& form);

/// Basis of the conserved space after relabeling: the returned vectors are
/// xi o perm, shifted so that state 0 maps to 0, in RREF.
[[nodiscard]] RationalMatrix permuted_basis(const RationalMatrix& vectors, const std::vector<std::size_t>& perm);

/// Same size and same canonical form. Interactions of different sizes are never
/// equivalent; compare those with weakly_equivalent.
[[nodiscard]] bool equivalent(const Interaction& a, const Interaction& b);

/// A state bijection sigma (a-index -> b-index) carrying the edge set of `a` onto that of `b`.
[[nodiscard]] std::optional<std::vector<std::size_t>> isomorphic(const Interaction& a, const Interaction& b);

struct WeakEquivalence {
    std::vector<std::size_t> forward;  // iota : S_a -> S_b
    std::vector<std::size_t> backward; // iota' : S_b -> S_a
};

/// Maps iota : S_a -> S_b and iota' : S_b -> S_a whose pullbacks are mutually
/// inverse isomorphisms between the conserved spaces. Arbitrary maps are searched,
/// not only injections or surjections.
[[nodiscard]] std::optional<WeakEquivalence> weakly_equivalent(const Interaction& a, const Interaction& b);

/// Distinct states are distinguished by some conserved quantity.
[[nodiscard]] bool is_separable(const ConservedBasis& basis);
[[nodiscard]] bool is_separable(const Interaction& inter);

/// Every (s,t) shares a component with (t,s).
[[nodiscard]] bool is_exchangeable(const Interaction& inter);

} // namespace interact
