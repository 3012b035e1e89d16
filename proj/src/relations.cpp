#include "interact/relations.hpp"

#include "interact/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace interact {

namespace {

void guard(std::size_t n, std::size_t limit, const char* what) {
    if (n > limit) {
        throw Error(ErrorKind::resource, std::string("state set too large for ") + what + " (" +
                                             std::to_string(n) + " > " + std::to_string(limit) + ")");
    }
}

// Matrix of the pullback along `map` (S_a -> S_b): column j holds the coordinates,
// in the basis of `a`, of basis vector j of `b` composed with `map`.
bool pullback_matrix(const ConservedBasis& a, const std::vector<std::size_t>& a_pivots, const ConservedBasis& b,
                     const std::vector<std::size_t>& map, RationalMatrix& out) {
    const std::size_t d = a.dim();
    out.assign(d, RationalVector(b.dim(), 0));
    RationalVector pulled(map.size());
    RationalVector coords;
    for (std::size_t j = 0; j < b.dim(); ++j) {
        const auto& xi = b.vectors[j];
        const Rational shift = xi[map[0]];
        for (std::size_t s = 0; s < map.size(); ++s) {
            pulled[s] = xi[map[s]] - shift;
        }
        if (!coordinates_in(a.vectors, a_pivots, pulled, coords)) {
            return false;
        }
        for (std::size_t i = 0; i < d; ++i) {
            out[i][j] = coords[i];
        }
    }
    return true;
}

bool next_map(std::vector<std::size_t>& map, std::size_t codomain) {
    for (std::size_t i = map.size(); i-- > 0;) {
        if (++map[i] < codomain) {
            return true;
        }
        map[i] = 0;
    }
    return false;
}

std::optional<RationalMatrix> inverse(RationalMatrix m) {
    const std::size_t d = m.size();
    for (std::size_t i = 0; i < d; ++i) {
        m[i].resize(2 * d, 0);
        m[i][d + i] = 1;
    }
    const auto pivots = rref(m);
    if (pivots.size() != d || (d > 0 && pivots.back() != d - 1)) {
        return std::nullopt;
    }
    RationalMatrix inv(d, RationalVector(d));
    for (std::size_t i = 0; i < d; ++i) {
        std::copy(m[i].begin() + static_cast<std::ptrdiff_t>(d), m[i].end(), inv[i].begin());
    }
    return inv;
}

} // namespace

bool CanonicalForm::operator<(const CanonicalForm& other) const {
    if (size != other.size) {
        return size < other.size;
    }
    if (dim != other.dim) {
        return dim < other.dim;
    }
    return compare(matrix, other.matrix) < 0;
}

RationalMatrix permuted_basis(const RationalMatrix& vectors, const std::vector<std::size_t>& perm) {
    RationalMatrix out;
    out.reserve(vectors.size());
    for (const auto& xi : vectors) {
        RationalVector v(perm.size());
        const Rational shift = xi[perm[0]];
        for (std::size_t s = 0; s < perm.size(); ++s) {
            v[s] = xi[perm[s]] - shift;
        }
        out.push_back(std::move(v));
    }
    rref(out);
    return out;
}

CanonicalForm canonical_form(const ConservedBasis& basis) {
    const std::size_t n = basis.states.size();
    guard(n, kMaxCanonicalStates, "canonicalization");
    CanonicalForm best{n, basis.dim(), basis.vectors};
    if (basis.dim() == 0) {
        return best;
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        auto candidate = permuted_basis(basis.vectors, perm);
        if (compare(candidate, best.matrix) < 0) {
            best.matrix = std::move(candidate);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

CanonicalForm canonical_form(const Interaction& inter) {
    guard(inter.size(), kMaxCanonicalStates, "canonicalization");
    return canonical_form(compute_consv(inter));
}

std::string format(const CanonicalForm& form) {
    std::ostringstream os;
    os << "dim " << form.dim << "\n";
    for (const auto& row : form.matrix) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            os << (j ? " " : "") << to_string(row[j]);
        }
        os << "\n";
    }
    return os.str();
}

bool equivalent(const Interaction& a, const Interaction& b) {
    guard(a.size(), kMaxCanonicalStates, "canonicalization");
    guard(b.size(), kMaxCanonicalStates, "canonicalization");
    if (a.size() != b.size()) {
        return false;
    }
    return canonical_form(a) == canonical_form(b);
}

std::optional<std::vector<std::size_t>> isomorphic(const Interaction& a, const Interaction& b) {
    guard(a.size(), kMaxCanonicalStates, "isomorphism search");
    guard(b.size(), kMaxCanonicalStates, "isomorphism search");
    if (a.size() != b.size() || a.edges().size() != b.edges().size()) {
        return std::nullopt;
    }
    const std::size_t n = a.size();
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    do {
        const bool ok = std::all_of(a.edges().begin(), a.edges().end(), [&](const Edge& e) {
            return b.has_edge({sigma[e.from.first], sigma[e.from.second]}, {sigma[e.to.first], sigma[e.to.second]});
        });
        // Equal edge counts plus injectivity of sigma on edges make this a bijection.
        if (ok) {
            return sigma;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return std::nullopt;
}

std::optional<WeakEquivalence> weakly_equivalent(const Interaction& a, const Interaction& b) {
    guard(a.size(), kMaxWeakStates, "weak-equivalence search");
    guard(b.size(), kMaxWeakStates, "weak-equivalence search");
    const auto ba = compute_consv(a);
    const auto bb = compute_consv(b);
    if (ba.dim() != bb.dim()) {
        return std::nullopt;
    }
    const auto pa = ba.pivots();
    const auto pb = bb.pivots();

    // Candidate iota' keyed by the matrix of iota'^* : Consv(a) -> Consv(b).
    std::map<std::string, std::vector<std::size_t>> backward_by_matrix;
    const auto key = [](const RationalMatrix& m) {
        std::string k;
        for (const auto& row : m) {
            for (const auto& x : row) {
                k += to_string(x);
                k += ' ';
            }
            k += ';';
        }
        return k;
    };
    RationalMatrix m;
    std::vector<std::size_t> back(b.size(), 0);
    do {
        if (pullback_matrix(bb, pb, ba, back, m) && inverse(m)) {
            backward_by_matrix.emplace(key(m), back);
        }
    } while (next_map(back, a.size()));
    if (backward_by_matrix.empty()) {
        return std::nullopt;
    }

    std::vector<std::size_t> fwd(a.size(), 0);
    do {
        if (!pullback_matrix(ba, pa, bb, fwd, m)) {
            continue;
        }
        const auto inv = inverse(m);
        if (!inv) {
            continue;
        }
        const auto it = backward_by_matrix.find(key(*inv));
        if (it != backward_by_matrix.end()) {
            return WeakEquivalence{fwd, it->second};
        }
    } while (next_map(fwd, b.size()));
    return std::nullopt;
}

bool is_separable(const ConservedBasis& basis) {
    const std::size_t n = basis.states.size();
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = s + 1; t < n; ++t) {
            const bool same = std::all_of(basis.vectors.begin(), basis.vectors.end(),
                                          [&](const RationalVector& xi) { return xi[s] == xi[t]; });
            if (same) {
                return false;
            }
        }
    }
    return true;
}

bool is_separable(const Interaction& inter) {
    return is_separable(compute_consv(inter));
}

bool is_exchangeable(const Interaction& inter) {
    const auto parts = components(inter);
    for (std::size_t s = 0; s < inter.size(); ++s) {
        for (std::size_t t = s + 1; t < inter.size(); ++t) {
            if (parts.cell_of({s, t}) != parts.cell_of({t, s})) {
                return false;
            }
        }
    }
    return true;
}

} // namespace interact
