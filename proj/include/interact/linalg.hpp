#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace interact {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
// Row-major; every row has the same length.
using RationalMatrix = std::vector<RationalVector>;

/// Formats as "p/q", or "p" when the denominator is 1.
[[nodiscard]] std::string to_string(const Rational& q);

/// Inverse of to_string. Throws Error(domain) on malformed input or a zero denominator.
[[nodiscard]] Rational parse_rational(std::string_view text);

/// Reduces `m` in place to reduced row echelon form (pivots 1, zeros above and
/// below each pivot, pivot columns ascending). Zero rows are removed.
/// Returns the pivot column of each remaining row.
std::vector<std::size_t> rref(RationalMatrix& m);

/// Basis of {x : m x = 0} for a matrix with `cols` columns, returned in RREF.
[[nodiscard]] RationalMatrix nullspace(RationalMatrix m, std::size_t cols);

/// Coordinates of `v` in the row space of `basis` (RREF, with the given pivots).
/// Returns false when `v` is not in that row space.
bool coordinates_in(const RationalMatrix& basis, const std::vector<std::size_t>& pivots,
                    const RationalVector& v, RationalVector& coords);

/// Scales each row by the lcm of its denominators so that all entries are integers.
[[nodiscard]] std::vector<std::vector<mpz_class>> integer_rows(const RationalMatrix& m);

/// Lexicographic comparison of two equally-shaped matrices, entries by value.
[[nodiscard]] int compare(const RationalMatrix& a, const RationalMatrix& b);

} // namespace interact
