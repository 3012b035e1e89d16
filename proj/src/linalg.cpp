#include "interact/linalg.hpp"

#include "interact/error.hpp"

#include <utility>

namespace interact {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    const auto bad = [&] { return Error(ErrorKind::domain, "malformed rational '" + std::string(text) + "'"); };
    if (text.empty()) {
        throw bad();
    }
    const auto slash = text.find('/');
    const auto parse_int = [&](std::string_view s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
            ++i;
        }
        if (i == s.size()) {
            throw bad();
        }
        for (std::size_t j = i; j < s.size(); ++j) {
            if (s[j] < '0' || s[j] > '9') {
                throw bad();
            }
        }
        std::string digits(s);
        if (digits[0] == '+') {
            digits.erase(0, 1);
        }
        return mpz_class(digits, 10);
    };
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text, true));
    }
    mpz_class num = parse_int(text.substr(0, slash), true);
    mpz_class den = parse_int(text.substr(slash + 1), false);
    if (den == 0) {
        throw bad();
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::vector<std::size_t> rref(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) {
        return pivots;
    }
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    Rational factor;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && sgn(m[sel][col]) == 0) {
            ++sel;
        }
        if (sel == m.size()) {
            continue;
        }
        std::swap(m[row], m[sel]);
        if (m[row][col] != 1) {
            const Rational inv = 1 / m[row][col];
            for (std::size_t j = col; j < cols; ++j) {
                m[row][j] *= inv;
            }
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][col]) == 0) {
                continue;
            }
            factor = m[r][col];
            for (std::size_t j = col; j < cols; ++j) {
                m[r][j] -= factor * m[row][j];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

RationalMatrix nullspace(RationalMatrix m, std::size_t cols) {
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    RationalMatrix basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        RationalVector v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = -m[i][f];
        }
        basis.push_back(std::move(v));
    }
    rref(basis);
    return basis;
}

bool coordinates_in(const RationalMatrix& basis, const std::vector<std::size_t>& pivots,
                    const RationalVector& v, RationalVector& coords) {
    coords.assign(basis.size(), 0);
    RationalVector residual = v;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        coords[i] = residual[pivots[i]];
        if (sgn(coords[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < residual.size(); ++j) {
            residual[j] -= coords[i] * basis[i][j];
        }
    }
    for (const auto& x : residual) {
        if (sgn(x) != 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<mpz_class>> integer_rows(const RationalMatrix& m) {
    std::vector<std::vector<mpz_class>> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        mpz_class l = 1;
        for (const auto& x : row) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        }
        std::vector<mpz_class> r;
        r.reserve(row.size());
        for (const auto& x : row) {
            r.emplace_back(x.get_num() * (l / x.get_den()));
        }
        out.push_back(std::move(r));
    }
    return out;
}

int compare(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.size() != b.size()) {
        return a.size() < b.size() ? -1 : 1;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) {
            return a[i].size() < b[i].size() ? -1 : 1;
        }
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            const int c = cmp(a[i][j], b[i][j]);
            if (c != 0) {
                return c < 0 ? -1 : 1;
            }
        }
    }
    return 0;
}

} // namespace interact
