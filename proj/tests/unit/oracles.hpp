#pragma once

// Brute-force reference computations used only by the tests. Each one takes a route
// that does not go through the library code it checks.

#include <cmath>
#include <complex>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Gram = std::vector<std::vector<int>>;  // 0/1 entries

inline int pairing(const Gram& g, std::uint32_t x, std::uint32_t y) {
    int s = 0;
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (((x >> i) & 1U) && ((y >> j) & 1U)) s += g[i][j];
        }
    }
    return s % 2;
}

/// q on every class, grown from the basis values by the enhancement law, adding the
/// highest set coordinate last.
inline std::vector<int> q_table(const Gram& g, const std::vector<int>& v) {
    const std::size_t n = g.size();
    std::vector<int> q(std::size_t{1} << n, 0);
    for (std::uint32_t x = 1; x < q.size(); ++x) {
        std::size_t hi = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if ((x >> i) & 1U) hi = i;
        }
        const std::uint32_t rest = x ^ (std::uint32_t{1} << hi);
        q[x] = (q[rest] + v[hi] + 2 * pairing(g, rest, std::uint32_t{1} << hi)) % 4;
    }
    return q;
}

/// Brown invariant from the floating-point Gauss sum sum_x i^{q(x)}.
inline int beta_by_complex_gauss_sum(const Gram& g, const std::vector<int>& v) {
    const auto q = q_table(g, v);
    std::complex<double> sum{0.0, 0.0};
    const std::complex<double> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (int value : q) sum += powers[value];
    const double eighths = std::arg(sum) / (M_PI / 4.0);
    return ((static_cast<int>(std::lround(eighths)) % 8) + 8) % 8;
}

/// All elements of the span of the given vectors, as a sorted set.
inline std::set<std::uint32_t> span_set(const std::vector<std::uint32_t>& vs) {
    std::set<std::uint32_t> s{0};
    for (auto v : vs) {
        std::set<std::uint32_t> next = s;
        for (auto e : s) next.insert(e ^ v);
        s = std::move(next);
    }
    return s;
}

/// Number of k-dimensional subspaces of F2^n, by listing distinct spans of k-tuples.
inline std::size_t count_subspaces(std::size_t n, std::size_t k) {
    std::set<std::set<std::uint32_t>> seen;
    const std::uint32_t total = std::uint32_t{1} << n;
    std::vector<std::uint32_t> pick(k, 1);
    auto rec = [&](auto&& self, std::size_t idx, std::uint32_t start) -> void {
        if (idx == k) {
            auto s = span_set(pick);
            if (s.size() == (std::size_t{1} << k)) seen.insert(std::move(s));
            return;
        }
        for (std::uint32_t v = start; v < total; ++v) {
            pick[idx] = v;
            self(self, idx + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
    return seen.size();
}

/// Rank as log2 of the size of the row span.
inline std::size_t rank_by_span(const std::vector<std::uint32_t>& rows) {
    const auto size = span_set(rows).size();
    std::size_t r = 0;
    while ((std::size_t{1} << r) < size) ++r;
    return r;
}

/// Determinant by cofactor expansion (small integer matrices only).
inline std::int64_t cofactor_det(const std::vector<std::vector<std::int64_t>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    std::int64_t det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<std::vector<std::int64_t>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<std::int64_t> row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != c) row.push_back(m[r][k]);
            }
            minor.push_back(row);
        }
        det += ((c % 2 == 0) ? 1 : -1) * m[0][c] * cofactor_det(minor);
    }
    return det;
}

}  // namespace oracle
