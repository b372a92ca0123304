#pragma once

#include "cohomotopy/algebra/int_matrix.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

namespace testsupport {

using cohomotopy::algebra::Integer;
using cohomotopy::algebra::IntMatrix;
using cohomotopy::algebra::IntVector;

/// gcd of all k x k minors (0 when every minor vanishes).
inline Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
    Integer g = 0;
    std::vector<std::size_t> rows(k), cols(k);
    std::function<void(std::size_t, std::size_t)> pick_cols;
    std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t idx, std::size_t start) {
        if (idx == k) {
            pick_cols(0, 0);
            return;
        }
        for (std::size_t r = start; r < m.rows(); ++r) {
            rows[idx] = r;
            pick_rows(idx + 1, r + 1);
        }
    };
    pick_cols = [&](std::size_t idx, std::size_t start) {
        if (idx == k) {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
            g = cohomotopy::algebra::gcd(g, cohomotopy::algebra::determinant(sub));
            return;
        }
        for (std::size_t c = start; c < m.cols(); ++c) {
            cols[idx] = c;
            pick_cols(idx + 1, c + 1);
        }
    };
    pick_rows(0, 0);
    return g;
}

/// Calls f on every vector of (Z/m)^n.
inline void for_each_residue_vector(std::size_t n, long long m, const std::function<void(const IntVector&)>& f) {
    IntVector v(n);
    for (;;) {
        f(v);
        std::size_t i = 0;
        while (i < n && v[i] == m - 1) v[i++] = 0;
        if (i == n) return;
        v[i] += 1;
    }
}

inline std::vector<long long> residue_key(const IntVector& v, long long m) {
    std::vector<long long> key(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        long long x = static_cast<long long>(v[i] % m);
        key[i] = x < 0 ? x + m : x;
    }
    return key;
}

/// For every divisor d of m, the number of classes of the mod-m cohomology killed by d.
/// These counts determine a finite abelian group of exponent dividing m.
inline std::vector<std::pair<long long, long long>> brute_force_mod_cohomology(const IntMatrix& d_in,
                                                                               const IntMatrix& d_out, long long m) {
    const std::size_t k = d_out.cols();
    std::set<std::vector<long long>> boundaries;
    for_each_residue_vector(d_in.cols(), m, [&](const IntVector& y) { boundaries.insert(residue_key(d_in.apply(y), m)); });
    std::vector<IntVector> cocycles;
    for_each_residue_vector(k, m, [&](const IntVector& x) {
        for (const auto& v : d_out.apply(x))
            if (v % m != 0) return;
        cocycles.push_back(x);
    });
    std::vector<std::pair<long long, long long>> out;
    for (long long d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        long long killed = 0;
        for (const auto& z : cocycles) {
            IntVector dz = z;
            for (auto& x : dz) x *= d;
            if (boundaries.count(residue_key(dz, m))) ++killed;
        }
        out.emplace_back(d, killed / static_cast<long long>(boundaries.size()));
    }
    return out;
}

} // namespace testsupport

namespace testsupport {

/// Rank over Z/2 by plain Gaussian elimination.
inline std::size_t rank_mod2(const IntMatrix& m) {
    std::vector<std::vector<int>> a(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = static_cast<int>(((m(r, c) % 2) + 2) % 2);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < m.rows() && a[piv][c] == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != rank && a[r][c])
                for (std::size_t j = 0; j < m.cols(); ++j) a[r][j] ^= a[rank][j];
        ++rank;
    }
    return rank;
}

} // namespace testsupport
