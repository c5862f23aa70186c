#pragma once

// Exact rank, kernel and membership over Q.
//
// Rows are kept as primitive integer vectors: every elimination step is the
// fraction-free update  r <- p*r - a*pivot_row  followed by division by the
// row content, which keeps entry growth in check the way Bareiss' divisor
// does for dense matrices. Pivots follow a Markowitz-style rule: the shortest
// active row, and inside it the column with the fewest active occurrences.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "curalg/error.hpp"
#include "curalg/exact/rational.hpp"
#include "curalg/exact/sparse_matrix.hpp"

namespace curalg {

struct RankKernel {
    std::size_t rank = 0;
    std::vector<SparseVec> kernel_basis;
    /// Pivot columns of the reduced echelon form, in elimination order.
    std::vector<int> pivot_columns;
    /// Non-pivot columns; kernel_basis[k] has a 1 at free_columns[k] and 0 at every other free column.
    std::vector<int> free_columns;
};

namespace detail {

using IntRow = std::vector<std::pair<int, Integer>>;

inline void make_primitive(IntRow& row)
{
    if (row.empty()) return;
    Integer g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (row.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

inline IntRow to_int_row(const SparseVec& v)
{
    Integer l = 1;
    for (const auto& [c, x] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntRow row;
    row.reserve(v.size());
    for (const auto& [c, x] : v) {
        Integer n = x.get_num() * (l / x.get_den());
        row.emplace_back(c, std::move(n));
    }
    make_primitive(row);
    return row;
}

inline const Integer* find_in(const IntRow& r, int col)
{
    auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& p, int k) { return p.first < k; });
    return (it != r.end() && it->first == col) ? &it->second : nullptr;
}

/// r <- p*r - a*s, with p = s[col], a = r[col]; result primitive.
inline IntRow eliminate(const IntRow& r, const IntRow& s, int col)
{
    const Integer p = *find_in(s, col);
    const Integer a = *find_in(r, col);
    Integer g = gcd(p, a);
    Integer pp = p / g;
    Integer aa = a / g;
    IntRow out;
    out.reserve(r.size() + s.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < s.size()) {
        if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
            out.emplace_back(r[i].first, pp * r[i].second);
            ++i;
        } else if (i == r.size() || s[j].first < r[i].first) {
            out.emplace_back(s[j].first, -aa * s[j].second);
            ++j;
        } else {
            Integer v = pp * r[i].second - aa * s[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    make_primitive(out);
    return out;
}

struct Echelon {
    std::vector<IntRow> rows;    // pivot rows in elimination order
    std::vector<int> pivots;     // pivot column per row
};

inline Echelon forward_eliminate(const SparseMatQ& m)
{
    const int ncols = m.cols();
    auto rv = m.row_vectors();
    std::vector<IntRow> rows;
    rows.reserve(rv.size());
    for (auto& v : rv)
        if (!v.empty()) rows.push_back(to_int_row(v));

    std::vector<char> active(rows.size(), 1);
    std::vector<std::vector<int>> col_rows(ncols);
    std::vector<int> col_count(ncols, 0);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        for (const auto& [c, v] : rows[i]) {
            col_rows[c].push_back(i);
            ++col_count[c];
        }

    Echelon ech;
    std::size_t remaining = rows.size();
    while (remaining > 0) {
        int best = -1;
        std::size_t best_len = std::numeric_limits<std::size_t>::max();
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (!active[i]) continue;
            if (rows[i].empty()) {
                active[i] = 0;
                --remaining;
                continue;
            }
            if (rows[i].size() < best_len) {
                best_len = rows[i].size();
                best = i;
                if (best_len == 1) break;
            }
        }
        if (best < 0) break;
        int pcol = -1;
        int pcount = std::numeric_limits<int>::max();
        for (const auto& [c, v] : rows[best])
            if (col_count[c] < pcount) {
                pcount = col_count[c];
                pcol = c;
            }
        active[best] = 0;
        --remaining;
        for (const auto& [c, v] : rows[best]) --col_count[c];

        std::vector<int> targets;
        for (int r : col_rows[pcol])
            if (r != best && active[r] && find_in(rows[r], pcol)) targets.push_back(r);
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (int r : targets) {
            for (const auto& [c, v] : rows[r]) --col_count[c];
            rows[r] = eliminate(rows[r], rows[best], pcol);
            for (const auto& [c, v] : rows[r]) {
                ++col_count[c];
                col_rows[c].push_back(r);
            }
        }
        // no active row holds pcol any more
        col_rows[pcol].clear();
        ech.rows.push_back(std::move(rows[best]));
        ech.pivots.push_back(pcol);
        rows[best].clear();
    }
    return ech;
}

} // namespace detail

inline std::size_t rank(const SparseMatQ& m)
{
    if (m.nonzeros() == 0) return 0;
    // eliminate along the shorter side
    if (m.rows() > m.cols()) return detail::forward_eliminate(m.transpose()).pivots.size();
    return detail::forward_eliminate(m).pivots.size();
}

/// Rank and an exact kernel basis of m (vectors of length m.cols()).
inline RankKernel rank_kernel(const SparseMatQ& m)
{
    RankKernel out;
    detail::Echelon ech = detail::forward_eliminate(m);
    const std::size_t r = ech.rows.size();
    out.rank = r;
    out.pivot_columns = ech.pivots;

    std::vector<int> pivot_of_col(m.cols(), -1);
    for (std::size_t k = 0; k < r; ++k) pivot_of_col[ech.pivots[k]] = static_cast<int>(k);

    // back-substitution to reduced form: row k keeps only its own pivot among pivot columns
    for (std::size_t kk = r; kk-- > 0;) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [c, v] : ech.rows[kk]) {
                int j = pivot_of_col[c];
                if (j >= 0 && static_cast<std::size_t>(j) != kk) {
                    ech.rows[kk] = detail::eliminate(ech.rows[kk], ech.rows[j], c);
                    changed = true;
                    break;
                }
            }
        }
    }

    std::map<int, std::vector<std::pair<int, Rational>>> by_free;
    for (std::size_t k = 0; k < r; ++k) {
        const Integer& p = *detail::find_in(ech.rows[k], ech.pivots[k]);
        for (const auto& [c, v] : ech.rows[k])
            if (c != ech.pivots[k]) by_free[c].emplace_back(ech.pivots[k], -make_rational(v, p));
    }
    for (int c = 0; c < m.cols(); ++c) {
        if (pivot_of_col[c] >= 0) continue;
        out.free_columns.push_back(c);
        SparseVec v;
        v.emplace_back(c, Rational(1));
        if (auto it = by_free.find(c); it != by_free.end())
            for (auto& e : it->second) v.push_back(e);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out.kernel_basis.push_back(std::move(v));
    }
    return out;
}

struct Membership {
    bool in_image = false;
    /// m * witness == v when in_image.
    std::optional<SparseVec> witness;
    /// y with y*m == 0 and y.v != 0 when not in_image.
    std::optional<SparseVec> certificate;
};

/// Decide whether v lies in the column space of m.
inline Membership solve_membership(const SparseMatQ& m, const SparseVec& v)
{
    for (const auto& [i, x] : v)
        if (i < 0 || i >= m.rows()) throw DimensionError("membership: vector length does not match matrix rows");
    Membership out;
    if (v.empty()) {
        out.in_image = true;
        out.witness = SparseVec{};
        return out;
    }
    std::vector<SparseEntry> aug(m.entries().begin(), m.entries().end());
    for (const auto& [i, x] : v) aug.push_back({i, m.cols(), x});
    SparseMatQ a(m.rows(), m.cols() + 1, std::move(aug));
    RankKernel rk = rank_kernel(a);
    for (const auto& k : rk.kernel_basis) {
        Rational last = sparse_at(k, m.cols());
        if (is_zero(last)) continue;
        SparseVec w;
        for (const auto& [j, x] : k)
            if (j != m.cols()) w.emplace_back(j, -x / last);
        out.in_image = true;
        out.witness = std::move(w);
        return out;
    }
    RankKernel left = rank_kernel(m.transpose());
    for (const auto& y : left.kernel_basis)
        if (!is_zero(sparse_dot(y, v))) {
            out.certificate = y;
            return out;
        }
    throw Error("solve_membership: no certificate found (internal inconsistency)");
}

} // namespace curalg
