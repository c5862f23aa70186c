#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "curalg/error.hpp"
#include "curalg/exact/rational.hpp"

namespace curalg {

/// Sorted by index, no stored zeros.
using SparseVec = std::vector<std::pair<int, Rational>>;

struct SparseEntry {
    int row;
    int col;
    Rational value;
};

/// Immutable sparse rational matrix. Entries are unique and nonzero.
class SparseMatQ {
public:
    SparseMatQ() = default;

    SparseMatQ(int rows, int cols, std::vector<SparseEntry> entries) : rows_(rows), cols_(cols)
    {
        if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
        std::sort(entries.begin(), entries.end(), [](const SparseEntry& a, const SparseEntry& b) {
            return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto& e = entries[i];
            if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
                throw DimensionError("sparse entry index out of range");
            if (i > 0 && entries[i - 1].row == e.row && entries[i - 1].col == e.col)
                throw DimensionError("duplicate sparse entry");
        }
        std::erase_if(entries, [](const SparseEntry& e) { return is_zero(e.value); });
        entries_ = std::move(entries);
    }

    static SparseMatQ identity(int n)
    {
        std::vector<SparseEntry> e;
        for (int i = 0; i < n; ++i) e.push_back({i, i, Rational(1)});
        return {n, n, std::move(e)};
    }

    static SparseMatQ from_dense(const std::vector<std::vector<Rational>>& d)
    {
        int rows = static_cast<int>(d.size());
        int cols = rows == 0 ? 0 : static_cast<int>(d[0].size());
        std::vector<SparseEntry> e;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (!is_zero(d[i][j])) e.push_back({i, j, d[i][j]});
        return {rows, cols, std::move(e)};
    }

    /// Columns given as sparse vectors of length `rows`.
    static SparseMatQ from_columns(int rows, const std::vector<SparseVec>& cols)
    {
        std::vector<SparseEntry> e;
        for (int j = 0; j < static_cast<int>(cols.size()); ++j)
            for (const auto& [i, v] : cols[j]) e.push_back({i, j, v});
        return {rows, static_cast<int>(cols.size()), std::move(e)};
    }

    static SparseMatQ from_rows(int cols, const std::vector<SparseVec>& rows)
    {
        std::vector<SparseEntry> e;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            for (const auto& [j, v] : rows[i]) e.push_back({i, j, v});
        return {static_cast<int>(rows.size()), cols, std::move(e)};
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<SparseEntry>& entries() const { return entries_; }
    std::size_t nonzeros() const { return entries_.size(); }

    SparseMatQ transpose() const
    {
        std::vector<SparseEntry> e;
        e.reserve(entries_.size());
        for (const auto& x : entries_) e.push_back({x.col, x.row, x.value});
        return {cols_, rows_, std::move(e)};
    }

    std::vector<SparseVec> row_vectors() const
    {
        std::vector<SparseVec> out(rows_);
        for (const auto& x : entries_) out[x.row].emplace_back(x.col, x.value);
        return out;
    }

    std::vector<SparseVec> column_vectors() const
    {
        std::vector<SparseVec> out(cols_);
        for (const auto& x : entries_) out[x.col].emplace_back(x.row, x.value);
        return out;
    }

    std::vector<std::vector<Rational>> to_dense() const
    {
        std::vector<std::vector<Rational>> d(rows_, std::vector<Rational>(cols_));
        for (const auto& x : entries_) d[x.row][x.col] = x.value;
        return d;
    }

    /// m * v for a sparse column vector v of length cols().
    SparseVec apply(const SparseVec& v) const
    {
        std::map<int, Rational> acc;
        std::vector<Rational> dense(cols_);
        for (const auto& [j, x] : v) {
            if (j < 0 || j >= cols_) throw DimensionError("vector index out of range");
            dense[j] = x;
        }
        for (const auto& e : entries_)
            if (!is_zero(dense[e.col])) acc[e.row] += e.value * dense[e.col];
        SparseVec out;
        for (auto& [i, x] : acc)
            if (!is_zero(x)) out.emplace_back(i, x);
        return out;
    }

    /// y^T * m for a sparse row vector y of length rows().
    SparseVec apply_left(const SparseVec& y) const
    {
        std::vector<Rational> dense(rows_);
        for (const auto& [i, x] : y) {
            if (i < 0 || i >= rows_) throw DimensionError("vector index out of range");
            dense[i] = x;
        }
        std::map<int, Rational> acc;
        for (const auto& e : entries_)
            if (!is_zero(dense[e.row])) acc[e.col] += dense[e.row] * e.value;
        SparseVec out;
        for (auto& [j, x] : acc)
            if (!is_zero(x)) out.emplace_back(j, x);
        return out;
    }

    bool is_zero_matrix() const { return entries_.empty(); }

    friend bool operator==(const SparseMatQ& a, const SparseMatQ& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size()) return false;
        for (std::size_t i = 0; i < a.entries_.size(); ++i) {
            const auto& x = a.entries_[i];
            const auto& y = b.entries_[i];
            if (x.row != y.row || x.col != y.col || x.value != y.value) return false;
        }
        return true;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<SparseEntry> entries_;
};

/// Accumulating builder; repeated (row, col) additions are summed.
class SparseMatBuilder {
public:
    SparseMatBuilder(int rows, int cols) : rows_(rows), cols_(cols) {}

    void add(int row, int col, const Rational& v)
    {
        if (is_zero(v)) return;
        acc_[{row, col}] += v;
    }

    SparseMatQ build() const
    {
        std::vector<SparseEntry> e;
        e.reserve(acc_.size());
        for (const auto& [k, v] : acc_)
            if (!is_zero(v)) e.push_back({k.first, k.second, v});
        return {rows_, cols_, std::move(e)};
    }

private:
    int rows_;
    int cols_;
    std::map<std::pair<int, int>, Rational> acc_;
};

inline SparseMatQ operator*(const SparseMatQ& a, const SparseMatQ& b)
{
    if (a.cols() != b.rows()) throw DimensionError("matrix product dimension mismatch");
    auto brows = b.row_vectors();
    std::map<std::pair<int, int>, Rational> acc;
    for (const auto& e : a.entries())
        for (const auto& [j, v] : brows[e.col]) acc[{e.row, j}] += e.value * v;
    std::vector<SparseEntry> out;
    for (auto& [k, v] : acc)
        if (!is_zero(v)) out.push_back({k.first, k.second, v});
    return {a.rows(), b.cols(), std::move(out)};
}

inline SparseMatQ operator-(const SparseMatQ& a, const SparseMatQ& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix difference dimension mismatch");
    SparseMatBuilder m(a.rows(), a.cols());
    for (const auto& e : a.entries()) m.add(e.row, e.col, e.value);
    for (const auto& e : b.entries()) m.add(e.row, e.col, -e.value);
    return m.build();
}

// ---------------------------------------------------------------------------
// Sparse vector helpers

inline SparseVec sparse_from_map(const std::map<int, Rational>& m)
{
    SparseVec v;
    for (const auto& [i, x] : m)
        if (!is_zero(x)) v.emplace_back(i, x);
    return v;
}

inline SparseVec sparse_add(const SparseVec& a, const SparseVec& b, const Rational& scale_b = Rational(1))
{
    SparseVec out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, scale_b * b[j].second);
            ++j;
        } else {
            Rational s = a[i].second + scale_b * b[j].second;
            if (!is_zero(s)) out.emplace_back(a[i].first, s);
            ++i;
            ++j;
        }
    }
    return out;
}

inline Rational sparse_dot(const SparseVec& a, const SparseVec& b)
{
    Rational s;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) ++i;
        else if (b[j].first < a[i].first) ++j;
        else s += a[i++].second * b[j++].second;
    }
    return s;
}

inline Rational sparse_at(const SparseVec& v, int index)
{
    auto it = std::lower_bound(v.begin(), v.end(), index,
                               [](const auto& p, int k) { return p.first < k; });
    return (it != v.end() && it->first == index) ? it->second : Rational(0);
}

} // namespace curalg
