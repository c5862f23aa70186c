#pragma once

// Independent reference computations used only by tests.

#include <random>
#include <vector>

#include "curalg/exact/rational.hpp"
#include "curalg/exact/sparse_matrix.hpp"

namespace oracle {

using curalg::Integer;
using curalg::Rational;

/// Rank by dense Bareiss elimination on an integer matrix.
inline std::size_t bareiss_rank(std::vector<std::vector<Integer>> a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

inline std::vector<std::vector<Integer>> random_int_matrix(std::mt19937& rng, int rows, int cols, int bound, double density)
{
    std::uniform_int_distribution<int> val(-bound, bound);
    std::bernoulli_distribution keep(density);
    std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols, 0));
    for (auto& row : m)
        for (auto& x : row)
            if (keep(rng)) x = val(rng);
    return m;
}

inline curalg::SparseMatQ to_sparse(const std::vector<std::vector<Integer>>& m)
{
    std::vector<std::vector<Rational>> d;
    for (const auto& row : m) {
        d.emplace_back();
        for (const auto& x : row) d.back().emplace_back(x);
    }
    return curalg::SparseMatQ::from_dense(d);
}

} // namespace oracle
