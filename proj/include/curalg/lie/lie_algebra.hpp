#pragma once

// sl_n and gl_n in the matrix-unit basis, with structure constants,
// Cartan weights, trace form and invariant polynomials Tr(M^{i+1}).
//
// Basis order: e_ij (i < j), then the diagonal part (h_k = e_kk - e_{k+1,k+1}
// for sl_n, e_kk for gl_n), then e_ij (i > j). For sl_2 this is e, h, f.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "curalg/error.hpp"
#include "curalg/exact/sparse_matrix.hpp"

namespace curalg {

/// Sparse square matrix keyed by (row, col).
using MatrixUnitSum = std::map<std::pair<int, int>, Rational>;

inline MatrixUnitSum matmul(const MatrixUnitSum& a, const MatrixUnitSum& b)
{
    MatrixUnitSum r;
    for (const auto& [ij, x] : a)
        for (const auto& [kl, y] : b)
            if (ij.second == kl.first) r[{ij.first, kl.second}] += x * y;
    for (auto it = r.begin(); it != r.end();) it = is_zero(it->second) ? r.erase(it) : std::next(it);
    return r;
}

inline Rational trace(const MatrixUnitSum& a)
{
    Rational t = 0;
    for (const auto& [ij, x] : a)
        if (ij.first == ij.second) t += x;
    return t;
}

class LiePresentation {
public:
    std::string name;
    int n = 0;
    std::vector<std::string> labels;
    std::vector<MatrixUnitSum> matrices;
    /// Weight of each basis element under the diagonal torus (coefficients of eps_1..eps_n).
    std::vector<std::vector<int>> cartan;
    std::vector<int> exponents;
    /// Basis indices of the simple raising operators e_{k,k+1}.
    std::vector<int> raising;

    int dim() const { return static_cast<int>(labels.size()); }
    const SparseVec& bracket(int a, int b) const { return brackets_[static_cast<std::size_t>(a) * dim() + b]; }

    /// sl_2 torus weight: e -> 2, h -> 0, f -> -2 (eps_1 - eps_2 coefficient for sl_n).
    int u_weight(int a) const { return cartan[a].size() >= 2 ? cartan[a][0] - cartan[a][1] : 0; }

    Rational trace_form(int a, int b) const { return trace(matmul(matrices[a], matrices[b])); }

    /// Polarized Tr(M^{k}) on basis elements, k = args.size(): average of Tr over orderings.
    Rational invariant_polynomial(std::vector<int> args) const
    {
        std::sort(args.begin(), args.end());
        Rational sum = 0;
        long count = 0;
        do {
            MatrixUnitSum p = matrices[args[0]];
            for (std::size_t k = 1; k < args.size(); ++k) p = matmul(p, matrices[args[k]]);
            sum += trace(p);
            ++count;
        } while (std::next_permutation(args.begin(), args.end()));
        return sum / count;
    }

    /// Coordinates of a matrix in this basis; throws if it is not in the span.
    SparseVec coordinates(const MatrixUnitSum& m) const
    {
        std::map<int, Rational> v;
        std::vector<Rational> diag(n, 0);
        for (const auto& [ij, x] : m) {
            if (ij.first != ij.second) v[index_.at(ij)] += x;
            else diag[ij.first] += x;
        }
        if (name == "gl") {
            for (int k = 0; k < n; ++k)
                if (!is_zero(diag[k])) v[index_.at({k, k})] += diag[k];
        } else {
            Rational run = 0;
            for (int k = 0; k + 1 < n; ++k) {
                run += diag[k];
                if (!is_zero(run)) v[index_.at({k, k})] += run;
            }
            if (!is_zero(run + diag[n - 1])) throw Error("matrix is not traceless");
        }
        return sparse_from_map(v);
    }

    /// Jacobi identity on every basis triple.
    bool check_jacobi() const
    {
        for (int a = 0; a < dim(); ++a)
            for (int b = 0; b < dim(); ++b)
                for (int c = 0; c < dim(); ++c) {
                    std::map<int, Rational> s;
                    auto acc = [&](int x, int y, int z) {
                        for (const auto& [k, u] : bracket(y, z))
                            for (const auto& [l, w] : bracket(x, k)) s[l] += u * w;
                    };
                    acc(a, b, c);
                    acc(b, c, a);
                    acc(c, a, b);
                    if (!sparse_from_map(s).empty()) return false;
                }
        return true;
    }

    /// <[a,b],c> + <b,[a,c]> = 0 for the trace form.
    bool check_form_invariance() const
    {
        for (int a = 0; a < dim(); ++a)
            for (int b = 0; b < dim(); ++b)
                for (int c = 0; c < dim(); ++c) {
                    Rational s = 0;
                    for (const auto& [k, u] : bracket(a, b)) s += u * trace_form(k, c);
                    for (const auto& [k, u] : bracket(a, c)) s += u * trace_form(b, k);
                    if (!is_zero(s)) return false;
                }
        return true;
    }

    /// sum_j P(b_1, .., [a, b_j], .., b_k) = 0 on all basis tuples of length k.
    bool check_polynomial_invariance(int k) const
    {
        std::vector<int> tup(k, 0);
        while (true) {
            for (int a = 0; a < dim(); ++a) {
                Rational s = 0;
                for (int j = 0; j < k; ++j)
                    for (const auto& [c, u] : bracket(a, tup[j])) {
                        auto t = tup;
                        t[j] = c;
                        s += u * invariant_polynomial(t);
                    }
                if (!is_zero(s)) return false;
            }
            int p = k - 1;
            while (p >= 0 && tup[p] == dim() - 1) tup[p--] = 0;
            if (p < 0) break;
            ++tup[p];
        }
        return true;
    }

    void finalize()
    {
        for (int a = 0; a < dim(); ++a)
            for (const auto& [ij, x] : matrices[a])
                if (ij.first != ij.second) index_[ij] = a;
        // diagonal generators are registered under (k, k)
        for (int a = 0; a < dim(); ++a) {
            bool diagonal = true;
            int first = -1;
            for (const auto& [ij, x] : matrices[a]) {
                diagonal = diagonal && ij.first == ij.second;
                if (first < 0) first = ij.first;
            }
            if (diagonal) index_[{first, first}] = a;
        }
        brackets_.assign(static_cast<std::size_t>(dim()) * dim(), {});
        for (int a = 0; a < dim(); ++a)
            for (int b = 0; b < dim(); ++b) {
                MatrixUnitSum c = matmul(matrices[a], matrices[b]);
                for (const auto& [ij, x] : matmul(matrices[b], matrices[a])) c[ij] -= x;
                for (auto it = c.begin(); it != c.end();) it = is_zero(it->second) ? c.erase(it) : std::next(it);
                brackets_[static_cast<std::size_t>(a) * dim() + b] = coordinates(c);
            }
    }

private:
    std::map<std::pair<int, int>, int> index_;
    std::vector<SparseVec> brackets_;
};

/// "sl" (n >= 2) or "gl" (n >= 1).
inline LiePresentation lie_presentation(const std::string& name, int n)
{
    if (name != "sl" && name != "gl") throw Error("unsupported Lie algebra '" + name + "'");
    if ((name == "sl" && n < 2) || n < 1) throw Error("rank too small for " + name);
    LiePresentation g;
    g.name = name;
    g.n = n;
    auto unit = [&](int i, int j) {
        std::vector<int> w(n, 0);
        w[i] += 1;
        w[j] -= 1;
        g.matrices.push_back({{{i, j}, Rational(1)}});
        g.cartan.push_back(w);
        g.labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) unit(i, j);
    if (name == "gl") {
        for (int k = 0; k < n; ++k) unit(k, k);
    } else {
        for (int k = 0; k + 1 < n; ++k) {
            g.matrices.push_back({{{k, k}, Rational(1)}, {{k + 1, k + 1}, Rational(-1)}});
            g.cartan.push_back(std::vector<int>(n, 0));
            g.labels.push_back("h" + std::to_string(k + 1));
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) unit(i, j);
    if (name == "sl" && n == 2) g.labels = {"e", "h", "f"};
    for (int k = 0; k + 1 < n; ++k)
        for (int a = 0; a < g.dim(); ++a)
            if (g.matrices[a].size() == 1 && g.matrices[a].begin()->first == std::make_pair(k, k + 1)) g.raising.push_back(a);
    for (int m = name == "sl" ? 1 : 0; m < n; ++m) g.exponents.push_back(m);
    g.finalize();
    return g;
}

} // namespace curalg
