#pragma once

// Adams-bigraded cyclic homology: HC_n^(i)(A, delta) is the cohomology of
// the i-truncated de Rham complex R^i(A, delta) in total degree 2i - n.
//
// Weight slices of R^i are finite and closed under d + delta, so each entry
// is computed from the free model exactly; no window truncation enters.

#include <map>
#include <string>
#include <vector>

#include "curalg/derham/derham.hpp"
#include "curalg/exact/homology.hpp"
#include "curalg/graded/algebras.hpp"

namespace curalg {

/// (C[x, xi], delta xi = x^m): x even of weight 1, xi odd of weight m.
inline GradedAlgebra resolve_quotient(int m, int window = 0, const std::string& var = "x")
{
    if (m < 1) throw Error("resolve_quotient: exponent must be >= 1");
    const std::string xi = var == "xi" ? "eta" : "xi";
    std::vector<GeneratorSpec> gens{{var, 0, {1}}, {xi, 1, {m}}};
    Poly dxi{{Exponents{m, 0}, Rational(1)}};
    GradedAlgebra a = free_skew_algebra(gens, WeightWindow{{}, {window > 0 ? window : 3 * m}}, {{}, dxi});
    a.name = "resolve_quotient(" + std::to_string(m) + ")";
    return a;
}

/// (C[x, y, eta], delta eta = x y) resolving C[x,y]/(xy); bi-weights (1,0), (0,1), (1,1).
inline GradedAlgebra resolve_crossing(int window = 4)
{
    std::vector<GeneratorSpec> gens{{"x", 0, {1, 0}}, {"y", 0, {0, 1}}, {"eta", 1, {1, 1}}};
    Poly deta{{Exponents{1, 1, 0}, Rational(1)}};
    GradedAlgebra a = free_skew_algebra(gens, WeightWindow{{}, {window, window}}, {{}, {}, deta});
    a.name = "resolve_crossing";
    return a;
}

/// Free model computing the cyclic homology of a; quotients use their Koszul resolutions.
inline FreeModel cyclic_model(const GradedAlgebra& a)
{
    if (a.free_model) return *a.free_model;
    if (a.name == "quot") {
        const std::string var = a.size() > 1 ? a.basis[1].label : "x";
        return *resolve_quotient(a.size(), 0, var).free_model;
    }
    if (a.name == "cross") return *resolve_crossing().free_model;
    throw Error("cyclic homology of '" + a.name + "' needs a free resolution; none is attached");
}

struct HCEntry {
    int n = 0;
    int i = 0;
    std::vector<int> weight;
    std::size_t dim = 0;
    bool trusted = true;
};

struct HCTable {
    std::string algebra;
    WeightWindow window;
    std::vector<HCEntry> entries;

    const HCEntry* find(int n, int i, const std::vector<int>& weight) const
    {
        for (const auto& e : entries)
            if (e.n == n && e.i == i && e.weight == weight) return &e;
        return nullptr;
    }
    std::size_t dim(int n, int i, const std::vector<int>& weight) const
    {
        const HCEntry* e = find(n, i, weight);
        if (!e) throw Error("HCTable: entry not computed");
        return e->dim;
    }
    /// Sum over all computed weights.
    std::size_t total(int n, int i) const
    {
        std::size_t s = 0;
        for (const auto& e : entries)
            if (e.n == n && e.i == i) s += e.dim;
        return s;
    }
    bool all_trusted() const
    {
        for (const auto& e : entries)
            if (!e.trusted) return false;
        return true;
    }
};

/// Every integer vector in [lo, hi] coordinatewise (lo defaults to 0).
inline std::vector<std::vector<int>> weights_in(const WeightWindow& w)
{
    std::vector<std::vector<int>> out{{}};
    for (std::size_t k = 0; k < w.hi.size(); ++k) {
        const int lo = k < w.lo.size() ? w.lo[k] : 0;
        std::vector<std::vector<int>> next;
        for (const auto& p : out)
            for (int x = lo; x <= w.hi[k]; ++x) {
                auto q = p;
                q.push_back(x);
                next.push_back(q);
            }
        out = std::move(next);
    }
    return out;
}

namespace detail {

/// dim H^T of R^i at one weight, for every T in [t_lo, t_hi].
inline std::map<int, std::size_t> derham_cohomology(const DeRhamComplex& r, const std::vector<int>& weight, int t_lo,
                                                    int t_hi)
{
    auto bases = r.slice_bases(weight);
    auto basis = [&](int t) -> const std::vector<Exponents>& {
        static const std::vector<Exponents> empty;
        auto it = bases.find(t);
        return it == bases.end() ? empty : it->second;
    };
    std::map<int, std::size_t> ranks; // rank of D : C^T -> C^{T+1}
    auto rank_at = [&](int t) {
        auto it = ranks.find(t);
        if (it != ranks.end()) return it->second;
        std::size_t rk = (basis(t).empty() || basis(t + 1).empty()) ? 0 : rank(r.total_matrix(basis(t), basis(t + 1)));
        ranks[t] = rk;
        return rk;
    };
    std::map<int, std::size_t> out;
    for (int t = t_lo; t <= t_hi; ++t) {
        const std::size_t dim = basis(t).size();
        out[t] = dim == 0 ? 0 : dim - rank_at(t) - rank_at(t - 1);
    }
    return out;
}

} // namespace detail

/// HC_n^(i) for i in [0, i_max], n in [n_lo, n_hi], each weight in `weights`.
inline HCTable cyclic_homology(const FreeModel& model, const std::string& name, int i_max, int n_lo, int n_hi,
                               const WeightWindow& weights)
{
    HCTable t;
    t.algebra = name;
    t.window = weights;
    DeRhamComplex full(model);
    for (int i = 0; i <= i_max; ++i) {
        DeRhamComplex r = full.truncated(i);
        for (const auto& w : weights_in(weights)) {
            auto h = detail::derham_cohomology(r, w, 2 * i - n_hi, 2 * i - n_lo);
            for (int n = n_lo; n <= n_hi; ++n) t.entries.push_back({n, i, w, h.at(2 * i - n), true});
        }
    }
    return t;
}

inline HCTable cyclic_homology(const GradedAlgebra& a, int i_max, int n_lo, int n_hi, const WeightWindow& weights)
{
    return cyclic_homology(cyclic_model(a), a.spec_text.empty() ? a.name : a.spec_text, i_max, n_lo, n_hi, weights);
}

/// Default range: n in [0, 2 i_max + 2], weights from the algebra window.
inline HCTable cyclic_homology(const GradedAlgebra& a, int i_max, const WeightWindow& weights)
{
    return cyclic_homology(a, i_max, 0, 2 * i_max + 2, weights);
}

struct PeriodicityReport {
    int i = 0;
    int n = 0;
    std::vector<int> weight;
    std::size_t source_dim = 0; // HC_n^(i)
    std::size_t target_dim = 0; // HC_{n-2}^(i-1)
    std::size_t rank = 0;
};

/// Rank of S : HC_n^(i) -> HC_{n-2}^(i-1) induced by the quotient R^i -> R^(i-1).
inline PeriodicityReport periodicity_S(const FreeModel& model, int i, int n, const std::vector<int>& weight)
{
    if (i < 1) throw Error("periodicity_S: needs i >= 1");
    PeriodicityReport rep{i, n, weight};
    DeRhamComplex full(model);
    const DeRhamComplex src = full.truncated(i), dst = full.truncated(i - 1);
    const int t = 2 * i - n; // both sides sit in this total degree
    auto sb = src.slice_bases(weight), db = dst.slice_bases(weight);
    auto get = [](const std::map<int, std::vector<Exponents>>& m, int k) {
        auto it = m.find(k);
        return it == m.end() ? std::vector<Exponents>{} : it->second;
    };
    const auto s_prev = get(sb, t - 1), s_cur = get(sb, t), s_next = get(sb, t + 1);
    const auto d_prev = get(db, t - 1), d_cur = get(db, t), d_next = get(db, t + 1);
    rep.source_dim = detail::derham_cohomology(src, weight, t, t).at(t);
    rep.target_dim = detail::derham_cohomology(dst, weight, t, t).at(t);
    if (rep.source_dim == 0 || rep.target_dim == 0) return rep;

    auto cycles = rank_kernel(src.total_matrix(s_cur, s_next)).kernel_basis;
    std::map<Exponents, int> where;
    for (std::size_t k = 0; k < d_cur.size(); ++k) where[d_cur[k]] = static_cast<int>(k);
    std::vector<SparseVec> images;
    for (const auto& z : cycles) {
        std::map<int, Rational> v;
        for (const auto& [k, c] : z) {
            auto it = where.find(s_cur[k]);
            if (it != where.end()) v[it->second] += c; // forms of degree i map to zero
        }
        images.push_back(sparse_from_map(v));
    }
    rep.rank = induced_rank(images, dst.total_matrix(d_prev, d_cur));
    return rep;
}

} // namespace curalg
