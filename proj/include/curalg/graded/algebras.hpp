#pragma once

// Constructors for the algebras used throughout: free graded-commutative
// DGAs in a weight window, truncated polynomial rings, crossing lines,
// Laurent windows and square-zero extensions by a module.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "curalg/error.hpp"
#include "curalg/graded/presentation.hpp"

namespace curalg {

namespace detail {

inline std::string power_label(const std::string& var, int a)
{
    if (a == 0) return "1";
    if (a == 1) return var;
    return var + "^" + std::to_string(a);
}

} // namespace detail

/// Free graded-commutative algebra on gens, restricted to weights inside window.hi.
///
/// delta (optional, one polynomial per generator) extends to an odd derivation
/// of degree -1. Every even generator needs a positive weight coordinate with a
/// finite bound so the basis is finite.
inline GradedAlgebra free_skew_algebra(const std::vector<GeneratorSpec>& gens, WeightWindow window,
                                       std::vector<Poly> delta = {})
{
    std::size_t arity = 1;
    for (const auto& g : gens) arity = std::max(arity, g.weight.size());
    std::vector<GeneratorSpec> gs = gens;
    for (auto& g : gs) g.weight.resize(arity, 0);
    {
        std::vector<std::string> names;
        for (const auto& g : gs) names.push_back(g.name);
        std::sort(names.begin(), names.end());
        if (std::adjacent_find(names.begin(), names.end()) != names.end()) throw Error("duplicate generator name");
    }
    window.hi.resize(arity, window.hi.empty() ? 0 : window.hi.back());
    window.lo.assign(arity, 0);
    for (const auto& g : gs) {
        bool bounded = false;
        for (std::size_t k = 0; k < arity; ++k) {
            if (g.weight[k] < 0) throw Error("generator " + g.name + " has a negative weight");
            if (g.weight[k] > 0) bounded = true;
        }
        if (!g.odd() && !bounded) throw Error("even generator " + g.name + " of zero weight makes the basis infinite");
    }
    FreeMonomials fm(gs);
    if (delta.empty()) delta.assign(gs.size(), {});
    if (delta.size() != gs.size()) throw DimensionError("one differential value per generator expected");

    std::vector<Exponents> monos;
    Exponents cur = fm.one();
    std::function<void(std::size_t, std::vector<int>)> rec = [&](std::size_t i, std::vector<int> w) {
        if (i == gs.size()) {
            monos.push_back(cur);
            return;
        }
        const int cap = gs[i].odd() ? 1 : 1 << 20;
        for (int e = 0; e <= cap; ++e) {
            if (e > 0) {
                bool inside = true;
                for (std::size_t k = 0; k < arity; ++k) {
                    w[k] += gs[i].weight[k];
                    if (w[k] > window.hi[k]) inside = false;
                }
                if (!inside) break;
            }
            cur[i] = e;
            rec(i + 1, w);
        }
        cur[i] = 0;
    };
    rec(0, std::vector<int>(arity, 0));
    auto total = [&](const Exponents& e) {
        int s = 0;
        for (int x : fm.weight(e, arity)) s += x;
        return s;
    };
    std::sort(monos.begin(), monos.end(), [&](const Exponents& a, const Exponents& b) {
        int ta = total(a), tb = total(b);
        if (ta != tb) return ta < tb;
        auto wa = fm.weight(a, arity), wb = fm.weight(b, arity);
        if (wa != wb) return wa < wb;
        if (fm.degree(a) != fm.degree(b)) return fm.degree(a) < fm.degree(b);
        return a > b;
    });

    std::vector<BasisElement> basis;
    std::map<Exponents, int> where;
    for (const auto& e : monos) {
        where[e] = static_cast<int>(basis.size());
        basis.push_back({fm.label(e), fm.degree(e), fm.weight(e, arity), e});
    }
    GradedAlgebra a("free", arity, std::move(basis), window);
    a.unit = where.at(fm.one());
    const int n = a.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& ei = monos[i];
            const auto& ej = monos[j];
            int s = fm.product_sign(ei, ej);
            if (s == 0) continue;
            auto it = where.find(fm.combine(ei, ej));
            if (it == where.end()) a.mark_truncated(i, j);
            else a.set_product(i, j, {{it->second, Rational(s)}});
        }

    for (std::size_t g = 0; g < gs.size(); ++g)
        for (const auto& [e, c] : delta[g]) {
            if (e.size() != gs.size()) throw DimensionError("differential term has the wrong number of exponents");
            if (fm.degree(e) != gs[g].degree - 1)
                throw Error("differential of " + gs[g].name + " is not of degree " + std::to_string(gs[g].degree - 1));
            if (fm.weight(e, arity) != gs[g].weight)
                throw Error("differential of " + gs[g].name + " does not preserve the weight");
        }
    for (int i = 0; i < n; ++i) {
        Poly d = fm.derive(monos[i], delta, true);
        std::map<int, Rational> v;
        for (const auto& [e, c] : d) v[where.at(e)] += c;
        a.set_delta(i, sparse_from_map(v));
    }
    a.free_model = FreeModel{gs, delta};
    return a;
}

/// C[x]/(x^m), basis 1, x, ..., x^(m-1).
inline GradedAlgebra quotient_truncated_poly(int m, const std::string& var = "x")
{
    if (m < 1) throw Error("quotient_truncated_poly: exponent must be >= 1");
    std::vector<BasisElement> basis;
    for (int a = 0; a < m; ++a) basis.push_back({detail::power_label(var, a), 0, {a}, {a}});
    GradedAlgebra alg("quot", 1, std::move(basis), WeightWindow{{0}, {m - 1}});
    for (int a = 0; a < m; ++a)
        for (int b = 0; a + b < m; ++b) alg.set_product(a, b, {{a + b, Rational(1)}});
    return alg;
}

/// C[x,y]/(xy) with total degree <= w; bi-weight (x-degree, y-degree).
inline GradedAlgebra crossing_lines(int w)
{
    if (w < 0) throw Error("crossing_lines: negative window");
    std::vector<BasisElement> basis{{"1", 0, {0, 0}, {0, 0}}};
    for (int a = 1; a <= w; ++a) basis.push_back({detail::power_label("x", a), 0, {a, 0}, {a, 0}});
    for (int b = 1; b <= w; ++b) basis.push_back({detail::power_label("y", b), 0, {0, b}, {0, b}});
    GradedAlgebra alg("cross", 2, std::move(basis), WeightWindow{{0, 0}, {w, w}});
    auto index = [&](int a, int b) { return a > 0 ? a : (b > 0 ? w + b : 0); };
    for (int i = 0; i < alg.size(); ++i)
        for (int j = 0; j < alg.size(); ++j) {
            const auto& wi = alg.basis[i].weight;
            const auto& wj = alg.basis[j].weight;
            int a = wi[0] + wj[0], b = wi[1] + wj[1];
            if (a > 0 && b > 0) continue;
            if (a + b > w) alg.mark_truncated(i, j);
            else alg.set_product(i, j, {{index(a, b), Rational(1)}});
        }
    return alg;
}

/// C[x, x^-1] restricted to exponents in [-d, d].
inline GradedAlgebra laurent_window(int d)
{
    if (d < 0) throw Error("laurent_window: negative window");
    std::vector<BasisElement> basis;
    std::vector<int> order{0};
    for (int a = 1; a <= d; ++a) {
        order.push_back(a);
        order.push_back(-a);
    }
    for (int a : order) basis.push_back({detail::power_label("x", a), 0, {a}, {a}});
    GradedAlgebra alg("laurent", 1, std::move(basis), WeightWindow{{-d}, {d}});
    auto index = [](int a) { return a == 0 ? 0 : (a > 0 ? 2 * a - 1 : -2 * a); };
    for (int i = 0; i < alg.size(); ++i)
        for (int j = 0; j < alg.size(); ++j) {
            int s = alg.basis[i].weight[0] + alg.basis[j].weight[0];
            if (s > d || s < -d) alg.mark_truncated(i, j);
            else alg.set_product(i, j, {{index(s), Rational(1)}});
        }
    return alg;
}

/// C[x]-module C[x, x^-1]/C[x], basis x^-1 .. x^-dm, over C[x] truncated at degree dp.
inline ModuleSpec polar_module(int dp, int dm)
{
    if (dm < 1) throw Error("polar module needs at least one pole order");
    ModuleSpec m;
    m.name = "polar";
    for (int b = 1; b <= dm; ++b) m.basis.push_back({"x^-" + std::to_string(b), 0, {-b}, {-b}});
    const int na = dp + 1;
    m.action.assign(static_cast<std::size_t>(na) * dm, {});
    m.truncated.assign(static_cast<std::size_t>(na) * dm, 0);
    for (int a = 0; a <= dp; ++a)
        for (int b = 1; b <= dm; ++b)
            if (a < b) m.action[static_cast<std::size_t>(a) * dm + (b - 1)] = {{b - a - 1, Rational(1)}};
    return m;
}

/// A + M with M*M = 0; weights gain a last coordinate counting M-factors.
///
/// Module elements keep their own degrees; products a*m use the action and
/// m*a = (-1)^{|a||m|} a*m.
inline GradedAlgebra extend_by_module(const GradedAlgebra& a, const ModuleSpec& m)
{
    std::vector<BasisElement> basis;
    for (auto b : a.basis) {
        b.weight.push_back(0);
        basis.push_back(b);
    }
    for (auto b : m.basis) {
        b.weight.resize(a.arity, 0);
        b.weight.push_back(1);
        basis.push_back(b);
    }
    WeightWindow w = a.window;
    w.lo.resize(a.arity, 0);
    w.hi.resize(a.arity, 0);
    for (const auto& b : m.basis)
        for (std::size_t k = 0; k < a.arity && k < b.weight.size(); ++k) w.lo[k] = std::min(w.lo[k], b.weight[k]);
    w.lo.push_back(0);
    w.hi.push_back(1);
    GradedAlgebra out(a.name + "+" + m.name, a.arity + 1, std::move(basis), w);
    out.unit = a.unit;
    const int na = a.size();
    auto shift = [&](const SparseVec& v) {
        SparseVec r;
        for (const auto& [k, c] : v) r.emplace_back(k + na, c);
        return r;
    };
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            out.set_product(i, j, a.product(i, j));
            if (a.is_truncated(i, j)) out.mark_truncated(i, j);
        }
    for (int i = 0; i < na; ++i)
        for (int x = 0; x < m.size(); ++x) {
            const bool sign = a.is_odd(i) && m.basis[x].odd();
            SparseVec v = shift(m.act(i, x));
            SparseVec vs = v;
            if (sign)
                for (auto& [k, c] : vs) c = -c;
            out.set_product(i, na + x, v);
            out.set_product(na + x, i, vs);
            if (m.is_truncated(i, x)) {
                out.mark_truncated(i, na + x);
                out.mark_truncated(na + x, i);
            }
        }
    for (int i = 0; i < na; ++i) out.set_delta(i, a.delta(i));
    return out;
}

/// C[x] (degree <= dp) + C[x, x^-1]/C[x] (pole order <= dm), square-zero.
inline GradedAlgebra square_zero_extension(int dp, int dm)
{
    GradedAlgebra poly = free_skew_algebra({{"x", 0, {1}}}, WeightWindow{{0}, {dp}});
    poly.free_model.reset();
    poly.name = "poly";
    GradedAlgebra out = extend_by_module(poly, polar_module(dp, dm));
    out.name = "sqzero";
    return out;
}

} // namespace curalg
