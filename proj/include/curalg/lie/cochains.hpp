#pragma once

// Chains and cochains as sparse functions on chain monomials, cup products,
// boundary tests with exact witnesses or certificates, and the cocycles built
// from invariant polynomials and a functional on differential forms.
//
// The integral cocycle of degree n + 1 attached to Tr(M^{i+1}) is
//   I(xi_0, .., xi_n) = sum_{sigma in S_{n+1}} sgn(sigma)
//       P(xi_s0, [xi_s1, xi_s2], .., [xi_s(2n-2i-1), xi_s(2n-2i)], d xi_s(2n-2i+1), .., d xi_sn)
// with n - i brackets and 2i - n differentials; P evaluates the polarized
// invariant polynomial on the g-parts and wedges the form parts in slot order.
// Forms are Laurent monomials x^v dx_I in the ambient coordinates of A.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "curalg/error.hpp"
#include "curalg/exact/elimination.hpp"
#include "curalg/lie/ce_complex.hpp"

namespace curalg {

enum class Direction { Chain, Cochain };

struct CochainClass {
    Direction direction = Direction::Cochain;
    int degree = 0;
    std::vector<int> weight;
    /// Values (cochain) or coefficients (chain) on chain monomials; zero entries are absent.
    std::map<Exponents, Rational> values;
    /// Cocycle (or cycle) condition verified on every trusted chain of the adjacent slice.
    bool closed = false;
    std::size_t checked = 0;
    std::size_t skipped = 0;

    Rational at(const Exponents& e) const
    {
        auto it = values.find(e);
        return it == values.end() ? Rational(0) : it->second;
    }
    bool is_zero() const { return values.empty(); }
};

/// Coordinates of `c` over an ordered basis.
inline SparseVec restrict_to(const CochainClass& c, const std::vector<Exponents>& basis)
{
    SparseVec v;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Rational x = c.at(basis[i]);
        if (!is_zero(x)) v.emplace_back(static_cast<int>(i), x);
    }
    return v;
}

/// Sparse vector as (basis label, value) pairs.
inline std::vector<std::pair<std::string, Rational>> labelled(const CeComplex& cx, const std::vector<Exponents>& basis,
                                                              const SparseVec& v)
{
    std::vector<std::pair<std::string, Rational>> out;
    for (const auto& [i, x] : v) out.emplace_back(cx.label(basis[i]), x);
    return out;
}

/// Verifies c o d = 0 (cochains) or d c = 0 (chains), skipping chains whose boundary left the window.
inline void certify_closed(const CeComplex& cx, CochainClass& c)
{
    c.checked = c.skipped = 0;
    if (c.direction == Direction::Chain) {
        bool truncated = false;
        Poly d;
        for (const auto& [e, x] : c.values) poly_add(d, cx.boundary(e, &truncated), x);
        c.closed = d.empty() && !truncated;
        c.checked = c.values.size();
        return;
    }
    c.closed = true;
    for (const auto& [cart, basis] : cx.basis_by_cartan(c.degree + 1, c.weight))
        for (const auto& e : basis) {
            bool truncated = false;
            Poly d = cx.boundary(e, &truncated);
            if (truncated) {
                ++c.skipped;
                continue;
            }
            ++c.checked;
            Rational s = 0;
            for (const auto& [f, x] : d) s += x * c.at(f);
            if (!is_zero(s)) c.closed = false;
        }
}

namespace detail {

/// Positions of a chain monomial expanded in canonical order.
inline std::vector<int> expand(const Exponents& m)
{
    std::vector<int> seq;
    for (std::size_t g = 0; g < m.size(); ++g)
        for (int r = 0; r < m[g]; ++r) seq.push_back(static_cast<int>(g));
    return seq;
}

} // namespace detail

/// Cup product through the shuffle coproduct of the chain coalgebra.
inline CochainClass cup_product(const CeComplex& cx, const CochainClass& a, const CochainClass& b)
{
    if (a.direction != Direction::Cochain || b.direction != Direction::Cochain)
        throw Error("cup_product: both arguments must be cochains");
    CochainClass out;
    out.degree = a.degree + b.degree;
    out.weight = a.weight;
    out.weight.resize(cx.arity(), 0);
    for (std::size_t k = 0; k < b.weight.size(); ++k) out.weight[k] += b.weight[k];
    const auto& mons = cx.monomials();
    const auto& gens = mons.generators();
    for (const auto& [cart, basis] : cx.basis_by_cartan(out.degree, out.weight))
        for (const auto& m : basis) {
            const auto seq = detail::expand(m);
            const int n = static_cast<int>(seq.size());
            Rational total = 0;
            // subsets S of positions with |deg S| = a.degree; sign counts odd pairs (j in S^c) < (i in S)
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                Exponents left = mons.one(), right = mons.one();
                int dl = 0, odd_right = 0, sign = 0;
                for (int p = 0; p < n; ++p) {
                    const int g = seq[p];
                    const bool odd = gens[g].odd();
                    if (mask >> p & 1) {
                        ++left[g];
                        dl += gens[g].degree;
                        if (odd) sign += odd_right;
                    } else {
                        ++right[g];
                        if (odd) ++odd_right;
                    }
                }
                if (dl != a.degree) continue;
                Rational x = a.at(left);
                if (is_zero(x)) continue;
                Rational y = b.at(right);
                if (is_zero(y)) continue;
                total += (sign % 2 ? -1 : 1) * x * y;
            }
            if (!is_zero(total)) out.values[m] = total;
        }
    certify_closed(cx, out);
    return out;
}

struct BoundaryTest {
    bool is_boundary = false;
    /// False when the answer rests on truncated products and no genuine-cycle certificate exists.
    bool certified = false;
    /// Chain side: d(witness) = c; cochain side: witness o d = c (over the k - 1 basis).
    std::optional<SparseVec> witness;
    /// Cochain side: a genuine cycle z with c(z) != 0; chain side: a cocycle y with y(c) != 0.
    std::optional<SparseVec> certificate;
    std::vector<Exponents> certificate_basis;
};

namespace detail {

inline SparseMatQ working_columns(const ChainSlice& s, const std::vector<int>& keep)
{
    std::vector<SparseVec> cols;
    if (s.invariant) {
        for (int j : keep) cols.push_back((*s.invariant)[j]);
        return s.boundary * SparseMatQ::from_columns(static_cast<int>(s.basis.size()), cols);
    }
    auto all = s.boundary.column_vectors();
    for (int j : keep) cols.push_back(all[j]);
    return SparseMatQ::from_columns(s.boundary.rows(), cols);
}

/// Working coordinates (invariant columns in relative mode) whose boundary is exact.
inline std::vector<int> trusted_columns(const ChainSlice& s)
{
    std::vector<int> keep;
    const int n = s.dim();
    for (int j = 0; j < n; ++j) {
        bool ok = true;
        if (s.invariant) {
            for (const auto& [i, x] : (*s.invariant)[j]) ok = ok && s.column_trusted[i];
        } else {
            ok = s.column_trusted[j];
        }
        if (ok) keep.push_back(j);
    }
    return keep;
}

/// Working coordinates to basis coordinates.
inline SparseVec lift(const ChainSlice& s, const SparseVec& z)
{
    if (!s.invariant) return z;
    std::map<int, Rational> out;
    for (const auto& [j, x] : z)
        for (const auto& [i, y] : (*s.invariant)[j]) out[i] += x * y;
    return sparse_from_map(out);
}

inline std::vector<int> cartan_of(const CeComplex& cx, const CochainClass& c)
{
    if (c.values.empty()) return std::vector<int>(cx.lie().n, 0);
    return cx.cartan(c.values.begin()->first);
}

} // namespace detail

/// Whether a cycle is a boundary, or a cocycle a coboundary, in the complex of cx.
///
/// Cochains are tested on the Cartan-weight-0 part (other torus weights are
/// always exact). In relative mode the test runs on the invariant subcomplex.
inline BoundaryTest is_boundary(const CeComplex& cx, const CochainClass& c)
{
    BoundaryTest r;
    if (c.is_zero()) {
        r.is_boundary = r.certified = true;
        r.witness = SparseVec{};
        return r;
    }
    for (const auto& [e, x] : c.values)
        if (cx.degree(e) != c.degree || cx.weight(e) != std::vector<int>(c.weight.begin(), c.weight.end()))
            throw DimensionError("is_boundary: class is not homogeneous of its stated degree and weight");

    if (c.direction == Direction::Chain) {
        const auto cart = detail::cartan_of(cx, c);
        ChainSlice at = cx.slice(c.degree, c.weight, cart);
        ChainSlice above = cx.slice(c.degree + 1, c.weight, cart);
        SparseVec v = restrict_to(c, at.basis);
        if (v.size() != c.values.size())
            throw DimensionError("is_boundary: chain has terms of several Cartan weights");
        const auto keep = detail::trusted_columns(above);
        auto m = solve_membership(detail::working_columns(above, keep), v);
        r.certificate_basis = at.basis;
        if (m.in_image) {
            r.is_boundary = r.certified = true;
            r.witness = m.witness;
        } else {
            r.certified = keep.size() == static_cast<std::size_t>(above.dim());
            r.certificate = m.certificate;
        }
        return r;
    }

    ChainSlice at = cx.slice(c.degree, c.weight);
    SparseVec full = restrict_to(c, at.basis);
    SparseVec v = full;
    if (at.invariant) {
        std::map<int, Rational> w;
        for (std::size_t j = 0; j < at.invariant->size(); ++j) {
            Rational s = sparse_dot((*at.invariant)[j], full);
            if (!is_zero(s)) w[static_cast<int>(j)] = s;
        }
        v = sparse_from_map(w);
    }
    const auto keep = detail::trusted_columns(at);
    if (keep.size() == static_cast<std::size_t>(at.dim())) {
        auto m = solve_membership(effective_boundary(at).transpose(), v);
        r.certified = true;
        r.is_boundary = m.in_image;
        r.witness = m.witness;
        if (!m.in_image) {
            // a cycle pairing nonzero with c: the kernel vector complementary to the image
            for (const auto& z : rank_kernel(effective_boundary(at)).kernel_basis)
                if (!is_zero(sparse_dot(z, v))) {
                    r.certificate = detail::lift(at, z);
                    break;
                }
        }
        r.certificate_basis = at.basis;
        return r;
    }
    // Truncated window: look for a genuine cycle among the exactly computed columns.
    auto sub = detail::working_columns(at, keep);
    for (const auto& z : rank_kernel(sub).kernel_basis) {
        std::map<int, Rational> spread;
        for (const auto& [j, x] : z) spread[keep[j]] += x;
        const SparseVec zw = sparse_from_map(spread);
        if (!is_zero(sparse_dot(zw, v))) {
            r.is_boundary = false;
            r.certified = true;
            r.certificate = detail::lift(at, zw);
            r.certificate_basis = at.basis;
            return r;
        }
    }
    r.certified = false;
    return r;
}

// ---------------------------------------------------------------------------
// Differential forms on the ambient Laurent ring

/// Key: (exponents v, sorted dx indices I) for x^v dx_I.
using FormKey = std::pair<std::vector<int>, std::vector<int>>;
using Form = std::map<FormKey, Rational>;

inline void form_add(Form& f, const FormKey& k, const Rational& c)
{
    if (is_zero(c)) return;
    auto [it, fresh] = f.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (is_zero(it->second)) f.erase(it);
    }
}

inline Form form_wedge(const Form& a, const Form& b)
{
    Form r;
    for (const auto& [ka, x] : a)
        for (const auto& [kb, y] : b) {
            std::vector<int> v = ka.first;
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += kb.first[i];
            std::vector<int> idx = ka.second;
            int sign = 1;
            bool zero = false;
            for (int j : kb.second) {
                // moving dx_j left past the entries of idx greater than j
                int greater = 0;
                for (int i : idx) {
                    if (i == j) zero = true;
                    if (i > j) ++greater;
                }
                if (greater % 2) sign = -sign;
                idx.insert(std::lower_bound(idx.begin(), idx.end(), j), j);
            }
            if (zero) continue;
            form_add(r, {v, idx}, sign * x * y);
        }
    return r;
}

inline Form form_d(const Form& f)
{
    Form r;
    for (const auto& [k, x] : f)
        for (std::size_t j = 0; j < k.first.size(); ++j) {
            if (k.first[j] == 0) continue;
            if (std::find(k.second.begin(), k.second.end(), static_cast<int>(j)) != k.second.end()) continue;
            std::vector<int> v = k.first;
            v[j] -= 1;
            int before = 0;
            for (int i : k.second)
                if (i < static_cast<int>(j)) ++before;
            std::vector<int> idx = k.second;
            idx.insert(idx.begin() + before, static_cast<int>(j));
            form_add(r, {v, idx}, (before % 2 ? -1 : 1) * x * k.first[j]);
        }
    return r;
}

/// Linear functional on forms of a fixed degree.
struct FormFunctional {
    std::string name;
    /// Degree of the forms it reads.
    int form_degree = 0;
    std::function<Rational(const FormKey&)> value;
};

/// Residue of x^v dx on a one-variable Laurent ring: 1 on x^-1 dx.
inline FormFunctional residue_functional()
{
    return {"residue", 1, [](const FormKey& k) {
                return k.first == std::vector<int>{-1} && k.second == std::vector<int>{0} ? Rational(1) : Rational(0);
            }};
}

/// Coefficient of the constant form dx_I (I sorted).
inline FormFunctional constant_coefficient(std::vector<int> dx, std::size_t variables)
{
    const int deg = static_cast<int>(dx.size());
    return {"coefficient", deg, [dx, variables](const FormKey& k) {
                return k.first == std::vector<int>(variables, 0) && k.second == dx ? Rational(1) : Rational(0);
            }};
}

namespace detail {

struct Slot {
    SparseVec lie;
    Form form;
};

inline Rational pair_slots(const LiePresentation& g, const std::vector<Slot>& slots, const FormFunctional& phi, bool after_d,
                           std::map<std::vector<int>, Rational>& cache)
{
    Form form{{FormKey{}, Rational(1)}};
    bool first = true;
    for (const auto& s : slots) {
        if (first) {
            form = s.form;
            first = false;
        } else {
            form = form_wedge(form, s.form);
        }
        if (form.empty()) return 0;
    }
    if (after_d) form = form_d(form);
    Rational fval = 0;
    for (const auto& [k, x] : form) fval += x * phi.value(k);
    if (is_zero(fval)) return 0;
    // multilinear expansion of P over the g-parts
    Rational pval = 0;
    std::vector<int> args(slots.size());
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t p, Rational coef) {
        if (p == slots.size()) {
            std::vector<int> key = args;
            std::sort(key.begin(), key.end());
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, g.invariant_polynomial(key)).first;
            pval += coef * it->second;
            return;
        }
        for (const auto& [a, x] : slots[p].lie) {
            args[p] = a;
            rec(p + 1, coef * x);
        }
    };
    rec(0, Rational(1));
    return pval * fval;
}

} // namespace detail

/// Cocycle of degree n + 1 from Tr(M^{i+1}) and a functional on forms, on chains of weight w.
///
/// The functional reads forms of degree 2i - n directly, or of degree 2i - n + 1
/// after applying d. Requires an algebra concentrated in degree 0.
inline CochainClass integral_cocycle(const CeComplex& cx, int i, int n, const FormFunctional& phi,
                                     const std::vector<int>& w)
{
    if (i < 0 || n < i || n > 2 * i) throw Error("integral_cocycle: need i <= n <= 2i");
    const GradedAlgebra& a = cx.algebra();
    for (const auto& b : a.basis)
        if (b.degree != 0) throw Error("integral_cocycle: algebra must be concentrated in degree 0");
    const int diffs = 2 * i - n;
    bool after_d;
    if (phi.form_degree == diffs) after_d = false;
    else if (phi.form_degree == diffs + 1) after_d = true;
    else throw Error("integral_cocycle: functional reads " + std::to_string(phi.form_degree) + "-forms, integrand has degree " +
                     std::to_string(diffs));

    const LiePresentation& g = cx.lie();
    auto function_of = [&](int j) { return Form{{FormKey{a.basis[j].ambient, {}}, Rational(1)}}; };
    auto function_vec = [&](const SparseVec& v) {
        Form f;
        for (const auto& [j, x] : v) form_add(f, FormKey{a.basis[j].ambient, {}}, x);
        return f;
    };
    // generator index -> (lie, algebra) indices
    std::vector<std::pair<int, int>> parts(cx.monomials().size());
    for (int al = 0; al < g.dim(); ++al)
        for (int j = 0; j < a.size(); ++j) {
            if (cx.mode() == CeMode::Relative && j == a.unit) continue;
            parts[cx.generator(al, j)] = {al, j};
        }

    CochainClass out;
    out.degree = n + 1;
    out.weight = w;
    out.weight.resize(cx.arity(), 0);
    std::map<std::vector<int>, Rational> cache;
    bool truncated = false;
    for (const auto& [cart, basis] : cx.basis_by_cartan(n + 1, out.weight))
        for (const auto& m : basis) {
            const auto seq = detail::expand(m);
            std::vector<int> perm(seq.size());
            std::iota(perm.begin(), perm.end(), 0);
            Rational total = 0;
            do {
                int inversions = 0;
                for (std::size_t x = 0; x < perm.size(); ++x)
                    for (std::size_t y = x + 1; y < perm.size(); ++y)
                        if (perm[x] > perm[y]) ++inversions;
                std::vector<detail::Slot> slots;
                auto part = [&](int pos) { return parts[seq[perm[pos]]]; };
                slots.push_back({SparseVec{{part(0).first, Rational(1)}}, function_of(part(0).second)});
                int pos = 1;
                for (int b = 0; b < n - i; ++b, pos += 2) {
                    auto [l1, j1] = part(pos);
                    auto [l2, j2] = part(pos + 1);
                    if (a.is_truncated(j1, j2)) truncated = true;
                    slots.push_back({g.bracket(l1, l2), function_vec(a.product(j1, j2))});
                }
                for (int dd = 0; dd < diffs; ++dd, ++pos) {
                    auto [l, j] = part(pos);
                    slots.push_back({SparseVec{{l, Rational(1)}}, form_d(function_of(j))});
                }
                Rational v = detail::pair_slots(g, slots, phi, after_d, cache);
                total += (inversions % 2 ? -1 : 1) * v;
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (!is_zero(total)) out.values[m] = total;
        }
    if (truncated) throw UntrustedSliceError("integral_cocycle: a product left the algebra window");
    certify_closed(cx, out);
    return out;
}

} // namespace curalg
