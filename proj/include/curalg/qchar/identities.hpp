#pragma once

// Sl2 loop-space characters as truncated q,t-series and the identities
// relating them: the Weyl-group sum, its bilateral rewriting, the closed
// product form, and the free bigraded algebra character.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "curalg/error.hpp"
#include "curalg/qchar/pochhammer.hpp"
#include "curalg/qchar/weyl.hpp"

namespace curalg::qchar {

namespace detail {

inline void require_stable(const QTSeries& extra, int n_q, const std::string& what, const QTSeries& base)
{
    if (!extra.truncated(n_q).is_zero())
        throw StabilizationError(what + " is not stable in n_max; sum: " + base.str() +
                                 "; next terms: " + extra.truncated(n_q).str());
}

inline void require_integral_polynomial(const QTSeries& s, const std::string& what)
{
    if (!s.is_polynomial_in_u()) throw Error(what + ": coefficients are not Laurent polynomials in u");
    for (const auto& [k, c] : s.terms()) {
        if (k.first < 0) throw Error(what + ": negative q-exponent in the result");
        for (const auto& [e, x] : c.numerator().terms())
            if (x.get_den() != 1) throw Error(what + ": non-integral coefficient");
    }
}

// numerator of the Weyl sum: (tqu^-2)_inf (tq)_inf (tqu^2)_inf
inline QTSeries weyl_numerator(int n_t, int cap)
{
    return pochhammer_inf(mono(1, 1, -2), n_t, cap) * pochhammer_inf(mono(1, 1, 0), n_t, cap) *
           pochhammer_inf(mono(1, 1, 2), n_t, cap);
}

// (u^-2)_inf (q)_inf (qu^2)_inf
inline QTSeries weyl_denominator(int n_t, int cap)
{
    return pochhammer_inf(mono(0, 0, -2), n_t, cap) * pochhammer_inf(mono(1, 0, 0), n_t, cap) *
           pochhammer_inf(mono(1, 0, 2), n_t, cap);
}

// c_w^-1 for w = (n, sign): the factor relating w(denominator) to the denominator.
inline Monomial weyl_cocycle_inverse(const WeylElement& w)
{
    const int qe = w.n * (2 * w.n + 1);
    if (w.sign == 1) return mono(qe, 0, 4 * w.n);
    return mono(qe, 0, -4 * w.n - 2, -1);
}

// sum over w of c_w^-1 * w(numerator) for the listed translations
inline QTSeries weyl_partial_sum(const QTSeries& numerator, const std::vector<int>& translations, int u_bound)
{
    QTSeries acc(numerator.n_t());
    for (int n : translations)
        for (int sign : {1, -1}) {
            WeylElement w{n, sign};
            acc += to_series(weyl_cocycle_inverse(w), numerator.n_t()) * weyl_apply(w, numerator, u_bound);
        }
    return acc;
}

// working q-order of the numerator so every Weyl term up to |n| <= n_max reaches n_q
inline int weyl_numerator_order(int n_q, int n_t, int n_max)
{
    int need = n_q;
    for (int n = -n_max; n <= n_max; ++n) need = std::max(need, n_q + std::abs(n) * 2 * n_t - n * (2 * n + 1));
    return need;
}

} // namespace detail

/// c_w^-1 as a monomial; exposed for tests of the cocycle identity.
inline Monomial weyl_cocycle_inverse(const WeylElement& w) { return detail::weyl_cocycle_inverse(w); }
inline QTSeries weyl_denominator(int n_t, int cap) { return detail::weyl_denominator(n_t, cap); }
inline QTSeries weyl_numerator(int n_t, int cap) { return detail::weyl_numerator(n_t, cap); }

/// sum_w w[ numerator / denominator ] over |n| <= n_max, exact through (n_q, n_t).
///
/// Throws StabilizationError if the |n| = n_max + 1 terms contribute.
inline QTSeries weyl_character_sum(int n_q, int n_t, int n_max)
{
    const int u_bound = 2 * n_t;
    const int order = detail::weyl_numerator_order(n_q, n_t, n_max + 1);
    const QTSeries numerator = detail::weyl_numerator(n_t, order);

    std::vector<int> inner;
    for (int n = -n_max; n <= n_max; ++n) inner.push_back(n);
    QTSeries sum = detail::weyl_partial_sum(numerator, inner, u_bound);
    QTSeries extra = detail::weyl_partial_sum(numerator, {-n_max - 1, n_max + 1}, u_bound);
    if (sum.n_q() < n_q) throw HeadroomError("Weyl sum: numerator precision too low");
    detail::require_stable(extra, n_q, "Weyl sum", sum.truncated(n_q));

    QTSeries result = (sum.truncated(n_q) * detail::weyl_denominator(n_t, n_q).invert_unit(n_q)).truncated(n_q);
    if (result.n_q() < n_q) throw HeadroomError("Weyl sum: result precision too low");
    detail::require_integral_polynomial(result, "Weyl sum");
    return result;
}

/// Closed product form 1/(1-t) * (qt^2)_inf / (qt)_inf.
inline QTSeries closed_form_character(int n_q, int n_t)
{
    QTSeries r = inverse_binomial(Monomial{}, mono(0, 1, 0, -1), n_t, n_q) * pochhammer_inf(mono(1, 2, 0), n_t, n_q) *
                 inverse_pochhammer_inf(mono(1, 1, 0), n_t, n_q);
    return r.truncated(n_q);
}

namespace detail {

// n-th term of the bilateral sum without the constant 1/(1-u^2);
// monomial factors are distributed into the finite products so no negative q appears.
inline QTSeries bilateral_term(int n, int n_t, int cap)
{
    const Monomial one{};
    QTSeries r = QTSeries::constant(Rational(1), n_t);
    if (n >= 0) {
        r = binomial(one, mono(2 * n, 0, 2, -1), n_t);
        r = r * scaled_pochhammer(mono(0, -1, 2), 2 * n, mono(0, 1, 0), n_t, cap);
        for (int k = 1; k <= 2 * n; ++k) r = r * inverse_binomial(one, mono(k, 1, 2, -1), n_t, cap);
        return r.truncated(cap);
    }
    const int m = -n;
    r = binomial(mono(2 * m, 0, 0), mono(0, 0, 2, -1), n_t) * to_series(mono(0, 0, -4 * m), n_t);
    for (int k = 0; k < 2 * m; ++k) r = r * binomial(mono(k, 0, 0), mono(0, 1, 2, -1), n_t);
    for (int k = 1; k <= 2 * m; ++k) r = r * inverse_binomial(one, mono(k, 1, -2, -1), n_t, cap);
    return r.truncated(cap);
}

} // namespace detail

/// Bilateral form: prefactor * sum_n (1 - q^2n u^2)/(1 - u^2) * (t^-1 u^2)_2n / (tqu^2)_2n * t^2n.
inline QTSeries bilateral_character_sum(int n_q, int n_t, int n_max)
{
    const UFrac inv_1mu2 = UFrac(ULaurent(Rational(1)), ULaurent(Rational(1)) - ULaurent::monomial(2));
    QTSeries sum(n_t), extra(n_t);
    for (int n = -n_max - 1; n <= n_max + 1; ++n) {
        QTSeries term = detail::bilateral_term(n, n_t, n_q) * inv_1mu2;
        if (std::abs(n) <= n_max) sum += term;
        else extra += term;
    }
    detail::require_stable(extra, n_q, "bilateral sum", sum.truncated(n_q));
    QTSeries prefactor = pochhammer_inf(mono(1, 1, -2), n_t, n_q) * pochhammer_inf(mono(1, 1, 0), n_t, n_q) *
                         pochhammer_inf(mono(1, 1, 2), n_t, n_q) * inverse_pochhammer_inf(mono(1, 0, -2), n_t, n_q) *
                         inverse_pochhammer_inf(mono(1, 0, 0), n_t, n_q) * inverse_pochhammer_inf(mono(1, 0, 2), n_t, n_q);
    QTSeries result = (prefactor * sum).truncated(n_q);
    if (result.n_q() < n_q) throw HeadroomError("bilateral sum: result precision too low");
    detail::require_integral_polynomial(result, "bilateral sum");
    return result;
}

// ---------------------------------------------------------------------------

struct IdentityReport {
    QTSeries lhs;
    QTSeries rhs;
    std::optional<std::pair<int, int>> first_mismatch;
    bool pass() const { return !first_mismatch.has_value(); }
};

/// Both sides of sum_n (a)_n/(b)_n z^n = (q)(b/a)(az)(q/az) / (b)(q/a)(z)(b/az).
///
/// Infinite-product arguments common to both sides of the fraction are
/// cancelled before evaluation. The sum runs over |n| <= n_max and must be
/// stable in n_max.
inline IdentityReport bilateral_summation_check(const Monomial& a, const Monomial& b, const Monomial& z,
                                                Truncation tr, int n_max)
{
    const Monomial one{};
    const Monomial q = mono(1, 0, 0);
    auto term = [&](int n, int cap) {
        QTSeries inv_b = QTSeries::constant(Rational(1), tr.n_t);
        if (n >= 0) {
            for (int k = 0; k < n; ++k) inv_b = inv_b * inverse_binomial(one, -(b * mono(k, 0, 0)), tr.n_t, cap);
        } else {
            for (int k = 1; k <= -n; ++k) {
                inv_b = inv_b * binomial(one, -(b * mono(-k, 0, 0)), tr.n_t);
                if (inv_b.is_zero()) return QTSeries(tr.n_t);
            }
        }
        return (inv_b * scaled_pochhammer(a, n, z, tr.n_t, cap)).truncated(cap);
    };
    QTSeries extra(tr.n_t);
    QTSeries lhs = evaluate_to(tr.n_q, [&](int cap) {
        QTSeries s(tr.n_t);
        extra = QTSeries(tr.n_t);
        for (int n = -n_max - 1; n <= n_max + 1; ++n) {
            if (std::abs(n) <= n_max) s += term(n, cap);
            else extra += term(n, cap);
        }
        return s;
    });
    detail::require_stable(extra, tr.n_q, "bilateral summation", lhs);

    std::vector<Monomial> num{q, b / a, a * z, q / (a * z)};
    std::vector<Monomial> den{b, q / a, z, b / (a * z)};
    for (auto it = num.begin(); it != num.end();) {
        auto jt = std::find(den.begin(), den.end(), *it);
        if (jt != den.end()) {
            den.erase(jt);
            it = num.erase(it);
        } else {
            ++it;
        }
    }
    QTSeries rhs = evaluate_to(tr.n_q, [&](int cap) {
        QTSeries r = QTSeries::constant(Rational(1), tr.n_t, cap);
        for (const auto& x : num) r = r * pochhammer_inf(x, tr.n_t, cap);
        for (const auto& x : den) r = r * inverse_pochhammer_inf(x, tr.n_t, cap);
        return r;
    });
    IdentityReport rep{lhs, rhs, first_mismatch(lhs, rhs, tr.n_q)};
    return rep;
}

// ---------------------------------------------------------------------------

/// Free generators of one bidegree: form degree (t-exponent) and cohomological degree,
/// one generator per listed q-weight.
struct GeneratorFamily {
    int form_degree;
    int coh_degree;
    std::vector<int> weights;
};

/// Character of the free bigraded graded-commutative algebra on the families,
/// counting a generator as (-1)^(form+coh) t^form q^weight: symmetric when
/// form+coh is even, exterior when odd.
inline QTSeries free_algebra_character(const std::vector<GeneratorFamily>& families, int n_q, int n_t)
{
    QTSeries r = QTSeries::constant(Rational(1), n_t, n_q);
    const Monomial one{};
    for (const auto& f : families) {
        if (f.form_degree < 0 || f.form_degree > n_t) continue;
        const bool even = (f.form_degree + f.coh_degree) % 2 == 0;
        for (int w : f.weights) {
            const Monomial g = mono(w, f.form_degree, 0, even ? 1 : -1);
            if (even) r = r * inverse_binomial(one, -g, n_t, n_q);
            else r = r * binomial(one, g, n_t);
        }
    }
    return r.truncated(n_q);
}

/// Power series C[[z]] in form degree 1 (weights k >= 0) and C[[z]]dz in form degree 2 (weights k+1).
inline std::vector<GeneratorFamily> loop_space_generators(int n_q)
{
    GeneratorFamily functions{1, 1, {}}, differentials{2, 1, {}};
    for (int k = 0; k <= n_q; ++k) functions.weights.push_back(k);
    for (int k = 1; k <= n_q; ++k) differentials.weights.push_back(k);
    return {functions, differentials};
}

struct GeneratorConvention {
    int form_degree;
    int coh_degree;
    int weight_offset;
    bool matches;
};

/// Tries both orderings of the differential family's bidegree and weight
/// offsets 0 and 1 against the closed form; returns every candidate with its verdict.
inline std::vector<GeneratorConvention> resolve_generator_convention(int n_q, int n_t)
{
    const QTSeries target = closed_form_character(n_q, n_t);
    std::vector<GeneratorConvention> out;
    for (auto [m, n] : {std::pair{2, 1}, std::pair{1, 2}})
        for (int offset : {0, 1}) {
            GeneratorFamily functions{1, 1, {}}, differentials{m, n, {}};
            for (int k = 0; k <= n_q; ++k) {
                functions.weights.push_back(k);
                if (k + offset <= n_q) differentials.weights.push_back(k + offset);
            }
            QTSeries c = free_algebra_character({functions, differentials}, n_q, n_t);
            out.push_back({m, n, offset, !first_mismatch(c, target, n_q).has_value()});
        }
    return out;
}

} // namespace curalg::qchar
