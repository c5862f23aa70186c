#pragma once

#include <cstdlib>
#include <string>

#include "curalg/error.hpp"
#include "curalg/exact/series.hpp"

namespace curalg::qchar {

/// Element (n, sign) of Z x| Z/2 acting by u -> u^sign q^n.
struct WeylElement {
    int n = 0;
    int sign = 1;

    /// Composition: apply(a * b, s) == apply(a, apply(b, s)).
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b)
    {
        return {b.sign * a.n + b.n, a.sign * b.sign};
    }
    friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

/// Substitutes u^a -> u^(sign*a) q^(n*a) in every coefficient.
///
/// u_bound bounds |a| over every term of the series, stored or beyond its
/// precision; the result is exact through n_q - |n|*u_bound. A translation
/// requires Laurent-polynomial coefficients.
inline QTSeries weyl_apply(const WeylElement& w, const QTSeries& s, int u_bound)
{
    if (w.sign != 1 && w.sign != -1) throw DimensionError("Weyl sign must be +1 or -1");
    if (w.n == 0) {
        if (w.sign == 1) return s;
        return s.map_coefficients([](const UFrac& c) { return c.reflected(); });
    }
    const int prec = s.is_exact() ? QTSeries::kExact : s.n_q() - std::abs(w.n) * u_bound;
    QTSeries r(s.n_t(), prec);
    for (const auto& [k, c] : s.terms()) {
        if (!c.is_polynomial())
            throw NotInvertibleError("translation of a non-polynomial coefficient " + c.str());
        for (const auto& [a, x] : c.numerator().terms()) {
            if (std::abs(a) > u_bound) throw DimensionError("u-exponent exceeds the declared bound");
            r.add_term(k.first + w.n * a, k.second, UFrac(ULaurent::monomial(w.sign * a, x)));
        }
    }
    return r;
}

/// Largest |u-exponent| among stored terms.
inline int u_degree(const QTSeries& s)
{
    int d = 0;
    for (const auto& [k, c] : s.terms()) {
        for (const auto& [a, x] : c.numerator().terms()) d = std::max(d, std::abs(a));
        for (const auto& [a, x] : c.denominator().terms()) d = std::max(d, std::abs(a));
    }
    return d;
}

} // namespace curalg::qchar
