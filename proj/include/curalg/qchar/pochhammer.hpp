#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "curalg/error.hpp"
#include "curalg/exact/series.hpp"

namespace curalg::qchar {

/// c * q^q * t^t * u^u
struct Monomial {
    Rational coeff = 1;
    int q = 0;
    int t = 0;
    int u = 0;

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        return {a.coeff * b.coeff, a.q + b.q, a.t + b.t, a.u + b.u};
    }
    friend Monomial operator/(const Monomial& a, const Monomial& b)
    {
        if (is_zero(b.coeff)) throw NotInvertibleError("Monomial: division by zero");
        return {a.coeff / b.coeff, a.q - b.q, a.t - b.t, a.u - b.u};
    }
    friend Monomial operator-(const Monomial& a) { return {-a.coeff, a.q, a.t, a.u}; }
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

    bool is_one() const { return coeff == 1 && q == 0 && t == 0 && u == 0; }

    std::string str() const
    {
        std::string s = coeff.get_str();
        if (q) s += "*q^" + std::to_string(q);
        if (t) s += "*t^" + std::to_string(t);
        if (u) s += "*u^" + std::to_string(u);
        return s;
    }
};

inline Monomial mono(int q, int t, int u, Rational c = 1) { return {std::move(c), q, t, u}; }

struct Truncation {
    int n_q;
    int n_t;
};

inline QTSeries to_series(const Monomial& m, int n_t)
{
    if (m.t < 0) throw DimensionError("monomial with negative t exponent: " + m.str());
    return QTSeries::monomial(m.q, m.t, UFrac(ULaurent::monomial(m.u, m.coeff)), n_t);
}

/// x + y as an exact series.
inline QTSeries binomial(const Monomial& x, const Monomial& y, int n_t)
{
    return to_series(x, n_t) + to_series(y, n_t);
}

/// 1 / (x + y) through q-order `cap`.
inline QTSeries inverse_binomial(const Monomial& x, const Monomial& y, int n_t, int cap)
{
    QTSeries b = binomial(x, y, n_t);
    if (b.is_zero()) throw NotInvertibleError("vanishing factor (" + x.str() + " + " + y.str() + ") in a denominator");
    try {
        return b.invert_unit(cap);
    } catch (const NotInvertibleError&) {
        throw NotInvertibleError("factor (" + x.str() + " + " + y.str() + ") is not a unit in the series ring");
    }
}

/// Calls build(cap) with growing cap until the result is exact through n_q.
inline QTSeries evaluate_to(int n_q, const std::function<QTSeries(int)>& build, int max_rounds = 12)
{
    int cap = n_q;
    for (int round = 0; round < max_rounds; ++round) {
        QTSeries r = build(cap);
        if (r.n_q() >= n_q) return r.truncated(n_q);
        cap += n_q - r.n_q();
    }
    throw HeadroomError("could not reach the requested q-order");
}

/// Product of factors (s - s*a*q^k); the building block of a scaled q-Pochhammer symbol.
///
/// For n >= 0 returns (a)_n * s^n exactly. For n < 0 returns (a)_n * s^n with
/// (a)_{-m} = 1 / prod_{k=1..m} (1 - a q^-k), exact through q-order `cap`.
inline QTSeries scaled_pochhammer(const Monomial& a, int n, const Monomial& s, int n_t, int cap)
{
    const Monomial sa = s * a;
    QTSeries r = QTSeries::constant(Rational(1), n_t);
    if (n >= 0) {
        for (int k = 0; k < n; ++k) {
            r = r * binomial(s, -(sa * mono(k, 0, 0)), n_t);
            if (r.is_zero()) break;
        }
        return r;
    }
    for (int k = 1; k <= -n; ++k) r = r * inverse_binomial(s, -(sa * mono(-k, 0, 0)), n_t, cap);
    return r.truncated(cap);
}

/// (a)_n for finite n.
inline QTSeries pochhammer(const Monomial& a, int n, int n_t, int cap)
{
    return scaled_pochhammer(a, n, Monomial{}, n_t, cap);
}

/// (a)_infinity through q-order cap. The q-exponent of a must be >= 0.
inline QTSeries pochhammer_inf(const Monomial& a, int n_t, int cap)
{
    if (a.q < 0) throw HeadroomError("infinite product (" + a.str() + ")_inf has infinitely many factors of negative q-order");
    if (a.q == 0 && a.t == 0 && a.u == 0 && a.coeff == 1) return QTSeries(n_t);
    QTSeries r = QTSeries::constant(Rational(1), n_t, cap);
    if (a.t > n_t) return r;
    const Monomial one{};
    for (int k = 0; a.q + k <= cap; ++k) r = r * binomial(one, -(a * mono(k, 0, 0)), n_t);
    return r.truncated(cap);
}

/// 1 / (a)_infinity through q-order cap.
inline QTSeries inverse_pochhammer_inf(const Monomial& a, int n_t, int cap)
{
    if (a.q < 0) throw HeadroomError("infinite product (" + a.str() + ")_inf has infinitely many factors of negative q-order");
    QTSeries r = QTSeries::constant(Rational(1), n_t, cap);
    const Monomial one{};
    for (int k = 0; a.q + k <= cap; ++k) r = r * inverse_binomial(one, -(a * mono(k, 0, 0)), n_t, cap);
    return r.truncated(cap);
}

} // namespace curalg::qchar
