#pragma once

// Truncated power series in q and t over UFrac.
//
// A series is exact through q-order n_q() (kExact: a finite, fully known
// expression) and through t-order n_t(); terms outside that box are never
// stored. t-exponents are >= 0, q-exponents may be negative. Every operation
// propagates precision so a coefficient that is reported is always correct.

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "curalg/error.hpp"
#include "curalg/exact/laurent.hpp"

namespace curalg {

class QTSeries {
public:
    static constexpr int kExact = INT_MAX / 4;
    /// Keyed by (q-exponent, t-exponent).
    using Terms = std::map<std::pair<int, int>, UFrac>;

    explicit QTSeries(int n_t = 0, int n_q = kExact) : n_q_(std::min(n_q, kExact)), n_t_(n_t)
    {
        if (n_t < 0) throw DimensionError("QTSeries: negative t truncation");
    }

    static QTSeries constant(const UFrac& c, int n_t, int n_q = kExact) { return monomial(0, 0, c, n_t, n_q); }
    static QTSeries monomial(int q, int t, const UFrac& c, int n_t, int n_q = kExact)
    {
        QTSeries s(n_t, n_q);
        s.add_term(q, t, c);
        return s;
    }

    int n_q() const { return n_q_; }
    int n_t() const { return n_t_; }
    bool is_exact() const { return n_q_ >= kExact; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Lowest stored q-exponent, 0 for the zero series.
    int q_min() const
    {
        int m = INT_MAX;
        for (const auto& [k, c] : terms_) m = std::min(m, k.first);
        return m == INT_MAX ? 0 : m;
    }
    int q_max() const
    {
        int m = INT_MIN;
        for (const auto& [k, c] : terms_) m = std::max(m, k.first);
        return m == INT_MIN ? 0 : m;
    }

    UFrac coeff(int q, int t) const
    {
        if (t > n_t_ || q > n_q_) throw HeadroomError("QTSeries: coefficient requested beyond precision");
        auto it = terms_.find({q, t});
        return it == terms_.end() ? UFrac() : it->second;
    }

    void add_term(int q, int t, const UFrac& c)
    {
        if (t < 0) throw DimensionError("QTSeries: negative t exponent");
        if (t > n_t_ || q > n_q_ || c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace({q, t}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Lower the precision to n (no-op if already lower).
    QTSeries truncated(int n) const
    {
        QTSeries r(n_t_, std::min(n_q_, n));
        for (const auto& [k, c] : terms_)
            if (k.first <= r.n_q_) r.terms_.emplace(k, c);
        return r;
    }

    /// q^k t^j * s
    QTSeries shifted(int k, int j = 0) const
    {
        QTSeries r(n_t_, sat_add(n_q_, k));
        for (const auto& [e, c] : terms_) r.add_term(e.first + k, e.second + j, c);
        return r;
    }

    /// Every coefficient is a Laurent polynomial in u.
    bool is_polynomial_in_u() const
    {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_polynomial(); });
    }

    /// No coefficient involves u.
    bool is_u_free() const
    {
        for (const auto& [k, c] : terms_) {
            if (!c.is_polynomial()) return false;
            const auto& n = c.numerator();
            if (!n.is_monomial() || n.min_exponent() != 0) return false;
        }
        return true;
    }

    QTSeries map_coefficients(const std::function<UFrac(const UFrac&)>& f) const
    {
        QTSeries r(n_t_, n_q_);
        for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, f(c));
        return r;
    }

    friend QTSeries operator+(const QTSeries& a, const QTSeries& b)
    {
        check_compatible(a, b);
        QTSeries r(a.n_t_, std::min(a.n_q_, b.n_q_));
        for (const auto& [k, c] : a.terms_) r.add_term(k.first, k.second, c);
        for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
        return r;
    }
    friend QTSeries operator-(const QTSeries& a)
    {
        return a.map_coefficients([](const UFrac& c) { return -c; });
    }
    friend QTSeries operator-(const QTSeries& a, const QTSeries& b) { return a + (-b); }
    friend QTSeries operator*(const QTSeries& a, const UFrac& s)
    {
        return a.map_coefficients([&](const UFrac& c) { return c * s; });
    }

    friend QTSeries operator*(const QTSeries& a, const QTSeries& b)
    {
        check_compatible(a, b);
        int prec = kExact;
        if (!(a.is_exact() && b.is_exact()))
            prec = std::min(sat_add(a.n_q_, b.low()), sat_add(b.n_q_, a.low()));
        QTSeries r(a.n_t_, prec);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                int t = ka.second + kb.second;
                int q = ka.first + kb.first;
                if (t > r.n_t_ || q > prec) continue;
                r.add_term(q, t, ca * cb);
            }
        return r;
    }

    QTSeries& operator+=(const QTSeries& o) { return *this = *this + o; }
    QTSeries& operator*=(const QTSeries& o) { return *this = *this * o; }

    /// Multiplicative inverse, exact through min(cap, the precision the input supports).
    ///
    /// Requires a t^0 term; with c q^l the lowest one, b is solved from a*b = 1
    /// level by level in t, each level in increasing q.
    QTSeries invert_unit(int cap = kExact) const
    {
        std::optional<int> ell;
        for (const auto& [k, c] : terms_)
            if (k.second == 0 && (!ell || k.first < *ell)) ell = k.first;
        if (!ell) throw NotInvertibleError("QTSeries: no t^0 term, series is not a unit");
        const int l = *ell;
        const UFrac c_inv = terms_.at({l, 0}).inverse();

        if (is_exact() && cap >= kExact) {
            // only a monomial has an exact finite inverse
            if (terms_.size() != 1) throw HeadroomError("QTSeries: inverse of a non-monomial needs a precision cap");
            return monomial(-l, 0, c_inv, n_t_);
        }

        // per unit of t the inverse can drop by at most `drop` in q
        int drop = 0;
        for (const auto& [k, c] : terms_)
            if (k.second > 0) {
                int d = l - k.first;
                if (d > 0) drop = std::max(drop, (d + k.second - 1) / k.second);
            }
        int prec = cap;
        if (!is_exact()) prec = std::min(prec, n_q_ - 2 * l - drop * n_t_);

        std::map<std::pair<int, int>, UFrac> b;
        auto get = [&](int q, int t) -> const UFrac* {
            auto it = b.find({q, t});
            return it == b.end() ? nullptr : &it->second;
        };
        for (int t = 0; t <= n_t_; ++t) {
            const int lo = -l - drop * t;
            const int hi = sat_add(prec, drop * (n_t_ - t));
            for (int q = lo; q <= hi; ++q) {
                UFrac acc = (q == -l && t == 0) ? UFrac(Rational(1)) : UFrac();
                for (const auto& [k, a] : terms_) {
                    if (k.second > t || (k.first == l && k.second == 0)) continue;
                    if (const UFrac* x = get(q + l - k.first, t - k.second)) acc = acc - a * *x;
                }
                if (!acc.is_zero()) b.emplace(std::make_pair(q, t), acc * c_inv);
            }
        }
        QTSeries r(n_t_, prec);
        for (const auto& [k, c] : b) r.add_term(k.first, k.second, c);
        return r;
    }

    /// Exact equality of stored terms and precision.
    friend bool operator==(const QTSeries& a, const QTSeries& b)
    {
        return a.n_t_ == b.n_t_ && a.n_q_ == b.n_q_ && a.terms_ == b.terms_;
    }

    std::string str() const
    {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")";
            if (k.first != 0) os << "*q^" << k.first;
            if (k.second != 0) os << "*t^" << k.second;
        }
        if (!is_exact()) os << " + O(q^" << n_q_ + 1 << ")";
        return os.str();
    }

    static int sat_add(int a, int b)
    {
        long long s = static_cast<long long>(a) + b;
        if (a >= kExact || b >= kExact || s >= kExact) return kExact;
        return static_cast<int>(std::max<long long>(s, -kExact));
    }

private:
    // lowest q-order that can carry a nonzero term, known or not
    int low() const
    {
        if (terms_.empty()) return is_exact() ? kExact : n_q_ + 1;
        return q_min();
    }

    static void check_compatible(const QTSeries& a, const QTSeries& b)
    {
        if (a.n_t_ != b.n_t_) throw DimensionError("QTSeries: operands have different t truncation");
    }

    int n_q_;
    int n_t_;
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const QTSeries& s) { return os << s.str(); }

enum class SeriesOp { Add, Mul, InvertUnit };

/// b is ignored for InvertUnit; the cap for an exact operand is taken from b.n_q().
inline QTSeries series_arith(const QTSeries& a, const QTSeries& b, SeriesOp op)
{
    switch (op) {
    case SeriesOp::Add: return a + b;
    case SeriesOp::Mul: return a * b;
    case SeriesOp::InvertUnit: return a.invert_unit(b.n_q());
    }
    throw Error("series_arith: unknown operation");
}

/// First (q, t) at which a and b differ within q <= n_q, if any.
inline std::optional<std::pair<int, int>> first_mismatch(const QTSeries& a, const QTSeries& b, int n_q)
{
    if (a.n_q() < n_q || b.n_q() < n_q) throw HeadroomError("first_mismatch: operand precision below the comparison order");
    int n_t = std::min(a.n_t(), b.n_t());
    std::optional<std::pair<int, int>> best;
    auto consider = [&](const QTSeries::Terms& x, const QTSeries& y) {
        for (const auto& [k, c] : x) {
            if (k.first > n_q || k.second > n_t) continue;
            if (!(c == y.coeff(k.first, k.second))) {
                std::pair<int, int> key{k.second, k.first};
                if (!best || key < std::make_pair(best->second, best->first)) best = std::make_pair(k.first, k.second);
            }
        }
    };
    consider(a.terms(), b);
    consider(b.terms(), a);
    return best;
}

} // namespace curalg
