#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "curalg/error.hpp"
#include "curalg/exact/rational.hpp"

namespace curalg {

/// Finitely supported Laurent polynomial in u with rational coefficients.
class ULaurent {
public:
    using Terms = std::map<int, Rational>;

    ULaurent() = default;
    ULaurent(const Rational& c) { add_term(0, c); }
    explicit ULaurent(Terms terms)
    {
        for (auto& [e, c] : terms) add_term(e, c);
    }

    static ULaurent monomial(int exponent, const Rational& c = Rational(1))
    {
        ULaurent p;
        p.add_term(exponent, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    int min_exponent() const { return terms_.begin()->first; }
    int max_exponent() const { return terms_.rbegin()->first; }
    Rational coefficient(int e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational leading_coefficient() const { return terms_.rbegin()->second; }

    void add_term(int exponent, const Rational& c)
    {
        if (curalg::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (curalg::is_zero(it->second)) terms_.erase(it);
        }
    }

    /// u^k * p
    ULaurent shifted(int k) const
    {
        ULaurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
        return r;
    }

    /// p(u^-1)
    ULaurent reflected() const
    {
        ULaurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }

    ULaurent& operator+=(const ULaurent& o)
    {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    ULaurent& operator-=(const ULaurent& o)
    {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend ULaurent operator+(ULaurent a, const ULaurent& b) { return a += b; }
    friend ULaurent operator-(ULaurent a, const ULaurent& b) { return a -= b; }
    friend ULaurent operator-(const ULaurent& a)
    {
        ULaurent r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend ULaurent operator*(const ULaurent& a, const ULaurent& b)
    {
        ULaurent r;
        for (const auto& [e1, c1] : a.terms_)
            for (const auto& [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    friend ULaurent operator*(const ULaurent& a, const Rational& s)
    {
        ULaurent r;
        if (curalg::is_zero(s)) return r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * s);
        return r;
    }
    friend bool operator==(const ULaurent& a, const ULaurent& b) { return a.terms_ == b.terms_; }

    std::string str(const char* var = "u") const
    {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << (sgn(c) < 0 ? " - " : " + ");
            else if (sgn(c) < 0) os << "-";
            first = false;
            Rational a = abs(c);
            if (e == 0) {
                os << a.get_str();
                continue;
            }
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
        return os.str();
    }

private:
    Terms terms_;
};

namespace detail {

// Polynomial long division on ULaurent values with nonnegative exponents.
inline std::pair<ULaurent, ULaurent> poly_divmod(ULaurent a, const ULaurent& b)
{
    ULaurent q;
    const int db = b.max_exponent();
    const Rational lb = b.leading_coefficient();
    while (!a.is_zero() && a.max_exponent() >= db) {
        int k = a.max_exponent() - db;
        Rational c = a.leading_coefficient() / lb;
        q.add_term(k, c);
        a -= b.shifted(k) * c;
    }
    return {q, a};
}

inline ULaurent poly_gcd(ULaurent a, ULaurent b)
{
    while (!b.is_zero()) {
        auto r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.leading_coefficient());
}

} // namespace detail

/// Reduced ratio of Laurent polynomials in u.
///
/// Canonical form: the denominator is an ordinary polynomial with nonzero
/// constant term and leading coefficient 1, coprime to the numerator; all
/// powers of u live in the numerator. Equality is then structural.
class UFrac {
public:
    UFrac() : den_(Rational(1)) {}
    UFrac(const Rational& c) : num_(c), den_(Rational(1)) {}
    UFrac(ULaurent num) : num_(std::move(num)), den_(Rational(1)) {}
    UFrac(ULaurent num, ULaurent den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) throw NotInvertibleError("UFrac: zero denominator");
        normalize();
    }

    const ULaurent& numerator() const { return num_; }
    const ULaurent& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
    bool is_polynomial() const { return den_.is_monomial() && den_.min_exponent() == 0; }
    bool is_unit() const { return !num_.is_zero(); }

    UFrac inverse() const
    {
        if (num_.is_zero()) throw NotInvertibleError("UFrac: inverse of zero");
        return UFrac(den_, num_);
    }

    /// Substitution u -> u^-1.
    UFrac reflected() const { return UFrac(num_.reflected(), den_.reflected()); }

    friend UFrac operator+(const UFrac& a, const UFrac& b)
    {
        if (a.is_polynomial() && b.is_polynomial()) return UFrac::raw(a.num_ + b.num_);
        if (a.den_ == b.den_) return UFrac(a.num_ + b.num_, a.den_);
        return UFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend UFrac operator-(const UFrac& a) { return UFrac::raw(-a.num_, a.den_); }
    friend UFrac operator-(const UFrac& a, const UFrac& b) { return a + (-b); }
    friend UFrac operator*(const UFrac& a, const UFrac& b)
    {
        if (a.is_polynomial() && b.is_polynomial()) return UFrac::raw(a.num_ * b.num_);
        if (a.is_zero() || b.is_zero()) return UFrac();
        return UFrac(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend UFrac operator/(const UFrac& a, const UFrac& b) { return a * b.inverse(); }
    UFrac& operator+=(const UFrac& o) { return *this = *this + o; }
    UFrac& operator*=(const UFrac& o) { return *this = *this * o; }

    friend bool operator==(const UFrac& a, const UFrac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    /// Cross-multiplication test; agrees with == on canonical values.
    static bool equal_by_cross_multiplication(const UFrac& a, const UFrac& b)
    {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string str() const
    {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    static UFrac raw(ULaurent num, ULaurent den = ULaurent(Rational(1)))
    {
        UFrac f;
        f.num_ = std::move(num);
        f.den_ = std::move(den);
        return f;
    }

    void normalize()
    {
        if (num_.is_zero()) {
            den_ = ULaurent(Rational(1));
            return;
        }
        // shift both to ordinary polynomials with nonzero constant terms
        int sn = num_.min_exponent();
        int sd = den_.min_exponent();
        ULaurent n = num_.shifted(-sn);
        ULaurent d = den_.shifted(-sd);
        if (d.max_exponent() > 0 && n.max_exponent() > 0) {
            ULaurent g = detail::poly_gcd(n, d);
            if (g.max_exponent() > 0) {
                n = detail::poly_divmod(n, g).first;
                d = detail::poly_divmod(d, g).first;
            }
        }
        Rational lead = d.leading_coefficient();
        if (lead != 1) {
            Rational inv = Rational(1) / lead;
            n = n * inv;
            d = d * inv;
        }
        num_ = n.shifted(sn - sd);
        den_ = std::move(d);
    }

    ULaurent num_;
    ULaurent den_;
};

} // namespace curalg
