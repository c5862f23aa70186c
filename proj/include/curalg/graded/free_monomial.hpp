#pragma once

// Monomials and polynomials in free graded-commutative generators.
//
// A monomial is an exponent vector in generator order; odd generators have
// exponent <= 1. The canonical form of a product lists factors in generator
// order, and the sign of a product is the Koszul sign of that reordering.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "curalg/error.hpp"
#include "curalg/exact/rational.hpp"

namespace curalg {

struct GeneratorSpec {
    std::string name;
    int degree = 0; // homological degree >= 0; parity is degree mod 2
    std::vector<int> weight;

    bool odd() const { return degree % 2 != 0; }
    friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

using Exponents = std::vector<int>;
/// Sparse polynomial: exponent vector -> nonzero coefficient.
using Poly = std::map<Exponents, Rational>;

inline void poly_add_term(Poly& p, const Exponents& e, const Rational& c)
{
    if (is_zero(c)) return;
    auto [it, inserted] = p.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) p.erase(it);
    }
}

inline void poly_add(Poly& p, const Poly& q, const Rational& scale = Rational(1))
{
    for (const auto& [e, c] : q) poly_add_term(p, e, c * scale);
}

/// Arithmetic on monomials over a fixed ordered generator list.
class FreeMonomials {
public:
    FreeMonomials() = default;
    explicit FreeMonomials(std::vector<GeneratorSpec> gens) : gens_(std::move(gens))
    {
        for (const auto& g : gens_)
            if (g.degree < 0) throw Error("generator " + g.name + " has negative degree");
    }

    const std::vector<GeneratorSpec>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }

    Exponents one() const { return Exponents(gens_.size(), 0); }
    Exponents generator(std::size_t i) const
    {
        Exponents e = one();
        e.at(i) = 1;
        return e;
    }

    int degree(const Exponents& e) const
    {
        int d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * gens_[i].degree;
        return d;
    }

    std::vector<int> weight(const Exponents& e, std::size_t arity) const
    {
        std::vector<int> w(arity, 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t k = 0; k < arity && k < gens_[i].weight.size(); ++k) w[k] += e[i] * gens_[i].weight[k];
        return w;
    }

    /// a*b = sign * (a+b); sign 0 when an odd generator repeats.
    int product_sign(const Exponents& a, const Exponents& b) const
    {
        int odd_after = 0; // odd factors of a with index > current j
        int sign = 1;
        for (std::size_t j = gens_.size(); j-- > 0;) {
            if (!gens_[j].odd()) continue;
            if (a[j] && b[j]) return 0;
            if (b[j] && (odd_after % 2)) sign = -sign;
            odd_after += a[j];
        }
        return sign;
    }

    Exponents combine(const Exponents& a, const Exponents& b) const
    {
        Exponents r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
        return r;
    }

    Poly multiply(const Poly& p, const Poly& q) const
    {
        Poly r;
        for (const auto& [a, ca] : p)
            for (const auto& [b, cb] : q)
                if (int s = product_sign(a, b)) poly_add_term(r, combine(a, b), s * ca * cb);
        return r;
    }

    /// Derivation of parity `odd` determined by its values on generators.
    Poly derive(const Exponents& m, const std::vector<Poly>& on_gens, bool odd) const
    {
        Poly r;
        Exponents prefix = one();
        int prefix_degree = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!on_gens[i].empty()) {
                // D(prefix * x_i^e * suffix) term: (-1)^{|D||prefix|} prefix * e x_i^{e-1} D(x_i) * suffix
                Exponents rest = m;
                for (std::size_t j = 0; j < i; ++j) rest[j] = 0;
                rest[i] -= 1;
                Rational c = m[i];
                if (odd && prefix_degree % 2) c = -c;
                Exponents lower = rest; // x_i^{e-1} * suffix, canonical since generator order is kept
                Poly left{{prefix, Rational(1)}};
                Poly mid = on_gens[i];
                // x_i^{e-1} with x_i even commutes with everything; for odd x_i, e = 1
                Poly right{{lower, Rational(1)}};
                Poly term = multiply(multiply(left, mid), right);
                poly_add(r, term, c);
            }
            prefix[i] = m[i];
            prefix_degree += m[i] * gens_[i].degree;
        }
        return r;
    }

    Poly derive(const Poly& p, const std::vector<Poly>& on_gens, bool odd) const
    {
        Poly r;
        for (const auto& [m, c] : p) poly_add(r, derive(m, on_gens, odd), c);
        return r;
    }

    std::string label(const Exponents& e) const
    {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += gens_[i].name;
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s.empty() ? "1" : s;
    }

private:
    std::vector<GeneratorSpec> gens_;
};

} // namespace curalg
