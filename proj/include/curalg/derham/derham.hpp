#pragma once

// De Rham complex R(A) = A[dx_1, ..., dx_N] of a free DGA (A, delta).
//
// dx_i has Koszul parity opposite to x_i and the weight of x_i. Gradings:
//   form degree    = number of dx factors
//   algebra degree = sum of d_i over x_i and dx_i factors
//   total degree   = form degree - algebra degree
// d and delta are odd derivations raising total degree by one, with
// delta(dx_i) = -d(delta x_i), so that d^2 = delta^2 = d delta + delta d = 0.

#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "curalg/error.hpp"
#include "curalg/exact/elimination.hpp"
#include "curalg/graded/presentation.hpp"

namespace curalg {

class DeRhamComplex {
public:
    static constexpr int kNoTruncation = std::numeric_limits<int>::max();

    explicit DeRhamComplex(const FreeModel& model, int max_form = kNoTruncation)
        : base_(model.generators), n_(model.generators.size()), max_form_(max_form)
    {
        arity_ = 1;
        for (const auto& g : base_) arity_ = std::max(arity_, g.weight.size());
        std::vector<GeneratorSpec> gens = base_;
        for (auto& g : gens) g.weight.resize(arity_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            GeneratorSpec dg = gens[i];
            dg.name = "d" + gens[i].name;
            dg.degree = gens[i].degree + 1; // parity carrier only; see algebra_degree
            gens.push_back(dg);
        }
        mons_ = FreeMonomials(gens);
        d_on_gens_.assign(2 * n_, {});
        delta_on_gens_.assign(2 * n_, {});
        for (std::size_t i = 0; i < n_; ++i) d_on_gens_[i] = Poly{{mons_.generator(n_ + i), Rational(1)}};
        const auto& delta = model.delta;
        for (std::size_t i = 0; i < n_ && i < delta.size(); ++i) {
            Poly lifted;
            for (const auto& [e, c] : delta[i]) {
                Exponents f = mons_.one();
                std::copy(e.begin(), e.end(), f.begin());
                lifted[f] = c;
            }
            delta_on_gens_[i] = lifted;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            Poly v = mons_.derive(delta_on_gens_[i], d_on_gens_, true);
            Poly neg;
            poly_add(neg, v, Rational(-1));
            delta_on_gens_[n_ + i] = neg;
        }
    }

    std::size_t base_size() const { return n_; }
    std::size_t arity() const { return arity_; }
    int max_form() const { return max_form_; }
    const FreeMonomials& monomials() const { return mons_; }

    /// Quotient complex R^i: forms of degree > i set to zero.
    DeRhamComplex truncated(int i) const
    {
        if (i < 0) throw Error("truncate_forms: negative Adams degree");
        DeRhamComplex c = *this;
        c.max_form_ = std::min(max_form_, i);
        return c;
    }

    int form_degree(const Exponents& e) const
    {
        int p = 0;
        for (std::size_t i = 0; i < n_; ++i) p += e[n_ + i];
        return p;
    }
    int algebra_degree(const Exponents& e) const
    {
        int a = 0;
        for (std::size_t i = 0; i < n_; ++i) a += (e[i] + e[n_ + i]) * base_[i].degree;
        return a;
    }
    int total_degree(const Exponents& e) const { return form_degree(e) - algebra_degree(e); }
    std::vector<int> weight(const Exponents& e) const { return mons_.weight(e, arity_); }
    std::string label(const Exponents& e) const { return mons_.label(e); }

    Poly apply_d(const Poly& p) const { return truncate(mons_.derive(p, d_on_gens_, true)); }
    Poly apply_delta(const Poly& p) const { return truncate(mons_.derive(p, delta_on_gens_, true)); }
    Poly apply_total(const Poly& p) const
    {
        Poly r = apply_d(p);
        poly_add(r, apply_delta(p));
        return r;
    }

    /// Monomials of the given weight and form degree <= max_form, bucketed by total degree.
    std::map<int, std::vector<Exponents>> slice_bases(const std::vector<int>& w) const
    {
        std::vector<int> target = w;
        target.resize(arity_, 0);
        std::map<int, std::vector<Exponents>> out;
        Exponents cur = mons_.one();
        const auto& gens = mons_.generators();
        std::function<void(std::size_t, std::vector<int>, int)> rec = [&](std::size_t g, std::vector<int> rest,
                                                                         int forms) {
            if (g == gens.size()) {
                for (int x : rest)
                    if (x != 0) return;
                out[total_degree(cur)].push_back(cur);
                return;
            }
            const bool is_form = g >= n_;
            bool zero_weight = true;
            for (int x : gens[g].weight) zero_weight = zero_weight && x == 0;
            int cap = gens[g].odd() ? 1 : std::numeric_limits<int>::max();
            if (is_form && max_form_ != kNoTruncation) cap = std::min(cap, max_form_ - forms);
            if (zero_weight && cap == std::numeric_limits<int>::max())
                throw DimensionError("generator " + gens[g].name + " has weight zero and even parity; slices are infinite");
            for (int e = 0; e <= cap; ++e) {
                if (e > 0) {
                    bool ok = true;
                    for (std::size_t k = 0; k < arity_; ++k) {
                        rest[k] -= gens[g].weight[k];
                        if (rest[k] < 0) ok = false;
                    }
                    if (!ok) break;
                }
                cur[g] = e;
                rec(g + 1, rest, forms + (is_form ? e : 0));
            }
            cur[g] = 0;
        };
        rec(0, target, 0);
        for (auto& [t, v] : out) std::sort(v.begin(), v.end());
        return out;
    }

    /// Matrix of op : span(source) -> span(target); every image term must lie in target.
    SparseMatQ matrix(const std::function<Poly(const Poly&)>& op, const std::vector<Exponents>& source,
                      const std::vector<Exponents>& target) const
    {
        std::map<Exponents, int> where;
        for (std::size_t k = 0; k < target.size(); ++k) where[target[k]] = static_cast<int>(k);
        std::vector<SparseVec> cols;
        cols.reserve(source.size());
        for (const auto& s : source) {
            std::map<int, Rational> v;
            for (const auto& [e, c] : op(Poly{{s, Rational(1)}})) {
                auto it = where.find(e);
                if (it == where.end()) throw Error("de Rham differential left its slice at " + label(e));
                v[it->second] += c;
            }
            cols.push_back(sparse_from_map(v));
        }
        return SparseMatQ::from_columns(static_cast<int>(target.size()), cols);
    }

    SparseMatQ total_matrix(const std::vector<Exponents>& source, const std::vector<Exponents>& target) const
    {
        return matrix([this](const Poly& p) { return apply_total(p); }, source, target);
    }

    /// d^2, delta^2 and d delta + delta d vanish on every basis element of the weight slice.
    bool check_invariants(const std::vector<int>& w) const
    {
        auto d = [this](const Poly& p) { return apply_d(p); };
        auto del = [this](const Poly& p) { return apply_delta(p); };
        for (const auto& [t, basis] : slice_bases(w))
            for (const auto& e : basis) {
                const Poly p{{e, Rational(1)}};
                if (!d(d(p)).empty() || !del(del(p)).empty()) return false;
                Poly anti = d(del(p));
                poly_add(anti, del(d(p)));
                if (!anti.empty()) return false;
                for (const auto& [f, c] : d(p))
                    if (form_degree(f) != form_degree(e) + 1 || weight(f) != weight(e)) return false;
                for (const auto& [f, c] : del(p))
                    if (total_degree(f) != t + 1 || weight(f) != weight(e)) return false;
            }
        return true;
    }

private:
    Poly truncate(Poly p) const
    {
        if (max_form_ == kNoTruncation) return p;
        for (auto it = p.begin(); it != p.end();)
            it = form_degree(it->first) > max_form_ ? p.erase(it) : std::next(it);
        return p;
    }

    std::vector<GeneratorSpec> base_;
    std::size_t n_;
    std::size_t arity_ = 1;
    int max_form_;
    FreeMonomials mons_;
    std::vector<Poly> d_on_gens_;
    std::vector<Poly> delta_on_gens_;
};

/// De Rham complex of a free DGA; other algebras must be resolved first.
inline DeRhamComplex de_rham(const GradedAlgebra& a)
{
    if (!a.free_model) throw Error("de_rham: algebra '" + a.name + "' is not free; resolve it first (resolve_quotient)");
    return DeRhamComplex(*a.free_model);
}

inline DeRhamComplex truncate_forms(const DeRhamComplex& c, int i) { return c.truncated(i); }

} // namespace curalg
