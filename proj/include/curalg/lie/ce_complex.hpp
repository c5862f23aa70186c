#pragma once

// Chevalley-Eilenberg chains of L = g (x) A for a graded-commutative A.
//
// Chains form the free graded-commutative algebra on s(y (x) a), of degree
// |a| + 1, so odd algebra elements give symmetric powers. The boundary is
// the second-order operator determined by
//   d(s x . s y) = (-1)^{|x|} s[x, y]
// (graded symmetric on L[1]) plus the derivation extending
// s x -> -s(delta x). For a monomial z_1 ... z_k the quadratic part is the sum
// over position pairs i < j of eps(i, j) d(z_i z_j) z_1 .. ^i .. ^j .. z_k,
// where eps is the Koszul sign of moving z_i z_j to the front.
//
// Relative chains (mod g) drop the generators g (x) 1, project brackets away
// from g (x) 1 and keep the g-invariant part.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curalg/error.hpp"
#include "curalg/exact/elimination.hpp"
#include "curalg/graded/presentation.hpp"
#include "curalg/lie/lie_algebra.hpp"

namespace curalg {

enum class CeMode { Absolute, Relative };

/// Keeps chains whose factors have positive parts of weight[coordinate] summing to <= bound.
struct PositiveFiltration {
    std::size_t coordinate = 0;
    int bound = 0;
};

struct ChainSlice {
    int k = 0;
    std::vector<int> weight;
    std::vector<int> cartan;
    std::vector<Exponents> basis;
    /// Relative mode: columns (over basis) spanning the g-invariant chains.
    std::optional<std::vector<SparseVec>> invariant;
    /// Coordinates on which the invariant columns restrict to the identity.
    std::vector<int> invariant_free;
    /// C_k -> C_{k-1} in basis coordinates (rows index the slice k - 1 basis).
    SparseMatQ boundary;
    /// Per basis element: its boundary used no product that left the algebra window.
    std::vector<char> column_trusted;
    bool trusted = true;

    int dim() const { return invariant ? static_cast<int>(invariant->size()) : static_cast<int>(basis.size()); }
};

struct BoundaryMatrix {
    SparseMatQ matrix;
    std::vector<char> column_trusted;
};

struct HomologyResult {
    std::size_t dim = 0;
    std::size_t chain_dim = 0;
    bool trusted = true;
};

class CeComplex {
public:
    CeComplex(LiePresentation g, GradedAlgebra a, CeMode mode = CeMode::Absolute,
              std::optional<PositiveFiltration> filter = std::nullopt)
        : g_(std::move(g)), a_(std::move(a)), mode_(mode), filter_(filter)
    {
        const auto& unit = a_.basis.at(a_.unit);
        for (int x : unit.weight)
            if (x != 0) throw Error("unit of " + a_.name + " has nonzero weight");
        if (mode_ == CeMode::Relative && unit.degree != 0)
            throw Error("relative mode needs g (x) 1 to be a direct summand in weight 0");
        std::vector<GeneratorSpec> gens;
        for (int j = 0; j < a_.size(); ++j) {
            if (mode_ == CeMode::Relative && j == a_.unit) continue;
            for (int al = 0; al < g_.dim(); ++al) {
                id_[{al, j}] = static_cast<int>(gens.size());
                lie_.push_back(al);
                alg_.push_back(j);
                gens.push_back({g_.labels[al] + "." + a_.basis[j].label, a_.basis[j].degree + 1, a_.basis[j].weight});
            }
        }
        mons_ = FreeMonomials(gens);
        if (a_.has_delta()) {
            delta_on_gens_.assign(gens.size(), {});
            for (std::size_t gi = 0; gi < gens.size(); ++gi)
                for (const auto& [l, c] : a_.delta(alg_[gi])) {
                    auto it = id_.find({lie_[gi], l});
                    if (it != id_.end()) poly_add_term(delta_on_gens_[gi], mons_.generator(it->second), -c);
                }
        }
    }

    const LiePresentation& lie() const { return g_; }
    const GradedAlgebra& algebra() const { return a_; }
    CeMode mode() const { return mode_; }
    const FreeMonomials& monomials() const { return mons_; }
    std::size_t arity() const { return a_.arity; }

    int generator(int lie_index, int alg_index) const { return id_.at({lie_index, alg_index}); }
    int degree(const Exponents& e) const { return mons_.degree(e); }
    std::vector<int> weight(const Exponents& e) const { return mons_.weight(e, a_.arity); }
    std::vector<int> cartan(const Exponents& e) const
    {
        std::vector<int> c(g_.n, 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i])
                for (int r = 0; r < g_.n; ++r) c[r] += e[i] * g_.cartan[lie_[i]][r];
        return c;
    }
    std::string label(const Exponents& e) const { return mons_.label(e); }

    /// Chain monomials of degree k and weight w, bucketed by Cartan weight.
    std::map<std::vector<int>, std::vector<Exponents>> basis_by_cartan(int k, const std::vector<int>& w) const
    {
        const auto& gens = mons_.generators();
        const std::size_t ar = a_.arity;
        std::vector<int> target = w;
        target.resize(ar, 0);
        std::vector<int> sign_kind(ar, 0); // 1: all >= 0, -1: all <= 0, 0: mixed
        for (std::size_t c = 0; c < ar; ++c) {
            bool pos = true, neg = true;
            for (const auto& gs : gens) {
                pos = pos && gs.weight[c] >= 0;
                neg = neg && gs.weight[c] <= 0;
            }
            sign_kind[c] = pos ? 1 : (neg ? -1 : 0);
        }
        std::map<std::vector<int>, std::vector<Exponents>> out;
        Exponents cur = mons_.one();
        std::vector<int> wsum(ar, 0);
        int pos_part = 0, neg_part = 0;
        std::function<void(std::size_t, int)> rec = [&](std::size_t gi, int rest) {
            for (std::size_t c = 0; c < ar; ++c) {
                if (sign_kind[c] == 1 && wsum[c] > target[c]) return;
                if (sign_kind[c] == -1 && wsum[c] < target[c]) return;
            }
            if (filter_) {
                if (pos_part > filter_->bound) return;
                if (neg_part > filter_->bound - target[filter_->coordinate]) return;
            }
            if (rest == 0) {
                if (wsum == target) out[cartan(cur)].push_back(cur);
                return;
            }
            if (gi == gens.size()) return;
            const int d = gens[gi].degree;
            const int cap = gens[gi].odd() ? 1 : rest / d;
            int e = 0;
            for (; e <= cap && e * d <= rest; ++e) {
                cur[gi] = e;
                rec(gi + 1, rest - e * d);
                for (std::size_t c = 0; c < ar; ++c) wsum[c] += gens[gi].weight[c];
                if (filter_) {
                    const int x = gens[gi].weight[filter_->coordinate];
                    (x > 0 ? pos_part : neg_part) += x > 0 ? x : -x;
                }
            }
            for (std::size_t c = 0; c < ar; ++c) wsum[c] -= e * gens[gi].weight[c];
            if (filter_) {
                const int x = gens[gi].weight[filter_->coordinate];
                (x > 0 ? pos_part : neg_part) -= e * (x > 0 ? x : -x);
            }
            cur[gi] = 0;
        };
        if (k >= 0) rec(0, k);
        for (auto& [c, v] : out) std::sort(v.begin(), v.end());
        return out;
    }

    std::vector<Exponents> basis(int k, const std::vector<int>& w, const std::vector<int>& c) const
    {
        auto all = basis_by_cartan(k, w);
        auto it = all.find(c);
        return it == all.end() ? std::vector<Exponents>{} : it->second;
    }

    /// Boundary of one chain monomial; *truncated is set if a window-truncated product contributed.
    Poly boundary(const Exponents& m, bool* truncated = nullptr) const
    {
        std::vector<int> seq;
        for (std::size_t g = 0; g < m.size(); ++g)
            for (int r = 0; r < m[g]; ++r) seq.push_back(static_cast<int>(g));
        const auto& gens = mons_.generators();
        Poly out;
        int before_i = 0;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            const int gi = seq[i];
            const int pi = gens[gi].odd() ? 1 : 0;
            int before_j = before_i + pi;
            for (std::size_t j = i + 1; j < seq.size(); ++j) {
                const int gj = seq[j];
                const int pj = gens[gj].odd() ? 1 : 0;
                const int eps = ((pi * before_i) + pj * (before_j - pi)) % 2;
                before_j += pj;
                const SparseVec& br = g_.bracket(lie_[gi], lie_[gj]);
                if (br.empty()) continue;
                const int ja = alg_[gi], jb = alg_[gj];
                if (truncated && a_.is_truncated(ja, jb)) *truncated = true;
                const SparseVec& ab = a_.product(ja, jb);
                if (ab.empty()) continue;
                Exponents rest = m;
                rest[gi] -= 1;
                rest[gj] -= 1;
                Rational sign = (eps + a_.basis[ja].degree) % 2 ? -1 : 1;
                for (const auto& [gamma, c1] : br)
                    for (const auto& [l, c2] : ab) {
                        auto it = id_.find({gamma, l});
                        if (it == id_.end()) continue; // relative mode: component along g (x) 1
                        const Exponents gen = mons_.generator(it->second);
                        const int s = mons_.product_sign(gen, rest);
                        if (s == 0) continue;
                        poly_add_term(out, mons_.combine(gen, rest), sign * s * c1 * c2);
                    }
            }
            before_i += pi;
        }
        if (!delta_on_gens_.empty()) poly_add(out, mons_.derive(m, delta_on_gens_, true));
        return out;
    }

    /// Action of the Lie basis element `x` (as x (x) 1) on a chain monomial.
    Poly act(int x, const Exponents& m) const
    {
        std::vector<Poly> on_gens(mons_.size());
        for (std::size_t gi = 0; gi < mons_.size(); ++gi) {
            if (!m[gi]) continue;
            for (const auto& [gamma, c] : g_.bracket(x, lie_[gi]))
                poly_add_term(on_gens[gi], mons_.generator(id_.at({gamma, alg_[gi]})), c);
        }
        return mons_.derive(m, on_gens, false);
    }

    /// Matrix of the boundary from `source` to `target`, with per-column trust.
    BoundaryMatrix boundary_matrix(const std::vector<Exponents>& source, const std::vector<Exponents>& target) const
    {
        std::map<Exponents, int> where;
        for (std::size_t r = 0; r < target.size(); ++r) where[target[r]] = static_cast<int>(r);
        BoundaryMatrix out;
        std::vector<SparseVec> cols;
        cols.reserve(source.size());
        for (const auto& s : source) {
            bool truncated = false;
            std::map<int, Rational> v;
            for (const auto& [e, c] : boundary(s, &truncated)) {
                auto it = where.find(e);
                if (it == where.end()) throw Error("boundary left its slice at " + label(e));
                v[it->second] += c;
            }
            cols.push_back(sparse_from_map(v));
            out.column_trusted.push_back(truncated ? 0 : 1);
        }
        out.matrix = SparseMatQ::from_columns(static_cast<int>(target.size()), cols);
        return out;
    }

    /// Columns over `basis` spanning the chains killed by every simple raising operator.
    std::vector<SparseVec> invariants(const std::vector<Exponents>& basis) const
    {
        return invariant_kernel(basis).kernel_basis;
    }

    RankKernel invariant_kernel(const std::vector<Exponents>& basis) const
    {
        std::map<Exponents, int> rows;
        std::vector<SparseEntry> entries;
        for (std::size_t col = 0; col < basis.size(); ++col)
            for (int e : g_.raising)
                for (const auto& [img, c] : act(e, basis[col])) {
                    auto key = img;
                    key.push_back(e); // separate blocks per operator
                    auto [it, fresh] = rows.try_emplace(key, static_cast<int>(rows.size()));
                    entries.push_back({it->second, static_cast<int>(col), c});
                }
        SparseMatBuilder b(static_cast<int>(rows.size()), static_cast<int>(basis.size()));
        for (const auto& e : entries) b.add(e.row, e.col, e.value);
        return rank_kernel(b.build());
    }

    /// Slice of Cartan weight `c` (default 0) with its outgoing boundary.
    ChainSlice slice(int k, const std::vector<int>& w, std::optional<std::vector<int>> c = std::nullopt) const
    {
        ChainSlice s;
        s.k = k;
        s.weight = w;
        s.weight.resize(a_.arity, 0);
        s.cartan = c ? *c : std::vector<int>(g_.n, 0);
        s.basis = basis(k, s.weight, s.cartan);
        auto target = basis(k - 1, s.weight, s.cartan);
        auto b = boundary_matrix(s.basis, target);
        s.boundary = std::move(b.matrix);
        s.column_trusted = std::move(b.column_trusted);
        s.trusted = std::all_of(s.column_trusted.begin(), s.column_trusted.end(), [](char t) { return t != 0; });
        if (mode_ == CeMode::Relative) {
            auto rk = invariant_kernel(s.basis);
            s.invariant = std::move(rk.kernel_basis);
            s.invariant_free = std::move(rk.free_columns);
        }
        return s;
    }

    std::vector<ChainSlice> build_complex(int k_lo, int k_hi, const std::vector<int>& w) const
    {
        std::vector<ChainSlice> out;
        for (int k = k_lo; k <= k_hi; ++k) out.push_back(slice(k, w));
        return out;
    }

private:
    LiePresentation g_;
    GradedAlgebra a_;
    CeMode mode_;
    std::optional<PositiveFiltration> filter_;
    FreeMonomials mons_;
    std::map<std::pair<int, int>, int> id_;
    std::vector<int> lie_, alg_;
    std::vector<Poly> delta_on_gens_;
};

/// Boundary restricted to the working subspace of a slice (invariants in relative mode).
inline SparseMatQ effective_boundary(const ChainSlice& s)
{
    if (!s.invariant) return s.boundary;
    return s.boundary * SparseMatQ::from_columns(static_cast<int>(s.basis.size()), *s.invariant);
}

/// Rank of the effective boundary. With the relative slice below, rows shrink to
/// its free coordinates: the image lies in invariants, on which that projection is injective.
inline std::size_t effective_rank(const ChainSlice& s, const ChainSlice* below = nullptr)
{
    if (s.dim() == 0) return 0;
    if (!s.invariant || !below || !below->invariant) return rank(effective_boundary(s));
    if (below->k + 1 != s.k || below->weight != s.weight || below->cartan != s.cartan ||
        static_cast<int>(below->basis.size()) != s.boundary.rows())
        throw DimensionError("effective_rank: slice below does not match");
    std::vector<int> keep(below->basis.size(), -1);
    for (std::size_t i = 0; i < below->invariant_free.size(); ++i) keep[below->invariant_free[i]] = static_cast<int>(i);
    SparseMatBuilder b(static_cast<int>(below->invariant_free.size()), s.boundary.cols());
    for (const auto& e : s.boundary.entries())
        if (keep[e.row] >= 0) b.add(keep[e.row], e.col, e.value);
    return rank(b.build() * SparseMatQ::from_columns(static_cast<int>(s.basis.size()), *s.invariant));
}

/// dim H_k from slices k and k+1 (same weight and Cartan weight); slice k - 1 is optional.
inline HomologyResult homology_slice(const ChainSlice& at, const ChainSlice& above, bool strict = false,
                                     const ChainSlice* below = nullptr)
{
    if (above.k != at.k + 1 || above.weight != at.weight || above.cartan != at.cartan)
        throw DimensionError("homology_slice: slices do not form a consecutive pair");
    HomologyResult r;
    r.chain_dim = static_cast<std::size_t>(at.dim());
    r.trusted = at.trusted && above.trusted;
    if (strict && !r.trusted) throw UntrustedSliceError("slice at degree " + std::to_string(at.k) + " is untrusted");
    r.dim = r.chain_dim - effective_rank(at, below) - effective_rank(above, &at);
    return r;
}

inline HomologyResult homology_slice(const std::vector<ChainSlice>& slices, int k, bool strict = false)
{
    const ChainSlice *at = nullptr, *above = nullptr, *below = nullptr;
    for (const auto& s : slices) {
        if (s.k == k - 1) below = &s;
        if (s.k == k) at = &s;
        if (s.k == k + 1) above = &s;
    }
    if (!at || !above) throw DimensionError("homology_slice: slices k and k+1 are required");
    return homology_slice(*at, *above, strict, below);
}

/// H_k at weight w; the g (x) 1 action is trivial on homology, so Cartan weight 0 suffices.
inline HomologyResult homology(const CeComplex& c, int k, const std::vector<int>& w, bool strict = false)
{
    return homology_slice(c.slice(k, w), c.slice(k + 1, w), strict);
}

} // namespace curalg
