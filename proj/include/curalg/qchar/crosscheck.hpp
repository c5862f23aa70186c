#pragma once

// Euler characteristic cross-check between the Weyl character sum and
// relative current-algebra homology.
//
// Homology model: chains of sl2 (x) (C[x] + M) mod sl2, M = x^-1 C[x^-1] with
// M * M = 0, at weight (-w, p) where p counts M-factors. M is the restricted
// dual of C[[z]]dz (x^-b pairs with z^(b-1) dz), so H_q at chain degree q + p
// computes the q-th cohomology with Lambda^p(g[[z]]dz) coefficients in energy w.
// Each weight slice is infinite; chains with total positive x-degree <= S form
// a subcomplex. The scan starts at S = w + p(p+1)/2: below that level a class
// of H_q can still be missing while neighbouring levels agree (at p = 3, w = 0
// the H_3 class first appears at S = 6). A cell is accepted once homology
// agrees at three consecutive levels.
// The Weyl coefficient of q^w t^p equals (-1)^p sum_q (-1)^q dim H_q.

#include <string>
#include <vector>

#include "curalg/error.hpp"
#include "curalg/graded/algebras.hpp"
#include "curalg/lie/ce_complex.hpp"
#include "curalg/qchar/identities.hpp"

namespace curalg::qchar {

struct CrosscheckCell {
    int p = 0;
    int w = 0;
    Integer weyl_coefficient = 0;
    /// dim H_q for q = 0, 1, ... at the stable filtration level.
    std::vector<std::size_t> homology;
    Integer euler = 0;
    int filtration = 0;
    bool match = false;
};

struct CrosscheckReport {
    int p_max = 0;
    int w_max = 0;
    int n_max = 0;
    std::vector<CrosscheckCell> cells;

    bool all_match() const
    {
        for (const auto& c : cells)
            if (!c.match) return false;
        return true;
    }
    const CrosscheckCell* first_mismatch() const
    {
        for (const auto& c : cells)
            if (!c.match) return &c;
        return nullptr;
    }
};

/// Relative homology H_q, q = 0 .. q_max, at weight (-w, p) and filtration level s.
inline std::vector<std::size_t> filtered_relative_homology(int p, int w, int s, int q_max)
{
    GradedAlgebra a = square_zero_extension(s, s + w + 1);
    CeComplex cx(lie_presentation("sl", 2), a, CeMode::Relative, PositiveFiltration{0, s});
    std::vector<std::size_t> out;
    std::vector<ChainSlice> slices;
    for (int k = p; k <= p + q_max + 1; ++k) slices.push_back(cx.slice(k, {-w, p}));
    for (int q = 0; q <= q_max; ++q) out.push_back(homology_slice(slices, p + q, true).dim);
    return out;
}

/// Smallest Weyl-sum truncation that passes the stabilization check.
inline QTSeries stable_weyl_character_sum(int n_q, int n_t, int* n_max_used = nullptr, int n_max_cap = 12)
{
    for (int n = 1; n <= n_max_cap; ++n) {
        try {
            QTSeries s = weyl_character_sum(n_q, n_t, n);
            if (n_max_used) *n_max_used = n;
            return s;
        } catch (const StabilizationError&) {
        }
    }
    throw StabilizationError("Weyl sum did not stabilize up to n_max = " + std::to_string(n_max_cap));
}

/// Every cell p <= p_max, w <= w_max; homology degrees up to q_max, filtration raised until stable.
inline CrosscheckReport euler_crosscheck(int w_max, int p_max, int q_max = 4, int s_cap = 14)
{
    CrosscheckReport r;
    r.p_max = p_max;
    r.w_max = w_max;
    QTSeries weyl = stable_weyl_character_sum(w_max, p_max, &r.n_max);
    if (!weyl.is_u_free()) throw Error("euler_crosscheck: Weyl sum is not u-free");
    for (int p = 0; p <= p_max; ++p)
        for (int w = 0; w <= w_max; ++w) {
            CrosscheckCell c;
            c.p = p;
            c.w = w;
            const Rational k = weyl.coeff(w, p).numerator().coefficient(0);
            if (k.get_den() != 1) throw Error("euler_crosscheck: non-integral Weyl coefficient");
            c.weyl_coefficient = k.get_num();
            int s = w + p * (p + 1) / 2;
            std::vector<std::size_t> prev = filtered_relative_homology(p, w, s, q_max);
            int agreements = 0;
            bool stable = false;
            for (++s; s <= s_cap; ++s) {
                auto cur = filtered_relative_homology(p, w, s, q_max);
                agreements = cur == prev ? agreements + 1 : 0;
                prev = std::move(cur);
                if (agreements == 2) {
                    stable = true;
                    break;
                }
            }
            if (!stable)
                throw StabilizationError("euler_crosscheck: homology at (p, w) = (" + std::to_string(p) + ", " +
                                         std::to_string(w) + ") did not stabilize by S = " + std::to_string(s_cap));
            c.filtration = s - 2;
            c.homology = prev;
            Integer e = 0;
            for (std::size_t q = 0; q < prev.size(); ++q) e += (q % 2 ? -1 : 1) * Integer(static_cast<long>(prev[q]));
            c.euler = p % 2 ? Integer(-e) : e;
            c.match = c.euler == c.weyl_coefficient;
            r.cells.push_back(std::move(c));
        }
    return r;
}

} // namespace curalg::qchar
