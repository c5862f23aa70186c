#pragma once

// Graded dimensions of the free graded-commutative algebra generated by
// HC_n^(m)(A) in degree n + 1 for every exponent m of g. For A = C this puts
// one generator in degree 2m + 1 per exponent, the primitive classes of H(g).

#include <map>
#include <utility>
#include <vector>

#include "curalg/derham/cyclic.hpp"
#include "curalg/error.hpp"
#include "curalg/lie/lie_algebra.hpp"

namespace curalg {

/// (degree, weight) -> dimension; absent keys are zero.
using GradedDims = std::map<std::pair<int, std::vector<int>>, Integer>;

struct PredictedGenerator {
    int degree = 0;
    std::vector<int> weight;
    std::size_t count = 0;
    int exponent = 0;
};

inline std::vector<PredictedGenerator> predicted_generators(const LiePresentation& g, const HCTable& t)
{
    std::vector<PredictedGenerator> out;
    for (int m : g.exponents)
        for (const auto& e : t.entries) {
            if (e.i != m || e.dim == 0) continue;
            if (!e.trusted) throw UntrustedSliceError("predicted_character: HC entry is untrusted");
            out.push_back({e.n + 1, e.weight, e.dim, m});
        }
    return out;
}

/// Free graded-commutative algebra on the generators, through degree max_degree and weights <= max_weight.
inline GradedDims predicted_character(const LiePresentation& g, const HCTable& t, int max_degree,
                                      const std::vector<int>& max_weight)
{
    auto inside = [&](const std::vector<int>& w) {
        for (std::size_t k = 0; k < w.size(); ++k)
            if (k < max_weight.size() && w[k] > max_weight[k]) return false;
        return true;
    };
    GradedDims series;
    series[{0, std::vector<int>(max_weight.size(), 0)}] = 1;
    for (const auto& gen : predicted_generators(g, t)) {
        if (gen.degree <= 0) throw Error("predicted_character: generator in non-positive degree");
        std::vector<int> gw = gen.weight;
        gw.resize(max_weight.size(), 0);
        const bool odd = gen.degree % 2 != 0;
        for (std::size_t c = 0; c < gen.count; ++c) {
            GradedDims next = series;
            // multiply by 1 + s (odd) or 1 + s + s^2 + ... (even)
            for (const auto& [key, v] : series) {
                auto [d, w] = key;
                for (int p = 1;; ++p) {
                    d += gen.degree;
                    for (std::size_t k = 0; k < w.size(); ++k) w[k] += gw[k];
                    if (d > max_degree || !inside(w)) break;
                    next[{d, w}] += v;
                    if (odd) break;
                }
            }
            series = std::move(next);
        }
    }
    return series;
}

inline Integer graded_dim(const GradedDims& s, int degree, const std::vector<int>& weight)
{
    auto it = s.find({degree, weight});
    return it == s.end() ? Integer(0) : it->second;
}

} // namespace curalg
