#pragma once

// JSON reports. Every top-level document carries "schema": 1; rationals are
// strings "p" or "p/q" so values stay exact.

#include <string>
#include <vector>

#include <json.hpp>

#include "curalg/derham/cyclic.hpp"
#include "curalg/lie/cochains.hpp"
#include "curalg/lie/ce_complex.hpp"
#include "curalg/qchar/crosscheck.hpp"
#include "curalg/qchar/identities.hpp"

namespace curalg::io {

using nlohmann::ordered_json;

inline constexpr int kSchema = 1;

inline std::string rational_string(const Rational& r) { return r.get_str(); }

inline ordered_json weight_json(const std::vector<int>& w) { return ordered_json(w); }

inline ordered_json to_json(const HCTable& t)
{
    ordered_json entries = ordered_json::array();
    for (const auto& e : t.entries)
        entries.push_back({{"n", e.n}, {"i", e.i}, {"weight", e.weight}, {"dim", e.dim}, {"trusted", e.trusted}});
    return {{"schema", kSchema},
            {"algebra", t.algebra},
            {"window", {{"lo", t.window.lo}, {"hi", t.window.hi}}},
            {"entries", entries}};
}

/// Monomial list [{q, t, u, num, den}]; coefficients must be Laurent polynomials in u.
inline ordered_json to_json(const QTSeries& s)
{
    ordered_json terms = ordered_json::array();
    for (const auto& [qt, c] : s.terms()) {
        if (!c.is_polynomial()) throw Error("series coefficient at q^" + std::to_string(qt.first) + " is not a polynomial in u");
        for (const auto& [u, x] : c.numerator().terms())
            terms.push_back({{"q", qt.first},
                             {"t", qt.second},
                             {"u", u},
                             {"num", x.get_num().get_str()},
                             {"den", x.get_den().get_str()}});
    }
    return terms;
}

inline ordered_json series_document(const QTSeries& s, const std::string& name, int n_q, int n_t)
{
    return {{"schema", kSchema}, {"series", name}, {"n_q", n_q}, {"n_t", n_t}, {"terms", to_json(s)}};
}

inline ordered_json to_json(const qchar::IdentityReport& r, const std::string& name)
{
    ordered_json mismatch = nullptr;
    if (r.first_mismatch) mismatch = {{"q", r.first_mismatch->first}, {"t", r.first_mismatch->second}};
    return {{"schema", kSchema},
            {"identity", name},
            {"pass", r.pass()},
            {"lhs", to_json(r.lhs)},
            {"rhs", to_json(r.rhs)},
            {"first_mismatch", mismatch}};
}

struct SliceRow {
    int k = 0;
    std::vector<int> weight;
    std::size_t chain_dim = 0;
    std::size_t homology_dim = 0;
    bool trusted = true;
};

inline ordered_json ce_document(const CeComplex& cx, const std::string& algebra, const std::string& coefficients,
                                const std::vector<SliceRow>& rows)
{
    ordered_json slices = ordered_json::array();
    for (const auto& r : rows)
        slices.push_back({{"k", r.k},
                          {"weight", r.weight},
                          {"chain_dim", r.chain_dim},
                          {"homology_dim", r.homology_dim},
                          {"trusted", r.trusted}});
    return {{"schema", kSchema},
            {"lie", cx.lie().name + std::to_string(cx.lie().n)},
            {"algebra", algebra},
            {"mode", cx.mode() == CeMode::Relative ? "relative" : "absolute"},
            {"coefficients", coefficients},
            {"slices", slices}};
}

/// Sparse (label, value) list over chain monomials, in canonical monomial order.
inline ordered_json labelled_values(const CeComplex& cx, const CochainClass& c)
{
    ordered_json out = ordered_json::array();
    for (const auto& [e, x] : c.values) out.push_back({cx.label(e), rational_string(x)});
    return out;
}

inline ordered_json to_json(const CeComplex& cx, const CochainClass& c)
{
    return {{"direction", c.direction == Direction::Chain ? "chain" : "cochain"},
            {"degree", c.degree},
            {"weight", c.weight},
            {"closed", c.closed},
            {"checked", c.checked},
            {"skipped", c.skipped},
            {"values", labelled_values(cx, c)}};
}

inline ordered_json to_json(const CeComplex& cx, const BoundaryTest& t)
{
    auto vec = [&](const std::optional<SparseVec>& v, const std::vector<Exponents>& basis) -> ordered_json {
        if (!v) return nullptr;
        ordered_json out = ordered_json::array();
        for (const auto& [i, x] : *v)
            out.push_back({i < static_cast<int>(basis.size()) ? cx.label(basis[i]) : std::to_string(i), rational_string(x)});
        return out;
    };
    return {{"is_boundary", t.is_boundary},
            {"certified", t.certified},
            {"witness", t.witness ? ordered_json(static_cast<int>(t.witness->size())) : ordered_json(nullptr)},
            {"certificate", vec(t.certificate, t.certificate_basis)}};
}

inline ordered_json to_json(const qchar::CrosscheckReport& r)
{
    ordered_json cells = ordered_json::array();
    for (const auto& c : r.cells)
        cells.push_back({{"p", c.p},
                         {"w", c.w},
                         {"weyl", c.weyl_coefficient.get_str()},
                         {"euler", c.euler.get_str()},
                         {"homology", c.homology},
                         {"filtration", c.filtration},
                         {"match", c.match}});
    ordered_json mismatch = nullptr;
    if (const auto* m = r.first_mismatch()) mismatch = {{"p", m->p}, {"w", m->w}};
    return {{"schema", kSchema},
            {"p_max", r.p_max},
            {"w_max", r.w_max},
            {"n_max", r.n_max},
            {"pass", r.all_match()},
            {"cells", cells},
            {"first_mismatch", mismatch}};
}

} // namespace curalg::io
