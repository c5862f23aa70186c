#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification mismatch,
// 2 usage or parse error. Reports are deterministic for a fixed command line.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curalg/cli/verify.hpp"

namespace curalg::cli {

inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;

class UsageError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    std::string command;
    std::string algebra;
    std::string lie = "sl2";
    std::string format = "json";
    std::string output;
    bool strict = true;
    int i_max = 3;
    int n_max = -1;
    int k_max = 6;
    int n_q = 6;
    int n_t = 6;
    int w_max = 3;
    int p_max = 3;
    int cocycle_i = 1;
    int cocycle_n = 1;
    bool relative = false;
    std::vector<int> weight;
    std::vector<int> dx;
    std::string functional = "const";
    std::string check = "all";
    std::string suite = "all";
};

namespace detail {

/// "sl2", "gl3", "sl_2" -> (family, n).
inline LiePresentation parse_lie(const std::string& s)
{
    std::string family = s.substr(0, 2);
    std::string rest = s.substr(std::min<std::size_t>(2, s.size()));
    if (!rest.empty() && rest[0] == '_') rest.erase(0, 1);
    if ((family != "sl" && family != "gl") || rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("unknown Lie algebra '" + s + "' (expected sl<n> or gl<n>)");
    return lie_presentation(family, std::stoi(rest));
}

inline GradedAlgebra algebra_of(const RunConfig& c)
{
    if (c.algebra.empty()) throw UsageError("--algebra is required");
    return parse_algebra_spec(c.algebra);
}

inline std::vector<int> weight_of(const RunConfig& c, const GradedAlgebra& a)
{
    std::vector<int> w = c.weight;
    if (w.empty()) w.assign(static_cast<std::size_t>(a.arity), 0);
    if (static_cast<int>(w.size()) != a.arity)
        throw UsageError("--weight needs " + std::to_string(a.arity) + " entries");
    return w;
}

inline FormFunctional functional_of(const RunConfig& c, const GradedAlgebra& a)
{
    if (c.functional == "residue") return residue_functional();
    if (c.functional == "const") {
        const std::size_t vars = a.basis.empty() ? 0 : a.basis[0].ambient.size();
        return constant_coefficient(c.dx, vars);
    }
    throw UsageError("unknown functional '" + c.functional + "' (expected residue or const)");
}

inline std::string weight_text(const std::vector<int>& w)
{
    std::string s = "(";
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
    return s + ")";
}

struct Output {
    ordered_json document;
    std::vector<std::string> table;
    int code = kOk;
};

inline Output hc(const RunConfig& c)
{
    GradedAlgebra a = algebra_of(c);
    const int n_hi = c.n_max >= 0 ? c.n_max : 2 * c.i_max + 2;
    // Default bound (i_max + 1)(d + 1) - 1 per coordinate, d the top basis weight:
    // quotients carry HC^(i) above their own basis weights.
    WeightWindow window{std::vector<int>(a.arity, 0), std::vector<int>(a.arity, 0)};
    for (const auto& b : a.basis)
        for (int k = 0; k < a.arity; ++k) window.hi[k] = std::max(window.hi[k], b.weight[k]);
    for (int& h : window.hi) h = (c.i_max + 1) * (h + 1) - 1;
    if (!c.weight.empty()) window.hi = weight_of(c, a);
    HCTable t = cyclic_homology(a, c.i_max, 0, n_hi, window);
    Output o{io::to_json(t)};
    o.table.push_back("n\ti\tweight\tdim");
    for (const auto& e : t.entries)
        if (e.dim) o.table.push_back(std::to_string(e.n) + "\t" + std::to_string(e.i) + "\t" + weight_text(e.weight) +
                                     "\t" + std::to_string(e.dim));
    return o;
}

inline Output ce(const RunConfig& c)
{
    GradedAlgebra a = algebra_of(c);
    CeComplex cx(parse_lie(c.lie), a, c.relative ? CeMode::Relative : CeMode::Absolute);
    const auto w = weight_of(c, a);
    auto slices = cx.build_complex(0, c.k_max + 1, w);
    std::vector<io::SliceRow> rows;
    Output o;
    o.table.push_back("k\tweight\tchains\thomology\ttrusted");
    for (int k = 0; k <= c.k_max; ++k) {
        auto h = homology_slice(slices, k, false);
        if (c.strict && !h.trusted) throw UntrustedSliceError("slice at degree " + std::to_string(k) + " is untrusted");
        rows.push_back({k, w, h.chain_dim, h.dim, h.trusted});
        o.table.push_back(std::to_string(k) + "\t" + weight_text(w) + "\t" + std::to_string(h.chain_dim) + "\t" +
                          std::to_string(h.dim) + "\t" + (h.trusted ? "yes" : "no"));
    }
    o.document = io::ce_document(cx, c.algebra, "trivial", rows);
    return o;
}

inline Output cocycle(const RunConfig& c, bool square)
{
    GradedAlgebra a = algebra_of(c);
    CeComplex cx(parse_lie(c.lie), a, c.relative ? CeMode::Relative : CeMode::Absolute);
    const auto w = weight_of(c, a);
    CochainClass k = integral_cocycle(cx, c.cocycle_i, c.cocycle_n, functional_of(c, a), w);
    if (square) k = cup_product(cx, k, k);
    BoundaryTest t = is_boundary(cx, k);
    Output o;
    o.document = {{"schema", io::kSchema},
                  {"lie", c.lie},
                  {"algebra", c.algebra},
                  {"i", c.cocycle_i},
                  {"n", c.cocycle_n},
                  {"square", square},
                  {"class", io::to_json(cx, k)},
                  {"boundary", io::to_json(cx, t)}};
    o.table.push_back("degree\t" + std::to_string(k.degree));
    o.table.push_back("weight\t" + weight_text(k.weight));
    o.table.push_back("terms\t" + std::to_string(k.values.size()));
    o.table.push_back(std::string("closed\t") + (k.closed ? "yes" : "no"));
    o.table.push_back(std::string("exact\t") + (t.is_boundary ? "yes" : "no") + (t.certified ? " (certified)" : ""));
    if (!k.closed) o.code = kMismatch;
    return o;
}

inline Output from_suite(const SuiteResult& r)
{
    Output o;
    o.document = r.report;
    o.document["schema"] = io::kSchema;
    o.document["suite"] = r.id;
    o.document["pass"] = r.pass;
    o.document["summary"] = r.summary;
    o.table.push_back(std::string(r.pass ? "PASS" : "FAIL") + "\t" + r.id + "\t" + r.summary);
    o.code = r.pass ? kOk : kMismatch;
    return o;
}

inline Output character(const RunConfig& c)
{
    if (c.check == "all") return from_suite(character_identity(c.n_q, c.n_t));
    if (c.check != "none") throw UsageError("--check must be all or none");
    int used = 0;
    QTSeries s = qchar::stable_weyl_character_sum(c.n_q, c.n_t, &used);
    Output o{io::series_document(s, "weyl", c.n_q, c.n_t)};
    o.document["n_max"] = used;
    for (const auto& [qt, x] : s.terms())
        o.table.push_back("q^" + std::to_string(qt.first) + " t^" + std::to_string(qt.second) + "\t" + x.str());
    return o;
}

inline Output verify(const RunConfig& c)
{
    std::vector<const Suite*> todo;
    if (c.suite == "all") {
        for (const auto& s : suites()) todo.push_back(&s);
    } else if (const Suite* s = find_suite(c.suite)) {
        todo.push_back(s);
    } else {
        throw UsageError("unknown suite '" + c.suite + "'");
    }
    Output o;
    ordered_json results = ordered_json::array();
    bool all = true;
    for (const Suite* s : todo) {
        SuiteResult r = run_suite(*s);
        all = all && r.pass;
        results.push_back({{"suite", r.id}, {"criterion", r.criterion}, {"pass", r.pass}, {"summary", r.summary},
                           {"report", r.report}});
        o.table.push_back(std::string(r.pass ? "PASS" : "FAIL") + "\t" + std::to_string(r.criterion) + "\t" + r.id +
                          "\t" + r.summary);
    }
    o.document = {{"schema", io::kSchema}, {"pass", all}, {"suites", results}};
    o.code = all ? kOk : kMismatch;
    return o;
}

inline Output dispatch(const RunConfig& c)
{
    if (c.command == "hc") return hc(c);
    if (c.command == "ce") return ce(c);
    if (c.command == "cocycle") return cocycle(c, false);
    if (c.command == "cup") return cocycle(c, true);
    if (c.command == "char") return character(c);
    if (c.command == "ramanujan") return from_suite(ramanujan(c.n_q));
    if (c.command == "crosscheck") return from_suite(crosscheck(c.w_max, c.p_max));
    if (c.command == "verify") return verify(c);
    throw UsageError("a subcommand is required");
}

} // namespace detail

/// Parses argv into a config; CLI11 errors are rethrown for the caller.
inline RunConfig parse_args(CLI::App& app, RunConfig& c, int argc, const char* const* argv)
{
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", c.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    app.add_option("-o,--output", c.output, "write the report to a file");
    app.add_flag("!--no-strict", c.strict, "allow untrusted slices");

    auto algebra_opts = [&](CLI::App* s) {
        s->add_option("--algebra", c.algebra, "algebra spec text")->required();
        s->add_option("--weight", c.weight, "weight vector")->delimiter(',');
    };
    auto lie_opts = [&](CLI::App* s) {
        s->add_option("--lie", c.lie, "sl<n> or gl<n>");
        s->add_flag("--relative", c.relative, "chains relative to g (x) 1");
    };

    auto* hc = app.add_subcommand("hc", "cyclic homology table");
    algebra_opts(hc);
    hc->add_option("--i-max", c.i_max)->check(CLI::NonNegativeNumber);
    hc->add_option("--n-max", c.n_max)->check(CLI::NonNegativeNumber);

    auto* ce = app.add_subcommand("ce", "current-algebra homology per degree");
    algebra_opts(ce);
    lie_opts(ce);
    ce->add_option("--k-max", c.k_max)->check(CLI::NonNegativeNumber);

    for (const char* name : {"cocycle", "cup"}) {
        auto* s = app.add_subcommand(name, std::string(name) == "cup" ? "square of an invariant cocycle"
                                                                      : "invariant cocycle from a form functional");
        algebra_opts(s);
        lie_opts(s);
        s->add_option("--i", c.cocycle_i)->check(CLI::PositiveNumber);
        s->add_option("--n", c.cocycle_n)->check(CLI::NonNegativeNumber);
        s->add_option("--functional", c.functional, "residue or const");
        s->add_option("--dx", c.dx, "sorted variable indices of the constant form")->delimiter(',');
    }

    auto* ch = app.add_subcommand("char", "character identity");
    ch->add_option("--Nq", c.n_q)->check(CLI::NonNegativeNumber);
    ch->add_option("--Nt", c.n_t)->check(CLI::NonNegativeNumber);
    ch->add_option("--check", c.check, "all or none");

    auto* ram = app.add_subcommand("ramanujan", "bilateral summation checks");
    ram->add_option("--Nq", c.n_q)->check(CLI::NonNegativeNumber);

    auto* cc = app.add_subcommand("crosscheck", "Euler characteristic cross-check");
    cc->add_option("--w-max", c.w_max)->check(CLI::NonNegativeNumber);
    cc->add_option("--p-max", c.p_max)->check(CLI::NonNegativeNumber);

    auto* v = app.add_subcommand("verify", "acceptance suites");
    v->add_option("suite", c.suite, "suite id, criterion number or all")->required();

    app.parse(argc, argv);
    c.command = app.get_subcommands().front()->get_name();
    if (c.command == "ramanujan" && ram->count("--Nq") == 0) c.n_q = 8;
    return c;
}

/// Entry point; reports go to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    CLI::App app{"exact current-algebra homology and character identities", "curalg"};
    RunConfig c;
    try {
        parse_args(app, c, argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }
    detail::Output o;
    try {
        o = detail::dispatch(c);
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kMismatch;
    }
    std::ostringstream text;
    if (c.format == "table") {
        for (const auto& line : o.table) text << line << "\n";
    } else {
        text << o.document.dump(2) << "\n";
    }
    if (c.output.empty()) {
        out << text.str();
    } else {
        std::ofstream f(c.output);
        if (!f) {
            err << "cannot write " << c.output << "\n";
            return kUsage;
        }
        f << text.str();
    }
    return o.code;
}

} // namespace curalg::cli
