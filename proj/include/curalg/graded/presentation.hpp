#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curalg/error.hpp"
#include "curalg/exact/sparse_matrix.hpp"
#include "curalg/graded/free_monomial.hpp"

namespace curalg {

struct BasisElement {
    std::string label;
    int degree = 0;
    std::vector<int> weight;
    /// Exponent vector in the ambient Laurent polynomial ring (used to build forms).
    std::vector<int> ambient;

    bool odd() const { return degree % 2 != 0; }
    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Per-coordinate inclusive weight bounds.
struct WeightWindow {
    std::vector<int> lo;
    std::vector<int> hi;

    bool contains(const std::vector<int>& w) const
    {
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (k < lo.size() && w[k] < lo[k]) return false;
            if (k < hi.size() && w[k] > hi[k]) return false;
        }
        return true;
    }
    friend bool operator==(const WeightWindow&, const WeightWindow&) = default;
};

/// Generators and differential of a free DGA, kept when the algebra is free.
struct FreeModel {
    std::vector<GeneratorSpec> generators;
    /// delta[i] = image of generator i, a polynomial in the generators.
    std::vector<Poly> delta;

    FreeMonomials monomials() const { return FreeMonomials(generators); }
    bool has_delta() const
    {
        for (const auto& p : delta)
            if (!p.empty()) return true;
        return false;
    }
    friend bool operator==(const FreeModel&, const FreeModel&) = default;
};

/// Finite-dimensional graded-commutative algebra given by a basis and structure constants.
///
/// Products that leave the window are zero and flagged in `truncated`.
/// The optional differential delta has degree -1.
class GradedAlgebra {
public:
    std::string name;
    std::size_t arity = 1;
    std::vector<BasisElement> basis;
    int unit = 0;
    WeightWindow window;
    std::optional<FreeModel> free_model;
    /// Canonical description text; reparses to an equal algebra.
    std::string spec_text;

    GradedAlgebra() = default;
    GradedAlgebra(std::string n, std::size_t ar, std::vector<BasisElement> b, WeightWindow w)
        : name(std::move(n)), arity(ar), basis(std::move(b)), window(std::move(w))
    {
        const std::size_t d = basis.size();
        table_.assign(d * d, {});
        truncated_.assign(d * d, 0);
        delta_.assign(d, {});
        for (std::size_t i = 0; i < d; ++i) index_[basis[i].label] = static_cast<int>(i);
        if (index_.size() != d) throw Error("duplicate basis label in algebra " + name);
    }

    int size() const { return static_cast<int>(basis.size()); }
    const SparseVec& product(int i, int j) const { return table_[idx(i, j)]; }
    bool is_truncated(int i, int j) const { return truncated_[idx(i, j)] != 0; }
    const SparseVec& delta(int i) const { return delta_[i]; }
    bool has_delta() const
    {
        for (const auto& v : delta_)
            if (!v.empty()) return true;
        return false;
    }
    bool is_odd(int i) const { return basis[i].odd(); }

    std::optional<int> find(const std::string& label) const
    {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    void set_product(int i, int j, SparseVec v) { table_[idx(i, j)] = std::move(v); }
    void mark_truncated(int i, int j) { truncated_[idx(i, j)] = 1; }
    void set_delta(int i, SparseVec v) { delta_[i] = std::move(v); }

    /// Any product involving i leaves the window.
    bool touches_window_boundary(int i) const
    {
        for (int j = 0; j < size(); ++j)
            if (is_truncated(i, j)) return true;
        return false;
    }

    /// Product of two sparse combinations; sets *used_truncated when a truncated pair contributes.
    SparseVec multiply(const SparseVec& a, const SparseVec& b, bool* used_truncated = nullptr) const
    {
        std::map<int, Rational> acc;
        for (const auto& [i, x] : a)
            for (const auto& [j, y] : b) {
                if (used_truncated && is_truncated(i, j)) *used_truncated = true;
                for (const auto& [k, z] : product(i, j)) acc[k] += x * y * z;
            }
        return sparse_from_map(acc);
    }

    SparseVec apply_delta(const SparseVec& a) const
    {
        std::map<int, Rational> acc;
        for (const auto& [i, x] : a)
            for (const auto& [k, z] : delta(i)) acc[k] += x * z;
        return sparse_from_map(acc);
    }

    friend bool operator==(const GradedAlgebra& a, const GradedAlgebra& b)
    {
        return a.arity == b.arity && a.basis == b.basis && a.unit == b.unit && a.table_ == b.table_ &&
               a.truncated_ == b.truncated_ && a.delta_ == b.delta_ && a.free_model == b.free_model;
    }

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * basis.size() + j; }

    std::vector<SparseVec> table_;
    std::vector<char> truncated_;
    std::vector<SparseVec> delta_;
    std::map<std::string, int> index_;
};

/// A graded module over a GradedAlgebra, given by its action table.
struct ModuleSpec {
    std::string name;
    std::vector<BasisElement> basis;
    /// action[a * basis.size() + m] = a . m
    std::vector<SparseVec> action;
    std::vector<char> truncated;

    int size() const { return static_cast<int>(basis.size()); }
    const SparseVec& act(int a, int m) const { return action[static_cast<std::size_t>(a) * basis.size() + m]; }
    bool is_truncated(int a, int m) const { return truncated[static_cast<std::size_t>(a) * basis.size() + m] != 0; }
};

// ---------------------------------------------------------------------------

struct Violation {
    enum class Kind { Commutativity, Associativity, Unit, Weight, DeltaDegree, DeltaSquare, Leibniz, DeltaWeight, ModuleAction };
    Kind kind;
    std::vector<int> indices;
    std::string detail;
};

struct PresentationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

inline const char* to_string(Violation::Kind k)
{
    switch (k) {
    case Violation::Kind::Commutativity: return "commutativity";
    case Violation::Kind::Associativity: return "associativity";
    case Violation::Kind::Unit: return "unit";
    case Violation::Kind::Weight: return "weight";
    case Violation::Kind::DeltaDegree: return "delta-degree";
    case Violation::Kind::DeltaSquare: return "delta-square";
    case Violation::Kind::Leibniz: return "leibniz";
    case Violation::Kind::DeltaWeight: return "delta-weight";
    case Violation::Kind::ModuleAction: return "module-action";
    }
    return "?";
}

/// Checks every algebra axiom on all basis pairs and triples whose products stay inside the window.
inline PresentationReport check_presentation(const GradedAlgebra& a)
{
    PresentationReport rep;
    const int n = a.size();
    auto add = [&](Violation::Kind k, std::vector<int> idx, std::string d) {
        rep.violations.push_back({k, std::move(idx), std::move(d)});
    };
    auto unitv = [](int i) { return SparseVec{{i, Rational(1)}}; };
    auto weight_sum = [&](int i, int j) {
        std::vector<int> w(a.arity, 0);
        for (std::size_t k = 0; k < a.arity; ++k) w[k] = a.basis[i].weight[k] + a.basis[j].weight[k];
        return w;
    };

    for (int i = 0; i < n; ++i)
        if (a.product(a.unit, i) != unitv(i) || a.product(i, a.unit) != unitv(i))
            add(Violation::Kind::Unit, {i}, a.basis[i].label);

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (a.is_truncated(i, j) || a.is_truncated(j, i)) continue;
            const int s = (a.is_odd(i) && a.is_odd(j)) ? -1 : 1;
            if (sparse_add(a.product(i, j), a.product(j, i), Rational(-s)).size() != 0)
                add(Violation::Kind::Commutativity, {i, j}, a.basis[i].label + "," + a.basis[j].label);
            for (const auto& [k, c] : a.product(i, j))
                if (a.basis[k].weight != weight_sum(i, j) || a.basis[k].degree != a.basis[i].degree + a.basis[j].degree)
                    add(Violation::Kind::Weight, {i, j, k}, a.basis[i].label + "," + a.basis[j].label);
        }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (a.is_truncated(i, j)) continue;
            for (int k = 0; k < n; ++k) {
                bool trunc = false;
                SparseVec left = a.multiply(a.product(i, j), unitv(k), &trunc);
                SparseVec right = a.multiply(unitv(i), a.product(j, k), &trunc);
                if (trunc || a.is_truncated(j, k)) continue;
                if (left != right)
                    add(Violation::Kind::Associativity, {i, j, k},
                        a.basis[i].label + "," + a.basis[j].label + "," + a.basis[k].label);
            }
        }

    if (!a.has_delta()) return rep;
    for (int i = 0; i < n; ++i) {
        for (const auto& [k, c] : a.delta(i)) {
            if (a.basis[k].degree != a.basis[i].degree - 1) add(Violation::Kind::DeltaDegree, {i, k}, a.basis[i].label);
            if (a.basis[k].weight != a.basis[i].weight) add(Violation::Kind::DeltaWeight, {i, k}, a.basis[i].label);
        }
        if (!a.apply_delta(a.delta(i)).empty()) add(Violation::Kind::DeltaSquare, {i}, a.basis[i].label);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (a.is_truncated(i, j)) continue;
            bool trunc = false;
            SparseVec lhs = a.apply_delta(a.product(i, j));
            SparseVec r1 = a.multiply(a.delta(i), unitv(j), &trunc);
            SparseVec r2 = a.multiply(unitv(i), a.delta(j), &trunc);
            if (trunc) continue;
            SparseVec rhs = sparse_add(r1, r2, a.is_odd(i) ? Rational(-1) : Rational(1));
            if (lhs != rhs) add(Violation::Kind::Leibniz, {i, j}, a.basis[i].label + "," + a.basis[j].label);
        }
    return rep;
}

/// Unit and associativity of a module action inside the window.
inline PresentationReport check_module(const GradedAlgebra& a, const ModuleSpec& m)
{
    PresentationReport rep;
    for (int x = 0; x < m.size(); ++x) {
        if (m.act(a.unit, x) != SparseVec{{x, Rational(1)}})
            rep.violations.push_back({Violation::Kind::Unit, {x}, m.basis[x].label});
        for (int i = 0; i < a.size(); ++i)
            for (int j = 0; j < a.size(); ++j) {
                if (a.is_truncated(i, j) || m.is_truncated(j, x)) continue;
                std::map<int, Rational> left, right;
                bool trunc = false;
                for (const auto& [k, c] : a.product(i, j))
                    for (const auto& [y, d] : m.act(k, x)) {
                        trunc = trunc || m.is_truncated(k, x);
                        left[y] += c * d;
                    }
                for (const auto& [y, d] : m.act(j, x)) {
                    trunc = trunc || m.is_truncated(i, y);
                    for (const auto& [z, e] : m.act(i, y)) right[z] += d * e;
                }
                if (trunc) continue;
                if (sparse_from_map(left) != sparse_from_map(right))
                    rep.violations.push_back({Violation::Kind::ModuleAction, {i, j, x}, m.basis[x].label});
            }
    }
    return rep;
}

} // namespace curalg
