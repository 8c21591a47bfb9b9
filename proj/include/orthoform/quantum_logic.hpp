#pragma once

// Questions and states: exact probability measures on a finite orthomodular
// lattice, supports, purity, mixtures, Axioms A-C checked by enumeration over
// an explicit finite state model, and unitary witnesses for Axiom D.

#include "orthoform/ortho_lattice.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orthoform {

class ModelViolation : public DomainError {
public:
    explicit ModelViolation(const std::string& what) : DomainError("model violation: " + what) {}
};

struct State {
    std::string name;
    std::vector<mpq_class> values;  // indexed by lattice element

    const mpq_class& operator()(std::size_t a) const { return values.at(a); }
    friend bool operator==(const State& a, const State& b) { return a.values == b.values; }
};

inline std::string to_string(const mpq_class& q) { return q.get_str(); }

// Additivity on orthogonal pairs implies it on finite
// orthogonal families, since a v b is orthogonal to c when a and b are.
// Returns the first violation, if any.
inline std::optional<std::string> measure_violation(const FiniteOML& L, const State& m) {
    if (m.values.size() != L.size())
        return "size";
    if (m(L.bottom()) != 0)
        return "m(0)=" + to_string(m(L.bottom()));
    if (m(L.top()) != 1)
        return "m(1)=" + to_string(m(L.top()));
    for (std::size_t a = 0; a < L.size(); ++a)
        if (m(a) < 0 || m(a) > 1)
            return "range:" + L.label(a);
    for (std::size_t a = 0; a < L.size(); ++a)
        for (std::size_t b = a + 1; b < L.size(); ++b)
            if (L.leq(a, L.orth(b)) && m(L.join(a, b)) != m(a) + m(b))
                return "additivity:" + L.label(a) + "," + L.label(b);
    return std::nullopt;
}

inline void require_state(const FiniteOML& L, const State& m) {
    if (auto v = measure_violation(L, m))
        throw ModelViolation("'" + m.name + "' is not a probability measure: " + *v);
}

// m(M) = <proj_M x, x> / <x, x> on a form-backed lattice of a positive
// definite space over Q or Q(i).
inline State vector_state(const FiniteOML& L, const Vector& x, std::string name = {}) {
    const HermitianSpace& s = L.space();
    s.require(x);
    const FieldDescriptor& f = s.field();
    if (!(f.kind == FieldKind::rational || f.kind == FieldKind::gaussian_rational))
        throw DomainError("vector states need Q or Q(i), got " + f.name());
    if (x.is_zero())
        throw DomainError("vector state of the zero vector");
    AnisotropyVerdict an = anisotropy(s);
    if (an.basis != "positive_definite")
        throw DomainError("vector states need a positive definite form, got " + an.basis);
    mpq_class norm = s.form(x, x).component(0);
    State m{name.empty() ? "vector:" + x.to_string() : std::move(name), {}};
    for (std::size_t a = 0; a < L.size(); ++a) {
        Projection p = project(s, L.subspace(a), x);
        Scalar v = s.form(p.m, x);
        if (!v.is_symmetric())
            throw InternalFault("<Px, x> is not real");
        m.values.push_back(v.component(0) / norm);
    }
    require_state(L, m);
    return m;
}

// The canonical state of an atom a: 1 above a, 0 below a-perp and 1/2 on
// everything else. This is a measure on height-two lattices and on Boolean
// lattices; elsewhere it is rejected.
inline State atom_state(const FiniteOML& L, std::size_t a, std::string name = {}) {
    if (L.height(a) != 1)
        throw DomainError(L.label(a) + " is not an atom");
    State m{name.empty() ? "atom:" + L.label(a) : std::move(name), {}};
    for (std::size_t x = 0; x < L.size(); ++x) {
        if (L.leq(a, x))
            m.values.emplace_back(1);
        else if (L.leq(x, L.orth(a)))
            m.values.emplace_back(0);
        else
            m.values.emplace_back(1, 2);
    }
    if (auto v = measure_violation(L, m))
        throw DomainError("no canonical state for atom " + L.label(a) + ": " + *v);
    return m;
}

inline State mixture(const std::vector<State>& states, const std::vector<mpq_class>& weights,
                     std::string name = {}) {
    if (states.empty() || states.size() != weights.size())
        throw DomainError("mixture needs one weight per state");
    mpq_class total = 0;
    for (const auto& w : weights) {
        if (w <= 0)
            throw DomainError("mixture weights must be positive, got " + to_string(w));
        total += w;
    }
    if (total != 1)
        throw DomainError("mixture weights sum to " + to_string(total) + ", not 1");
    State m{std::move(name), std::vector<mpq_class>(states[0].values.size(), 0)};
    if (m.name.empty())
        for (std::size_t i = 0; i < states.size(); ++i)
            m.name += (i ? "+" : "") + to_string(weights[i]) + "*" + states[i].name;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].values.size() != m.values.size())
            throw MismatchError("mixture of states on different lattices");
        for (std::size_t a = 0; a < m.values.size(); ++a)
            m.values[a] += weights[i] * states[i].values[a];
    }
    return m;
}

// --- supports --------------------------------------------------------------

struct Support {
    std::size_t support;  // least a with m(x) = 1 <=> x >= a
    std::size_t null;     // greatest b = a-perp with m(x) = 0 <=> x <= b
};

inline Support support(const FiniteOML& L, const State& m) {
    require_state(L, m);
    std::size_t a = L.top();
    for (std::size_t x = 0; x < L.size(); ++x)
        if (m(x) == 1)
            a = L.meet(a, x);
    if (m(a) != 1)
        throw ModelViolation("'" + m.name + "' has no support: the meet " + L.label(a) +
                             " of its certain elements has measure " + to_string(m(a)));
    std::size_t b = L.orth(a);
    for (std::size_t x = 0; x < L.size(); ++x) {
        if ((m(x) == 1) != L.leq(a, x))
            throw ModelViolation("support of '" + m.name + "' fails m(x)=1<=>x>=a at " + L.label(x));
        if ((m(x) == 0) != L.leq(x, b))
            throw ModelViolation("support of '" + m.name + "' fails m(x)=0<=>x<=b at " + L.label(x));
    }
    return {a, b};
}

// --- purity ----------------------------------------------------------------

struct PurityVerdict {
    bool pure = false;          // support is an atom
    bool decomposable = false;  // m = t m1 + (1-t) m2 with m1 != m2 in the model
    std::optional<std::pair<std::size_t, std::size_t>> parts;
    std::optional<mpq_class> t;
};

inline std::optional<std::size_t> model_index(const std::vector<State>& model, const State& m) {
    for (std::size_t i = 0; i < model.size(); ++i)
        if (model[i] == m)
            return i;
    return std::nullopt;
}

// Decomposition search: for each pair the weight t is forced by any element
// where the two states differ.
inline PurityVerdict is_pure(const FiniteOML& L, const std::vector<State>& model, const State& m) {
    if (!model_index(model, m))
        throw DomainError("state '" + m.name + "' is not in the model");
    PurityVerdict v;
    v.pure = L.height(support(L, m).support) == 1;
    for (std::size_t i = 0; i < model.size() && !v.decomposable; ++i)
        for (std::size_t j = 0; j < model.size() && !v.decomposable; ++j) {
            if (i == j || model[i] == model[j] || model[i] == m || model[j] == m)
                continue;
            std::size_t d = 0;
            while (model[i](d) == model[j](d))
                ++d;
            mpq_class t = (m(d) - model[j](d)) / (model[i](d) - model[j](d));
            if (t <= 0 || t >= 1)
                continue;
            bool ok = true;
            for (std::size_t x = 0; x < L.size() && ok; ++x)
                ok = m(x) == t * model[i](x) + (1 - t) * model[j](x);
            if (ok) {
                v.decomposable = true;
                v.parts = {i, j};
                v.t = t;
            }
        }
    return v;
}

// --- axioms ----------------------------------------------------------------

namespace detail {

inline std::size_t max_orthogonal_family(const FiniteOML& L) {
    std::size_t bound = L.height(L.top()), best = 0;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> dfs = [&](std::size_t from) {
        best = std::max(best, chosen.size());
        if (best == bound)
            return;
        for (std::size_t x = from; x < L.size(); ++x) {
            if (x == L.bottom())
                continue;
            bool orth = true;
            for (auto c : chosen)
                orth = orth && L.leq(x, L.orth(c));
            if (!orth)
                continue;
            chosen.push_back(x);
            dfs(x + 1);
            chosen.pop_back();
            if (best == bound)
                return;
        }
    };
    dfs(0);
    return best;
}

inline bool superposition(const FiniteOML& L, std::size_t c, std::size_t a, std::size_t b) {
    return c != a && c != b && L.leq(c, L.join(a, b));
}

} // namespace detail

inline Report check_axioms(const FiniteOML& L, const std::vector<State>& model) {
    Report rep;
    rep.info("elements", std::to_string(L.size()));
    rep.info("states", std::to_string(model.size()));

    std::string bad;
    for (const auto& m : model)
        if (auto v = measure_violation(L, m)) {
            bad = m.name + ":" + *v;
            break;
        }
    rep.check("qlogic.measures", bad.empty(), bad);
    if (!bad.empty())
        return rep;

    rep.info("max_orthogonal_family", std::to_string(detail::max_orthogonal_family(L)));
    rep.check("qlogic.A1", true);

    bad.clear();
    for (const auto& m : model) {
        for (std::size_t a = 0; a < L.size() && bad.empty(); ++a)
            for (std::size_t b = 0; b < L.size() && bad.empty(); ++b) {
                if (m(a) != 0 || m(b) != 0)
                    continue;
                bool found = false;
                for (std::size_t c = 0; c < L.size() && !found; ++c)
                    found = L.leq(a, c) && L.leq(b, c) && m(c) == 0;
                if (!found)
                    bad = "m=" + m.name + ";a=" + L.label(a) + ";b=" + L.label(b);
            }
        if (!bad.empty())
            break;
    }
    rep.check("qlogic.A2", bad.empty(), bad);

    std::vector<std::optional<std::size_t>> supports;
    bad.clear();
    for (const auto& m : model) {
        try {
            supports.push_back(support(L, m).support);
        } catch (const ModelViolation&) {
            supports.push_back(std::nullopt);
            if (bad.empty())
                bad = m.name;
        }
    }
    rep.check("qlogic.support", bad.empty(), bad);

    auto pure = [&](std::size_t i) { return supports[i] && L.height(*supports[i]) == 1; };

    bad.clear();
    for (std::size_t a = 0; a < L.size() && bad.empty(); ++a) {
        if (a == L.bottom())
            continue;
        bool found = false;
        for (std::size_t i = 0; i < model.size() && !found; ++i)
            found = pure(i) && model[i](a) == 1;
        if (!found)
            bad = L.label(a);
    }
    rep.check("qlogic.B1", bad.empty(), bad);

    bad.clear();
    for (std::size_t i = 0; i < model.size() && bad.empty(); ++i) {
        if (!pure(i))
            continue;
        for (std::size_t j = 0; j < model.size() && bad.empty(); ++j)
            if (model[j](*supports[i]) == 1 && !(model[j] == model[i]))
                bad = "pure=" + model[i].name + ";other=" + model[j].name;
    }
    rep.check("qlogic.B2", bad.empty(), bad);

    // Within the model a pure state never splits into two different states.
    bad.clear();
    std::size_t indecomposable_mixed = 0;
    for (std::size_t i = 0; i < model.size(); ++i) {
        PurityVerdict v = is_pure(L, model, model[i]);
        if (v.pure && v.decomposable && bad.empty())
            bad = model[i].name + "=" + model[v.parts->first].name + "," + model[v.parts->second].name;
        if (!v.pure && !v.decomposable)
            ++indecomposable_mixed;
    }
    rep.info("non_atomic_indecomposable", std::to_string(indecomposable_mixed));
    rep.check("qlogic.purity_cross_check", bad.empty(), bad);

    auto at = atoms(L);
    bad.clear();
    for (std::size_t i = 0; i < at.size() && bad.empty(); ++i)
        for (std::size_t j = i + 1; j < at.size() && bad.empty(); ++j) {
            bool found = false;
            for (auto c : at)
                found = found || detail::superposition(L, c, at[i], at[j]);
            if (!found)
                bad = "a=" + L.label(at[i]) + ";b=" + L.label(at[j]);
        }
    const bool c1 = bad.empty();
    rep.check("qlogic.C1", c1, bad);

    bad.clear();
    for (auto a : at)
        for (auto b : at)
            for (auto c : at)
                if (a != b && bad.empty() && detail::superposition(L, c, a, b) && !detail::superposition(L, a, b, c))
                    bad = "a=" + L.label(a) + ";b=" + L.label(b) + ";c=" + L.label(c);
    const bool c2 = bad.empty();
    rep.check("qlogic.C2", c2, bad);

    // Fullness is a property of the model, reported without judging.
    std::string full_witness;
    for (std::size_t a = 0; a < L.size() && full_witness.empty(); ++a)
        for (std::size_t b = 0; b < L.size() && full_witness.empty(); ++b) {
            if (L.leq(a, b))
                continue;
            bool dominated = true;
            for (const auto& m : model)
                dominated = dominated && m(a) <= m(b);
            if (dominated)
                full_witness = L.label(a) + "," + L.label(b);
        }
    rep.info("full", full_witness.empty() ? "yes" : "no:" + full_witness);

    const bool irreducible = is_irreducible(L);
    const bool covering = covering_check(L).passed();
    rep.info("irreducible", irreducible ? "yes" : "no");
    rep.info("covering", covering ? "yes" : "no");
    rep.check("qlogic.C1_implies_irreducible", !c1 || irreducible);
    rep.check("qlogic.C2_implies_covering", !c2 || covering);
    return rep;
}

// --- unitary operators -----------------------------------------------------

// U acts on rows, x -> x U. Unitary iff invertible and U G U* = G.
inline bool check_unitary(const HermitianSpace& s, const Matrix& u) {
    if (!(u.field() == s.field()) || u.rows() != s.dim() || u.cols() != s.dim())
        throw MismatchError("operator shape does not match the space");
    return rank(u) == s.dim() && u * s.gram() * u.star() == s.gram();
}

inline Subspace apply(const Matrix& u, const Subspace& m) {
    std::vector<Vector> rows;
    for (const auto& b : m.basis())
        rows.push_back(b * u);
    return Subspace::span(m.field(), m.ambient(), std::move(rows));
}

struct AxiomDWitness {
    Search status = Search::unknown;
    std::optional<Matrix> u;
    std::optional<Scalar> rho;  // e -> rho f
};

// a = Ke, b = Kf orthogonal atoms. A unitary U with U(e) = rho f forces
// <e,e> = rho <f,f> rho*, so norm_equiv decides. The witness sends
// e -> rho f, f -> rho^-1 e and fixes {e, f}-perp pointwise.
inline AxiomDWitness axiomD_witness(const HermitianSpace& s, const Subspace& a, const Subspace& b) {
    s.require(a);
    s.require(b);
    if (a.dim() != 1 || b.dim() != 1)
        throw DomainError("Axiom D relates atoms (lines)");
    if (a == b || !s.perp(a).contains(b))
        throw DomainError(a.to_string() + " is not orthogonal to " + b.to_string());
    const Vector& e = a.basis()[0];
    const Vector& f = b.basis()[0];
    Scalar ee = s.form(e, e), ff = s.form(f, f);
    if (ee.is_zero() || ff.is_zero())
        throw DomainError("Axiom D needs anisotropic atoms");
    auto eq = norm_equiv(s, ff, ee);
    if (eq.status == Equivalence::inequivalent)
        return {Search::none, std::nullopt, std::nullopt};
    if (eq.status == Equivalence::unknown)
        return {Search::unknown, std::nullopt, std::nullopt};
    const Scalar& rho = *eq.rho;

    Subspace rest = s.perp(Subspace::span(s.field(), s.dim(), {e, f}));
    std::vector<Vector> src{e, f}, dst{rho * f, rho.inverse() * e};
    for (const auto& w : rest.basis()) {
        src.push_back(w);
        dst.push_back(w);
    }
    if (src.size() != s.dim())
        throw InternalFault("{e,f} and its perp do not span E");
    const std::size_t n = s.dim();
    Matrix u = inverse(Matrix::from_rows(s.field(), n, src)) * Matrix::from_rows(s.field(), n, dst);
    if (!check_unitary(s, u) || !(apply(u, a) == b))
        throw InternalFault("Axiom D witness is not a unitary taking a to b");
    return {Search::found, u, rho};
}

} // namespace orthoform
