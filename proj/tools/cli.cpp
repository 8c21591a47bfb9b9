#include "cli.hpp"

#include "document.hpp"
#include "orthoform/baer_ring.hpp"
#include "orthoform/projective.hpp"
#include "orthoform/quantum_logic.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace orthoform::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Document need_document(const RunRequest& r) {
    if (r.input.empty())
        throw UsageError(r.command + " needs --input PATH");
    return load_document(r.input);
}

CheckOptions options(const RunRequest& r) {
    CheckOptions o;
    if (r.mode == "auto")
        o.mode = Mode::automatic;
    else if (r.mode == "exhaustive")
        o.mode = Mode::exhaustive;
    else if (r.mode == "sampled")
        o.mode = Mode::sampled;
    else
        throw UsageError("--mode must be exhaustive, sampled or auto");
    o.cap = r.cap;
    o.samples = r.samples;
    o.seed = r.seed;
    return o;
}

const Subspace& only_subspace(const RunRequest& r, const Document& d) {
    if (r.subspaces.size() != 1)
        throw UsageError(r.command + " needs exactly one --subspace NAME");
    return d.subspace(r.subspaces[0]);
}

ProjPoint named_point(const Document& d, const std::string& name) {
    const Subspace& s = d.subspace(name);
    if (s.dim() != 1)
        throw UsageError("subspace '" + name + "' is not a point (dim " + std::to_string(s.dim()) + ")");
    return ProjPoint::from_subspace(s);
}

// P, Q from the first two --subspace names, else Ke1, Ke2.
std::pair<ProjPoint, ProjPoint> point_pair(const RunRequest& r, const Document& d) {
    if (r.subspaces.size() >= 2)
        return {named_point(d, r.subspaces[0]), named_point(d, r.subspaces[1])};
    if (!r.subspaces.empty())
        throw UsageError(r.command + " takes two or three --subspace names");
    const std::size_t n = d.space.dim();
    if (n < 2)
        throw UsageError(r.command + " needs dimension >= 2");
    return {ProjPoint(Vector::unit(d.field, n, 0)), ProjPoint(Vector::unit(d.field, n, 1))};
}

std::string opt(const std::optional<Subspace>& s) { return s ? s->to_string() : ""; }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw UsageError("cannot write '" + path + "'");
    f << text;
}

// --- subcommands ------------------------------------------------------------

Report cmd_perp(const RunRequest& r) {
    Document d = need_document(r);
    const Subspace& m = only_subspace(r, d);
    Report rep;
    rep.info("subspace", m.to_string());
    rep.info("perp", d.space.perp(m).to_string());
    return rep;
}

Report cmd_closure(const RunRequest& r) {
    Document d = need_document(r);
    const Subspace& m = only_subspace(r, d);
    Subspace c = d.space.closure(m);
    Report rep;
    rep.info("subspace", m.to_string());
    rep.info("closure", c.to_string());
    rep.info("closed", c == m ? "yes" : "no");
    rep.check("closure.idempotent", d.space.closure(c) == c, c.to_string());
    return rep;
}

Report cmd_check_space(const RunRequest& r) {
    Document d = need_document(r);
    const HermitianSpace& s = d.space;
    Report rep;
    rep.info("field", d.field.name());
    rep.info("dim", std::to_string(s.dim()));
    rep.info("kind", s.kind() == FormKind::hermitian ? "hermitian" : "alternate");

    AnisotropyVerdict an = anisotropy(s);
    rep.info("anisotropy", to_string(an.status) + "/" + an.basis);
    if (an.status != Anisotropy::unknown)
        rep.check("space.anisotropic", an.status == Anisotropy::anisotropic,
                  an.witness ? an.witness->to_string() : "");

    SpaceVerdict v = check_orthomodular_space(s, options(r));
    rep.info("orthomodular_mode", to_string(v.mode));
    rep.info("examined", std::to_string(v.examined));
    rep.check("space.orthomodular", v.holds, opt(v.witness));
    if (an.status != Anisotropy::unknown && v.mode == Mode::exhaustive)
        rep.check("space.anisotropic_iff_orthomodular", (an.status == Anisotropy::anisotropic) == v.holds);

    FormClassification c = classify_form(s);
    rep.info("classification", to_string(c.kind));
    return rep;
}

Report cmd_harmonic(const RunRequest& r) {
    Document d = need_document(r);
    const HermitianSpace& s = d.space;
    const FieldDescriptor& f = d.field;
    const std::size_t n = s.dim();
    CheckOptions o = options(r);
    Polarity pol = Polarity::from_space(s);
    Report rep;

    if (n >= 3) {
        Mode mode = resolve_mode(f, n, o);
        rep.info("sweep_mode", to_string(mode));
        try {
            if (mode == Mode::exhaustive) {
                HarmonicSweep sw = harmonic_sweep(f, n, o.cap);
                rep.info("constructions", std::to_string(sw.constructions));
                rep.info("triples", std::to_string(sw.triples));
            } else {
                Sampler sampler(o.seed);
                std::size_t done = 0;
                while (done < o.samples) {
                    Vector p = sampler.vector(f, n, true), q = sampler.vector(f, n, true);
                    if (Subspace::span(f, n, {p, q}).dim() != 2)
                        continue;
                    Scalar t = sampler.scalar(f, true);
                    harmonic_conjugate(ProjPoint(p + t * q), ProjPoint(p), ProjPoint(q));
                    ++done;
                }
                rep.info("triples", std::to_string(done));
            }
            rep.check("harmonic.synthetic_equals_analytic", true);
        } catch (const InternalFault& e) {
            rep.check("harmonic.synthetic_equals_analytic", false, e.what());
        }
    }

    auto [p, q] = point_pair(r, d);
    rep.info("P", p.to_string());
    rep.info("Q", q.to_string());
    if (r.subspaces.size() >= 3) {
        ProjPoint c = named_point(d, r.subspaces[2]);
        rep.info("C", c.to_string());
        rep.info("conjugate", harmonic_conjugate(pol, c, p, q).to_string());
    }
    const Vector &e = p.rep(), &fv = q.rep();
    if (s.form(e, fv).is_zero() && !s.form(e, e).is_zero() && !s.form(fv, fv).is_zero()) {
        HarmonicWitness hw = norm_equiv_by_harmonic(pol, p, q);
        NormEquivVerdict alg = norm_equiv(s, s.form(fv, fv), s.form(e, e));
        rep.info("harmonic_norm_equiv", to_string(hw.status) + (hw.c ? ":" + hw.c->to_string() : ""));
        rep.info("algebraic_norm_equiv", to_string(alg.status));
        if (hw.status != Equivalence::unknown && alg.status != Equivalence::unknown)
            rep.check("harmonic.matches_norm_equiv", hw.status == alg.status);
    }
    return rep;
}

Report cmd_lemma33(const RunRequest& r) {
    Document d = need_document(r);
    Lemma33Result res = lemma33_check(Polarity::from_space(d.space), options(r));
    return res.report();
}

Report cmd_geometry_axioms(const RunRequest& r) {
    Document d = need_document(r);
    Report rep;
    if (d.field.is_prime_field())
        rep.append(check_projective_axioms(d.field, d.space.dim(), r.cap));
    else
        rep.info("projective_axioms", "skipped:infinite_field");
    rep.append(check_polarity_axioms(Polarity::from_space(d.space), options(r)));
    return rep;
}

FiniteOML lattice_for(const RunRequest& r, const Document& d) {
    if (d.field.is_prime_field())
        return build_oml(d.space, r.cap);
    std::vector<Subspace> gens;
    if (!r.subspaces.empty()) {
        for (const auto& name : r.subspaces)
            gens.push_back(d.subspace(name));
    } else {
        for (const auto& entry : d.subspaces)
            gens.push_back(entry.second);
    }
    for (const auto& st : d.states)
        if (st.kind != StateSpec::Kind::mixture)
            gens.push_back(Subspace::line(st.vector));
    if (gens.empty())
        for (std::size_t i = 0; i < d.space.dim(); ++i)
            gens.push_back(Subspace::line(Vector::unit(d.field, d.space.dim(), i)));
    return build_oml_from_family(d.space, gens, r.cap);
}

Report cmd_lattice(const RunRequest& r, std::ostream& out) {
    Document d = need_document(r);
    Report rep;
    std::optional<FiniteOML> L;
    try {
        L = lattice_for(r, d);
    } catch (const NotOrthomodular& e) {
        rep.check("lattice.orthomodular", false, e.witness().to_string());
        return rep;
    }
    if (r.action == "dot") {
        std::string dot = emit_dot(*L);
        if (r.dot.empty())
            out << dot;
        else
            write_file(r.dot, dot);
        return rep;
    }
    rep.info("exhaustive", L->exhaustive() ? "yes" : "no");
    if (r.action == "build") {
        rep.info("elements", std::to_string(L->size()));
        rep.info("atoms", std::to_string(atoms(*L).size()));
        rep.info("height", std::to_string(L->height(L->top())));
        for (std::size_t a = 0; a < L->size(); ++a)
            rep.info("element." + std::to_string(a), L->label(a));
        rep.check("lattice.orthomodular", true);
    } else {
        rep.append(check_oml_axioms(*L));
        rep.append(lattice_structure_report(*L));
        rep.append(omega_embed(*L, r.seed));
    }
    if (!r.dot.empty())
        write_file(r.dot, emit_dot(*L));
    return rep;
}

Report cmd_baer_demo(const RunRequest& r) {
    if (r.n == 0 || r.n > 6)
        throw UsageError("--n must be between 1 and 6");
    MatrixRing ring(parse_field(r.field), r.n);
    return baer_demo(ring, r.seed);
}

std::vector<State> model_for(const Document& d, const FiniteOML& L) {
    std::vector<State> model;
    if (d.states.empty()) {
        for (auto a : atoms(L))
            model.push_back(d.field.is_prime_field() ? atom_state(L, a)
                                                     : vector_state(L, L.subspace(a).basis()[0]));
        return model;
    }
    std::map<std::string, std::size_t> by_name;
    for (const auto& st : d.states) {
        switch (st.kind) {
        case StateSpec::Kind::vector:
            model.push_back(vector_state(L, st.vector, st.name));
            break;
        case StateSpec::Kind::atom:
            model.push_back(atom_state(L, L.index_of(d.space.closure(Subspace::line(st.vector))), st.name));
            break;
        case StateSpec::Kind::mixture: {
            std::vector<State> parts;
            std::vector<mpq_class> weights;
            for (const auto& [w, name] : st.parts) {
                parts.push_back(model[by_name.at(name)]);
                weights.push_back(w);
            }
            try {
                model.push_back(mixture(parts, weights, st.name));
            } catch (const DomainError& e) {
                throw ParseError(e.what(), st.line);
            }
            break;
        }
        }
        by_name[st.name] = model.size() - 1;
    }
    return model;
}

Report cmd_qlogic(const RunRequest& r) {
    Document d = need_document(r);
    Report rep;
    std::optional<FiniteOML> L;
    try {
        L = lattice_for(r, d);
    } catch (const NotOrthomodular& e) {
        rep.check("lattice.orthomodular", false, e.witness().to_string());
        return rep;
    }
    std::vector<State> model = model_for(d, *L);
    rep.append(check_axioms(*L, model));

    auto at = atoms(*L);
    for (const auto& m : model) {
        std::string values;
        for (auto a : at)
            values += (values.empty() ? "" : ";") + L->label(a) + ":" + to_string(m(a));
        rep.info("state." + m.name + ".atoms", values);
        try {
            Support s = support(*L, m);
            PurityVerdict v = is_pure(*L, model, m);
            rep.info("state." + m.name + ".support", L->label(s.support));
            rep.info("state." + m.name + ".pure", v.pure ? "yes" : "no");
        } catch (const ModelViolation&) {
            rep.info("state." + m.name + ".support", "none");
        }
    }

    std::string bad;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < at.size(); ++i)
        for (std::size_t j = 0; j < at.size(); ++j) {
            if (i == j || !L->leq(at[i], L->orth(at[j])))
                continue;
            ++pairs;
            AxiomDWitness w = axiomD_witness(d.space, L->subspace(at[i]), L->subspace(at[j]));
            if (w.status != Search::found && bad.empty())
                bad = "a=" + L->label(at[i]) + ";b=" + L->label(at[j]) + ";" + to_string(w.status);
        }
    rep.info("orthogonal_atom_pairs", std::to_string(pairs));
    rep.check("qlogic.D", bad.empty(), bad);
    return rep;
}

Report cmd_norm_equiv(const RunRequest& r) {
    Document d = need_document(r);
    const HermitianSpace& s = d.space;
    auto [p, q] = point_pair(r, d);
    Scalar lambda = s.form(p.rep(), p.rep()), mu = s.form(q.rep(), q.rep());
    NormEquivVerdict v = norm_equiv(s, lambda, mu);
    Report rep;
    rep.info("P", p.to_string());
    rep.info("Q", q.to_string());
    rep.info("lambda", lambda.to_string());
    rep.info("mu", mu.to_string());
    rep.info("status", to_string(v.status));
    if (v.rho)
        rep.info("rho", v.rho->to_string());
    if (s.form(p.rep(), q.rep()).is_zero() && !lambda.is_zero() && !mu.is_zero()) {
        HarmonicWitness hw = norm_equiv_by_harmonic(Polarity::from_space(s), p, q);
        if (hw.status != Equivalence::unknown && v.status != Equivalence::unknown)
            rep.check("norm_equiv.harmonic_agrees", hw.status == v.status, to_string(hw.status));
    }
    return rep;
}

} // namespace

int run(const RunRequest& r, std::ostream& out, std::ostream& err) {
    static const std::map<std::string, std::function<Report(const RunRequest&, std::ostream&)>> commands = {
        {"perp", [](const RunRequest& q, std::ostream&) { return cmd_perp(q); }},
        {"closure", [](const RunRequest& q, std::ostream&) { return cmd_closure(q); }},
        {"check-space", [](const RunRequest& q, std::ostream&) { return cmd_check_space(q); }},
        {"harmonic", [](const RunRequest& q, std::ostream&) { return cmd_harmonic(q); }},
        {"lemma33", [](const RunRequest& q, std::ostream&) { return cmd_lemma33(q); }},
        {"geometry-axioms", [](const RunRequest& q, std::ostream&) { return cmd_geometry_axioms(q); }},
        {"lattice", [](const RunRequest& q, std::ostream& o) { return cmd_lattice(q, o); }},
        {"baer-demo", [](const RunRequest& q, std::ostream&) { return cmd_baer_demo(q); }},
        {"qlogic-check", [](const RunRequest& q, std::ostream&) { return cmd_qlogic(q); }},
        {"norm-equiv", [](const RunRequest& q, std::ostream&) { return cmd_norm_equiv(q); }},
    };
    try {
        auto it = commands.find(r.command);
        if (it == commands.end())
            throw UsageError("unknown subcommand '" + r.command + "'");
        if (r.command == "lattice" && r.action != "build" && r.action != "check" && r.action != "dot")
            throw UsageError("lattice needs an action: build, check or dot");
        options(r);
        Report rep = it->second(r, out);
        out << rep;
        return rep.passed() ? exit_pass : exit_check_failed;
    } catch (const InternalFault& e) {
        err << "internal fault: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return exit_usage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks for Hermitian spaces, polar geometries, orthomodular lattices, matrix *-rings "
                 "and finite quantum logics.",
                 "orthoform"};
    app.require_subcommand(1);
    RunRequest req;

    auto common = [&](CLI::App* sc) {
        sc->add_option("--input", req.input, "space description document");
        sc->add_option("--subspace", req.subspaces, "named subspace (repeatable)");
        sc->add_option("--mode", req.mode, "exhaustive | sampled | auto")
            ->check(CLI::IsMember({"exhaustive", "sampled", "auto"}));
        sc->add_option("--seed", req.seed, "sampling seed");
        sc->add_option("--cap", req.cap, "exhaustive enumeration cap");
        sc->add_option("--samples", req.samples, "sample count in sampled mode");
        sc->add_option("--dot", req.dot, "write the lattice as DOT to this path");
    };

    const std::vector<std::pair<std::string, std::string>> simple = {
        {"perp", "orthogonal complement of --subspace"},
        {"closure", "double perp of --subspace"},
        {"check-space", "anisotropy, orthomodularity and form class"},
        {"harmonic", "harmonic conjugates and the norm criterion"},
        {"lemma33", "the three orthomodularity conditions on the polarity"},
        {"geometry-axioms", "projective geometry and polarity axioms"},
        {"qlogic-check", "state model axioms on the space's lattice"},
        {"norm-equiv", "norm class comparison of two points"},
    };
    for (const auto& [name, help] : simple)
        common(app.add_subcommand(name, help));

    CLI::App* lattice = app.add_subcommand("lattice", "build, check or draw the lattice of closed subspaces");
    lattice->require_subcommand(1);
    for (const char* action : {"build", "check", "dot"})
        common(lattice->add_subcommand(action));

    CLI::App* baer = app.add_subcommand("baer-demo", "coordinatize the matrix ring M_n(K)");
    baer->add_option("--field", req.field, "Q | Q(i) | H(Q) | GF(p)");
    baer->add_option("--n", req.n, "matrix size");
    baer->add_option("--seed", req.seed, "sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }
    for (CLI::App* sc : app.get_subcommands()) {
        req.command = sc->get_name();
        for (CLI::App* inner : sc->get_subcommands())
            req.action = inner->get_name();
    }
    return run(req, out, err);
}

} // namespace orthoform::cli
