// Runs the acceptance criteria at their time bounds and prints one PASS/FAIL
// line per criterion. Exit status is nonzero if any criterion fails.

#include "orthoform/baer_ring.hpp"
#include "orthoform/quantum_logic.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace orthoform;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

bool is_square_mod(std::uint64_t a, std::uint64_t p) {
    for (std::uint64_t x = 1; x < p; ++x)
        if (x * x % p == a % p)
            return true;
    return false;
}

bool brute_isotropic(const HermitianSpace& s) {
    for (const auto& v : all_vectors(s.field(), s.dim()))
        if (!v.is_zero() && s.form(v, v).is_zero())
            return true;
    return false;
}

HermitianSpace diag(std::uint32_t p, const std::vector<long>& d) {
    auto f = FieldDescriptor::prime(p);
    Matrix g = Matrix::identity(f, d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        g(i, i) = Scalar::integer(f, d[i]);
    return HermitianSpace::from_gram(g);
}

std::vector<std::pair<std::string, HermitianSpace>> criterion_spaces() {
    std::vector<std::pair<std::string, HermitianSpace>> out;
    for (std::uint32_t p : {3u, 5u})
        for (const auto& d : std::vector<std::vector<long>>{{1, 1}, {1, 2}, {1, 4}, {1, 1, 1}}) {
            std::string name = "GF(" + std::to_string(p) + ")diag(";
            for (std::size_t i = 0; i < d.size(); ++i)
                name += (i ? "," : "") + std::to_string(d[i]);
            out.emplace_back(name + ")", diag(p, d));
        }
    return out;
}

Subspace line(const FieldDescriptor& f, std::initializer_list<long> v) {
    return Subspace::line(Vector::from_ints(f, v));
}

Outcome anisotropy_equals_orthomodularity() {
    Outcome o;
    CheckOptions ex;
    ex.mode = Mode::exhaustive;
    for (const auto& [name, s] : criterion_spaces()) {
        bool aniso = anisotropy(s).status == Anisotropy::anisotropic;
        SpaceVerdict v = check_orthomodular_space(s, ex);
        o.expect(v.mode == Mode::exhaustive, name + " not exhaustive");
        o.expect(aniso == v.holds, name + " anisotropy != orthomodularity");
        o.expect(aniso == !brute_isotropic(s), name + " anisotropy disagrees with brute force");
    }
    SpaceVerdict bad = check_orthomodular_space(diag(3, {1, 1, 1}), ex);
    o.expect(!bad.holds && bad.witness && bad.witness->to_string() == "span{(1,1,1)}",
             "GF(3)diag(1,1,1) witness");
    AnisotropyVerdict an = anisotropy(diag(3, {1, 1, 1}));
    o.expect(an.status == Anisotropy::isotropic && an.witness &&
                 Subspace::line(*an.witness).to_string() == "span{(1,1,1)}",
             "GF(3)diag(1,1,1) isotropic vector");
    return o;
}

Outcome three_conditions_agree() {
    Outcome o;
    for (const auto& [name, s] : criterion_spaces()) {
        Lemma33Result r = lemma33_check(Polarity::from_space(s));
        o.expect(r.mode == Mode::exhaustive, name + " not exhaustive");
        o.expect(r.consistent(), name + " conditions disagree");
        o.expect(r.cond2 == !brute_isotropic(s), name + " verdict disagrees with anisotropy");
    }
    return o;
}

Outcome closure_laws() {
    Outcome o;
    for (const auto& [name, s] : criterion_spaces()) {
        SubspaceCatalog cat(s.field(), s.dim());
        for (const auto& m : cat.subspaces())
            o.expect(s.closure(m) == m, name + " closure of " + m.to_string());
    }
    Sampler r(2024);
    const std::vector<FieldDescriptor> fields{FieldDescriptor::rational(), FieldDescriptor::gaussian(),
                                              FieldDescriptor::quaternion()};
    const long weights[] = {1, 2, 3, 5};
    auto space = [&](const FieldDescriptor& f, std::size_t n) {
        Matrix g = Matrix::identity(f, n);
        for (std::size_t i = 0; i < n; ++i)
            g(i, i) = Scalar::integer(f, weights[i]);
        return HermitianSpace::from_gram(g);
    };
    for (std::size_t t = 0; t < 1000; ++t) {
        const auto& f = fields[t % 3];
        HermitianSpace s = space(f, 1 + r.index(4));
        Subspace m = r.subspace(f, s.dim());
        o.expect(s.closure(m) == m, "random closure " + m.to_string());
    }
    for (std::size_t t = 0; t < 500; ++t) {
        const auto& f = fields[t % 3];
        HermitianSpace s = space(f, 1 + r.index(4));
        Subspace m = r.subspace(f, s.dim());
        Vector x = r.vector(f, s.dim());
        Subspace kx = Subspace::span(f, s.dim(), {x});
        o.expect(s.closure(sum(m, kx)) == sum(s.closure(m), kx), "(M+Kx) closure " + m.to_string());
    }
    return o;
}

Outcome harmonic_machinery() {
    Outcome o;
    // throws on any disagreement between the constructions
    HarmonicSweep sw = harmonic_sweep(FieldDescriptor::prime(5), 3);
    const std::size_t points = 31, triples = points * 6 * 5 * 4;
    o.expect(sw.triples == triples, "triple count");
    o.expect(sw.constructions == triples * (points - 6) * 4, "construction count");
    for (const auto& f : {FieldDescriptor::rational(), FieldDescriptor::gaussian(), FieldDescriptor::quaternion(),
                          FieldDescriptor::prime(5)}) {
        Vector e = Vector::from_ints(f, {1, 0, 0}), g = Vector::from_ints(f, {0, 1, 0});
        Polarity pol = Polarity::from_space(HermitianSpace::identity(f, 3));
        o.expect(harmonic_conjugate(pol, ProjPoint(e + g), ProjPoint(e), ProjPoint(g)) == ProjPoint(e - g),
                 "K(e+f) conjugate over " + f.name());
    }
    auto f = FieldDescriptor::prime(5);
    ProjPoint P(Vector::from_ints(f, {1, 0})), Q(Vector::from_ints(f, {0, 1}));
    for (long a : {4L, 2L}) {
        auto w = norm_equiv_by_harmonic(Polarity::from_space(diag(5, {1, a})), P, Q);
        bool oracle = is_square_mod(static_cast<std::uint64_t>(a), 5);
        o.expect((w.status == Equivalence::equivalent) == oracle && w.c.has_value() == oracle,
                 "norm criterion on diag(1," + std::to_string(a) + ")");
    }
    return o;
}

Outcome lattice_suite() {
    Outcome o;
    for (auto [p, a, size, nat] : std::vector<std::tuple<std::uint32_t, long, std::size_t, std::size_t>>{
             {3, 1, 6, 4}, {5, 2, 8, 6}}) {
        FiniteOML L = build_oml(diag(p, {1, a}));
        std::string name = "GF(" + std::to_string(p) + ")";
        o.expect(L.size() == size, name + " size " + std::to_string(L.size()));
        o.expect(atoms(L).size() == nat && nat == (p * p - 1) / (p - 1), name + " atoms");
        o.expect(check_oml_axioms(L).passed("oml.law"), name + " OML law");
        o.expect(is_atomistic(L), name + " atomistic");
        o.expect(covering_check(L).passed(), name + " covering");
        o.expect(is_irreducible(L), name + " irreducible");
        o.expect(omega_embed(L).passed(), name + " omega");
    }
    FiniteOML b = benzene();
    Report r = check_oml_axioms(b);
    o.expect(!r.passed("oml.law") && r.find("oml.law")->value == "(a,b)", "benzene witness");
    o.expect(omega_embed(boolean_lattice(3)).passed(), "omega on 2^3");
    return o;
}

Outcome baer_coordinatization() {
    Outcome o;
    auto g = FieldDescriptor::gaussian();
    MatrixRing ring(g, 2);
    Coordinatization c = coordinatize(ring);
    o.expect(c.report.passed(), "coordinatization report");
    o.expect(c.space.dim() == 2 && c.space.field() == g, "E is not Q(i)^2");
    o.expect(c.space.gram() == Matrix::identity(g, 2), "gram is not the identity");
    Sampler r(6);
    for (int t = 0; t < 20; ++t) {
        Matrix a = ring.zero(), b = ring.zero();
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                a(i, j) = r.scalar(g);
                b(i, j) = r.scalar(g);
            }
        Scalar expect = a(0, 0) * b(0, 0).star() + a(0, 1) * b(0, 1).star();
        o.expect((c.e0 * a * b.star() * c.e0)(0, 0) == expect, "e0 a b* e0 expansion");
        o.expect(c.space.form(c.to_vector(c.e0 * a), c.to_vector(c.e0 * b)) == expect, "form expansion");
    }
    o.expect(right_annihilator(ring, {ring.unit(0, 0)}).generator == ring.unit(1, 1), "RtAnn(E11)");
    auto eq = projections_equivalent(ring, ring.unit(0, 0), ring.unit(1, 1));
    o.expect(eq.status == Equivalence::equivalent && eq.w && *eq.w == ring.unit(1, 0), "E11 ~ E22 via E21");
    EPWitness ep = ep_witness(ring, Scalar::integer(g, 3) * ring.unit(0, 0) + Scalar::integer(g, 4) * ring.unit(0, 1));
    o.expect(ep.norm == Scalar::integer(g, 25) && ep.lambda && *ep.lambda == Scalar::rational(g, mpq_class(1, 5)),
             "ep witness for norm 25");
    auto q = FieldDescriptor::rational();
    MatrixRing rq(q, 2);
    EPWitness none = ep_witness(rq, rq.unit(0, 0) + rq.unit(0, 1));
    o.expect(none.norm == Scalar::integer(q, 2) && none.status == Search::none, "ep witness for norm 2");
    return o;
}

Outcome quantum_logic() {
    Outcome o;
    auto q = FieldDescriptor::rational();
    FiniteOML L = build_oml_from_family(HermitianSpace::identity(q, 2), {line(q, {1, 0}), line(q, {3, 4})});
    State m = vector_state(L, Vector::from_ints(q, {3, 4}));
    o.expect(m(*L.find(line(q, {1, 0}))) == mpq_class(9, 25), "m(Ke1) = 9/25");
    o.expect(m(*L.find(line(q, {0, 1}))) == mpq_class(16, 25), "m(Ke2) = 16/25");
    o.expect(L.subspace(support(L, m).support) == line(q, {3, 4}), "support is Kx");

    FiniteOML mo = build_oml(diag(3, {1, 1}));
    std::vector<State> model;
    for (auto a : atoms(mo))
        model.push_back(atom_state(mo, a));
    o.expect(check_axioms(mo, model).passed(), "MO4 axiom suite");
    FiniteOML b = boolean_lattice(2);
    std::vector<State> bmodel;
    for (auto a : atoms(b))
        bmodel.push_back(atom_state(b, a));
    o.expect(!check_axioms(b, bmodel).passed("qlogic.C1"), "C1 on Boolean 2^2");

    for (std::uint32_t p : {3u, 5u})
        for (const auto& d : std::vector<std::vector<long>>{{1, 1}, {1, 2}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2}}) {
            HermitianSpace s = diag(p, d);
            auto f = s.field();
            std::set<Subspace> lines;
            for_each_point(f, s.dim(), [&](const Vector& v) {
                lines.insert(Subspace::line(v));
                return true;
            });
            for (const auto& a : lines)
                for (const auto& bl : lines) {
                    if (a == bl || !s.perp(a).contains(bl))
                        continue;
                    const Vector &e = a.basis()[0], &g = bl.basis()[0];
                    Scalar ee = s.form(e, e), ff = s.form(g, g);
                    if (ee.is_zero() || ff.is_zero())
                        continue;
                    AxiomDWitness w = axiomD_witness(s, a, bl);
                    bool ne = norm_equiv(s, ff, ee).status == Equivalence::equivalent;
                    bool oracle = is_square_mod((ee * ff.inverse()).residue(), p);
                    o.expect((w.status == Search::found) == ne && ne == oracle,
                             "Axiom D on " + f.name() + " " + a.to_string() + "," + bl.to_string());
                    if (w.u)
                        o.expect(check_unitary(s, *w.u) && apply(*w.u, a) == bl, "Axiom D witness not unitary");
                }
        }
    return o;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string run_capture(const std::string& command) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        return "<popen failed>";
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, n);
    int status = pclose(pipe);
    return out + "\n[status " + std::to_string(status) + "]\n";
}

Outcome determinism() {
    Outcome o;
    const std::string cli = ORTHOFORM_CLI_PATH;
    const std::string samples = ORTHOFORM_SAMPLES_DIR;
    auto in = [&](const std::string& name) { return " --input '" + samples + "/" + name + ".txt'"; };
    const std::vector<std::string> suite = {
        "check-space" + in("gf3_diag11"),
        "check-space" + in("gf3_diag111"),
        "check-space" + in("quaternion_line") + " --seed 7",
        "check-space" + in("gaussian_plane") + " --seed 3 --samples 100",
        "perp" + in("q3_identity") + " --subspace M",
        "closure" + in("gf3_diag111") + " --subspace M",
        "harmonic" + in("q3_identity") + " --subspace P --subspace Q --subspace C",
        "harmonic" + in("gf5_diag14") + " --subspace P --subspace Q --subspace C",
        "norm-equiv" + in("gf5_diag12") + " --subspace P --subspace Q",
        "lemma33" + in("gf5_diag12"),
        "lemma33" + in("quaternion_line") + " --seed 11 --samples 80",
        "geometry-axioms" + in("gf3_diag111"),
        "lattice build" + in("gf5_diag12") + " --dot gf5.dot",
        "lattice check" + in("gf3_diag11"),
        "lattice dot" + in("gf3_diag11") + " --dot gf3.dot",
        "lattice dot" + in("q2_states") + " --dot q2.dot",
        "baer-demo --field 'Q(i)' --n 2 --seed 5",
        "baer-demo --field 'GF(3)' --n 2",
        "qlogic-check" + in("q2_states"),
    };
    const std::filesystem::path base = std::filesystem::current_path() / "determinism";
    std::filesystem::remove_all(base);
    std::string transcripts[2];
    for (int run = 0; run < 2; ++run) {
        auto dir = base / ("run" + std::to_string(run));
        std::filesystem::create_directories(dir);
        for (const auto& args : suite)
            transcripts[run] += "$ " + args + "\n" +
                                run_capture("cd '" + dir.string() + "' && '" + cli + "' " + args + " 2>&1");
        std::ofstream(base / ("transcript" + std::to_string(run) + ".txt")) << transcripts[run];
    }
    o.expect(transcripts[0] == transcripts[1], "CLI transcripts differ");
    o.expect(transcripts[0].find("[status 512]") == std::string::npos, "a CLI command reported a usage error");
    for (const char* dot : {"gf5.dot", "gf3.dot", "q2.dot"}) {
        std::string a = slurp(base / "run0" / dot), b = slurp(base / "run1" / dot);
        o.expect(!a.empty(), std::string(dot) + " missing");
        o.expect(a == b, std::string(dot) + " differs");
    }
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        double bound;  // seconds, 0 for none
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "anisotropy_equals_orthomodularity", 2, anisotropy_equals_orthomodularity},
        {2, "three_conditions_agree", 5, three_conditions_agree},
        {3, "closure_laws", 5, closure_laws},
        {4, "harmonic_machinery", 3, harmonic_machinery},
        {5, "lattice_suite", 2, lattice_suite},
        {6, "baer_coordinatization", 1, baer_coordinatization},
        {7, "quantum_logic", 3, quantum_logic},
        {8, "determinism", 0, determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && c.bound > 0 && secs >= c.bound) {
            o.ok = false;
            o.detail = "time bound exceeded";
        }
        std::ostringstream t;
        t.precision(3);
        t << std::fixed << secs;
        std::cout << "CRITERION " << c.id << " " << (o.ok ? "PASS" : "FAIL") << " " << c.name << " time=" << t.str()
                  << "s" << (c.bound > 0 ? " bound=" + std::to_string(static_cast<int>(c.bound)) + "s" : "")
                  << (o.detail.empty() ? "" : " detail=" + o.detail) << "\n";
        failures += !o.ok;
    }
    return failures == 0 ? 0 : 1;
}
