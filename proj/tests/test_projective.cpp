#include "orthoform/projective.hpp"

#include <gtest/gtest.h>

using namespace orthoform;

namespace {

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

HermitianSpace diag(std::uint32_t p, std::vector<long> d) {
    auto f = FieldDescriptor::prime(p);
    Matrix g = Matrix::identity(f, d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        g(i, i) = Scalar::integer(f, d[i]);
    return HermitianSpace::from_gram(g);
}

ProjPoint pt(const FieldDescriptor& f, std::initializer_list<long> v) { return ProjPoint(Vector::from_ints(f, v)); }

} // namespace

TEST(Points, NormalizedAndCounted) {
    auto f = FieldDescriptor::prime(5);
    ProjPoint p(Vector::from_ints(f, {0, 3, 1}));
    EXPECT_EQ(p.rep().to_string(), "(0,1,2)");
    EXPECT_THROW(ProjPoint(Vector(f, 3)), DomainError);
    EXPECT_THROW(ProjPoint::from_subspace(Subspace::full(f, 3)), DomainError);
    ProjSubspace line = join(pt(f, {1, 0, 0}), pt(f, {0, 1, 0}));
    EXPECT_EQ(line.projective_dim(), 1);
    EXPECT_EQ(points_on(line).size(), 6u);
    EXPECT_EQ(meet(line, ProjSubspace(Subspace::line(Vector::from_ints(f, {0, 0, 1})))).projective_dim(), -1);
    EXPECT_THROW(points_on(ProjSubspace(Subspace::full(FieldDescriptor::rational(), 2))), DomainError);
}

TEST(ProjectiveAxioms, HoldOnSmallPlanes) {
    for (std::uint32_t p : {3u, 5u}) {
        auto f = FieldDescriptor::prime(p);
        Report r = check_projective_axioms(f, 3);
        EXPECT_TRUE(r.passed()) << r;
        std::size_t n = p * p + p + 1;
        EXPECT_EQ(r.find("points")->value, std::to_string(n));
        EXPECT_EQ(r.find("lines")->value, std::to_string(n));
    }
    EXPECT_TRUE(check_projective_axioms(FieldDescriptor::prime(3), 4).passed());
    EXPECT_THROW(check_projective_axioms(FieldDescriptor::rational(), 3), DomainError);
}

TEST(Polarity, FormBackedSatisfiesAxioms) {
    for (const auto& s : {diag(5, {1, 2}), diag(3, {1, 1, 1}), diag(5, {1, 1, 2})}) {
        Report r = check_polarity_axioms(Polarity::from_space(s));
        EXPECT_TRUE(r.passed()) << r;
        EXPECT_EQ(r.find("mode")->value, "exhaustive");
    }
    HermitianSpace h = HermitianSpace::diagonal(FieldDescriptor::quaternion(), {1, 2, 3});
    EXPECT_TRUE(check_polarity_axioms(Polarity::from_space(h)).passed());
}

TEST(Polarity, TableBacked) {
    HermitianSpace s = diag(3, {1, 2, 1});
    auto cat = std::make_shared<const SubspaceCatalog>(s.field(), 3);
    Polarity form = Polarity::from_space(s);
    Polarity table = Polarity::from_table(cat, form.table(*cat));
    for (const auto& m : cat->subspaces())
        EXPECT_EQ(table.polar(m), form.polar(m));
    EXPECT_THROW(table.space(), DomainError);
    std::vector<std::size_t> identity(cat->size());
    for (std::size_t i = 0; i < identity.size(); ++i)
        identity[i] = i;
    EXPECT_THROW(Polarity::from_table(cat, identity), DomainError);
}

TEST(ThreeConditions, AgreeAndMatchAnisotropy) {
    for (std::uint32_t p : {3u, 5u})
        for (const auto& d : std::vector<std::vector<long>>{{1, 1}, {1, 2}, {1, 4}, {1, 1, 1}}) {
            HermitianSpace s = diag(p, d);
            Polarity pol = Polarity::from_space(s);
            Lemma33Result r = lemma33_check(pol);
            EXPECT_EQ(r.mode, Mode::exhaustive);
            EXPECT_TRUE(r.consistent()) << r.report();
            EXPECT_EQ(r.cond2, !brute_isotropic(s)) << s.field().name();
            EXPECT_EQ(is_orthomodular_geometry(pol), r.cond2);
        }
}

TEST(ThreeConditions, SampledOverRationalCores) {
    for (const auto& f : {FieldDescriptor::rational(), FieldDescriptor::gaussian(), FieldDescriptor::quaternion()}) {
        CheckOptions o;
        o.samples = 60;
        Lemma33Result r = lemma33_check(Polarity::from_space(HermitianSpace::diagonal(f, {1, 1, 2})), o);
        EXPECT_EQ(r.mode, Mode::sampled);
        EXPECT_TRUE(r.cond1 && r.cond2 && r.cond3) << r.report();
    }
}

TEST(Harmonic, SumAndDifferenceAreConjugate) {
    for (const auto& f : {FieldDescriptor::rational(), FieldDescriptor::quaternion(), FieldDescriptor::prime(5)}) {
        HermitianSpace s = HermitianSpace::identity(f, 3);
        Polarity pol = Polarity::from_space(s);
        Vector e = Vector::from_ints(f, {1, 0, 0}), g = Vector::from_ints(f, {0, 1, 0});
        ProjPoint h = harmonic_conjugate(pol, ProjPoint(e + g), ProjPoint(e), ProjPoint(g));
        EXPECT_EQ(h, ProjPoint(e - g)) << f.name();
    }
}

// The construction with randomly chosen auxiliary points must give the same
// point as the library's deterministic choice.
TEST(Harmonic, IndependentOfAuxiliaryPoints) {
    for (const auto& f : {FieldDescriptor::gaussian(), FieldDescriptor::quaternion(), FieldDescriptor::prime(7)}) {
        Sampler r(9);
        int done = 0;
        while (done < 30) {
            Vector e = r.vector(f, 3, true), g = r.vector(f, 3, true);
            Subspace line = Subspace::span(f, 3, {e, g});
            if (line.dim() != 2)
                continue;
            Scalar rho = r.scalar(f, true);
            ProjPoint P(e), Q(g), C(e + rho * g);
            Vector x = r.vector(f, 3, true);
            if (line.contains(x))
                continue;
            Vector y = x + r.scalar(f, true) * e;
            Subspace s = synthetic_harmonic(LinearGeometry{}, C.subspace(), P.subspace(), Q.subspace(),
                                            Subspace::line(x), Subspace::line(y));
            EXPECT_EQ(s, harmonic_conjugate(C, P, Q).subspace()) << f.name();
            EXPECT_EQ(harmonic_conjugate(harmonic_conjugate(C, P, Q), P, Q), C);
            ++done;
        }
    }
}

TEST(Harmonic, SweepCounts) {
    for (std::uint32_t p : {3u, 5u}) {
        HarmonicSweep sw = harmonic_sweep(FieldDescriptor::prime(p), 3);
        std::size_t points = p * p + p + 1;
        std::size_t triples = points * (p + 1) * p * (p - 1);
        EXPECT_EQ(sw.triples, triples);
        EXPECT_EQ(sw.constructions, triples * (points - p - 1) * (p - 1));
    }
}

TEST(Harmonic, InputGuards) {
    auto f = FieldDescriptor::rational();
    ProjPoint P = pt(f, {1, 0, 0}), Q = pt(f, {0, 1, 0});
    EXPECT_THROW(harmonic_conjugate(P, P, Q), DomainError);
    EXPECT_THROW(harmonic_conjugate(pt(f, {0, 0, 1}), P, Q), DomainError);
    EXPECT_THROW(harmonic_conjugate(pt(f, {1, 1, 0}), P, P), DomainError);
}

TEST(RelativePolar, PointOnLine) {
    auto f = FieldDescriptor::rational();
    Polarity pol = Polarity::from_space(HermitianSpace::diagonal(f, {1, 1, 1}));
    ProjPoint r = relative_polar(pol, pt(f, {1, 2, 0}), pt(f, {1, 0, 0}), pt(f, {0, 1, 0}));
    EXPECT_EQ(r, pt(f, {2, -1, 0}));
    auto g = FieldDescriptor::prime(5);
    Matrix alt(g, 2, 2);
    alt(0, 1) = Scalar::one(g);
    alt(1, 0) = -Scalar::one(g);
    Polarity sym = Polarity::from_space(HermitianSpace::from_gram(alt));
    EXPECT_THROW(relative_polar(sym, pt(g, {1, 1}), pt(g, {1, 0}), pt(g, {0, 1})), DomainError);
}

TEST(NormCriterion, MatchesSquareClasses) {
    for (std::uint32_t p : {3u, 5u, 7u, 11u})
        for (long a = 1; a < static_cast<long>(p); ++a)
            for (std::size_t n : {2u, 3u}) {
                std::vector<long> d{1, a};
                if (n == 3)
                    d.push_back(1);
                HermitianSpace s = diag(p, d);
                auto f = s.field();
                ProjPoint P(Vector::unit(f, n, 0)), Q(Vector::unit(f, n, 1));
                HarmonicWitness w = norm_equiv_by_harmonic(Polarity::from_space(s), P, Q);
                EXPECT_EQ(w.status == Equivalence::equivalent, is_square_mod(static_cast<std::uint64_t>(a), p))
                    << "p=" << p << " a=" << a;
                if (w.c) {
                    EXPECT_EQ(harmonic_conjugate(*w.c, P, Q), relative_polar(Polarity::from_space(s), *w.c, P, Q));
                }
            }
}

TEST(NormCriterion, Diag14AndDiag12OverGF5) {
    auto f = FieldDescriptor::prime(5);
    ProjPoint P = pt(f, {1, 0}), Q = pt(f, {0, 1});
    auto yes = norm_equiv_by_harmonic(Polarity::from_space(diag(5, {1, 4})), P, Q);
    EXPECT_EQ(yes.status, Equivalence::equivalent);
    ASSERT_TRUE(yes.c);
    auto no = norm_equiv_by_harmonic(Polarity::from_space(diag(5, {1, 2})), P, Q);
    EXPECT_EQ(no.status, Equivalence::inequivalent);
    EXPECT_FALSE(no.c);
}

TEST(NormCriterion, RationalCores) {
    auto g = FieldDescriptor::gaussian();
    ProjPoint P = pt(g, {1, 0, 0}), Q = pt(g, {0, 1, 0});
    EXPECT_EQ(norm_equiv_by_harmonic(Polarity::from_space(HermitianSpace::diagonal(g, {1, 2, 1})), P, Q).status,
              Equivalence::equivalent);
    EXPECT_EQ(norm_equiv_by_harmonic(Polarity::from_space(HermitianSpace::diagonal(g, {1, 3, 1})), P, Q).status,
              Equivalence::inequivalent);
    auto q = FieldDescriptor::rational();
    EXPECT_THROW(norm_equiv_by_harmonic(Polarity::from_space(HermitianSpace::identity(q, 2)), pt(q, {1, 1}),
                                        pt(q, {1, 0})),
                 DomainError);
}

TEST(Nonsingular, LinesOfIsotropicPlane) {
    HermitianSpace s = diag(5, {1, 1});
    Polarity pol = Polarity::from_space(s);
    auto f = s.field();
    EXPECT_FALSE(is_nonsingular(pol, Subspace::line(Vector::from_ints(f, {1, 2}))));
    EXPECT_TRUE(is_nonsingular(pol, Subspace::line(Vector::from_ints(f, {1, 0}))));
}
