#include "orthoform/linalg.hpp"
#include "orthoform/random.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace orthoform;

namespace {

// Every vector in the span, as residue tuples, by running through all
// coefficient combinations of the given rows.
std::set<std::vector<std::uint32_t>> brute_span(const FieldDescriptor& f, std::size_t n,
                                                const std::vector<Vector>& rows) {
    std::set<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> c(rows.size(), 0);
    for (;;) {
        std::vector<std::uint32_t> v(n, 0);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t i = 0; i < n; ++i)
                v[i] = (v[i] + c[r] * rows[r][i].residue()) % f.modulus;
        out.insert(v);
        std::size_t k = rows.size();
        while (k > 0) {
            if (++c[k - 1] < f.modulus)
                break;
            c[k - 1] = 0;
            --k;
        }
        if (k == 0)
            break;
    }
    return out;
}

std::vector<Vector> random_rows(Sampler& s, const FieldDescriptor& f, std::size_t n, std::size_t count) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < count; ++i)
        rows.push_back(s.vector(f, n));
    return rows;
}

} // namespace

TEST(Subspace, CanonicalFormIgnoresGenerators) {
    auto f = FieldDescriptor::rational();
    Vector a = Vector::from_ints(f, {1, 2, 3}), b = Vector::from_ints(f, {0, 1, 1});
    Subspace s1 = Subspace::span(f, 3, {a, b});
    Subspace s2 = Subspace::span(f, 3, {a + b, Scalar::integer(f, 5) * b, a});
    EXPECT_EQ(s1, s2);
    EXPECT_EQ(s1.dim(), 2u);
    EXPECT_EQ(s1.to_string(), "span{(1,0,1),(0,1,1)}");
}

TEST(Subspace, ReducedEchelonShape) {
    for (const auto& f : {FieldDescriptor::rational(), FieldDescriptor::quaternion(), FieldDescriptor::prime(5)}) {
        Sampler s(1);
        for (int t = 0; t < 50; ++t) {
            Subspace m = Subspace::span(f, 4, random_rows(s, f, 4, 3));
            for (std::size_t k = 0; k < m.dim(); ++k) {
                std::size_t p = m.pivots()[k];
                EXPECT_TRUE(m.basis()[k][p].is_one());
                EXPECT_EQ(m.basis()[k].leading_index(), p);
                if (k > 0)
                    EXPECT_GT(p, m.pivots()[k - 1]);
                for (std::size_t r = 0; r < m.dim(); ++r)
                    if (r != k)
                        EXPECT_TRUE(m.basis()[r][p].is_zero());
            }
        }
    }
}

TEST(Subspace, SumAndIntersectionMatchBruteForce) {
    auto f = FieldDescriptor::prime(3);
    Sampler s(2);
    for (int t = 0; t < 60; ++t) {
        auto ra = random_rows(s, f, 3, 1 + s.index(3));
        auto rb = random_rows(s, f, 3, 1 + s.index(3));
        Subspace a = Subspace::span(f, 3, ra), b = Subspace::span(f, 3, rb);
        auto sa = brute_span(f, 3, ra), sb = brute_span(f, 3, rb);
        std::vector<Vector> both = ra;
        both.insert(both.end(), rb.begin(), rb.end());
        EXPECT_EQ(brute_span(f, 3, sum(a, b).basis()), brute_span(f, 3, both));
        std::set<std::vector<std::uint32_t>> common;
        for (const auto& v : sa)
            if (sb.count(v))
                common.insert(v);
        EXPECT_EQ(brute_span(f, 3, intersect(a, b).basis()), common);
    }
}

TEST(Subspace, GrassmannFormula) {
    for (const auto& f : {FieldDescriptor::rational(), FieldDescriptor::gaussian(), FieldDescriptor::quaternion(),
                          FieldDescriptor::prime(7)}) {
        Sampler s(3);
        for (int t = 0; t < 40; ++t) {
            Subspace a = s.subspace(f, 4), b = s.subspace(f, 4);
            EXPECT_EQ(sum(a, b).dim() + intersect(a, b).dim(), a.dim() + b.dim()) << f.name();
            EXPECT_TRUE(sum(a, b).contains(a));
            EXPECT_TRUE(a.contains(intersect(a, b)));
            EXPECT_TRUE(b.contains(intersect(a, b)));
        }
    }
}

TEST(Subspace, QuaternionSpansAreLeftSpans) {
    auto h = FieldDescriptor::quaternion();
    Scalar i = Scalar::unit(h, 1), j = Scalar::unit(h, 2), k = Scalar::unit(h, 3);
    Vector v(h, {Scalar::one(h), j});
    Subspace line = Subspace::line(v);
    EXPECT_TRUE(line.contains(i * v));                           // (i, k)
    EXPECT_FALSE(line.contains(Vector(h, {i, -k})));             // v i = (i, j i)
    EXPECT_EQ(line.dim(), 1u);
}

TEST(Subspace, CoordinatesReconstruct) {
    auto f = FieldDescriptor::gaussian();
    Sampler s(4);
    for (int t = 0; t < 30; ++t) {
        Subspace m = s.subspace(f, 3, 2);
        Vector x = s.scalar(f) * m.basis()[0] + s.scalar(f) * m.basis()[1];
        auto c = m.coordinates(x);
        ASSERT_TRUE(c);
        EXPECT_EQ((*c)[0] * m.basis()[0] + (*c)[1] * m.basis()[1], x);
    }
    Subspace m = Subspace::line(Vector::from_ints(f, {1, 0, 0}));
    EXPECT_FALSE(m.coordinates(Vector::from_ints(f, {0, 1, 0})));
}

TEST(LeftKernel, SolvesAndHasRightDimension) {
    for (const auto& f : {FieldDescriptor::rational(), FieldDescriptor::quaternion(), FieldDescriptor::prime(5)}) {
        Sampler s(5);
        for (int t = 0; t < 40; ++t) {
            Matrix w(f, 4, 2);
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = 0; c < 2; ++c)
                    w(r, c) = s.scalar(f);
            Subspace k = left_kernel(w);
            EXPECT_EQ(k.dim() + rank(w.star()), 4u) << f.name();
            for (const auto& x : k.basis())
                EXPECT_TRUE((x * w).is_zero()) << f.name();
        }
    }
}

TEST(Matrix, InverseIsTwoSided) {
    for (const auto& f : {FieldDescriptor::gaussian(), FieldDescriptor::quaternion(), FieldDescriptor::prime(7)}) {
        Sampler s(6);
        int done = 0;
        while (done < 20) {
            Matrix a(f, 3, 3);
            for (std::size_t r = 0; r < 3; ++r)
                for (std::size_t c = 0; c < 3; ++c)
                    a(r, c) = s.scalar(f);
            if (rank(a) < 3) {
                EXPECT_THROW(inverse(a), DomainError);
                continue;
            }
            Matrix b = inverse(a);
            EXPECT_EQ(a * b, Matrix::identity(f, 3));
            EXPECT_EQ(b * a, Matrix::identity(f, 3));
            ++done;
        }
    }
}

TEST(Matrix, StarReversesProducts) {
    auto h = FieldDescriptor::quaternion();
    Sampler s(7);
    for (int t = 0; t < 20; ++t) {
        Matrix a(h, 2, 3), b(h, 3, 2);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 3; ++c) {
                a(r, c) = s.scalar(h);
                b(c, r) = s.scalar(h);
            }
        EXPECT_EQ((a * b).star(), b.star() * a.star());
    }
}

TEST(SolveLeft, FindsCoefficients) {
    auto f = FieldDescriptor::quaternion();
    Sampler s(8);
    for (int t = 0; t < 20; ++t) {
        auto rows = random_rows(s, f, 3, 2);
        Vector target = s.scalar(f) * rows[0] + s.scalar(f) * rows[1];
        auto c = solve_left(f, 3, rows, target);
        ASSERT_TRUE(c);
        EXPECT_EQ((*c)[0] * rows[0] + (*c)[1] * rows[1], target);
    }
    auto q = FieldDescriptor::rational();
    EXPECT_FALSE(solve_left(q, 2, {Vector::from_ints(q, {1, 0})}, Vector::from_ints(q, {0, 1})));
}

TEST(Vector, MismatchesThrow) {
    auto q = FieldDescriptor::rational();
    EXPECT_THROW(Vector::from_ints(q, {1, 2}) + Vector::from_ints(q, {1, 2, 3}), MismatchError);
    EXPECT_THROW(Subspace::span(q, 2, {Vector::from_ints(q, {1, 2, 3})}), MismatchError);
    EXPECT_THROW(sum(Subspace::zero(q, 2), Subspace::zero(q, 3)), MismatchError);
}
