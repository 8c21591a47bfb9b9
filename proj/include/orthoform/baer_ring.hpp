#pragma once

// Full matrix *-rings M_n(K) with conjugate transpose as involution:
// annihilators, projections, relative equivalence, EP witnesses and the
// coordinatization of M_n(K) as operators on the row space e0 A.
//
// Column vectors are never stored. A column c is carried as the row c*, so a
// right kernel {c : Mc = 0} is the left kernel of M*.

#include "orthoform/enumerate.hpp"
#include "orthoform/hermitian_space.hpp"
#include "orthoform/random.hpp"
#include "orthoform/report.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace orthoform {

struct MatrixRing {
    FieldDescriptor field;
    std::size_t n = 0;

    MatrixRing(const FieldDescriptor& f, std::size_t dim) : field(f), n(dim) {
        if (dim == 0)
            throw DomainError("matrix ring needs n >= 1");
    }

    Matrix zero() const { return Matrix(field, n, n); }
    Matrix one() const { return Matrix::identity(field, n); }
    Matrix unit(std::size_t i, std::size_t j) const { return Matrix::unit(field, n, i, j); }

    // 1 and the imaginary units of K.
    std::vector<Scalar> scalar_units() const {
        std::vector<Scalar> u{Scalar::one(field)};
        for (std::size_t k = 1; k < field.components(); ++k)
            u.push_back(Scalar::unit(field, static_cast<int>(k)));
        return u;
    }

    // u E_ij over all units u and positions: spans A additively over the center.
    std::vector<Matrix> additive_generators() const {
        std::vector<Matrix> out;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (const auto& u : scalar_units())
                    out.push_back(u * unit(i, j));
        return out;
    }

    void require(const Matrix& x) const {
        if (!(x.field() == field) || x.rows() != n || x.cols() != n)
            throw MismatchError("element outside " + name());
    }

    std::string name() const { return "M" + std::to_string(n) + "(" + field.name() + ")"; }
};

inline bool is_projection(const Matrix& x) { return x.rows() == x.cols() && x * x == x && x.star() == x; }

// e <= f iff ef = e.
inline bool projection_leq(const Matrix& e, const Matrix& f) { return e * f == e; }

inline bool projections_orthogonal(const Matrix& e, const Matrix& f) { return (e * f).is_zero(); }

// Rank-one projections are exactly the minimal ones in a matrix ring.
inline bool is_minimal_projection(const MatrixRing& ring, const Matrix& e) {
    ring.require(e);
    return is_projection(e) && rank(e) == 1;
}

inline Matrix find_minimal_projection(const MatrixRing& ring) { return ring.unit(0, 0); }

// The image (E)x = {v x}: the row space of x.
inline Subspace image(const Matrix& x) { return Subspace::span(x.field(), x.cols(), x.row_vectors()); }

// The projection with image M: R*(RR*)^-1 R for R the basis rows of M. Exists
// iff the identity form is nonsingular on M.
inline Matrix projection_onto(const Subspace& m) {
    const FieldDescriptor& f = m.field();
    const std::size_t n = m.ambient();
    if (m.is_zero())
        return Matrix(f, n, n);
    Matrix r = Matrix::from_rows(f, n, m.basis());
    Matrix g = r * r.star();
    if (rank(g) < g.rows())
        throw DomainError("no projection onto " + m.to_string() + ": the form is singular on it");
    return r.star() * inverse(g) * r;
}

// --- right annihilators ----------------------------------------------------

struct Annihilator {
    Matrix generator;                 // e with RtAnn(S) = eA
    Subspace columns;                 // allowed columns, carried as rows c*
    std::vector<Matrix> ideal_basis;  // spans RtAnn(S) as a right K-space
};

// RtAnn(S) = {x : sx = 0 for all s in S}: the matrices whose columns all lie
// in the common right kernel of S.
inline Annihilator right_annihilator(const MatrixRing& ring, const std::vector<Matrix>& s) {
    if (s.empty())
        throw DomainError("right annihilator of the empty set");
    const FieldDescriptor& f = ring.field;
    const std::size_t n = ring.n;
    std::vector<Vector> rows;
    for (const auto& x : s) {
        ring.require(x);
        for (auto& r : x.row_vectors())
            rows.push_back(std::move(r));
    }
    Matrix stacked = Matrix::from_rows(f, n, rows);
    Subspace cols = left_kernel(stacked.star());

    Annihilator a{ring.zero(), cols, {}};
    for (const auto& c : cols.basis())
        for (std::size_t j = 0; j < n; ++j) {
            Matrix x = ring.zero();
            for (std::size_t i = 0; i < n; ++i)
                x(i, j) = c[i].star();
            a.ideal_basis.push_back(std::move(x));
        }
    try {
        a.generator = projection_onto(cols);
    } catch (const DomainError&) {
        throw DomainError(ring.name() + " is not Baer on this subset: no projection generates RtAnn, columns " +
                          cols.to_string());
    }

    const Matrix& e = a.generator;
    if (!is_projection(e))
        throw InternalFault("annihilator generator is not a projection");
    for (const auto& x : s)
        if (!(x * e).is_zero())
            throw InternalFault("eA is not inside RtAnn(S)");
    for (const auto& x : a.ideal_basis) {
        for (const auto& t : s)
            if (!(t * x).is_zero())
                throw InternalFault("ideal basis element is not annihilated");
        if (!(e * x == x))
            throw InternalFault("RtAnn(S) is not inside eA");
    }
    return a;
}

// --- relative equivalence --------------------------------------------------

struct ProjectionEquivalence {
    Equivalence status = Equivalence::unknown;
    std::optional<Matrix> w;  // w*w = e, ww* = f
};

namespace detail {

inline bool for_each_matrix(const MatrixRing& ring, const std::function<bool(const Matrix&)>& fn) {
    const std::uint32_t p = ring.field.modulus;
    const std::size_t cells = ring.n * ring.n;
    std::vector<std::uint32_t> digits(cells, 0);
    Matrix m = ring.zero();
    for (;;) {
        if (!fn(m))
            return false;
        std::size_t k = cells;
        while (k > 0) {
            --k;
            if (++digits[k] < p) {
                m(k / ring.n, k % ring.n) = Scalar::residue(ring.field, digits[k]);
                break;
            }
            digits[k] = 0;
            m(k / ring.n, k % ring.n) = Scalar::zero(ring.field);
            if (k == 0)
                return true;
        }
    }
}

inline std::uint64_t ring_size(const MatrixRing& ring) {
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < ring.n * ring.n; ++k) {
        if (total > UINT64_MAX / ring.field.modulus)
            return UINT64_MAX;
        total *= ring.field.modulus;
    }
    return total;
}

} // namespace detail

// Prime-field rings within the cap are searched exhaustively. Otherwise both
// images are orthogonalized and w = sum s_i* alpha_i r_i is built frame by
// frame, with alpha_i* <s_i,s_i> alpha_i = <r_i,r_i>^-1 from norm_equiv. A
// failure is definitive only in rank one, where every candidate has this form.
inline ProjectionEquivalence projections_equivalent(const MatrixRing& ring, const Matrix& e, const Matrix& f,
                                                    std::size_t cap = default_enumeration_cap) {
    ring.require(e);
    ring.require(f);
    if (!is_projection(e) || !is_projection(f))
        throw DomainError("relative equivalence is defined for projections");
    auto verified = [&](const Matrix& w) -> ProjectionEquivalence {
        if (!(w.star() * w == e) || !(w * w.star() == f))
            throw InternalFault("equivalence witness fails w*w = e, ww* = f");
        return {Equivalence::equivalent, w};
    };
    if (e == f)
        return verified(e);
    const std::size_t r = rank(e);
    if (r != rank(f))
        return {Equivalence::inequivalent, std::nullopt};

    if (ring.field.is_prime_field() && detail::ring_size(ring) <= cap) {
        std::optional<Matrix> found;
        detail::for_each_matrix(ring, [&](const Matrix& w) {
            if (w.star() * w == e && w * w.star() == f) {
                found = w;
                return false;
            }
            return true;
        });
        if (found)
            return verified(*found);
        return {Equivalence::inequivalent, std::nullopt};
    }

    HermitianSpace rows = HermitianSpace::identity(ring.field, ring.n);
    std::vector<Vector> re, rf;
    try {
        re = orthogonalize(rows, image(e).basis());
        rf = orthogonalize(rows, image(f).basis());
    } catch (const IsotropicVector&) {
        return {Equivalence::unknown, std::nullopt};
    }
    Matrix w = ring.zero();
    for (std::size_t i = 0; i < r; ++i) {
        Scalar a = rows.form(re[i], re[i]);
        Scalar b = rows.form(rf[i], rf[i]);
        auto eq = norm_equiv(ring.field, b, a.inverse());
        if (eq.status != Equivalence::equivalent)
            return {r == 1 ? eq.status : Equivalence::unknown, std::nullopt};
        Scalar alpha = eq.rho->star();
        for (std::size_t p = 0; p < ring.n; ++p)
            for (std::size_t q = 0; q < ring.n; ++q)
                w(p, q) += rf[i][p].star() * alpha * re[i][q];
    }
    return verified(w);
}

// --- existence of projections ----------------------------------------------

struct EPWitness {
    Search status = Search::unknown;
    Scalar norm;                   // <x, x> for x = e0 x
    std::optional<Scalar> lambda;  // symmetric, lambda <x,x> lambda = 1
    std::optional<Matrix> y;       // lambda e0
};

// Generators u E_ij of the commutant of a multiple of E_11: i = j = 0 or
// both indices >= 1.
inline std::vector<Matrix> commutant_generators_e0(const MatrixRing& ring) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < ring.n; ++i)
        for (std::size_t j = 0; j < ring.n; ++j) {
            if ((i == 0) != (j == 0))
                continue;
            for (const auto& u : ring.scalar_units())
                out.push_back(u * ring.unit(i, j));
        }
    return out;
}

// x is compressed to e0 x. Symmetric scalars of our fields are central, so
// lambda <x,x> lambda = 1 asks for lambda^2 = 1/<x,x>: an exact square test
// over the rational cores and an exhaustive one over GF(p).
inline EPWitness ep_witness(const MatrixRing& ring, const Matrix& x) {
    ring.require(x);
    if (x.is_zero())
        throw DomainError("EP witness requested for x = 0");
    const FieldDescriptor& f = ring.field;
    const Matrix e0 = find_minimal_projection(ring);
    Matrix cx = e0 * x;
    if (cx.is_zero())
        throw DomainError("e0 x = 0; EP witnesses are sought for x = e0 x");
    Matrix xx = cx * cx.star();
    EPWitness out{Search::none, xx(0, 0), std::nullopt, std::nullopt};

    if (f.is_prime_field()) {
        for (std::uint32_t r = 1; r < f.modulus; ++r) {
            Scalar l = Scalar::residue(f, r);
            if ((l * out.norm * l).is_one()) {
                out.lambda = l;
                break;
            }
        }
    } else if (auto root = rational_sqrt(mpq_class(1) / out.norm.component(0))) {
        out.lambda = Scalar::rational(f, *root);
    }
    if (!out.lambda)
        return out;

    Matrix y = *out.lambda * e0;
    Matrix p = xx * y * y;
    if (!(y.star() == y) || !is_projection(p) || p.is_zero())
        throw InternalFault("EP witness: xx*y^2 is not a nonzero projection");
    for (const auto& z : commutant_generators_e0(ring)) {
        if (!(z * xx == xx * z))
            throw InternalFault("commutant generator does not commute with xx*");
        if (!(z * y == y * z))
            throw InternalFault("EP witness y leaves the double commutant");
    }
    out.status = Search::found;
    out.y = y;
    return out;
}

// --- coordinatization ------------------------------------------------------

// E = e0 A is identified with K^n through the first row; the operator x-hat
// acts on rows by v -> v x.
struct Coordinatization {
    MatrixRing ring;
    Matrix e0;
    HermitianSpace space;
    Report report;

    Vector to_vector(const Matrix& e0a) const { return e0a.row(0); }

    Matrix from_vector(const Vector& v) const {
        Matrix m = ring.zero();
        for (std::size_t j = 0; j < ring.n; ++j)
            m(0, j) = v[j];
        return m;
    }

    Vector hat(const Matrix& x, const Vector& v) const { return to_vector(from_vector(v) * x); }
};

namespace detail {

inline bool only_corner(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if ((i || j) && !m(i, j).is_zero())
                return false;
    return true;
}

inline Matrix random_element(const MatrixRing& ring, Sampler& s) {
    Matrix m = ring.zero();
    for (std::size_t i = 0; i < ring.n; ++i)
        for (std::size_t j = 0; j < ring.n; ++j)
            m(i, j) = s.scalar(ring.field);
    return m;
}

} // namespace detail

inline Coordinatization coordinatize(const MatrixRing& ring, std::uint64_t seed = 0, std::size_t samples = 24,
                                     std::size_t cap = default_enumeration_cap) {
    const FieldDescriptor& f = ring.field;
    const std::size_t n = ring.n;
    Matrix e0 = find_minimal_projection(ring);
    Report rep;
    rep.info("ring", ring.name());
    rep.check("baer.e0_minimal", is_minimal_projection(ring, e0));

    Sampler sampler(seed);
    std::vector<Matrix> elems = ring.additive_generators();
    elems.push_back(ring.one());
    for (std::size_t t = 0; t < samples; ++t)
        elems.push_back(detail::random_element(ring, sampler));

    // K = e0 A e0 is the corner, and lambda -> lambda e0 is a *-isomorphism.
    {
        std::string bad;
        for (const auto& a : elems)
            if (!detail::only_corner(e0 * a * e0)) {
                bad = a.to_string();
                break;
            }
        std::vector<Scalar> ks = ring.scalar_units();
        for (std::size_t t = 0; t < samples; ++t)
            ks.push_back(sampler.scalar(f));
        for (std::size_t i = 0; i < ks.size() && bad.empty(); ++i) {
            const Scalar& a = ks[i];
            if (!((a * e0).star() == a.star() * e0))
                bad = "star:" + a.to_string();
            for (std::size_t j = 0; j < ks.size() && bad.empty(); ++j) {
                const Scalar& b = ks[j];
                if (!((a * e0) * (b * e0) == (a * b) * e0) || !(a * e0 + b * e0 == (a + b) * e0))
                    bad = a.to_string() + "," + b.to_string();
            }
        }
        rep.check("coord.K_isomorphic", bad.empty(), bad);
    }

    // <e0 a, e0 b> = e0 a b* e0 on the basis rows e0 E_1j.
    Matrix gram(f, n, n);
    bool corner = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix prod = ring.unit(0, i) * ring.unit(0, j).star();
            corner = corner && detail::only_corner(prod);
            gram(i, j) = prod(0, 0);
        }
    HermitianSpace space = HermitianSpace::from_gram(gram);
    rep.info("gram", gram.to_string());
    rep.check("coord.gram_identity", corner && gram == Matrix::identity(f, n), gram.to_string());

    Coordinatization c{ring, e0, space, {}};
    {
        std::string bad;
        for (std::size_t t = 0; t < elems.size() && bad.empty(); ++t) {
            const Matrix& a = elems[t];
            const Matrix& b = elems[(t * 7 + 3) % elems.size()];
            Matrix x = e0 * a, y = e0 * b;
            Matrix prod = x * y.star();
            if (!detail::only_corner(prod) || !(prod(0, 0) == space.form(c.to_vector(x), c.to_vector(y))))
                bad = a.to_string() + "," + b.to_string();
        }
        rep.check("coord.form_expansion", bad.empty(), bad);
    }

    AnisotropyVerdict an = anisotropy(space);
    {
        std::string w;
        if (an.witness) {
            Matrix x = c.from_vector(*an.witness);
            w = x.to_string() + ((x * x.star()).is_zero() ? ";xx*=0" : ";xx*!=0");
        }
        rep.info("anisotropy", to_string(an.status) + "/" + an.basis);
        rep.check("coord.anisotropic", an.status == Anisotropy::anisotropic, w);
    }

    // Hat embedding: (x-hat)* = (x*)-hat, multiplicative, injective.
    {
        std::string bad;
        std::vector<Vector> basis;
        for (std::size_t i = 0; i < n; ++i)
            basis.push_back(Vector::unit(f, n, i));
        for (std::size_t t = 0; t < elems.size() && bad.empty(); ++t) {
            const Matrix& a = elems[t];
            const Matrix& b = elems[(t * 5 + 1) % elems.size()];
            bool nonzero_image = false;
            for (const auto& u : basis) {
                Vector ua = c.hat(a, u);
                nonzero_image = nonzero_image || !ua.is_zero();
                if (!(c.hat(a * b, u) == c.hat(b, ua)))
                    bad = "mult:" + a.to_string();
                for (const auto& v : basis)
                    if (!(space.form(ua, v) == space.form(u, c.hat(a.star(), v))))
                        bad = "adjoint:" + a.to_string();
            }
            if (nonzero_image == a.is_zero())
                bad = "injective:" + a.to_string();
        }
        rep.check("coord.hat_star_isomorphism", bad.empty(), bad);
    }

    // Rank-one operators x -> <x, e0 l> e0 m are s-hat for s = l* e0 m.
    {
        std::string bad;
        for (std::size_t t = 0; t < samples && bad.empty(); ++t) {
            Matrix l = detail::random_element(ring, sampler);
            Matrix m = detail::random_element(ring, sampler);
            Matrix s = l.star() * e0 * m;
            Vector y = c.to_vector(e0 * l), z = c.to_vector(e0 * m);
            for (std::size_t k = 0; k < n + 2 && bad.empty(); ++k) {
                Vector x = k < n ? Vector::unit(f, n, k) : sampler.vector(f, n);
                if (!(c.hat(s, x) == space.form(x, y) * z))
                    bad = "l=" + l.to_string() + ";m=" + m.to_string();
            }
        }
        rep.check("coord.rank_one", bad.empty(), bad);
    }

    // Projections of A and closed subspaces of E correspond through e -> (E)e-hat.
    {
        std::string bad;
        auto round_trip = [&](const Subspace& m) {
            if (!space.is_closed(m)) {
                bad = "not_closed:" + m.to_string();
                return;
            }
            Matrix e;
            try {
                e = projection_onto(m);
            } catch (const DomainError&) {
                bad = "no_projection:" + m.to_string();
                return;
            }
            Matrix one_minus = ring.one() - e;
            if (!is_projection(e) || !(image(e) == m) || !(image(one_minus) == space.perp(m)) ||
                !sum(image(e), image(one_minus)).is_full())
                bad = "image:" + m.to_string();
        };
        Mode mode = Mode::sampled;
        if (f.is_prime_field() && subspace_count(f.modulus, n) <= cap) {
            mode = Mode::exhaustive;
            SubspaceCatalog cat(f, n, cap);
            for (std::size_t i = 0; i < cat.size() && bad.empty(); ++i)
                round_trip(cat.subspace(i));
            if (bad.empty() && detail::ring_size(ring) <= cap)
                detail::for_each_matrix(ring, [&](const Matrix& e) {
                    if (is_projection(e) && !(projection_onto(image(e)) == e))
                        bad = "projection:" + e.to_string();
                    return bad.empty();
                });
        } else {
            for (std::size_t t = 0; t < samples && bad.empty(); ++t)
                round_trip(sampler.subspace(f, n));
        }
        rep.info("projections_mode", to_string(mode));
        rep.check("coord.projections_closed_subspaces", bad.empty(), bad);
    }

    c.report = rep;
    return c;
}

// Verification transcript for the CLI demo.
inline Report baer_demo(const MatrixRing& ring, std::uint64_t seed = 0) {
    const FieldDescriptor& f = ring.field;
    Report rep;
    Coordinatization c = coordinatize(ring, seed);
    rep.append(c.report);

    {
        Annihilator a = right_annihilator(ring, {ring.zero()});
        rep.check("rtann.zero_is_one", a.generator == ring.one(), a.generator.to_string());
        Annihilator b = right_annihilator(ring, {ring.one()});
        rep.check("rtann.one_is_zero", b.generator.is_zero(), b.generator.to_string());
        if (ring.n >= 2) {
            Annihilator e = right_annihilator(ring, {ring.unit(0, 0)});
            Matrix expect = ring.one() - ring.unit(0, 0);
            rep.info("rtann.E11", e.generator.to_string());
            rep.check("rtann.E11", e.generator == expect, e.generator.to_string());
        }
    }

    if (ring.n >= 2) {
        auto eq = projections_equivalent(ring, ring.unit(0, 0), ring.unit(1, 1));
        rep.info("equiv.E11_E22", to_string(eq.status) + (eq.w ? ":" + eq.w->to_string() : ""));
        rep.check("equiv.E11_E22", eq.status == Equivalence::equivalent, eq.w ? eq.w->to_string() : "");
        auto ne = projections_equivalent(ring, ring.unit(0, 0), ring.one());
        rep.check("equiv.rank_mismatch", ne.status == Equivalence::inequivalent);
    }

    // x = 3 E11 + 4 E12 has <x,x> = 25 when n >= 2; 5 E11 otherwise.
    Matrix x = ring.zero();
    if (ring.n >= 2) {
        x(0, 0) = Scalar::integer(f, 3);
        x(0, 1) = Scalar::integer(f, 4);
    } else {
        x(0, 0) = Scalar::integer(f, 5);
    }
    EPWitness ep = ep_witness(ring, x);
    rep.info("ep.norm", ep.norm.to_string());
    rep.info("ep.lambda", ep.lambda ? ep.lambda->to_string() : to_string(ep.status));
    rep.check("ep.witness", ep.status == Search::found, ep.lambda ? ep.lambda->to_string() : to_string(ep.status));
    return rep;
}

} // namespace orthoform
