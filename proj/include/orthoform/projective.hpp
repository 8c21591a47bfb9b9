#pragma once

// The projective geometry P(E, K) of a left vector space: points are
// one-dimensional subspaces, lines two-dimensional ones, and a polarity sends
// subspaces to subspaces. Polarities come from a form (HermitianSpace::perp)
// or, over prime fields, from an explicit table on the subspace catalog.

#include "orthoform/enumerate.hpp"
#include "orthoform/hermitian_space.hpp"
#include "orthoform/report.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace orthoform {

class ProjSubspace {
public:
    ProjSubspace() = default;
    explicit ProjSubspace(Subspace s) : s_(std::move(s)) {}

    const Subspace& subspace() const noexcept { return s_; }
    // Vector dimension minus one; the empty subspace has projective dimension -1.
    long projective_dim() const noexcept { return static_cast<long>(s_.dim()) - 1; }
    std::string to_string() const { return s_.to_string(); }

    friend bool operator==(const ProjSubspace& a, const ProjSubspace& b) { return a.s_ == b.s_; }

private:
    Subspace s_;
};

class ProjPoint {
public:
    ProjPoint() = default;

    explicit ProjPoint(const Vector& v) {
        if (v.is_zero())
            throw DomainError("the zero vector does not determine a point");
        s_ = Subspace::line(v);
    }

    static ProjPoint from_subspace(const Subspace& s) {
        if (s.dim() != 1)
            throw DomainError("a point is a one-dimensional subspace, got dimension " + std::to_string(s.dim()));
        ProjPoint p;
        p.s_ = s;
        return p;
    }

    // First nonzero coordinate is 1.
    const Vector& rep() const { return s_.basis().front(); }
    const Subspace& subspace() const noexcept { return s_; }
    ProjSubspace as_subspace() const { return ProjSubspace(s_); }
    std::string to_string() const { return s_.to_string(); }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.s_ == b.s_; }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.s_ < b.s_; }

private:
    Subspace s_;
};

inline ProjSubspace join(const ProjSubspace& a, const ProjSubspace& b) {
    return ProjSubspace(sum(a.subspace(), b.subspace()));
}
inline ProjSubspace meet(const ProjSubspace& a, const ProjSubspace& b) {
    return ProjSubspace(intersect(a.subspace(), b.subspace()));
}
inline ProjSubspace join(const ProjPoint& a, const ProjPoint& b) { return join(a.as_subspace(), b.as_subspace()); }

// All points of a subspace over a prime field, sorted.
inline std::vector<ProjPoint> points_on(const ProjSubspace& l) {
    const Subspace& s = l.subspace();
    const FieldDescriptor& f = s.field();
    if (!f.is_prime_field())
        throw DomainError("points_on needs a finite (prime) field, got " + f.name());
    std::vector<ProjPoint> out;
    if (s.is_zero())
        return out;
    // Normalized coefficient vectors give normalized points because the
    // basis is in reduced echelon form.
    for_each_point(f, s.dim(), [&](const Vector& c) {
        Vector v(f, s.ambient());
        for (std::size_t k = 0; k < s.dim(); ++k)
            if (!c[k].is_zero())
                v = v + c[k] * s.basis()[k];
        out.push_back(ProjPoint(v));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

// --- axioms of a projective geometry ---------------------------------------

inline constexpr std::size_t axiom3_work_cap = 5000000;

// Exhaustive check of the three incidence axioms on P(GF(p)^n).
inline Report check_projective_axioms(const FieldDescriptor& f, std::size_t n,
                                      std::size_t cap = default_enumeration_cap) {
    if (!f.is_prime_field())
        throw DomainError("projective axioms are checked over prime fields only");
    if (n < 2 || n > 4)
        throw DomainError("projective axioms are checked for ambient dimension 2..4");
    SubspaceCatalog cat(f, n, cap);
    const std::size_t np = cat.point_count();
    auto lines = cat.of_dimension(2);
    Report r;
    r.info("field", f.name());
    r.info("dim", std::to_string(n));
    r.info("points", std::to_string(np));
    r.info("lines", std::to_string(lines.size()));

    // Axiom 1: two distinct points lie on exactly one line.
    std::string w1;
    for (std::size_t a = 0; a < np && w1.empty(); ++a)
        for (std::size_t b = a + 1; b < np && w1.empty(); ++b) {
            std::size_t count = 0;
            for (auto l : lines)
                if (cat.point_in(a, l) && cat.point_in(b, l))
                    ++count;
            if (count != 1)
                w1 = cat.points()[a].to_string() + "," + cat.points()[b].to_string() + ":lines=" +
                     std::to_string(count);
        }
    r.check("axiom1.unique_line", w1.empty(), w1);

    // Axiom 2: every line has at least three points.
    std::string w2;
    for (auto l : lines)
        if (cat.points_of(l).size() < 3) {
            w2 = cat.subspace(l).to_string();
            break;
        }
    r.check("axiom2.three_points", w2.empty(), w2);

    // Axiom 3: P, Q, R noncollinear, S on P+Q, T on Q+R, S != T  =>  S+T meets R+P.
    std::size_t work = 0;
    std::string w3;
    std::size_t triangles = 0;
    for (std::size_t p = 0; p < np && w3.empty(); ++p)
        for (std::size_t q = 0; q < np && w3.empty(); ++q) {
            if (q == p)
                continue;
            auto pq = cat.join(cat.point_subspace(p), cat.point_subspace(q));
            for (std::size_t rr = p + 1; rr < np && w3.empty(); ++rr) {
                if (rr == q || cat.point_in(rr, pq))
                    continue;
                ++triangles;
                auto qr = cat.join(cat.point_subspace(q), cat.point_subspace(rr));
                auto rp = cat.join(cat.point_subspace(rr), cat.point_subspace(p));
                for (auto s : cat.points_of(pq))
                    for (auto t : cat.points_of(qr)) {
                        if (s == t)
                            continue;
                        if (++work > axiom3_work_cap)
                            throw CapExceeded(work, axiom3_work_cap);
                        auto st = cat.join(cat.point_subspace(s), cat.point_subspace(t));
                        if (cat.meet(st, rp) == cat.zero_index()) {
                            w3 = "P=" + cat.points()[p].to_string() + ";Q=" + cat.points()[q].to_string() +
                                 ";R=" + cat.points()[rr].to_string();
                            break;
                        }
                    }
            }
        }
    r.info("triangles", std::to_string(triangles));
    r.check("axiom3.veblen_young", w3.empty(), w3);
    return r;
}

// --- polarities -------------------------------------------------------------

class Polarity {
public:
    static Polarity from_space(const HermitianSpace& s) {
        Polarity p;
        p.space_ = s;
        p.form_backed_ = true;
        p.field_ = s.field();
        p.dim_ = s.dim();
        return p;
    }

    // image[i] is the polar of catalog subspace i. Definition checks run here
    // and a failure throws DomainError naming the offending subspace.
    static Polarity from_table(std::shared_ptr<const SubspaceCatalog> cat, std::vector<std::size_t> image) {
        if (!cat || image.size() != cat->size())
            throw DomainError("polarity table must cover every subspace of the catalog");
        Polarity p;
        p.form_backed_ = false;
        p.field_ = cat->field();
        p.dim_ = cat->ambient();
        p.catalog_ = std::move(cat);
        p.table_ = std::move(image);
        Report r = p.axioms_on(*p.catalog_, p.table_);
        if (!r.passed()) {
            for (const auto& l : r.lines())
                if (!l.pass)
                    throw DomainError("not a polarity: " + l.name + " fails at " + l.value);
        }
        return p;
    }

    bool form_backed() const noexcept { return form_backed_; }
    const HermitianSpace& space() const {
        if (!form_backed_)
            throw DomainError("table-backed polarity has no form");
        return space_;
    }
    const FieldDescriptor& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }

    Subspace polar(const Subspace& m) const {
        if (form_backed_)
            return space_.perp(m);
        return catalog_->subspace(table_[catalog_->index_of(m)]);
    }
    Subspace polar(const ProjPoint& p) const { return polar(p.subspace()); }

    // The polar map as an index table on a catalog of the same ambient.
    std::vector<std::size_t> table(const SubspaceCatalog& cat) const {
        if (!form_backed_ && catalog_.get() == &cat)
            return table_;
        std::vector<std::size_t> t(cat.size());
        for (std::size_t i = 0; i < cat.size(); ++i)
            t[i] = cat.index_of(polar(cat.subspace(i)));
        return t;
    }

    // Definition checks over a full catalog: the whole space has polar 0,
    // inclusion is reversed, point polars are hyperplanes and P-perp-perp = P.
    static Report axioms_on(const SubspaceCatalog& cat, const std::vector<std::size_t>& t) {
        Report r;
        auto full = cat.full_index();
        r.check("polarity.full_to_zero", t[full] == cat.zero_index(),
                t[full] == cat.zero_index() ? "" : cat.subspace(t[full]).to_string());
        std::string w2;
        for (std::size_t a = 0; a < cat.size() && w2.empty(); ++a)
            for (std::size_t b = 0; b < cat.size(); ++b)
                if (cat.leq(a, b) && !cat.leq(t[b], t[a])) {
                    w2 = "l=" + cat.subspace(a).to_string() + ";m=" + cat.subspace(b).to_string();
                    break;
                }
        r.check("polarity.order_reversing", w2.empty(), w2);
        std::string w3;
        for (std::size_t p = 0; p < cat.point_count(); ++p) {
            auto idx = cat.point_subspace(p);
            if (cat.dim(t[idx]) + 1 != cat.ambient() || t[t[idx]] != idx) {
                w3 = cat.subspace(idx).to_string();
                break;
            }
        }
        r.check("polarity.point_polars", w3.empty(), w3);
        return r;
    }

private:
    HermitianSpace space_;
    bool form_backed_ = true;
    FieldDescriptor field_;
    std::size_t dim_ = 0;
    std::shared_ptr<const SubspaceCatalog> catalog_;
    std::vector<std::size_t> table_;
};

inline Report check_polarity_axioms(const Polarity& pol, const CheckOptions& o = {}) {
    Mode mode = resolve_mode(pol.field(), pol.dim(), o);
    Report r;
    r.info("mode", to_string(mode));
    if (mode == Mode::exhaustive) {
        SubspaceCatalog cat(pol.field(), pol.dim(), o.cap);
        r.append(Polarity::axioms_on(cat, pol.table(cat)));
        return r;
    }
    const FieldDescriptor& f = pol.field();
    const std::size_t n = pol.dim();
    Sampler sampler(o.seed);
    Subspace full = Subspace::full(f, n);
    r.check("polarity.full_to_zero", pol.polar(full).is_zero(), pol.polar(full).to_string());
    std::string w2, w3;
    for (std::size_t t = 0; t < o.samples; ++t) {
        Subspace m = sampler.subspace(f, n);
        Subspace l = sampler.subspace_of(m);
        if (w2.empty() && !pol.polar(l).contains(pol.polar(m)))
            w2 = "l=" + l.to_string() + ";m=" + m.to_string();
        Vector x = sampler.vector(f, n, true);
        Subspace p = Subspace::line(x);
        Subspace pp = pol.polar(p);
        if (w3.empty() && (pp.dim() + 1 != n || !(pol.polar(pp) == p)))
            w3 = p.to_string();
    }
    r.check("polarity.order_reversing", w2.empty(), w2);
    r.check("polarity.point_polars", w3.empty(), w3);
    return r;
}

inline bool is_nonsingular(const Polarity& pol, const Subspace& m) { return intersect(m, pol.polar(m)).is_zero(); }

// --- three conditions on a polarity -----------------------------------------

struct Lemma33Result {
    Mode mode = Mode::exhaustive;
    bool cond1 = true, cond2 = true, cond3 = true;
    std::string witness1, witness2, witness3;
    std::size_t tuples = 0;

    bool consistent() const { return cond1 == cond2 && cond2 == cond3; }

    Report report() const {
        Report r;
        r.info("mode", to_string(mode));
        r.info("tuples", std::to_string(tuples));
        r.check("lemma33.cond1", cond1, witness1);
        r.check("lemma33.cond2", cond2, witness2);
        r.check("lemma33.cond3", cond3, witness3);
        r.check("lemma33.equivalent", consistent(),
                consistent() ? "" : std::string(cond1 ? "1" : "0") + (cond2 ? "1" : "0") + (cond3 ? "1" : "0"));
        return r;
    }
};

// (1) l <= m, m closed  =>  (l-perp meet m)-perp meet m = l-perp-perp
// (2) l closed          =>  l + l-perp = P
// (3) m <= n, m closed  =>  m + (n meet m-perp) = n
// Exhaustive tuples are scanned by dimension, then catalog order, so the
// first witness is a smallest one.
inline Lemma33Result lemma33_check(const Polarity& pol, const CheckOptions& o = {}) {
    Lemma33Result res;
    res.mode = resolve_mode(pol.field(), pol.dim(), o);
    if (res.mode == Mode::exhaustive) {
        SubspaceCatalog cat(pol.field(), pol.dim(), o.cap);
        auto t = pol.table(cat);
        std::vector<std::size_t> order;
        for (std::size_t k = 0; k <= cat.ambient(); ++k)
            for (auto i : cat.of_dimension(k))
                order.push_back(i);
        auto closed = [&](std::size_t i) { return t[t[i]] == i; };
        auto full = cat.full_index();
        for (auto l : order) {
            ++res.tuples;
            if (res.cond2 && closed(l) && cat.join(l, t[l]) != full) {
                res.cond2 = false;
                res.witness2 = "l=" + cat.subspace(l).to_string();
            }
        }
        for (auto m : order) {
            if (!closed(m))
                continue;
            for (auto x : order) {
                // x plays l in (1) and n in (3).
                if (cat.leq(x, m)) {
                    ++res.tuples;
                    if (res.cond1 && cat.meet(t[cat.meet(t[x], m)], m) != t[t[x]]) {
                        res.cond1 = false;
                        res.witness1 = "l=" + cat.subspace(x).to_string() + ";m=" + cat.subspace(m).to_string();
                    }
                }
                if (cat.leq(m, x)) {
                    ++res.tuples;
                    if (res.cond3 && cat.join(m, cat.meet(x, t[m])) != x) {
                        res.cond3 = false;
                        res.witness3 = "m=" + cat.subspace(m).to_string() + ";n=" + cat.subspace(x).to_string();
                    }
                }
            }
        }
        return res;
    }

    const FieldDescriptor& f = pol.field();
    const std::size_t n = pol.dim();
    Sampler sampler(o.seed);
    auto P = [&](const Subspace& s) { return pol.polar(s); };
    Subspace full = Subspace::full(f, n);
    for (std::size_t k = 0; k < o.samples; ++k) {
        Subspace m = sampler.subspace(f, n);
        Subspace l = sampler.subspace_of(m);
        Subspace big = sampler.subspace(f, n);
        Subspace small = sampler.subspace_of(big);
        res.tuples += 3;
        if (res.cond2 && P(P(m)) == m && !(sum(m, P(m)) == full)) {
            res.cond2 = false;
            res.witness2 = "l=" + m.to_string();
        }
        if (res.cond1 && P(P(m)) == m && !(intersect(P(intersect(P(l), m)), m) == P(P(l)))) {
            res.cond1 = false;
            res.witness1 = "l=" + l.to_string() + ";m=" + m.to_string();
        }
        if (res.cond3 && P(P(small)) == small && !(sum(small, intersect(big, P(small))) == big)) {
            res.cond3 = false;
            res.witness3 = "m=" + small.to_string() + ";n=" + big.to_string();
        }
    }
    return res;
}

// Orthomodularity of the geometry is condition (2).
inline bool is_orthomodular_geometry(const Polarity& pol, const CheckOptions& o = {}) {
    return lemma33_check(pol, o).cond2;
}

// --- harmonic conjugates -----------------------------------------------------

// The complete-quadrilateral construction over any geometry whose elements
// support join and meet:
//   C' = (C + Y) meet (Q + X),  C'' = (P + C') meet (Q + Y),
//   result = (X + C'') meet (P + Q).
template <typename Geometry, typename Elem>
Elem synthetic_harmonic(const Geometry& g, const Elem& c, const Elem& p, const Elem& q, const Elem& x,
                        const Elem& y) {
    Elem c1 = g.meet(g.join(c, y), g.join(q, x));
    Elem c2 = g.meet(g.join(p, c1), g.join(q, y));
    return g.meet(g.join(x, c2), g.join(p, q));
}

struct LinearGeometry {
    Subspace join(const Subspace& a, const Subspace& b) const { return sum(a, b); }
    Subspace meet(const Subspace& a, const Subspace& b) const { return intersect(a, b); }
};

struct CatalogGeometry {
    const SubspaceCatalog& cat;
    std::size_t join(std::size_t a, std::size_t b) const { return cat.join(a, b); }
    std::size_t meet(std::size_t a, std::size_t b) const { return cat.meet(a, b); }
};

namespace detail {

inline void require_harmonic_input(const ProjPoint& c, const ProjPoint& p, const ProjPoint& q) {
    if (p == q)
        throw DomainError("harmonic conjugate needs P != Q");
    if (c == p || c == q)
        throw DomainError("harmonic conjugate needs C different from P and Q");
    if (!sum(p.subspace(), q.subspace()).contains(c.rep()))
        throw DomainError("C = " + c.to_string() + " is not on the line P + Q");
}

// rho with C = K(e + rho f), e and f the normalized representatives of P, Q.
inline Scalar harmonic_parameter(const ProjPoint& c, const ProjPoint& p, const ProjPoint& q) {
    const FieldDescriptor& f = c.rep().field();
    auto coeffs = solve_left(f, c.rep().size(), {p.rep(), q.rep()}, c.rep());
    if (!coeffs || (*coeffs)[0].is_zero() || (*coeffs)[1].is_zero())
        throw DomainError("C is not a third point of P + Q");
    return (*coeffs)[0].inverse() * (*coeffs)[1];
}

} // namespace detail

// K(e - rho f) for C = K(e + rho f).
inline ProjPoint analytic_harmonic(const ProjPoint& c, const ProjPoint& p, const ProjPoint& q) {
    detail::require_harmonic_input(c, p, q);
    Scalar rho = detail::harmonic_parameter(c, p, q);
    return ProjPoint(p.rep() - rho * q.rep());
}

// Deterministic auxiliary points: X is the first standard basis point off
// P + Q, then points e_a + e_b; Y = K(x + e) on X + P.
inline std::optional<std::pair<ProjPoint, ProjPoint>> auxiliary_points(const ProjPoint& p, const ProjPoint& q) {
    const std::size_t n = p.rep().size();
    const FieldDescriptor& f = p.rep().field();
    if (n < 3)
        return std::nullopt;
    Subspace line = sum(p.subspace(), q.subspace());
    std::vector<Vector> candidates;
    for (std::size_t i = 0; i < n; ++i)
        candidates.push_back(Vector::unit(f, n, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            candidates.push_back(Vector::unit(f, n, i) + Vector::unit(f, n, j));
    for (const auto& x : candidates)
        if (!line.contains(x))
            return std::make_pair(ProjPoint(x), ProjPoint(x + p.rep()));
    return std::nullopt;
}

// Fourth harmonic point of C with respect to P, Q. In ambient dimension >= 3
// the synthetic construction runs too and must agree with K(e - rho f);
// disagreement is an InternalFault.
inline ProjPoint harmonic_conjugate(const ProjPoint& c, const ProjPoint& p, const ProjPoint& q) {
    ProjPoint analytic = analytic_harmonic(c, p, q);
    if (auto aux = auxiliary_points(p, q)) {
        Subspace s = synthetic_harmonic(LinearGeometry{}, c.subspace(), p.subspace(), q.subspace(),
                                        aux->first.subspace(), aux->second.subspace());
        if (!(s == analytic.subspace()))
            throw InternalFault("synthetic harmonic conjugate " + s.to_string() + " disagrees with analytic " +
                                analytic.to_string());
    }
    return analytic;
}

inline ProjPoint harmonic_conjugate(const Polarity&, const ProjPoint& c, const ProjPoint& p, const ProjPoint& q) {
    return harmonic_conjugate(c, p, q);
}

// Every (line, ordered P != Q on it, C, X off the line, Y on X + P) over
// GF(p)^n: synthetic and analytic conjugates must agree, and conjugation must
// be involutive. Returns the number of constructions; throws InternalFault on
// the first disagreement.
struct HarmonicSweep {
    std::size_t constructions = 0;
    std::size_t triples = 0;
};

inline HarmonicSweep harmonic_sweep(const FieldDescriptor& f, std::size_t n, std::size_t cap = default_enumeration_cap) {
    SubspaceCatalog cat(f, n, cap);
    CatalogGeometry g{cat};
    HarmonicSweep out;
    const auto& pts = cat.points();
    for (auto line : cat.of_dimension(2)) {
        auto on = cat.points_of(line);
        std::vector<std::size_t> off;
        for (std::size_t x = 0; x < cat.point_count(); ++x)
            if (!cat.point_in(x, line))
                off.push_back(x);
        for (auto p : on)
            for (auto q : on) {
                if (p == q)
                    continue;
                ProjPoint P(pts[p]), Q(pts[q]);
                for (auto c : on) {
                    if (c == p || c == q)
                        continue;
                    ProjPoint C(pts[c]);
                    ProjPoint H = analytic_harmonic(C, P, Q);
                    std::size_t h = cat.point_subspace(cat.point_index(H.rep()));
                    if (h == cat.point_subspace(c))
                        throw InternalFault("harmonic conjugate equals C at " + C.to_string());
                    if (!(analytic_harmonic(H, P, Q) == C))
                        throw InternalFault("harmonic conjugation not involutive at " + C.to_string());
                    ++out.triples;
                    for (auto x : off) {
                        auto xp = cat.join(cat.point_subspace(x), cat.point_subspace(p));
                        for (auto y : cat.points_of(xp)) {
                            if (y == x || y == p)
                                continue;
                            auto s = synthetic_harmonic(g, cat.point_subspace(c), cat.point_subspace(p),
                                                        cat.point_subspace(q), cat.point_subspace(x),
                                                        cat.point_subspace(y));
                            ++out.constructions;
                            if (s != h)
                                throw InternalFault("synthetic harmonic " + cat.subspace(s).to_string() +
                                                    " disagrees with analytic " + H.to_string() + " for C=" +
                                                    C.to_string() + " X=" + pts[x].to_string() +
                                                    " Y=" + pts[y].to_string());
                        }
                    }
                }
            }
    }
    return out;
}

// --- relative polars and the norm criterion ----------------------------------

// C-perp meet (P + Q). Rejects C in {P, Q}, C off the line, isotropic C
// (C inside its own polar, as for alternate forms), a singular line, and any
// intersection that is not a point.
inline ProjPoint relative_polar(const Polarity& pol, const ProjPoint& c, const ProjPoint& p, const ProjPoint& q) {
    detail::require_harmonic_input(c, p, q);
    Subspace line = sum(p.subspace(), q.subspace());
    Subspace cp = pol.polar(c.subspace());
    if (cp.contains(c.rep()))
        throw DomainError("C = " + c.to_string() + " lies on its own polar");
    if (!is_nonsingular(pol, line))
        throw DomainError("line " + line.to_string() + " is singular");
    Subspace r = intersect(cp, line);
    if (r.dim() != 1)
        throw DomainError("relative polar of " + c.to_string() + " is not a point");
    return ProjPoint::from_subspace(r);
}

struct HarmonicWitness {
    Equivalence status = Equivalence::unknown;
    std::optional<ProjPoint> c;
};

// A point C on P + Q whose harmonic conjugate is its relative polar exists iff
// <e,e> and <f,f> are norm equivalent. Over prime fields every C is tried;
// otherwise C = K(e + rho f) with <e,e> = rho <f,f> rho* from norm_equiv, and
// the coincidence is verified.
inline HarmonicWitness norm_equiv_by_harmonic(const Polarity& pol, const ProjPoint& p, const ProjPoint& q) {
    const HermitianSpace& s = pol.space();
    const Vector& e = p.rep();
    const Vector& fv = q.rep();
    if (p == q || !s.form(e, fv).is_zero())
        throw DomainError("norm_equiv_by_harmonic needs distinct orthogonal points");
    if (s.form(e, e).is_zero() || s.form(fv, fv).is_zero())
        throw DomainError("norm_equiv_by_harmonic needs non-isotropic points");
    const FieldDescriptor& f = s.field();

    auto coincides = [&](const ProjPoint& c) {
        if (pol.polar(c.subspace()).contains(c.rep()))
            return false;
        return harmonic_conjugate(c, p, q) == relative_polar(pol, c, p, q);
    };

    if (f.is_prime_field()) {
        for (std::uint32_t r = 1; r < f.modulus; ++r) {
            ProjPoint c(e + Scalar::residue(f, r) * fv);
            if (coincides(c))
                return {Equivalence::equivalent, c};
        }
        return {Equivalence::inequivalent, std::nullopt};
    }
    auto eq = norm_equiv(f, s.form(fv, fv), s.form(e, e));
    if (eq.status != Equivalence::equivalent)
        return {eq.status, std::nullopt};
    ProjPoint c(e + *eq.rho * fv);
    if (!coincides(c))
        throw InternalFault("norm witness does not give a harmonic/polar coincidence");
    return {Equivalence::equivalent, c};
}

} // namespace orthoform
