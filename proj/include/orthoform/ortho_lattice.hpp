#pragma once

// Finite ortholattices given by tables, the lattice of closed subspaces of a
// finite Hermitian space, the lattice-level axioms (orthomodular law,
// atomisticity, covering, center) and the embedding of a lattice into the
// projective geometry of its atoms.

#include "orthoform/hermitian_space.hpp"
#include "orthoform/projective.hpp"
#include "orthoform/report.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace orthoform {

// The space has a subspace M with M + M-perp != E.
class NotOrthomodular : public DomainError {
public:
    explicit NotOrthomodular(Subspace witness)
        : DomainError("space is not orthomodular: M + M-perp != E for M = " + witness.to_string()),
          witness_(std::move(witness)) {}
    const Subspace& witness() const noexcept { return witness_; }

private:
    Subspace witness_;
};

class FiniteOML {
public:
    using Index = std::size_t;

    // Validates a bounded lattice with an orthocomplementation. The
    // orthomodular law itself is not required here (see check_oml_axioms), so
    // plain ortholattices such as the hexagon are representable.
    static FiniteOML from_tables(std::vector<std::string> labels, std::vector<std::vector<bool>> leq,
                                 std::vector<Index> orth) {
        const std::size_t n = labels.size();
        if (n < 2)
            throw DomainError("a lattice needs 0 != 1, so at least two elements");
        if (leq.size() != n || orth.size() != n)
            throw DomainError("lattice tables have inconsistent sizes");
        for (const auto& row : leq)
            if (row.size() != n)
                throw DomainError("order table is not square");
        FiniteOML L;
        L.labels_ = std::move(labels);
        L.leq_ = std::move(leq);
        L.orth_ = std::move(orth);
        L.validate();
        return L;
    }

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& label(Index a) const { return labels_.at(a); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    bool leq(Index a, Index b) const { return leq_[a][b]; }
    bool less(Index a, Index b) const { return a != b && leq_[a][b]; }
    Index orth(Index a) const { return orth_[a]; }
    Index meet(Index a, Index b) const { return meet_[a * size() + b]; }
    Index join(Index a, Index b) const { return join_[a * size() + b]; }
    Index bottom() const noexcept { return bottom_; }
    Index top() const noexcept { return top_; }

    // b covers a: a < b with nothing strictly between.
    bool covers(Index b, Index a) const {
        if (!less(a, b))
            return false;
        for (Index c = 0; c < size(); ++c)
            if (less(a, c) && less(c, b))
                return false;
        return true;
    }

    // Length of the longest chain from 0 up to a.
    std::size_t height(Index a) const { return heights_[a]; }

    Index index_of(const std::string& label) const {
        for (Index i = 0; i < size(); ++i)
            if (labels_[i] == label)
                return i;
        throw DomainError("no lattice element labelled " + label);
    }

    // Form-backed lattices: element i is the closed subspace subspace(i).
    bool form_backed() const noexcept { return space_.has_value(); }
    const HermitianSpace& space() const {
        if (!space_)
            throw DomainError("lattice is not form-backed");
        return *space_;
    }
    const Subspace& subspace(Index a) const { return subspaces_.at(a); }
    const std::vector<Subspace>& subspaces() const noexcept { return subspaces_; }
    bool exhaustive() const noexcept { return exhaustive_; }

    Index index_of(const Subspace& s) const {
        auto it = std::lower_bound(subspaces_.begin(), subspaces_.end(), s);
        if (it == subspaces_.end() || !(*it == s))
            throw DomainError(s.to_string() + " is not an element of the lattice");
        return static_cast<Index>(it - subspaces_.begin());
    }

    std::optional<Index> find(const Subspace& s) const {
        auto it = std::lower_bound(subspaces_.begin(), subspaces_.end(), s);
        if (it == subspaces_.end() || !(*it == s))
            return std::nullopt;
        return static_cast<Index>(it - subspaces_.begin());
    }

    // Attaches the subspaces behind each element; they must be sorted to
    // match the element order.
    void attach(const HermitianSpace& space, std::vector<Subspace> subspaces, bool exhaustive) {
        if (subspaces.size() != size())
            throw InternalFault("subspace list does not match lattice size");
        space_ = space;
        subspaces_ = std::move(subspaces);
        exhaustive_ = exhaustive;
    }

private:
    void validate() {
        const std::size_t n = size();
        for (Index a = 0; a < n; ++a) {
            if (!leq_[a][a])
                throw DomainError("order is not reflexive at " + labels_[a]);
            if (orth_[a] >= n)
                throw DomainError("orthocomplement index out of range at " + labels_[a]);
        }
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b) {
                if (a != b && leq_[a][b] && leq_[b][a])
                    throw DomainError("order is not antisymmetric: " + labels_[a] + ", " + labels_[b]);
                for (Index c = 0; c < n; ++c)
                    if (leq_[a][b] && leq_[b][c] && !leq_[a][c])
                        throw DomainError("order is not transitive: " + labels_[a] + " <= " + labels_[b] +
                                          " <= " + labels_[c]);
            }
        meet_.assign(n * n, n);
        join_.assign(n * n, n);
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b) {
                meet_[a * n + b] = bound(a, b, true);
                join_[a * n + b] = bound(a, b, false);
            }
        bottom_ = top_ = 0;
        for (Index a = 1; a < n; ++a) {
            bottom_ = meet(bottom_, a);
            top_ = join(top_, a);
        }
        for (Index a = 0; a < n; ++a) {
            Index o = orth_[a];
            if (orth_[o] != a)
                throw DomainError("orthocomplement is not an involution at " + labels_[a]);
            if (meet(a, o) != bottom_)
                throw DomainError("a meet a-perp != 0 at " + labels_[a]);
            if (join(a, o) != top_)
                throw DomainError("a join a-perp != 1 at " + labels_[a]);
            for (Index b = 0; b < n; ++b)
                if (leq_[a][b] && !leq_[orth_[b]][o])
                    throw DomainError("orthocomplement does not reverse order: " + labels_[a] + " <= " + labels_[b]);
        }
        heights_.assign(n, 0);
        std::vector<Index> order(n);
        for (Index a = 0; a < n; ++a)
            order[a] = a;
        // A linear extension: sort by number of elements below.
        std::vector<std::size_t> below(n, 0);
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b)
                if (leq_[b][a])
                    ++below[a];
        std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) { return below[x] < below[y]; });
        for (Index a : order)
            for (Index b = 0; b < n; ++b)
                if (less(b, a))
                    heights_[a] = std::max(heights_[a], heights_[b] + 1);
    }

    // Greatest lower bound (lower = true) or least upper bound.
    Index bound(Index a, Index b, bool lower) const {
        const std::size_t n = size();
        std::optional<Index> best;
        for (Index c = 0; c < n; ++c) {
            bool is_bound = lower ? (leq_[c][a] && leq_[c][b]) : (leq_[a][c] && leq_[b][c]);
            if (!is_bound)
                continue;
            bool extremal = true;
            for (Index d = 0; d < n && extremal; ++d) {
                bool other = lower ? (leq_[d][a] && leq_[d][b]) : (leq_[a][d] && leq_[b][d]);
                if (other && !(lower ? leq_[d][c] : leq_[c][d]))
                    extremal = false;
            }
            if (extremal) {
                best = c;
                break;
            }
        }
        if (!best)
            throw DomainError(std::string("not a lattice: ") + labels_[a] + " and " + labels_[b] + " have no " +
                              (lower ? "meet" : "join"));
        return *best;
    }

    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> leq_;
    std::vector<Index> orth_;
    std::vector<Index> meet_, join_;
    std::vector<std::size_t> heights_;
    Index bottom_ = 0, top_ = 0;
    std::optional<HermitianSpace> space_;
    std::vector<Subspace> subspaces_;
    bool exhaustive_ = false;
};

namespace detail {

// Lattice on a sorted list of closed subspaces: order by containment,
// orthocomplement by perp. Meets and joins are cross-checked against
// intersection and closure of the sum.
inline FiniteOML lattice_on(const HermitianSpace& s, std::vector<Subspace> elems, bool exhaustive) {
    std::sort(elems.begin(), elems.end());
    const std::size_t n = elems.size();
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    std::vector<std::size_t> orth(n);
    auto find = [&](const Subspace& x) {
        auto it = std::lower_bound(elems.begin(), elems.end(), x);
        if (it == elems.end() || !(*it == x))
            throw InternalFault("closed subspace family is not closed under perp: " + x.to_string());
        return static_cast<std::size_t>(it - elems.begin());
    };
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(elems[a].to_string());
        for (std::size_t b = 0; b < n; ++b)
            leq[a][b] = elems[b].contains(elems[a]);
        orth[a] = find(s.perp(elems[a]));
    }
    FiniteOML L = FiniteOML::from_tables(std::move(labels), std::move(leq), std::move(orth));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!(elems[L.meet(a, b)] == intersect(elems[a], elems[b])))
                throw InternalFault("lattice meet differs from intersection");
            if (!(elems[L.join(a, b)] == s.closure(sum(elems[a], elems[b]))))
                throw InternalFault("lattice join differs from closure of the sum");
        }
    L.attach(s, std::move(elems), exhaustive);
    return L;
}

} // namespace detail

// All closed subspaces of a space over a prime field. Throws NotOrthomodular
// (with the smallest failing subspace) if the space is not orthomodular.
inline FiniteOML build_oml(const HermitianSpace& s, std::size_t cap = default_enumeration_cap) {
    if (!s.field().is_prime_field())
        throw DomainError("build_oml enumerates prime-field spaces only; use build_oml_from_family over " +
                          s.field().name());
    CheckOptions o;
    o.mode = Mode::exhaustive;
    o.cap = cap;
    auto v = check_orthomodular_space(s, o);
    if (!v.holds)
        throw NotOrthomodular(*v.witness);
    SubspaceCatalog cat(s.field(), s.dim(), cap);
    std::vector<Subspace> closed;
    for (const auto& m : cat.subspaces())
        if (s.is_closed(m))
            closed.push_back(m);
    return detail::lattice_on(s, std::move(closed), true);
}

// The sub-ortholattice generated by finitely many subspaces: close under
// perp, intersection and closure of sums. For spaces over infinite fields the
// result is a finite fragment, not the whole lattice.
inline FiniteOML build_oml_from_family(const HermitianSpace& s, const std::vector<Subspace>& generators,
                                       std::size_t cap = default_enumeration_cap) {
    std::set<Subspace> elems{s.zero(), s.full()};
    for (const auto& g : generators) {
        s.require(g);
        Subspace c = s.closure(g);
        if (!check_orthomodular_subspace(s, c))
            throw NotOrthomodular(c);
        elems.insert(c);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Subspace> cur(elems.begin(), elems.end());
        auto add = [&](Subspace x) {
            if (elems.insert(std::move(x)).second) {
                changed = true;
                if (elems.size() > cap)
                    throw CapExceeded(elems.size(), cap);
            }
        };
        for (std::size_t a = 0; a < cur.size(); ++a) {
            add(s.perp(cur[a]));
            for (std::size_t b = a + 1; b < cur.size(); ++b) {
                add(intersect(cur[a], cur[b]));
                add(s.closure(sum(cur[a], cur[b])));
            }
        }
    }
    for (const auto& m : elems)
        if (!check_orthomodular_subspace(s, m))
            throw NotOrthomodular(m);
    return detail::lattice_on(s, std::vector<Subspace>(elems.begin(), elems.end()), false);
}

// Subsets of {1..k} ordered by inclusion, complement as orthocomplement.
inline FiniteOML boolean_lattice(std::size_t k) {
    if (k == 0 || k > 10)
        throw DomainError("boolean_lattice supports 1..10 atoms");
    const std::size_t n = std::size_t{1} << k;
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    std::vector<std::size_t> orth(n);
    for (std::size_t a = 0; a < n; ++a) {
        std::string l = "{";
        for (std::size_t i = 0; i < k; ++i)
            if (a >> i & 1u) {
                if (l.size() > 1)
                    l += ',';
                l += std::to_string(i + 1);
            }
        labels.push_back(l + "}");
        for (std::size_t b = 0; b < n; ++b)
            leq[a][b] = (a & ~b) == 0;
        orth[a] = (n - 1) & ~a;
    }
    return FiniteOML::from_tables(std::move(labels), std::move(leq), std::move(orth));
}

// The hexagon ortholattice: 0 < a < b < 1 and 0 < b' < a' < 1. It is
// orthocomplemented but not orthomodular; the law fails at (a, b).
inline FiniteOML benzene() {
    std::vector<std::string> labels{"0", "a", "b", "b'", "a'", "1"};
    const std::size_t n = labels.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    auto set = [&](std::size_t x, std::size_t y) { leq[x][y] = true; };
    for (std::size_t x = 0; x < n; ++x) {
        set(0, x);
        set(x, 5);
        set(x, x);
    }
    set(1, 2);
    set(3, 4);
    std::vector<std::size_t> orth{5, 4, 3, 2, 1, 0};
    return FiniteOML::from_tables(std::move(labels), std::move(leq), std::move(orth));
}

// Componentwise order and orthocomplement on pairs.
inline FiniteOML product(const FiniteOML& a, const FiniteOML& b) {
    const std::size_t n = a.size() * b.size();
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    std::vector<std::size_t> orth(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t ia = i / b.size(), ib = i % b.size();
        labels.push_back("(" + a.label(ia) + "," + b.label(ib) + ")");
        orth[i] = a.orth(ia) * b.size() + b.orth(ib);
        for (std::size_t j = 0; j < n; ++j)
            leq[i][j] = a.leq(ia, j / b.size()) && b.leq(ib, j % b.size());
    }
    return FiniteOML::from_tables(std::move(labels), std::move(leq), std::move(orth));
}

// --- axioms ----------------------------------------------------------------

inline std::string pair_witness(const FiniteOML& L, std::size_t a, std::size_t b) {
    return "(" + L.label(a) + "," + L.label(b) + ")";
}

// Orthocomplement axioms, the orthomodular law a <= b => b = a v (b ^ a'),
// its dual form c <= d => (c' ^ d)' ^ d = c, and their agreement under
// c = b', d = a'.
inline Report check_oml_axioms(const FiniteOML& L) {
    Report r;
    r.info("elements", std::to_string(L.size()));
    std::string w0;
    for (std::size_t a = 0; a < L.size() && w0.empty(); ++a) {
        std::size_t o = L.orth(a);
        bool ok = L.orth(o) == a && L.meet(a, o) == L.bottom() && L.join(a, o) == L.top();
        for (std::size_t b = 0; b < L.size() && ok; ++b)
            if (L.leq(a, b) && !L.leq(L.orth(b), o))
                ok = false;
        if (!ok)
            w0 = L.label(a);
    }
    r.check("oml.orthocomplement", w0.empty(), w0);

    std::string wl, wd, wa;
    for (std::size_t a = 0; a < L.size(); ++a)
        for (std::size_t b = 0; b < L.size(); ++b) {
            if (!L.leq(a, b))
                continue;
            bool law = L.join(a, L.meet(b, L.orth(a))) == b;
            // dual form at (c, d) = (b', a')
            std::size_t c = L.orth(b), d = L.orth(a);
            bool dual = L.meet(L.orth(L.meet(L.orth(c), d)), d) == c;
            if (!law && wl.empty())
                wl = pair_witness(L, a, b);
            if (!dual && wd.empty())
                wd = pair_witness(L, c, d);
            if (law != dual && wa.empty())
                wa = pair_witness(L, a, b);
        }
    r.check("oml.law", wl.empty(), wl);
    r.check("oml.dual_form", wd.empty(), wd);
    r.check("oml.forms_agree", wa.empty(), wa);
    return r;
}

inline std::vector<std::size_t> atoms(const FiniteOML& L) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < L.size(); ++a)
        if (L.covers(a, L.bottom()))
            out.push_back(a);
    return out;
}

inline std::vector<std::size_t> atoms_below(const FiniteOML& L, std::size_t a) {
    std::vector<std::size_t> out;
    for (auto p : atoms(L))
        if (L.leq(p, a))
            out.push_back(p);
    return out;
}

// Every nonzero element is the join of the atoms below it.
inline std::optional<std::size_t> atomistic_failure(const FiniteOML& L) {
    for (std::size_t a = 0; a < L.size(); ++a) {
        if (a == L.bottom())
            continue;
        std::size_t j = L.bottom();
        for (auto p : atoms_below(L, a))
            j = L.join(j, p);
        if (j != a)
            return a;
    }
    return std::nullopt;
}

inline bool is_atomistic(const FiniteOML& L) { return !atomistic_failure(L).has_value(); }

// a v p covers a whenever p is an atom with a ^ p = 0.
inline Report covering_check(const FiniteOML& L) {
    Report r;
    std::string w;
    for (std::size_t a = 0; a < L.size() && w.empty(); ++a)
        for (auto p : atoms(L))
            if (L.meet(a, p) == L.bottom() && !L.covers(L.join(a, p), a)) {
                w = pair_witness(L, a, p);
                break;
            }
    r.check("lattice.covering", w.empty(), w);
    return r;
}

// z = (z ^ a) v (z ^ a')
inline bool commutes(const FiniteOML& L, std::size_t z, std::size_t a) {
    return L.join(L.meet(z, a), L.meet(z, L.orth(a))) == z;
}

inline std::vector<std::size_t> center(const FiniteOML& L) {
    std::vector<std::size_t> out;
    for (std::size_t z = 0; z < L.size(); ++z) {
        bool central = true;
        for (std::size_t a = 0; a < L.size() && central; ++a)
            central = commutes(L, z, a);
        if (central)
            out.push_back(z);
    }
    return out;
}

inline bool is_irreducible(const FiniteOML& L) { return center(L).size() == 2; }

// Atomistic, covering, irreducible and commutation symmetry as one report.
inline Report lattice_structure_report(const FiniteOML& L) {
    Report r;
    auto at = atoms(L);
    r.info("atoms", std::to_string(at.size()));
    auto af = atomistic_failure(L);
    r.check("lattice.atomistic", !af, af ? L.label(*af) : "");
    r.append(covering_check(L));
    std::string ws;
    for (std::size_t a = 0; a < L.size() && ws.empty(); ++a)
        for (std::size_t b = 0; b < L.size(); ++b)
            if (commutes(L, a, b) != commutes(L, b, a)) {
                ws = pair_witness(L, a, b);
                break;
            }
    r.check("lattice.commutes_symmetric", ws.empty(), ws);
    auto c = center(L);
    std::string wc;
    for (auto z : c)
        if (z != L.bottom() && z != L.top()) {
            wc = L.label(z);
            break;
        }
    r.info("center", std::to_string(c.size()));
    r.check("lattice.irreducible", wc.empty(), wc);
    return r;
}

// --- the geometry of atoms ---------------------------------------------------

// omega(a) = sorted atoms below a, as positions in atoms(L).
class OmegaImage {
public:
    using AtomSet = std::vector<std::size_t>;

    explicit OmegaImage(const FiniteOML& L) : L_(&L), atoms_(orthoform::atoms(L)) {
        if (auto f = atomistic_failure(L))
            throw DomainError("omega needs an atomistic lattice; fails at " + L.label(*f));
        image_.resize(L.size());
        for (std::size_t a = 0; a < L.size(); ++a)
            for (std::size_t k = 0; k < atoms_.size(); ++k)
                if (L.leq(atoms_[k], a))
                    image_[a].push_back(k);
    }

    const AtomSet& operator()(std::size_t a) const { return image_.at(a); }
    const std::vector<std::size_t>& atoms() const noexcept { return atoms_; }

    AtomSet all() const {
        AtomSet s(atoms_.size());
        for (std::size_t k = 0; k < s.size(); ++k)
            s[k] = k;
        return s;
    }

    // Points on the line through atoms i != j: atoms below a_i v a_j.
    AtomSet line(std::size_t i, std::size_t j) const { return image_[L_->join(atoms_[i], atoms_[j])]; }

    // Smallest geometric subspace containing s: closed under lines.
    AtomSet span(AtomSet s) const {
        std::vector<bool> in(atoms_.size(), false);
        for (auto k : s)
            in[k] = true;
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::size_t> cur;
            for (std::size_t k = 0; k < in.size(); ++k)
                if (in[k])
                    cur.push_back(k);
            for (std::size_t x = 0; x < cur.size(); ++x)
                for (std::size_t y = x + 1; y < cur.size(); ++y)
                    for (auto k : line(cur[x], cur[y]))
                        if (!in[k]) {
                            in[k] = true;
                            changed = true;
                        }
        }
        AtomSet out;
        for (std::size_t k = 0; k < in.size(); ++k)
            if (in[k])
                out.push_back(k);
        return out;
    }

    AtomSet geometric_join(const AtomSet& a, const AtomSet& b) const {
        AtomSet u;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
        return span(u);
    }

    // l-perp = intersection of omega(p') over points p of l.
    AtomSet polar(const AtomSet& l) const {
        AtomSet out = all();
        for (auto k : l) {
            const AtomSet& h = image_[L_->orth(atoms_[k])];
            AtomSet t;
            std::set_intersection(out.begin(), out.end(), h.begin(), h.end(), std::back_inserter(t));
            out = std::move(t);
        }
        return out;
    }

    bool is_subspace(const AtomSet& s) const { return span(s) == s; }

    // A subspace h != all with some point r outside and h + r = all.
    bool is_hyperplane(const AtomSet& h) const {
        if (!is_subspace(h) || h.size() == atoms_.size())
            return false;
        AtomSet everything = all();
        for (std::size_t r = 0; r < atoms_.size(); ++r)
            if (!std::binary_search(h.begin(), h.end(), r) && geometric_join(h, AtomSet{r}) == everything)
                return true;
        return false;
    }

private:
    const FiniteOML* L_;
    std::vector<std::size_t> atoms_;
    std::vector<AtomSet> image_;
};

inline std::string atom_set_string(const FiniteOML& L, const OmegaImage& w, const OmegaImage::AtomSet& s) {
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k)
            out += ';';
        out += L.label(w.atoms()[s[k]]);
    }
    return out + "}";
}

// Injectivity, order, meets (all pairs and sampled families), joins of
// finitely many atoms, hyperplane polars, (omega(p'))-perp = {p} and
// omega(a') = omega(a)-perp.
inline Report omega_embed(const FiniteOML& L, std::uint64_t seed = 0, std::size_t families = 200) {
    OmegaImage w(L);
    Report r;
    const std::size_t n = L.size();
    r.info("points", std::to_string(w.atoms().size()));
    std::string wi, wo, wm, wj;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a < b && w(a) == w(b) && wi.empty())
                wi = pair_witness(L, a, b);
            bool sub = std::includes(w(b).begin(), w(b).end(), w(a).begin(), w(a).end());
            if (L.leq(a, b) != sub && wo.empty())
                wo = pair_witness(L, a, b);
            OmegaImage::AtomSet both;
            std::set_intersection(w(a).begin(), w(a).end(), w(b).begin(), w(b).end(), std::back_inserter(both));
            if (!(w(L.meet(a, b)) == both) && wm.empty())
                wm = pair_witness(L, a, b);
            if (!(w(L.join(a, b)) == w.geometric_join(w(a), w(b))) && wj.empty())
                wj = pair_witness(L, a, b);
        }
    Sampler sampler(seed);
    for (std::size_t t = 0; t < families && wm.empty(); ++t) {
        std::size_t k = 2 + sampler.index(3);
        std::size_t m = L.top();
        OmegaImage::AtomSet inter = w.all();
        std::string names;
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t a = sampler.index(n);
            m = L.meet(m, a);
            OmegaImage::AtomSet tmp;
            std::set_intersection(inter.begin(), inter.end(), w(a).begin(), w(a).end(), std::back_inserter(tmp));
            inter = std::move(tmp);
            names += (i ? ";" : "") + L.label(a);
        }
        if (!(w(m) == inter))
            wm = "{" + names + "}";
    }
    r.check("omega.injective", wi.empty(), wi);
    r.check("omega.order", wo.empty(), wo);
    r.check("omega.meets", wm.empty(), wm);
    r.check("omega.joins", wj.empty(), wj);

    std::string wh, wd, wc;
    for (std::size_t k = 0; k < w.atoms().size(); ++k) {
        std::size_t p = w.atoms()[k];
        const auto& h = w(L.orth(p));
        if (!w.is_hyperplane(h) && wh.empty())
            wh = L.label(p);
        if (!(w.polar(h) == OmegaImage::AtomSet{k}) && wd.empty())
            wd = L.label(p);
    }
    for (std::size_t a = 0; a < n; ++a)
        if (!(w(L.orth(a)) == w.polar(w(a))) && wc.empty())
            wc = L.label(a);
    r.check("omega.point_polars_are_hyperplanes", wh.empty(), wh);
    r.check("omega.double_polar", wd.empty(), wd);
    r.check("omega.orthocomplement", wc.empty(), wc);
    return r;
}

// --- orthogonal atom pairs with harmonic witnesses ---------------------------

// Orthogonal atoms K e_1, ..., K e_n from an orthogonal basis; for each
// consecutive pair, whether some c on the line has harmonic conjugate equal to
// its relative polar.
inline Report theorem41_hypothesis(const HermitianSpace& s) {
    if (s.dim() < 2)
        throw DomainError("no orthogonal pair of atoms exists in dimension 1");
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < s.dim(); ++i)
        basis.push_back(Vector::unit(s.field(), s.dim(), i));
    std::vector<Vector> e;
    try {
        e = orthogonalize(s, basis);
    } catch (const IsotropicVector& iso) {
        throw DomainError("no orthogonal basis of non-isotropic vectors: " + iso.witness().to_string() +
                          " is isotropic");
    }
    Polarity pol = Polarity::from_space(s);
    Report r;
    r.info("pairs", std::to_string(e.size() - 1));
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
        ProjPoint p(e[i]), q(e[i + 1]);
        auto h = norm_equiv_by_harmonic(pol, p, q);
        std::string name = "harmonic_pair." + std::to_string(i + 1);
        r.info(name + ".atoms", p.to_string() + "," + q.to_string());
        r.info(name + ".verdict", to_string(h.status));
        r.check(name, h.status == Equivalence::equivalent,
                h.c ? "c=" + h.c->to_string() : "p=" + p.to_string() + ";q=" + q.to_string());
    }
    return r;
}

inline Report theorem41_hypothesis(const FiniteOML& L) { return theorem41_hypothesis(L.space()); }

// --- Hasse diagram -----------------------------------------------------------

namespace detail {

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

} // namespace detail

// Deterministic DOT: nodes in element order, one rank=same group per height,
// covering edges bottom-up, dashed undirected edges for a <-> a' (a < a').
inline std::string emit_dot(const FiniteOML& L, const std::string& name = "lattice") {
    std::string out = "digraph " + name + " {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t a = 0; a < L.size(); ++a)
        out += "  n" + std::to_string(a) + " [label=\"" + detail::dot_escape(L.label(a)) + "\"];\n";
    std::size_t max_h = 0;
    for (std::size_t a = 0; a < L.size(); ++a)
        max_h = std::max(max_h, L.height(a));
    for (std::size_t h = 0; h <= max_h; ++h) {
        out += "  { rank=same;";
        for (std::size_t a = 0; a < L.size(); ++a)
            if (L.height(a) == h)
                out += " n" + std::to_string(a) + ";";
        out += " }\n";
    }
    for (std::size_t a = 0; a < L.size(); ++a)
        for (std::size_t b = 0; b < L.size(); ++b)
            if (L.covers(b, a))
                out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    for (std::size_t a = 0; a < L.size(); ++a)
        if (a < L.orth(a))
            out += "  n" + std::to_string(a) + " -> n" + std::to_string(L.orth(a)) +
                   " [style=dashed, dir=both, constraint=false];\n";
    out += "}\n";
    return out;
}

} // namespace orthoform
