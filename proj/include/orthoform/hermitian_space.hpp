#pragma once

// Hermitian spaces: a left vector space K^n with the form
//
//   <x, y> = sum_ij x_i g_ij y_j*
//
// (left coefficients first, starred right coefficients last), which is linear
// on the left in the first argument over any *-field. Alternate forms
// (identity involution, g skew with zero diagonal) are accepted as well so the
// symplectic branch of the polarity dichotomy can be exercised.

#include "orthoform/enumerate.hpp"
#include "orthoform/linalg.hpp"
#include "orthoform/random.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orthoform {

// A rejected Gram matrix. row() is the 0-based row where the defect shows.
class GramError : public DomainError {
public:
    GramError(const std::string& what, std::size_t row) : DomainError(what), row_(row) {}
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

// Orthogonalization hit a nonzero vector with <x, x> = 0.
class IsotropicVector : public DomainError {
public:
    explicit IsotropicVector(Vector witness)
        : DomainError("isotropic vector " + witness.to_string()), witness_(std::move(witness)) {}
    const Vector& witness() const noexcept { return witness_; }

private:
    Vector witness_;
};

enum class FormKind : std::uint8_t { hermitian, alternate };

class HermitianSpace {
public:
    HermitianSpace() = default;

    static HermitianSpace from_gram(const Matrix& gram) {
        const std::size_t n = gram.rows();
        if (n == 0 || gram.cols() != n)
            throw GramError("gram matrix must be square and nonempty", 0);
        const FieldDescriptor& f = gram.field();

        bool hermitian = true, alternate = f.involution == Involution::identity;
        std::size_t herm_row = 0, alt_row = 0;
        for (std::size_t i = 0; i < n && (hermitian || alternate); ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                if (hermitian && !(gram(i, j).star() == gram(j, i))) {
                    hermitian = false;
                    herm_row = i;
                }
                if (alternate && !(gram(i, j) == -gram(j, i))) {
                    alternate = false;
                    alt_row = i;
                }
            }
        FormKind kind = FormKind::hermitian;
        if (!hermitian) {
            if (!alternate)
                throw GramError("gram matrix is neither Hermitian nor alternate (row " +
                                    std::to_string(std::max(herm_row, alt_row) + 1) + ")",
                                std::max(herm_row, alt_row));
            kind = FormKind::alternate;
        }

        std::vector<Vector> rows;
        for (std::size_t i = 0; i < n; ++i) {
            rows.push_back(gram.row(i));
            if (Subspace::span(f, n, rows).dim() != i + 1)
                throw GramError("gram matrix is singular: row " + std::to_string(i + 1) +
                                    " depends on the rows above it",
                                i);
        }

        HermitianSpace s;
        s.gram_ = gram;
        s.kind_ = kind;
        return s;
    }

    static HermitianSpace identity(const FieldDescriptor& f, std::size_t n) {
        return from_gram(Matrix::identity(f, n));
    }

    static HermitianSpace diagonal(const FieldDescriptor& f, std::initializer_list<long> entries) {
        return from_gram(Matrix::diagonal_ints(f, entries));
    }

    const FieldDescriptor& field() const noexcept { return gram_.field(); }
    std::size_t dim() const noexcept { return gram_.rows(); }
    const Matrix& gram() const noexcept { return gram_; }
    FormKind kind() const noexcept { return kind_; }

    Subspace full() const { return Subspace::full(field(), dim()); }
    Subspace zero() const { return Subspace::zero(field(), dim()); }

    Scalar form(const Vector& x, const Vector& y) const {
        require(x);
        require(y);
        Scalar total = Scalar::zero(field());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i].is_zero())
                continue;
            Scalar t = Scalar::zero(field());
            for (std::size_t j = 0; j < dim(); ++j)
                if (!y[j].is_zero())
                    t += gram_(i, j) * y[j].star();
            total += x[i] * t;
        }
        return total;
    }

    // {x : <x, s> = 0 for all s in M}. Column s of W is w_i = sum_j g_ij s_j*,
    // so x is in M-perp iff x W = 0.
    Subspace perp(const Subspace& m) const {
        require(m);
        if (m.is_zero())
            return full();
        Matrix w(field(), dim(), m.dim());
        for (std::size_t c = 0; c < m.dim(); ++c) {
            const Vector& s = m.basis()[c];
            for (std::size_t i = 0; i < dim(); ++i) {
                Scalar t = Scalar::zero(field());
                for (std::size_t j = 0; j < dim(); ++j)
                    if (!s[j].is_zero())
                        t += gram_(i, j) * s[j].star();
                w(i, c) = t;
            }
        }
        return left_kernel(w);
    }

    Subspace perp(const Vector& x) const { return perp(Subspace::line(x)); }

    Subspace closure(const Subspace& m) const { return perp(perp(m)); }
    bool is_closed(const Subspace& m) const { return closure(m) == m; }

    void require(const Vector& x) const {
        if (x.size() != dim() || !(x.field() == field()))
            throw MismatchError("vector " + x.to_string() + " is not in the ambient " + field().name() +
                                "^" + std::to_string(dim()));
    }

    void require(const Subspace& m) const {
        if (m.ambient() != dim() || !(m.field() == field()))
            throw MismatchError("subspace is not in the ambient " + field().name() + "^" +
                                std::to_string(dim()));
    }

private:
    Matrix gram_;
    FormKind kind_ = FormKind::hermitian;
};

inline Scalar form_eval(const HermitianSpace& s, const Vector& x, const Vector& y) { return s.form(x, y); }
inline Subspace perp(const HermitianSpace& s, const Subspace& m) { return s.perp(m); }
inline Subspace closure(const HermitianSpace& s, const Subspace& m) { return s.closure(m); }
inline bool is_closed(const HermitianSpace& s, const Subspace& m) { return s.is_closed(m); }

// --- check modes -----------------------------------------------------------

enum class Mode : std::uint8_t { automatic, exhaustive, sampled };

inline std::string to_string(Mode m) {
    switch (m) {
    case Mode::automatic: return "auto";
    case Mode::exhaustive: return "exhaustive";
    case Mode::sampled: return "sampled";
    }
    return "?";
}

struct CheckOptions {
    Mode mode = Mode::automatic;
    std::size_t cap = default_enumeration_cap;
    std::size_t samples = 500;
    std::uint64_t seed = 0;
};

// Exhaustive iff the field is prime and every subspace fits under the cap.
// An explicit exhaustive request beyond the cap throws rather than sampling.
inline Mode resolve_mode(const FieldDescriptor& f, std::size_t n, const CheckOptions& o) {
    if (o.mode == Mode::sampled)
        return Mode::sampled;
    std::uint64_t needed = f.is_prime_field() ? subspace_count(f.modulus, n) : UINT64_MAX;
    bool fits = f.is_prime_field() && needed <= o.cap;
    if (o.mode == Mode::exhaustive) {
        if (!f.is_prime_field())
            throw DomainError("exhaustive mode needs a prime field, got " + f.name());
        if (!fits)
            throw CapExceeded(needed, o.cap);
        return Mode::exhaustive;
    }
    return fits ? Mode::exhaustive : Mode::sampled;
}

// Runs pred over every subspace (exhaustive: by dimension, then catalog order)
// or over o.samples random subspaces. Returns the first subspace where pred
// fails, plus the mode used and the count examined.
struct SweepResult {
    Mode mode = Mode::exhaustive;
    std::size_t examined = 0;
    std::optional<Subspace> failure;
};

template <typename Pred>
SweepResult sweep_subspaces(const FieldDescriptor& f, std::size_t n, const CheckOptions& o, Pred&& pred) {
    SweepResult r;
    r.mode = resolve_mode(f, n, o);
    if (r.mode == Mode::exhaustive) {
        SubspaceCatalog cat(f, n, o.cap);
        for (std::size_t k = 0; k <= n && !r.failure; ++k)
            for (auto idx : cat.of_dimension(k)) {
                ++r.examined;
                if (!pred(cat.subspace(idx))) {
                    r.failure = cat.subspace(idx);
                    break;
                }
            }
        return r;
    }
    Sampler sampler(o.seed);
    for (std::size_t t = 0; t < o.samples; ++t) {
        Subspace m = sampler.subspace(f, n);
        ++r.examined;
        if (!pred(m)) {
            r.failure = std::move(m);
            break;
        }
    }
    return r;
}

// --- orthomodularity -------------------------------------------------------

// M is first replaced by its closure, then M + M-perp = E is tested.
inline bool check_orthomodular_subspace(const HermitianSpace& s, const Subspace& m) {
    Subspace c = s.closure(m);
    return sum(c, s.perp(c)).is_full();
}

struct SpaceVerdict {
    bool holds = true;
    Mode mode = Mode::exhaustive;
    std::size_t examined = 0;
    std::optional<Subspace> witness;
};

inline SpaceVerdict check_orthomodular_space(const HermitianSpace& s, const CheckOptions& o = {}) {
    auto r = sweep_subspaces(s.field(), s.dim(), o,
                             [&](const Subspace& m) { return check_orthomodular_subspace(s, m); });
    return {!r.failure.has_value(), r.mode, r.examined, r.failure};
}

// --- norms and norm classes --------------------------------------------------

namespace detail {

inline bool perfect_square(const mpz_class& n, mpz_class& root) {
    if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t()))
        return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

inline constexpr unsigned long two_square_limit = 1000000000000ul; // a*a + b*b search is complete below this
inline constexpr std::size_t four_square_budget = 2000000;

// An element sigma of the rational core with sigma sigma* = n (n a
// nonnegative integer), searched over integer components. For Q and Q(i) a
// nullopt is a proof of nonexistence whenever `complete` is set on return.
inline std::optional<Scalar> integer_norm_element(const FieldDescriptor& f, const mpz_class& n, bool& complete) {
    complete = true;
    std::array<mpq_class, 4> c{};
    mpz_class root;
    if (n == 0)
        return Scalar::zero(f);
    switch (f.kind) {
    case FieldKind::rational:
        if (!perfect_square(n, root))
            return std::nullopt;
        c[0] = root;
        return Scalar::from_components(f, c);
    case FieldKind::gaussian_rational: {
        if (n > mpz_class(std::to_string(two_square_limit))) {
            complete = false;
            return std::nullopt;
        }
        for (mpz_class a = 0; a * a <= n; ++a)
            if (perfect_square(n - a * a, root)) {
                c[0] = root;
                c[1] = a;
                return Scalar::from_components(f, c);
            }
        return std::nullopt;
    }
    case FieldKind::rational_quaternion: {
        std::size_t steps = 0;
        for (mpz_class a = 0; a * a <= n; ++a)
            for (mpz_class b = 0; a * a + b * b <= n; ++b)
                for (mpz_class d = 0; a * a + b * b + d * d <= n; ++d) {
                    if (++steps > four_square_budget) {
                        complete = false;
                        return std::nullopt;
                    }
                    if (perfect_square(n - a * a - b * b - d * d, root)) {
                        c = {mpq_class(root), mpq_class(a), mpq_class(b), mpq_class(d)};
                        return Scalar::from_components(f, c);
                    }
                }
        return std::nullopt;
    }
    case FieldKind::prime_field:
        break;
    }
    throw MismatchError("integer norms are defined for the rational cores only");
}

} // namespace detail

enum class Equivalence : std::uint8_t { equivalent, inequivalent, unknown };

inline std::string to_string(Equivalence e) {
    switch (e) {
    case Equivalence::equivalent: return "equivalent";
    case Equivalence::inequivalent: return "inequivalent";
    case Equivalence::unknown: return "unknown";
    }
    return "?";
}

// Outcome of a bounded witness search.
enum class Search : std::uint8_t { found, none, unknown };

inline std::string to_string(Search s) {
    switch (s) {
    case Search::found: return "found";
    case Search::none: return "none";
    case Search::unknown: return "unknown";
    }
    return "?";
}

// The witness rho satisfies mu = rho lambda rho*. The relation is symmetric
// (rho^-1 witnesses the other direction).
struct NormEquivVerdict {
    Equivalence status = Equivalence::unknown;
    std::optional<Scalar> rho;
};

inline NormEquivVerdict norm_equiv(const FieldDescriptor& f, const Scalar& lambda, const Scalar& mu) {
    if (!(lambda.field() == f) || !(mu.field() == f))
        throw MismatchError("norm_equiv arguments outside " + f.name());
    if (!lambda.is_symmetric() || !mu.is_symmetric())
        throw DomainError("norm classes are defined for symmetric elements only");
    if (lambda.is_zero() || mu.is_zero()) {
        if (lambda.is_zero() && mu.is_zero())
            return {Equivalence::equivalent, Scalar::one(f)};
        return {Equivalence::inequivalent, std::nullopt};
    }

    auto verified = [&](const Scalar& rho) -> NormEquivVerdict {
        if (!(rho * lambda * rho.star() == mu))
            throw InternalFault("norm_equiv witness fails verification");
        return {Equivalence::equivalent, rho};
    };

    if (f.is_prime_field()) {
        for (std::uint32_t r = 1; r < f.modulus; ++r) {
            Scalar rho = Scalar::residue(f, r);
            if (rho * lambda * rho == mu)
                return verified(rho);
        }
        return {Equivalence::inequivalent, std::nullopt};
    }

    // Symmetric elements of the rational cores are real, hence central, and
    // rho lambda rho* = N(rho) lambda. So the question is whether mu/lambda is
    // a norm.
    mpq_class ratio = mu.component(0) / lambda.component(0);
    if (ratio <= 0)
        return {Equivalence::inequivalent, std::nullopt};
    if (f.kind == FieldKind::rational) {
        auto root = rational_sqrt(ratio);
        if (!root)
            return {Equivalence::inequivalent, std::nullopt};
        return verified(Scalar::rational(f, *root));
    }
    // N(sigma / b) = a/b  iff  N(sigma) = a b.
    bool complete = false;
    mpz_class ab = ratio.get_num() * ratio.get_den();
    auto sigma = detail::integer_norm_element(f, ab, complete);
    if (sigma)
        return verified(Scalar::rational(f, mpq_class(1, 1) / mpq_class(ratio.get_den())) * *sigma);
    // A positive rational is a sum of two rational squares iff its numerator
    // times denominator is a sum of two integer squares, so for Q(i) a
    // finished search is a proof.
    if (f.kind == FieldKind::gaussian_rational && complete)
        return {Equivalence::inequivalent, std::nullopt};
    return {Equivalence::unknown, std::nullopt};
}

inline NormEquivVerdict norm_equiv(const HermitianSpace& s, const Scalar& lambda, const Scalar& mu) {
    return norm_equiv(s.field(), lambda, mu);
}

// --- orthogonalization -----------------------------------------------------

// Pairwise-orthogonal vectors with the same span. Each vector is reduced by
// u <- u - <u, b> <b, b>^-1 b against the vectors kept so far; vectors that
// reduce to zero are dropped, and a nonzero reduced vector with <u, u> = 0
// raises IsotropicVector.
inline std::vector<Vector> orthogonalize(const HermitianSpace& s, const std::vector<Vector>& vectors) {
    std::vector<Vector> out;
    std::vector<Scalar> inv_norms;
    for (const auto& v : vectors) {
        s.require(v);
        Vector u = v;
        for (std::size_t k = 0; k < out.size(); ++k) {
            Scalar c = s.form(u, out[k]) * inv_norms[k];
            if (!c.is_zero())
                u = u - c * out[k];
        }
        if (u.is_zero())
            continue;
        Scalar n = s.form(u, u);
        if (n.is_zero())
            throw IsotropicVector(u);
        inv_norms.push_back(n.inverse());
        out.push_back(std::move(u));
    }
    return out;
}

// --- anisotropy ------------------------------------------------------------

enum class Anisotropy : std::uint8_t { anisotropic, isotropic, unknown };

inline std::string to_string(Anisotropy a) {
    switch (a) {
    case Anisotropy::anisotropic: return "anisotropic";
    case Anisotropy::isotropic: return "isotropic";
    case Anisotropy::unknown: return "unknown";
    }
    return "?";
}

struct AnisotropyVerdict {
    Anisotropy status = Anisotropy::unknown;
    std::optional<Vector> witness;
    // "exhaustive", "positive_definite", "negative_definite", "indefinite"
    // or "alternate".
    std::string basis;
};

inline AnisotropyVerdict anisotropy(const HermitianSpace& s) {
    const FieldDescriptor& f = s.field();
    const std::size_t n = s.dim();
    if (f.is_prime_field()) {
        AnisotropyVerdict v{Anisotropy::anisotropic, std::nullopt, "exhaustive"};
        for_each_point(f, n, [&](const Vector& x) {
            if (!s.form(x, x).is_zero())
                return true;
            v = {Anisotropy::isotropic, x, "exhaustive"};
            return false;
        });
        return v;
    }

    std::vector<Vector> basis;
    for (std::size_t i = 0; i < n; ++i)
        basis.push_back(Vector::unit(f, n, i));
    std::vector<Vector> diag;
    try {
        diag = orthogonalize(s, basis);
    } catch (const IsotropicVector& e) {
        return {Anisotropy::isotropic, e.witness(), s.kind() == FormKind::alternate ? "alternate" : "indefinite"};
    }

    std::vector<mpq_class> d;
    for (const auto& b : diag)
        d.push_back(s.form(b, b).component(0));
    bool pos = std::all_of(d.begin(), d.end(), [](const mpq_class& x) { return x > 0; });
    bool neg = std::all_of(d.begin(), d.end(), [](const mpq_class& x) { return x < 0; });
    if (pos)
        return {Anisotropy::anisotropic, std::nullopt, "positive_definite"};
    if (neg)
        return {Anisotropy::anisotropic, std::nullopt, "negative_definite"};

    // Opposite signs d_i > 0 > d_j: rho b_i + b_j is isotropic when
    // -d_j = N(rho) d_i.
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (!(d[i] > 0 && d[j] < 0))
                continue;
            auto eq = norm_equiv(f, Scalar::rational(f, d[i]), Scalar::rational(f, -d[j]));
            if (eq.status == Equivalence::equivalent) {
                Vector w = *eq.rho * diag[i] + diag[j];
                return {Anisotropy::isotropic, w, "indefinite"};
            }
        }

    // Bounded search over norm tuples: sum_k N(c_k) d_k = 0 with small
    // integer norms N(c_k) <= bound.
    const std::size_t k = d.size();
    std::size_t bound = 1;
    while (true) {
        std::size_t next = bound + 1, total = 1;
        for (std::size_t t = 0; t < k; ++t)
            total *= next + 1;
        if (total > 200000)
            break;
        bound = next;
        if (bound >= 64)
            break;
    }
    std::vector<std::size_t> norms(k, 0);
    for (;;) {
        std::size_t t = k;
        while (t > 0) {
            if (++norms[t - 1] <= bound)
                break;
            norms[t - 1] = 0;
            --t;
        }
        if (t == 0)
            break;
        mpq_class total = 0;
        for (std::size_t q = 0; q < k; ++q)
            total += mpq_class(static_cast<unsigned long>(norms[q])) * d[q];
        if (total != 0)
            continue;
        Vector w(f, n);
        bool ok = true;
        for (std::size_t q = 0; q < k && ok; ++q) {
            bool complete = false;
            auto c = detail::integer_norm_element(f, mpz_class(static_cast<unsigned long>(norms[q])), complete);
            if (!c)
                ok = false;
            else
                w = w + *c * diag[q];
        }
        if (ok && !w.is_zero() && s.form(w, w).is_zero())
            return {Anisotropy::isotropic, w, "indefinite"};
    }
    return {Anisotropy::unknown, std::nullopt, "indefinite"};
}

// --- projection ------------------------------------------------------------

struct Projection {
    Vector m;
    Vector m_perp;
};

// x = m + m_perp with m in M and m_perp in M-perp. Requires M + M-perp = E and
// M meet M-perp = 0.
inline Projection project(const HermitianSpace& s, const Subspace& m, const Vector& x) {
    s.require(m);
    s.require(x);
    Subspace p = s.perp(m);
    if (!intersect(m, p).is_zero() || !sum(m, p).is_full())
        throw DomainError("projection needs M + M-perp = E and M meet M-perp = 0; fails for " + m.to_string());
    std::vector<Vector> rows = m.basis();
    rows.insert(rows.end(), p.basis().begin(), p.basis().end());
    auto c = solve_left(s.field(), s.dim(), rows, x);
    if (!c)
        throw InternalFault("projection system has no solution");
    Vector a(s.field(), s.dim());
    for (std::size_t k = 0; k < m.dim(); ++k)
        a = a + (*c)[k] * m.basis()[k];
    return {a, x - a};
}

// --- rescaling -------------------------------------------------------------

// [x, y] = <x, y> lambda^-1, Hermitian for rho# = lambda rho* lambda^-1.
class RescaledStructure {
public:
    RescaledStructure(const HermitianSpace& s, const Scalar& lambda) : space_(s), lambda_(lambda) {
        if (!(lambda.field() == s.field()))
            throw MismatchError("lambda outside " + s.field().name());
        if (lambda.is_zero())
            throw DomainError("rescaling needs lambda != 0");
        if (!lambda.is_symmetric())
            throw DomainError("rescaling needs lambda = lambda*, got " + lambda.to_string());
        lambda_inv_ = lambda.inverse();
        gram_ = Matrix(s.field(), s.dim(), s.dim());
        for (std::size_t i = 0; i < s.dim(); ++i)
            for (std::size_t j = 0; j < s.dim(); ++j)
                gram_(i, j) = s.gram()(i, j) * lambda_inv_;
    }

    const Scalar& lambda() const noexcept { return lambda_; }
    const Matrix& gram() const noexcept { return gram_; }
    const HermitianSpace& space() const noexcept { return space_; }

    Scalar twist(const Scalar& rho) const { return lambda_ * rho.star() * lambda_inv_; }

    // sum_ij x_i g'_ij y_j#, which equals <x, y> lambda^-1.
    Scalar form(const Vector& x, const Vector& y) const {
        space_.require(x);
        space_.require(y);
        Scalar total = Scalar::zero(space_.field());
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j)
                total += x[i] * gram_(i, j) * twist(y[j]);
        return total;
    }

    // [y, x]# = [x, y] on basis pairs.
    bool is_hermitian() const {
        for (std::size_t i = 0; i < gram_.rows(); ++i)
            for (std::size_t j = 0; j < gram_.cols(); ++j)
                if (!(twist(gram_(j, i)) == gram_(i, j)))
                    return false;
        return true;
    }

    // Perp computed from [.,.] alone.
    Subspace perp(const Subspace& m) const {
        space_.require(m);
        const std::size_t n = space_.dim();
        if (m.is_zero())
            return space_.full();
        Matrix w(space_.field(), n, m.dim());
        for (std::size_t c = 0; c < m.dim(); ++c)
            for (std::size_t i = 0; i < n; ++i) {
                Scalar t = Scalar::zero(space_.field());
                for (std::size_t j = 0; j < n; ++j)
                    t += gram_(i, j) * twist(m.basis()[c][j]);
                w(i, c) = t;
            }
        return left_kernel(w);
    }

private:
    HermitianSpace space_;
    Scalar lambda_;
    Scalar lambda_inv_;
    Matrix gram_;
};

inline RescaledStructure rescale(const HermitianSpace& s, const Scalar& lambda) { return RescaledStructure(s, lambda); }

// --- hermitian / symplectic ------------------------------------------------

enum class FormClass : std::uint8_t { hermitian_case, symplectic_case };

struct FormClassification {
    FormClass kind = FormClass::hermitian_case;
    std::optional<Vector> witness; // some e with <e, e> != 0 in the Hermitian case
};

// <x, x> vanishes identically iff it vanishes on the basis and on e_i + u e_j
// for u ranging over 1 and the imaginary units.
inline FormClassification classify_form(const HermitianSpace& s) {
    const FieldDescriptor& f = s.field();
    const std::size_t n = s.dim();
    auto test = [&](const Vector& e) { return !s.form(e, e).is_zero(); };
    for (std::size_t i = 0; i < n; ++i) {
        Vector e = Vector::unit(f, n, i);
        if (test(e))
            return {FormClass::hermitian_case, e};
    }
    std::vector<Scalar> units{Scalar::one(f)};
    for (int u = 1; static_cast<std::size_t>(u) < f.components(); ++u)
        units.push_back(Scalar::unit(f, u));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (const auto& u : units) {
                Vector e = Vector::unit(f, n, i) + u * Vector::unit(f, n, j);
                if (test(e))
                    return {FormClass::hermitian_case, e};
            }
    return {FormClass::symplectic_case, std::nullopt};
}

inline std::string to_string(FormClass c) {
    return c == FormClass::hermitian_case ? "hermitian" : "symplectic";
}

} // namespace orthoform
