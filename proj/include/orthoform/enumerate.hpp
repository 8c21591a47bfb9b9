#pragma once

// Exhaustive enumeration over GF(p)^n: vectors, projective points and the full
// subspace lattice. SubspaceCatalog indexes every subspace in lexicographic
// order of canonical bases and answers meet/join/containment by table lookup on
// point sets, which is what makes the exhaustive checks cheap.

#include "orthoform/linalg.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace orthoform {

inline constexpr std::size_t default_enumeration_cap = 20000;

namespace detail {

inline std::uint64_t saturate(const mpz_class& v) {
    if (v > mpz_class("18446744073709551615"))
        return UINT64_MAX;
    return std::stoull(v.get_str());
}

inline void require_prime_field(const FieldDescriptor& f, const char* what) {
    if (!f.is_prime_field())
        throw DomainError(std::string(what) + " requires a prime field, got " + f.name());
}

} // namespace detail

// Number of k-dimensional subspaces of GF(p)^n, saturating at UINT64_MAX.
inline std::uint64_t gaussian_binomial(std::uint64_t p, std::size_t n, std::size_t k) {
    if (k > n)
        return 0;
    mpz_class num = 1, den = 1, pp = p;
    for (std::size_t i = 0; i < k; ++i) {
        mpz_class a, b;
        mpz_pow_ui(a.get_mpz_t(), pp.get_mpz_t(), n - i);
        mpz_pow_ui(b.get_mpz_t(), pp.get_mpz_t(), i + 1);
        num *= a - 1;
        den *= b - 1;
    }
    return detail::saturate(num / den);
}

inline std::uint64_t subspace_count(std::uint64_t p, std::size_t n) {
    mpz_class total = 0;
    for (std::size_t k = 0; k <= n; ++k)
        total += mpz_class(std::to_string(gaussian_binomial(p, n, k)));
    return detail::saturate(total);
}

// (p^n - 1)/(p - 1)
inline std::uint64_t point_count(std::uint64_t p, std::size_t n) { return gaussian_binomial(p, n, 1); }

inline std::uint64_t vector_count(std::uint64_t p, std::size_t n) {
    mpz_class v;
    mpz_class pp = p;
    mpz_pow_ui(v.get_mpz_t(), pp.get_mpz_t(), n);
    return detail::saturate(v);
}

// All p^n vectors in lexicographic order.
inline std::vector<Vector> all_vectors(const FieldDescriptor& f, std::size_t n, std::size_t cap = 1u << 22) {
    detail::require_prime_field(f, "vector enumeration");
    std::uint64_t total = vector_count(f.modulus, n);
    if (total > cap)
        throw CapExceeded(total, cap);
    std::vector<Vector> out;
    out.reserve(total);
    std::vector<std::uint32_t> digits(n, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        Vector v(f, n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = Scalar::residue(f, digits[i]);
        out.push_back(std::move(v));
        for (std::size_t i = n; i-- > 0;) {
            if (++digits[i] < f.modulus)
                break;
            digits[i] = 0;
        }
    }
    return out;
}

// Calls fn on the normalized representative (leading coordinate 1) of every
// projective point of GF(p)^n, in increasing base-p order. fn returns false to
// stop early; the function returns false iff it was stopped.
template <typename Fn>
bool for_each_point(const FieldDescriptor& f, std::size_t n, Fn&& fn, std::size_t cap = 1u << 22) {
    detail::require_prime_field(f, "point enumeration");
    std::uint64_t total = point_count(f.modulus, n);
    if (total > cap)
        throw CapExceeded(total, cap);
    for (std::size_t lead = n; lead-- > 0;) {
        std::vector<std::uint32_t> tail(n - lead - 1, 0);
        for (;;) {
            Vector v(f, n);
            v[lead] = Scalar::one(f);
            for (std::size_t i = 0; i < tail.size(); ++i)
                v[lead + 1 + i] = Scalar::residue(f, tail[i]);
            if (!fn(v))
                return false;
            std::size_t i = tail.size();
            while (i > 0) {
                if (++tail[i - 1] < f.modulus)
                    break;
                tail[i - 1] = 0;
                --i;
            }
            if (i == 0)
                break;
        }
    }
    return true;
}

class SubspaceCatalog {
public:
    using Index = std::size_t;

    SubspaceCatalog(const FieldDescriptor& f, std::size_t n, std::size_t cap = default_enumeration_cap)
        : field_(f), n_(n), p_(f.modulus) {
        detail::require_prime_field(f, "subspace enumeration");
        if (n == 0)
            throw DomainError("ambient dimension must be positive");
        std::uint64_t total = subspace_count(p_, n);
        if (total > cap)
            throw CapExceeded(total, cap);
        build_points();
        build_subspaces();
        build_pointsets();
        build_duals();
    }

    const FieldDescriptor& field() const noexcept { return field_; }
    std::size_t ambient() const noexcept { return n_; }
    std::size_t size() const noexcept { return subspaces_.size(); }
    const Subspace& subspace(Index i) const { return subspaces_.at(i); }
    const std::vector<Subspace>& subspaces() const noexcept { return subspaces_; }
    std::size_t dim(Index i) const { return subspaces_[i].dim(); }

    Index zero_index() const noexcept { return 0; }
    Index full_index() const { return index_of(Subspace::full(field_, n_)); }

    std::size_t point_count() const noexcept { return points_.size(); }
    const std::vector<Vector>& points() const noexcept { return points_; }
    // Subspace index of the i-th point.
    Index point_subspace(std::size_t point) const { return point_subspace_.at(point); }

    Index index_of(const Subspace& s) const {
        auto it = std::lower_bound(subspaces_.begin(), subspaces_.end(), s);
        if (it == subspaces_.end() || !(*it == s))
            throw InternalFault("subspace missing from catalog: " + s.to_string());
        return static_cast<Index>(it - subspaces_.begin());
    }

    // Point index of the projective point through a nonzero vector.
    std::size_t point_index(const Vector& v) const {
        std::vector<std::uint32_t> r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            r[i] = v[i].residue();
        auto code = normalized_code(r);
        if (code == 0)
            throw DomainError("the zero vector is not a point");
        return point_of_code_[code];
    }

    bool leq(Index a, Index b) const {
        const auto* x = bits(a);
        const auto* y = bits(b);
        for (std::size_t w = 0; w < words_; ++w)
            if (x[w] & ~y[w])
                return false;
        return true;
    }

    bool point_in(std::size_t point, Index s) const {
        return (bits(s)[point / 64] >> (point % 64)) & 1u;
    }

    Index meet(Index a, Index b) const {
        if (words_ == 1)
            return by_word_.at(bits(a)[0] & bits(b)[0]);
        std::vector<std::uint64_t> key(words_);
        const auto* x = bits(a);
        const auto* y = bits(b);
        for (std::size_t w = 0; w < words_; ++w)
            key[w] = x[w] & y[w];
        return by_points_.at(key);
    }

    // A + B = (A° ∩ B°)° for the bilinear annihilator °.
    Index join(Index a, Index b) const { return dual_[meet(dual_[a], dual_[b])]; }

    // Annihilator under the standard bilinear pairing.
    Index dual(Index a) const { return dual_[a]; }

    std::vector<std::size_t> points_of(Index s) const {
        std::vector<std::size_t> out;
        for (std::size_t pt = 0; pt < points_.size(); ++pt)
            if (point_in(pt, s))
                out.push_back(pt);
        return out;
    }

    std::vector<Index> of_dimension(std::size_t k) const {
        std::vector<Index> out;
        for (Index i = 0; i < size(); ++i)
            if (subspaces_[i].dim() == k)
                out.push_back(i);
        return out;
    }

private:
    struct WordsHash {
        std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
            std::uint64_t h = 1469598103934665603ull;
            for (auto w : v) {
                h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            }
            return static_cast<std::size_t>(h);
        }
    };

    const std::uint64_t* bits(Index s) const { return pointsets_.data() + s * words_; }

    std::uint32_t inv_mod(std::uint32_t a) const { return detail::pow_mod(a, p_ - 2, p_); }

    // Base-p code of the normalized representative; 0 for the zero vector.
    std::uint64_t normalized_code(std::vector<std::uint32_t>& r) const {
        std::size_t lead = 0;
        while (lead < n_ && r[lead] == 0)
            ++lead;
        if (lead == n_)
            return 0;
        std::uint64_t s = inv_mod(r[lead]);
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < n_; ++i)
            code = code * p_ + (r[i] * s % p_);
        return code;
    }

    void build_points() {
        std::uint64_t total = vector_count(p_, n_);
        point_of_code_.assign(total, 0);
        std::vector<std::uint32_t> digits(n_, 0);
        for (std::uint64_t code = 0; code < total; ++code) {
            std::size_t lead = 0;
            while (lead < n_ && digits[lead] == 0)
                ++lead;
            if (lead < n_ && digits[lead] == 1) {
                point_of_code_[code] = points_.size();
                Vector v(field_, n_);
                for (std::size_t i = 0; i < n_; ++i)
                    v[i] = Scalar::residue(field_, digits[i]);
                points_.push_back(std::move(v));
            }
            for (std::size_t i = n_; i-- > 0;) {
                if (++digits[i] < p_)
                    break;
                digits[i] = 0;
            }
        }
        words_ = (points_.size() + 63) / 64;
    }

    // Every reduced echelon pattern: choose pivot columns, then fill the free
    // entries (right of the row's pivot, outside pivot columns) in all ways.
    void build_subspaces() {
        for (std::size_t k = 0; k <= n_; ++k) {
            std::vector<std::size_t> pivots(k);
            for (std::size_t i = 0; i < k; ++i)
                pivots[i] = i;
            for (;;) {
                emit_pattern(pivots);
                // next combination
                std::size_t i = k;
                while (i > 0 && pivots[i - 1] == n_ - k + i - 1)
                    --i;
                if (i == 0)
                    break;
                ++pivots[i - 1];
                for (std::size_t j = i; j < k; ++j)
                    pivots[j] = pivots[j - 1] + 1;
            }
        }
        std::sort(subspaces_.begin(), subspaces_.end());
    }

    void emit_pattern(const std::vector<std::size_t>& pivots) {
        const std::size_t k = pivots.size();
        std::vector<bool> is_pivot(n_, false);
        for (auto c : pivots)
            is_pivot[c] = true;
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = pivots[r] + 1; c < n_; ++c)
                if (!is_pivot[c])
                    free.emplace_back(r, c);
        std::vector<std::uint32_t> digits(free.size(), 0);
        for (;;) {
            std::vector<Vector> rows;
            for (std::size_t r = 0; r < k; ++r) {
                Vector v(field_, n_);
                v[pivots[r]] = Scalar::one(field_);
                rows.push_back(std::move(v));
            }
            for (std::size_t f = 0; f < free.size(); ++f)
                rows[free[f].first][free[f].second] = Scalar::residue(field_, digits[f]);
            subspaces_.push_back(Subspace::span(field_, n_, std::move(rows)));
            std::size_t i = free.size();
            while (i > 0) {
                if (++digits[i - 1] < p_)
                    break;
                digits[i - 1] = 0;
                --i;
            }
            if (i == 0)
                break;
        }
    }

    void build_pointsets() {
        pointsets_.assign(subspaces_.size() * words_, 0);
        for (Index s = 0; s < subspaces_.size(); ++s) {
            const auto& basis = subspaces_[s].basis();
            const std::size_t k = basis.size();
            std::vector<std::vector<std::uint32_t>> rows(k, std::vector<std::uint32_t>(n_));
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < n_; ++c)
                    rows[r][c] = basis[r][c].residue();
            std::vector<std::uint32_t> coeff(k, 0);
            std::uint64_t* target = pointsets_.data() + s * words_;
            for (;;) {
                std::size_t i = k;
                while (i > 0) {
                    if (++coeff[i - 1] < p_)
                        break;
                    coeff[i - 1] = 0;
                    --i;
                }
                if (i == 0)
                    break;
                std::vector<std::uint32_t> v(n_, 0);
                for (std::size_t r = 0; r < k; ++r)
                    if (coeff[r])
                        for (std::size_t c = 0; c < n_; ++c)
                            v[c] = static_cast<std::uint32_t>((v[c] + std::uint64_t{coeff[r]} * rows[r][c]) % p_);
                std::size_t pt = point_of_code_[normalized_code(v)];
                target[pt / 64] |= std::uint64_t{1} << (pt % 64);
            }
            by_points_.emplace(std::vector<std::uint64_t>(target, target + words_), s);
            if (words_ == 1)
                by_word_.emplace(target[0], s);
        }
        point_subspace_.resize(points_.size());
        for (std::size_t pt = 0; pt < points_.size(); ++pt)
            point_subspace_[pt] = index_of(Subspace::line(points_[pt]));
    }

    void build_duals() {
        dual_.resize(subspaces_.size());
        for (Index s = 0; s < subspaces_.size(); ++s) {
            const auto& basis = subspaces_[s].basis();
            Matrix w(field_, n_, std::max<std::size_t>(basis.size(), 1));
            for (std::size_t c = 0; c < basis.size(); ++c)
                for (std::size_t r = 0; r < n_; ++r)
                    w(r, c) = basis[c][r];
            dual_[s] = index_of(left_kernel(w));
        }
    }

    FieldDescriptor field_;
    std::size_t n_;
    std::uint32_t p_;
    std::size_t words_ = 0;
    std::vector<Vector> points_;
    std::vector<std::size_t> point_of_code_;
    std::vector<Subspace> subspaces_;
    std::vector<std::uint64_t> pointsets_;
    std::unordered_map<std::vector<std::uint64_t>, Index, WordsHash> by_points_;
    std::unordered_map<std::uint64_t, Index> by_word_;
    std::vector<Index> point_subspace_;
    std::vector<Index> dual_;
};

} // namespace orthoform
