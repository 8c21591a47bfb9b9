#pragma once

// Seeded generators for sampled-mode checks and property tests. A Sampler is
// the only source of randomness in the library, so a fixed seed fixes every
// sampled verdict.

#include "orthoform/linalg.hpp"

#include <cstdint>
#include <random>

namespace orthoform {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    // Small-height values: each rational component a/b with |a| <= 4, 1 <= b <= 3.
    Scalar scalar(const FieldDescriptor& f, bool nonzero = false) {
        for (;;) {
            Scalar s = Scalar::zero(f);
            if (f.is_prime_field()) {
                s = Scalar::residue(f, integer(0, static_cast<long>(f.modulus) - 1));
            } else {
                std::array<mpq_class, 4> c{};
                for (std::size_t k = 0; k < f.components(); ++k) {
                    c[k] = mpq_class(integer(-4, 4), integer(1, 3));
                    c[k].canonicalize();
                }
                s = Scalar::from_components(f, c);
            }
            if (!nonzero || !s.is_zero())
                return s;
        }
    }

    Vector vector(const FieldDescriptor& f, std::size_t n, bool nonzero = false) {
        for (;;) {
            Vector v(f, n);
            for (std::size_t i = 0; i < n; ++i)
                v[i] = scalar(f);
            if (!nonzero || !v.is_zero())
                return v;
        }
    }

    // Subspace of exactly dimension k.
    Subspace subspace(const FieldDescriptor& f, std::size_t n, std::size_t k) {
        for (;;) {
            std::vector<Vector> rows;
            for (std::size_t i = 0; i < k; ++i)
                rows.push_back(vector(f, n));
            Subspace s = Subspace::span(f, n, std::move(rows));
            if (s.dim() == k)
                return s;
        }
    }

    // Subspace of uniformly random dimension 0..n.
    Subspace subspace(const FieldDescriptor& f, std::size_t n) { return subspace(f, n, index(n + 1)); }

    // Random subspace contained in s.
    Subspace subspace_of(const Subspace& s) {
        std::size_t k = index(s.dim() + 1);
        std::vector<Vector> rows;
        for (std::size_t i = 0; i < k; ++i) {
            Vector v(s.field(), s.ambient());
            for (const auto& b : s.basis())
                v = v + scalar(s.field()) * b;
            rows.push_back(std::move(v));
        }
        return Subspace::span(s.field(), s.ambient(), std::move(rows));
    }

    std::mt19937_64& engine() noexcept { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace orthoform
