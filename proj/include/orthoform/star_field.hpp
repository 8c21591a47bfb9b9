#pragma once

// Exact arithmetic in the supported *-fields:
//
//   rational             Q        identity involution
//   gaussian_rational    Q(i)     conjugation  (x + yi)* = x - yi
//   rational_quaternion  H(Q)     conjugation  (a + bi + cj + dk)* = a - bi - cj - dk
//   prime_field          GF(p)    identity involution, p an odd prime
//
// Every Scalar carries its FieldDescriptor; mixing fields throws MismatchError.
// Values are kept canonical (reduced fractions, least residues) so operator==
// is structural.

#include "orthoform/errors.hpp"

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace orthoform {

enum class FieldKind : std::uint8_t { rational, gaussian_rational, rational_quaternion, prime_field };
enum class Involution : std::uint8_t { identity, conjugation };

inline bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

struct FieldDescriptor {
    FieldKind kind = FieldKind::rational;
    std::uint32_t modulus = 0;
    Involution involution = Involution::identity;

    // Validating constructor. Characteristic 2 and mismatched involutions are
    // rejected here so nothing downstream has to re-check.
    static FieldDescriptor make(FieldKind kind, std::uint32_t modulus, Involution involution) {
        switch (kind) {
        case FieldKind::prime_field:
            if (modulus < 3 || !is_prime(modulus))
                throw DomainError("modulus must be an odd prime, got " + std::to_string(modulus));
            if (modulus >= (1u << 31))
                throw DomainError("modulus too large");
            if (involution != Involution::identity)
                throw DomainError("prime fields carry the identity involution");
            break;
        case FieldKind::rational:
            if (modulus != 0)
                throw DomainError("modulus is only meaningful for prime fields");
            if (involution != Involution::identity)
                throw DomainError("Q carries the identity involution");
            break;
        case FieldKind::gaussian_rational:
        case FieldKind::rational_quaternion:
            if (modulus != 0)
                throw DomainError("modulus is only meaningful for prime fields");
            if (involution != Involution::conjugation)
                throw DomainError("Q(i) and H(Q) carry the conjugation involution");
            break;
        }
        return FieldDescriptor{kind, modulus, involution};
    }

    static FieldDescriptor rational() { return make(FieldKind::rational, 0, Involution::identity); }
    static FieldDescriptor gaussian() {
        return make(FieldKind::gaussian_rational, 0, Involution::conjugation);
    }
    static FieldDescriptor quaternion() {
        return make(FieldKind::rational_quaternion, 0, Involution::conjugation);
    }
    static FieldDescriptor prime(std::uint32_t p) {
        return make(FieldKind::prime_field, p, Involution::identity);
    }

    bool is_prime_field() const noexcept { return kind == FieldKind::prime_field; }
    bool is_commutative() const noexcept { return kind != FieldKind::rational_quaternion; }

    // Number of rational components (1, 2 or 4); 0 for prime fields.
    std::size_t components() const noexcept {
        switch (kind) {
        case FieldKind::rational: return 1;
        case FieldKind::gaussian_rational: return 2;
        case FieldKind::rational_quaternion: return 4;
        case FieldKind::prime_field: return 0;
        }
        return 0;
    }

    std::string name() const {
        switch (kind) {
        case FieldKind::rational: return "Q";
        case FieldKind::gaussian_rational: return "Q(i)";
        case FieldKind::rational_quaternion: return "H(Q)";
        case FieldKind::prime_field: return "GF(" + std::to_string(modulus) + ")";
        }
        return "?";
    }

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

namespace detail {

template <std::size_t N>
using Components = std::array<mpq_class, N>;

template <std::size_t N>
Components<N> mul(const Components<N>& a, const Components<N>& b) {
    if constexpr (N == 1) {
        return {a[0] * b[0]};
    } else if constexpr (N == 2) {
        return {a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]};
    } else {
        // i^2 = j^2 = k^2 = -1, ij = -ji = k
        return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
                a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
                a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
                a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
    }
}

template <std::size_t N>
mpq_class norm(const Components<N>& a) {
    mpq_class n = 0;
    for (const auto& c : a)
        n += c * c;
    return n;
}

inline std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1)
            result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

} // namespace detail

class Scalar {
public:
    // The rational zero. Mostly useful as a placeholder before assignment.
    Scalar() : field_(FieldDescriptor::rational()), value_(detail::Components<1>{}) {}

    static Scalar zero(const FieldDescriptor& f) {
        switch (f.kind) {
        case FieldKind::rational: return Scalar(f, detail::Components<1>{});
        case FieldKind::gaussian_rational: return Scalar(f, detail::Components<2>{});
        case FieldKind::rational_quaternion: return Scalar(f, detail::Components<4>{});
        case FieldKind::prime_field: return Scalar(f, std::uint32_t{0});
        }
        return Scalar();
    }

    static Scalar integer(const FieldDescriptor& f, long v) {
        if (f.is_prime_field())
            return residue(f, v);
        return rational(f, mpq_class(v));
    }

    static Scalar one(const FieldDescriptor& f) { return integer(f, 1); }

    // Embeds a rational number as the real part. Prime fields reduce num/den.
    static Scalar rational(const FieldDescriptor& f, const mpq_class& v) {
        if (f.is_prime_field()) {
            mpz_class m(f.modulus);
            mpz_class num = v.get_num() % m;
            mpz_class den = v.get_den() % m;
            if (den == 0)
                throw DivisionByZero();
            return residue(f, num.get_si()) * residue(f, den.get_si()).inverse();
        }
        Scalar s = zero(f);
        s.set_component(0, v);
        return s;
    }

    static Scalar residue(const FieldDescriptor& f, std::int64_t v) {
        if (!f.is_prime_field())
            throw MismatchError("residue() requires a prime field");
        std::int64_t p = f.modulus;
        std::int64_t r = v % p;
        if (r < 0)
            r += p;
        return Scalar(f, static_cast<std::uint32_t>(r));
    }

    // Builds a value from rational components (real, i, j, k). Components
    // beyond the field's count must be zero.
    static Scalar from_components(const FieldDescriptor& f, const std::array<mpq_class, 4>& c) {
        if (f.is_prime_field()) {
            for (std::size_t k = 1; k < 4; ++k)
                if (c[k] != 0)
                    throw DomainError("prime field values have no imaginary part");
            return rational(f, c[0]);
        }
        for (std::size_t k = f.components(); k < 4; ++k)
            if (c[k] != 0)
                throw DomainError("component out of range for " + f.name());
        Scalar s = zero(f);
        for (std::size_t k = 0; k < f.components(); ++k)
            s.set_component(k, c[k]);
        return s;
    }

    // Imaginary unit: which = 1 (i), 2 (j), 3 (k).
    static Scalar unit(const FieldDescriptor& f, int which) {
        if (which < 1 || static_cast<std::size_t>(which) >= f.components())
            throw DomainError("no such imaginary unit in " + f.name());
        Scalar s = zero(f);
        s.set_component(static_cast<std::size_t>(which), mpq_class(1));
        return s;
    }

    const FieldDescriptor& field() const noexcept { return field_; }

    mpq_class component(std::size_t k) const {
        return std::visit(
            [k](const auto& v) -> mpq_class {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, std::uint32_t>) {
                    return k == 0 ? mpq_class(v) : mpq_class(0);
                } else {
                    return k < v.size() ? v[k] : mpq_class(0);
                }
            },
            value_);
    }

    std::uint32_t residue() const {
        if (!field_.is_prime_field())
            throw MismatchError("residue() requires a prime field");
        return std::get<std::uint32_t>(value_);
    }

    bool is_zero() const {
        return std::visit(
            [](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, std::uint32_t>) {
                    return v == 0;
                } else {
                    for (const auto& c : v)
                        if (c != 0)
                            return false;
                    return true;
                }
            },
            value_);
    }

    bool is_one() const { return *this == one(field_); }

    Scalar operator-() const { return zero(field_) - *this; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return a.combine(b, Op::add); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a.combine(b, Op::sub); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) { return a.combine(b, Op::mul); }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    // Two-sided inverse: a * a.inverse() == a.inverse() * a == 1.
    Scalar inverse() const {
        if (is_zero())
            throw DivisionByZero();
        return std::visit(
            [this](const auto& v) -> Scalar {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, std::uint32_t>) {
                    return Scalar(field_, detail::pow_mod(v, field_.modulus - 2, field_.modulus));
                } else {
                    // q^-1 = q* / (q q*)
                    mpq_class n = detail::norm(v);
                    T r = v;
                    r[0] /= n;
                    for (std::size_t k = 1; k < r.size(); ++k)
                        r[k] = -r[k] / n;
                    return Scalar(field_, std::move(r));
                }
            },
            value_);
    }

    Scalar star() const {
        if (field_.involution == Involution::identity)
            return *this;
        return std::visit(
            [this](const auto& v) -> Scalar {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, std::uint32_t>) {
                    return *this;
                } else {
                    T r = v;
                    for (std::size_t k = 1; k < r.size(); ++k)
                        r[k] = -r[k];
                    return Scalar(field_, std::move(r));
                }
            },
            value_);
    }

    bool is_symmetric() const { return *this == star(); }

    // q q* as a rational. Only defined for the rational cores.
    mpq_class norm() const {
        if (field_.is_prime_field())
            throw MismatchError("norm() is defined for the rational cores only");
        mpq_class n = 0;
        for (std::size_t k = 0; k < field_.components(); ++k) {
            mpq_class c = component(k);
            n += c * c;
        }
        return n;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

    // Total order used for canonical sorting: residues numerically, rational
    // cores lexicographically by component.
    friend int compare(const Scalar& a, const Scalar& b) {
        a.require_same(b);
        if (a.field_.is_prime_field()) {
            auto x = a.residue(), y = b.residue();
            return x < y ? -1 : (x > y ? 1 : 0);
        }
        for (std::size_t k = 0; k < a.field_.components(); ++k) {
            int c = cmp(a.component(k), b.component(k));
            if (c != 0)
                return c < 0 ? -1 : 1;
        }
        return 0;
    }

    // Canonical text. Zero components are omitted except for the lone "0";
    // unit coefficients print as a bare unit ("i", "-k").
    std::string to_string() const {
        if (field_.is_prime_field())
            return std::to_string(residue());
        static constexpr const char* units[] = {"", "i", "j", "k"};
        std::string out;
        for (std::size_t k = 0; k < field_.components(); ++k) {
            mpq_class c = component(k);
            if (c == 0)
                continue;
            bool negative = c < 0;
            mpq_class magnitude = negative ? mpq_class(-c) : c;
            if (negative)
                out += '-';
            else if (!out.empty())
                out += '+';
            if (k == 0 || magnitude != 1)
                out += magnitude.get_str();
            out += units[k];
        }
        return out.empty() ? "0" : out;
    }

private:
    using Value = std::variant<std::uint32_t, detail::Components<1>, detail::Components<2>,
                               detail::Components<4>>;

    enum class Op { add, sub, mul };

    Scalar(const FieldDescriptor& f, Value v) : field_(f), value_(std::move(v)) {}

    void require_same(const Scalar& b) const {
        if (!(field_ == b.field_))
            throw MismatchError("scalar field mismatch: " + field_.name() + " vs " +
                                b.field_.name());
    }

    void set_component(std::size_t k, const mpq_class& c) {
        std::visit(
            [&](auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (!std::is_same_v<T, std::uint32_t>) {
                    v[k] = c;
                    v[k].canonicalize();
                }
            },
            value_);
    }

    Scalar combine(const Scalar& b, Op op) const {
        require_same(b);
        return std::visit(
            [&](const auto& x) -> Scalar {
                using T = std::decay_t<decltype(x)>;
                const T& y = std::get<T>(b.value_);
                if constexpr (std::is_same_v<T, std::uint32_t>) {
                    std::uint64_t p = field_.modulus;
                    std::uint64_t r = 0;
                    switch (op) {
                    case Op::add: r = (std::uint64_t{x} + y) % p; break;
                    case Op::sub: r = (std::uint64_t{x} + p - y) % p; break;
                    case Op::mul: r = std::uint64_t{x} * y % p; break;
                    }
                    return Scalar(field_, static_cast<std::uint32_t>(r));
                } else {
                    if (op == Op::mul)
                        return Scalar(field_, detail::mul(x, y));
                    T r;
                    for (std::size_t k = 0; k < r.size(); ++k)
                        r[k] = op == Op::add ? mpq_class(x[k] + y[k]) : mpq_class(x[k] - y[k]);
                    return Scalar(field_, std::move(r));
                }
            },
            value_);
    }

    FieldDescriptor field_;
    Value value_;
};

// Exact square root of a nonnegative rational, if it has one.
inline std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (q < 0)
        return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    mpq_class r(rn, rd);
    r.canonicalize();
    return r;
}

namespace detail {

// Strips a UTF-8 minus sign (U+2212) down to ASCII '-'.
inline std::string normalize_minus(std::string_view text) {
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out += '-';
            i += 2;
        } else {
            out += text[i];
        }
    }
    return out;
}

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

} // namespace detail

// Parses a scalar literal:
//   rational    [-]a | [-]a/b
//   gaussian    <rat>[(+|-)<rat>i]
//   quaternion  <rat>[(+|-)<rat>i][(+|-)<rat>j][(+|-)<rat>k]
//   prime       [-]decimal integer, reduced mod p
// Imaginary terms may omit a unit coefficient ("i", "-k") and a zero real part
// may be omitted ("1/2j"), so the canonical printer's output always parses back.
inline Scalar parse_scalar(std::string_view raw, const FieldDescriptor& field) {
    std::string text = detail::normalize_minus(raw);
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("bad " + field.name() + " literal '" + text + "': " + why);
    };
    if (text.empty())
        throw fail("empty");

    if (field.is_prime_field()) {
        std::size_t pos = 0;
        bool negative = false;
        if (text[0] == '-' || text[0] == '+') {
            negative = text[0] == '-';
            pos = 1;
        }
        if (pos == text.size())
            throw fail("missing digits");
        mpz_class value = 0;
        for (; pos < text.size(); ++pos) {
            if (!detail::is_digit(text[pos]))
                throw fail("unexpected character");
            value = value * 10 + (text[pos] - '0');
        }
        value %= field.modulus;
        long r = value.get_si();
        return Scalar::residue(field, negative ? -r : r);
    }

    std::array<mpq_class, 4> comps{};
    std::array<bool, 4> seen{};
    int last_unit = -1;
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        bool negative = false;
        if (text[pos] == '+' || text[pos] == '-') {
            negative = text[pos] == '-';
            ++pos;
        } else if (!first) {
            throw fail("expected '+' or '-' between terms");
        }
        std::size_t start = pos;
        while (pos < text.size() && detail::is_digit(text[pos]))
            ++pos;
        bool has_number = pos > start;
        mpz_class num = 1, den = 1;
        if (has_number) {
            num = mpz_class(text.substr(start, pos - start));
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                std::size_t dstart = pos;
                while (pos < text.size() && detail::is_digit(text[pos]))
                    ++pos;
                if (pos == dstart)
                    throw fail("missing denominator");
                den = mpz_class(text.substr(dstart, pos - dstart));
                if (den == 0)
                    throw fail("zero denominator");
            }
        }
        int unit = 0;
        if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
            unit = text[pos] - 'i' + 1;
            ++pos;
        }
        if (!has_number && unit == 0)
            throw fail("missing number");
        if (static_cast<std::size_t>(unit) >= field.components())
            throw fail("unit not available in this field");
        if (unit <= last_unit || seen[static_cast<std::size_t>(unit)])
            throw fail("components out of order");
        mpq_class value(num, den);
        value.canonicalize();
        comps[static_cast<std::size_t>(unit)] = negative ? mpq_class(-value) : value;
        seen[static_cast<std::size_t>(unit)] = true;
        last_unit = unit;
        first = false;
    }
    return Scalar::from_components(field, comps);
}

} // namespace orthoform
