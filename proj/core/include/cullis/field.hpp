#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "cullis/error.hpp"

namespace cullis {

class Scalar;

__extension__ using Int128 = __int128;

/// Ground field: GF(p) for a prime p < 2^31, or the rationals.
///
/// Fields are tiny value types; two scalars may be combined only when their
/// fields compare equal.
class Field {
public:
    static Field prime(std::uint32_t p);
    static Field rationals() noexcept { return Field{0}; }

    /// Accepts `GF(p)` or `Q`.
    static Field parse(std::string_view text);

    bool is_rational() const noexcept { return modulus_ == 0; }
    bool is_prime() const noexcept { return modulus_ != 0; }
    /// Zero for the rationals.
    std::uint32_t modulus() const noexcept { return modulus_; }

    /// |F| > bound, i.e. the field is infinite or has more than `bound` elements.
    bool larger_than(std::uint64_t bound) const noexcept {
        return is_rational() || modulus_ > bound;
    }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t value) const;
    Scalar from_fraction(const mpq_class& value) const;

    /// Decimal integer (reduced mod p) or, over Q, `a/b`.
    Scalar parse_scalar(std::string_view token) const;

    std::string name() const;

    friend bool operator==(Field a, Field b) noexcept { return a.modulus_ == b.modulus_; }

private:
    friend class Scalar;
    explicit Field(std::uint32_t modulus) noexcept : modulus_(modulus) {}
    static Field prime_unchecked(std::uint32_t p) noexcept { return Field{p}; }

    std::uint32_t modulus_;
};

std::ostream& operator<<(std::ostream& os, Field f);

/// Exact field element in canonical form: a residue in [0, p) or a reduced
/// fraction with positive denominator. Equality is representational.
///
/// Rationals whose numerator and denominator fit in 64 bits are stored inline
/// and combined with 128-bit intermediates; anything larger lives in GMP. The
/// split is canonical (a value is inline iff it fits), so equal values always
/// share a representation.
class Scalar {
public:
    struct Residue {
        std::uint32_t value;
        std::uint32_t modulus;
    };

    explicit Scalar(Residue r) noexcept : rep_(r) {}
    explicit Scalar(mpq_class q);

    Field field() const noexcept;

    bool is_zero() const noexcept {
        if (auto r = std::get_if<Residue>(&rep_)) return r->value == 0;
        if (auto q = std::get_if<Small>(&rep_)) return q->num == 0;
        return false;
    }
    bool is_one() const noexcept {
        if (auto r = std::get_if<Residue>(&rep_)) return r->value == 1;
        if (auto q = std::get_if<Small>(&rep_)) return q->num == 1 && q->den == 1;
        return false;
    }

    /// Throws unless the scalar lives in GF(p).
    std::uint32_t residue() const;
    /// Throws unless the scalar lives in Q.
    mpq_class rational() const;

    Scalar inv() const;
    std::string to_string() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a);

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b) noexcept;

private:
    // Reduced, den > 0, num != INT64_MIN.
    struct Small {
        std::int64_t num;
        std::int64_t den;
    };

    std::variant<Residue, Small, mpq_class> rep_;

    explicit Scalar(Small q) noexcept : rep_(q) {}
    friend class Field;

    static Scalar from_wide(Int128 num, Int128 den);
    static Scalar from_canonical(mpq_class q);

    enum class Op { Add, Sub, Mul };
    static Scalar rational_op(const Scalar& a, const Scalar& b, Op op);

    [[noreturn]] static void mixed(const Scalar& a, const Scalar& b);
    static std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Image of +1 or -1 in `f`.
Scalar signed_one(Field f, int sign);

// ---------------------------------------------------------------------------
// Inline fast paths for GF(p); rational arithmetic lives in field.cpp.

inline Scalar operator+(const Scalar& a, const Scalar& b) {
    auto ra = std::get_if<Scalar::Residue>(&a.rep_);
    auto rb = std::get_if<Scalar::Residue>(&b.rep_);
    if (ra && rb && ra->modulus == rb->modulus) {
        std::uint32_t s = ra->value + rb->value;  // < 2^32 since p < 2^31
        if (s >= ra->modulus) s -= ra->modulus;
        return Scalar(Scalar::Residue{s, ra->modulus});
    }
    return Scalar::rational_op(a, b, Scalar::Op::Add);
}

inline Scalar operator-(const Scalar& a, const Scalar& b) {
    auto ra = std::get_if<Scalar::Residue>(&a.rep_);
    auto rb = std::get_if<Scalar::Residue>(&b.rep_);
    if (ra && rb && ra->modulus == rb->modulus) {
        std::uint32_t s = ra->value >= rb->value ? ra->value - rb->value
                                                 : ra->value + (ra->modulus - rb->value);
        return Scalar(Scalar::Residue{s, ra->modulus});
    }
    return Scalar::rational_op(a, b, Scalar::Op::Sub);
}

inline Scalar operator*(const Scalar& a, const Scalar& b) {
    auto ra = std::get_if<Scalar::Residue>(&a.rep_);
    auto rb = std::get_if<Scalar::Residue>(&b.rep_);
    if (ra && rb && ra->modulus == rb->modulus) {
        auto prod = static_cast<std::uint64_t>(ra->value) * rb->value;
        return Scalar(Scalar::Residue{static_cast<std::uint32_t>(prod % ra->modulus), ra->modulus});
    }
    return Scalar::rational_op(a, b, Scalar::Op::Mul);
}

inline Scalar operator-(const Scalar& a) {
    if (auto r = std::get_if<Scalar::Residue>(&a.rep_)) {
        return Scalar(Scalar::Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
    }
    if (auto q = std::get_if<Scalar::Small>(&a.rep_)) return Scalar(Scalar::Small{-q->num, q->den});
    return Scalar::from_canonical(-std::get<mpq_class>(a.rep_));
}

inline bool operator==(const Scalar& a, const Scalar& b) noexcept {
    if (a.rep_.index() != b.rep_.index()) return false;
    if (auto ra = std::get_if<Scalar::Residue>(&a.rep_)) {
        auto rb = std::get_if<Scalar::Residue>(&b.rep_);
        return ra->modulus == rb->modulus && ra->value == rb->value;
    }
    if (auto qa = std::get_if<Scalar::Small>(&a.rep_)) {
        auto qb = std::get_if<Scalar::Small>(&b.rep_);
        return qa->num == qb->num && qa->den == qb->den;
    }
    return std::get<mpq_class>(a.rep_) == std::get<mpq_class>(b.rep_);
}

}  // namespace cullis
