#include "cullis/field.hpp"

#include <charconv>
#include <climits>
#include <cstdint>
#include <numeric>
#include <limits>
#include <tuple>
#include <utility>

namespace cullis {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::MixedFields: return "MixedFields";
        case Errc::DuplicateAbscissa: return "DuplicateAbscissa";
        case Errc::FieldTooSmall: return "FieldTooSmall";
        case Errc::InsufficientPoints: return "InsufficientPoints";
        case Errc::NotPrime: return "NotPrime";
        case Errc::BadDimensions: return "BadDimensions";
        case Errc::BadShape: return "BadShape";
        case Errc::BadColumn: return "BadColumn";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::EmptyResult: return "EmptyResult";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::ConditionViolated: return "ConditionViolated";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::NotTwoSided: return "NotTwoSided";
        case Errc::ZeroOperator: return "ZeroOperator";
        case Errc::NotAPreserver: return "NotAPreserver";
        case Errc::HypothesisViolated: return "HypothesisViolated";
        case Errc::VerificationFailed: return "VerificationFailed";
        case Errc::Parse: return "Parse";
    }
    return "Unknown";
}

namespace {

bool is_prime_trial(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool is_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (p > static_cast<std::uint32_t>(std::numeric_limits<std::int32_t>::max())) {
        throw Error(Errc::NotPrime, "modulus must be below 2^31, got " + std::to_string(p));
    }
    if (!is_prime_trial(p)) {
        throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    }
    return Field{p};
}

Field Field::parse(std::string_view text) {
    text = trim(text);
    if (text == "Q") return rationals();
    if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
        auto digits = text.substr(3, text.size() - 4);
        std::uint32_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc{} && ptr == digits.data() + digits.size()) return prime(p);
    }
    throw Error(Errc::Parse, "unrecognised field '" + std::string(text) + "' (expected GF(p) or Q)");
}

Scalar Field::zero() const { return from_int(0); }

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t value) const {
    if (is_rational()) return Scalar::from_wide(value, 1);
    auto r = value % static_cast<std::int64_t>(modulus_);
    if (r < 0) r += modulus_;
    return Scalar(Scalar::Residue{static_cast<std::uint32_t>(r), modulus_});
}

Scalar Field::from_fraction(const mpq_class& value) const {
    if (is_rational()) return Scalar(value);
    mpq_class q = value;
    q.canonicalize();
    mpz_class p = modulus_;
    mpz_class num = q.get_num() % p;
    mpz_class den = q.get_den() % p;
    if (den == 0) throw Error(Errc::DivisionByZero, "denominator vanishes in " + name());
    if (num < 0) num += p;
    auto n = Scalar(Scalar::Residue{static_cast<std::uint32_t>(num.get_ui()), modulus_});
    auto d = Scalar(Scalar::Residue{static_cast<std::uint32_t>(den.get_ui()), modulus_});
    return n / d;
}

Scalar Field::parse_scalar(std::string_view token) const {
    token = trim(token);
    auto slash = token.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_token(token)) {
            throw Error(Errc::Parse, "bad scalar token '" + std::string(token) + "'");
        }
        std::string digits(token.front() == '+' ? token.substr(1) : token);
        return from_fraction(mpq_class(mpz_class(digits)));
    }
    if (is_prime()) {
        throw Error(Errc::Parse, "fraction '" + std::string(token) + "' not allowed over " + name());
    }
    auto num = token.substr(0, slash);
    auto den = token.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den) || den.front() == '-' || den.front() == '+') {
        throw Error(Errc::Parse, "bad scalar token '" + std::string(token) + "'");
    }
    mpz_class d{std::string(den)};
    if (d == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + std::string(token) + "'");
    std::string n(num.front() == '+' ? num.substr(1) : num);
    return Scalar(mpq_class(mpz_class(n), d));
}

std::string Field::name() const {
    if (is_rational()) return "Q";
    return "GF(" + std::to_string(modulus_) + ")";
}

std::ostream& operator<<(std::ostream& os, Field f) { return os << f.name(); }

namespace {

__extension__ using u128 = unsigned __int128;

u128 magnitude(Int128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        if (a <= UINT64_MAX && b <= UINT64_MAX) return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
        a %= b;
        std::swap(a, b);
    }
    return a;
}

mpz_class to_mpz(Int128 v) {
    const u128 m = magnitude(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
    mpz_class out = (hi << 64) + lo;
    return v < 0 ? mpz_class(-out) : out;
}

constexpr Int128 kSmallMax = INT64_MAX;

}  // namespace

Scalar::Scalar(mpq_class q) : rep_(Residue{0, 0}) {
    q.canonicalize();
    *this = from_canonical(std::move(q));
}

Scalar Scalar::from_canonical(mpq_class q) {
    const auto& num = q.get_num();
    const auto& den = q.get_den();
    if (mpz_fits_slong_p(num.get_mpz_t()) && mpz_fits_slong_p(den.get_mpz_t()) && num != LONG_MIN) {
        return Scalar(Small{num.get_si(), den.get_si()});
    }
    Scalar out(Residue{0, 0});
    out.rep_ = std::move(q);
    return out;
}

Scalar Scalar::from_wide(Int128 num, Int128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const u128 g = gcd128(magnitude(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<Int128>(g);
        den /= static_cast<Int128>(g);
    }
    if (num <= kSmallMax && num >= -kSmallMax && den <= kSmallMax) {
        return Scalar(Small{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)});
    }
    return from_canonical(mpq_class(to_mpz(num), to_mpz(den)));
}

Scalar Scalar::rational_op(const Scalar& a, const Scalar& b, Op op) {
    if (a.rep_.index() == 0 || b.rep_.index() == 0) mixed(a, b);
    auto sa = std::get_if<Small>(&a.rep_);
    auto sb = std::get_if<Small>(&b.rep_);
    if (sa && sb) {
        const Int128 an = sa->num, ad = sa->den, bn = sb->num, bd = sb->den;
        switch (op) {
            case Op::Add:
                if (ad == 1 && bd == 1) return from_wide(an + bn, 1);
                return from_wide(an * bd + bn * ad, ad * bd);
            case Op::Sub:
                if (ad == 1 && bd == 1) return from_wide(an - bn, 1);
                return from_wide(an * bd - bn * ad, ad * bd);
            case Op::Mul:
                if (ad == 1 && bd == 1) return from_wide(an * bn, 1);
                return from_wide(an * bn, ad * bd);
        }
    }
    const mpq_class qa = a.rational();
    const mpq_class qb = b.rational();
    switch (op) {
        case Op::Add: return from_canonical(qa + qb);
        case Op::Sub: return from_canonical(qa - qb);
        case Op::Mul: break;
    }
    return from_canonical(qa * qb);
}

Field Scalar::field() const noexcept {
    if (auto r = std::get_if<Residue>(&rep_)) return Field::prime_unchecked(r->modulus);
    return Field::rationals();
}

std::uint32_t Scalar::residue() const {
    if (auto r = std::get_if<Residue>(&rep_)) return r->value;
    throw Error(Errc::MixedFields, "residue() requested from a rational scalar");
}

mpq_class Scalar::rational() const {
    if (auto q = std::get_if<Small>(&rep_)) return mpq_class(mpz_class(static_cast<long>(q->num)), mpz_class(static_cast<long>(q->den)));
    if (auto q = std::get_if<mpq_class>(&rep_)) return *q;
    throw Error(Errc::MixedFields, "rational() requested from a residue scalar");
}

std::uint32_t Scalar::inverse_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
        std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (auto r = std::get_if<Residue>(&rep_)) return Scalar(Residue{inverse_mod(r->value, r->modulus), r->modulus});
    if (auto q = std::get_if<Small>(&rep_)) return q->num < 0 ? Scalar(Small{-q->den, -q->num}) : Scalar(Small{q->den, q->num});
    return from_canonical(1 / std::get<mpq_class>(rep_));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (!(a.field() == b.field())) Scalar::mixed(a, b);
    return a * b.inv();
}

void Scalar::mixed(const Scalar& a, const Scalar& b) {
    throw Error(Errc::MixedFields, "cannot combine " + a.field().name() + " and " + b.field().name());
}

std::string Scalar::to_string() const {
    if (auto r = std::get_if<Residue>(&rep_)) return std::to_string(r->value);
    if (auto q = std::get_if<Small>(&rep_)) {
        if (q->den == 1) return std::to_string(q->num);
        return std::to_string(q->num) + "/" + std::to_string(q->den);
    }
    const auto& q = std::get<mpq_class>(rep_);
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar signed_one(Field f, int sign) { return sign >= 0 ? f.one() : -f.one(); }

}  // namespace cullis
