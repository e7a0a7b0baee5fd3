#include "cullis/random.hpp"

#include "cullis/determinant.hpp"

namespace cullis {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view text) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Rng Rng::derive(std::uint64_t seed, std::string_view label) { return Rng(splitmix64(seed ^ fnv1a64(label))); }

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Scalar random_scalar(Rng& rng, Field f) {
    if (f.is_prime()) return f.from_int(static_cast<std::int64_t>(rng.below(f.modulus())));
    const auto num = rng.between(-9, 9);
    const auto den = rng.between(1, 4);
    return Scalar(mpq_class(static_cast<long>(num), static_cast<unsigned long>(den)));
}

Scalar random_nonzero_scalar(Rng& rng, Field f) {
    while (true) {
        Scalar s = random_scalar(rng, f);
        if (!s.is_zero()) return s;
    }
}

double max_atom_probability(Field f) {
    // Over Q the most likely value is 0 (numerator 0, any denominator).
    return f.is_prime() ? 1.0 / f.modulus() : 1.0 / 19.0;
}

RectMatrix random_matrix(Rng& rng, Field f, int rows, int cols) {
    RectMatrix m(f, rows, cols);
    for (std::size_t t = 0; t < static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols); ++t) {
        m.raw(t) = random_scalar(rng, f);
    }
    return m;
}

RectMatrix random_invertible(Rng& rng, Field f, int n) {
    while (true) {
        RectMatrix m = random_matrix(rng, f, n, n);
        if (!det_square(m).is_zero()) return m;
    }
}

}  // namespace cullis
