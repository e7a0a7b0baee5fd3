#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "cullis/matrix.hpp"

namespace cullis {

/// Seeded generator with a splittable derivation scheme: every named stream is
/// seeded by splitmix64(seed ^ fnv1a64(label)), so streams for different labels
/// never depend on how many draws other streams made.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    static Rng derive(std::uint64_t seed, std::string_view label);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound), by rejection so the result is portable.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t fnv1a64(std::string_view text) noexcept;

/// GF(p): uniform residue. Q: a/b with a uniform in [-9, 9] and b in [1, 4].
Scalar random_scalar(Rng& rng, Field f);
Scalar random_nonzero_scalar(Rng& rng, Field f);
/// Largest probability random_scalar assigns to a single field element.
double max_atom_probability(Field f);

RectMatrix random_matrix(Rng& rng, Field f, int rows, int cols);
RectMatrix random_invertible(Rng& rng, Field f, int n);

}  // namespace cullis
