#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cullis/combinatorics.hpp"
#include "cullis/matrix.hpp"

namespace cullis {

/// Outcome of a verification run. A failing report always carries a witness.
struct VerificationReport {
    enum class Mode { Exhaustive, Sampled };

    Mode mode = Mode::Exhaustive;
    std::uint64_t samples = 0;  ///< sampled mode: requested draws
    std::uint64_t seed = 0;     ///< sampled mode: seed of the draw stream
    bool passed = true;
    std::uint64_t evaluations = 0;
    /// Sampled mode: upper bound on the probability that a non-identity passes.
    std::optional<double> failure_bound;
    std::optional<RectMatrix> witness;
    std::optional<RowSubset> witness_subset;
    std::string detail;

    explicit operator bool() const noexcept { return passed; }
};

/// Multi-line human readable rendering, stable for a given report.
std::string describe(const VerificationReport& report);

}  // namespace cullis
