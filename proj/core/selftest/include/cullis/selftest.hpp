#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cullis/preserver.hpp"
#include "cullis/random.hpp"

namespace cullis::selftest {

/// Counts checks and keeps the first failure. Later failures are counted but
/// their details dropped, so reports stay short.
class Check {
public:
    /// Records one check; `describe` is only called on failure.
    bool that(bool ok, const std::function<std::string()>& describe);
    void fail(std::string detail) { that(false, [&] { return detail; }); }
    /// Informational line shown on passing cases too (e.g. a negative control's witness).
    void note(std::string text) { notes_.push_back(std::move(text)); }

    std::uint64_t checks() const noexcept { return checks_; }
    std::uint64_t failures() const noexcept { return failures_; }
    bool ok() const noexcept { return failures_ == 0; }
    const std::string& first_failure() const noexcept { return first_failure_; }
    const std::vector<std::string>& notes() const noexcept { return notes_; }

private:
    std::vector<std::string> notes_;
    std::uint64_t checks_ = 0;
    std::uint64_t failures_ = 0;
    std::string first_failure_;
};

/// One catalog entry. `body` draws randomness only from streams derived from
/// (seed, id), so cases are independent of each other and of their order.
struct Case {
    std::string id;
    std::string title;
    std::function<void(Check&, std::uint64_t seed)> body;
};

struct CaseResult {
    std::string id;
    std::string title;
    bool passed = true;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string detail;
    std::vector<std::string> notes;
};

/// Acceptance criteria 1-11, ids `acceptance.01` ... `acceptance.11`.
/// (Criterion 12, determinism of the whole report, needs two processes and is
/// checked by the acceptance test driver.)
std::vector<Case> acceptance_cases();

/// Invariants and properties not already covered by an acceptance criterion.
std::vector<Case> property_cases();

/// Runs one case; an exception escaping the body is reported as a failure.
CaseResult run_case(const Case& c, std::uint64_t seed);

struct Report {
    std::uint64_t seed = 0;
    std::vector<CaseResult> results;  ///< sorted by id

    bool passed() const;
};

/// Runs the acceptance criteria and the property catalog.
Report run_catalog(std::uint64_t seed);

/// Deterministic text rendering: one line per case, then a summary line. No
/// timings, so equal seeds give byte-identical output.
std::string render(const Report& report);
std::string render_line(const CaseResult& result);

// ---------------------------------------------------------------------------
// Generators shared by the catalog and the tests.

/// Product of random shears, so det = 1.
RectMatrix random_det_one(Rng& rng, Field f, int k);

/// Composition of one to three SCS maps, scaled by c (A -> cA, det B -> c^{-k}
/// det B) and followed by a random det-1 right factor. Two-sided at (n, k).
TwoSidedPair random_scs_product(Rng& rng, Field f, int n, int k);

/// Two-sided pair at (m, k) with m + k even, obtained by descending a random
/// SCS product at (m + 1, k): (M^- A M^+, B).
TwoSidedPair random_even_pair(Rng& rng, Field f, int m, int k);

/// two_sided_lift of random_even_pair(n - 1, k), composed at random with an
/// SCS product at (n, k).
TwoSidedPair random_odd_pair(Rng& rng, Field f, int n, int k);

/// Random odd-case spec: random_odd_pair plus a random phi.
PreserverSpec random_spec(Rng& rng, Field f, int n, int k);

/// The seeded list used by acceptance criteria 7, 8 and 10: 50 specs at (7, 4)
/// over GF(5) and then 50 over GF(7).
std::vector<PreserverSpec> acceptance_specs(std::uint64_t seed);

/// Every SCS_{i,j} operator at (n, k).
std::vector<LinearOperator> all_scs(Field f, int n, int k);

}  // namespace cullis::selftest
