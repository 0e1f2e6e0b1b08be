#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "topocard/enumerate.hpp"
#include "topocard/estimators.hpp"
#include "topocard/interval.hpp"
#include "topocard/topology.hpp"

namespace topocard {

class UnknownTheorem : public std::runtime_error {
  public:
    explicit UnknownTheorem(const std::string& what) : std::runtime_error(what) {}
};

// Theorems 3.1-3.4 assume a "non-T1" space; their proofs actually use the
// stronger pointwise property. The verifier measures under both readings.
enum class HypothesisReading {
    LiteralNonT1,    // space is not T1
    PointwiseNonT1,  // every singleton closure has >= 2 points
    NotApplicable,   // theorem has no non-T1 hypothesis
};

const char* reading_name(HypothesisReading r);        // "literal-non-t1" etc.
const char* reading_short_name(HypothesisReading r);  // "literal" etc.
std::optional<HypothesisReading> parse_reading(const std::string& name);

// Whether the theorem's hypothesis has a non-T1 clause to interpret.
bool theorem_has_readings(const std::string& theorem_id);
// Theorems 2.1-2.3 quantify over bare sets; no topology is enumerated.
bool theorem_is_set_level(const std::string& theorem_id);
// Largest carrier the sweep accepts (6 for set-level, 5 with topology).
int theorem_max_carrier(const std::string& theorem_id);

// One hypothesis-satisfying configuration: the exact cardinality computed by
// set operations against the estimator's prediction for the same inputs.
struct TheoremCase {
    std::string theorem_id;
    std::optional<FiniteSpace> space;  // absent for set-level theorems
    std::vector<PointSet> sets;
    std::int64_t exact_value = 0;
    std::variant<NatInterval, EstimateErrorCode> predicted;
    bool contained = false;

    static bool is_contained(std::int64_t exact,
                             const std::variant<NatInterval, EstimateErrorCode>& predicted);
};

// Per-set witness bookkeeping for theorem 3.3, whose statement is
// existential ("there exists k"). Cases in the main stream pair each
// semi-open A with each witness under the non-strict inclusion reading;
// the strict counters rerun the bound over proper-inclusion witnesses only.
struct WitnessAnalysis {
    std::uint64_t strict_cases_total = 0;
    std::uint64_t strict_cases_contained = 0;
    std::uint64_t semiopen_sets_total = 0;
    std::uint64_t sets_with_contained_witness = 0;   // some witness validates the bound
    std::uint64_t sets_all_witnesses_contained = 0;  // every witness validates the bound

    WitnessAnalysis& operator+=(const WitnessAnalysis& other);
    friend bool operator==(const WitnessAnalysis&, const WitnessAnalysis&) = default;
};

struct VerificationReport {
    std::string theorem_id;
    int n = 0;
    HypothesisReading reading = HypothesisReading::NotApplicable;
    std::uint64_t cases_total = 0;
    std::uint64_t cases_contained = 0;
    std::vector<TheoremCase> counterexamples;  // first failures in enumeration order
    std::optional<WitnessAnalysis> witness_analysis;  // thm3.3 only
    double elapsed_seconds = 0.0;

    // Vacuous sweeps count as fully contained.
    double containment_rate() const {
        return cases_total == 0 ? 1.0
                                : static_cast<double>(cases_contained) /
                                      static_cast<double>(cases_total);
    }
};

struct VerifyOptions {
    int counterexample_cap = 10;
    int shard_index = 0;
    int shard_count = 1;
    // Worker threads for this (shard of the) sweep; 0 picks a small number
    // based on hardware. Results are identical for any thread count.
    int threads = 0;
};

// Sweeps every space and qualifying configuration for one theorem at carrier
// size n, comparing exact cardinalities against the estimator's interval.
// Exact values come from set operations only, never from an estimator.
VerificationReport verify_theorem(const std::string& theorem_id, int n, HypothesisReading reading,
                                  const VerifyOptions& opts = {});

// Reports for every theorem, every carrier 1..n_max and every applicable
// reading, in deterministic order (theorem, then n, then reading).
std::vector<VerificationReport> verify_all(
    int n_max, const std::vector<HypothesisReading>& readings = {HypothesisReading::LiteralNonT1,
                                                                 HypothesisReading::PointwiseNonT1},
    const VerifyOptions& opts = {});

// Combines partial reports produced by sharded runs of the same sweep.
// Parts must be given in shard order; counts add up and counterexample lists
// concatenate before the cap is applied, so a merged run is byte-identical
// to an unsharded one.
VerificationReport merge_reports(const std::vector<VerificationReport>& parts,
                                 int counterexample_cap);

}  // namespace topocard
