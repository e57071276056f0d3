#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skewposet/lrrule.hpp"
#include "skewposet/skew.hpp"

namespace skewposet {

inline const std::vector<std::string> kAllChecks = {"lower_cc",  "pairs",    "upper",
                                                    "reduction", "symmetry", "monotonicity"};

struct SweepConfig {
    int max_boxes = 6;
    std::set<std::string> checks;          // empty = all
    std::uint64_t sample_seed = 1;
    int monotonicity_samples = 1000;
    int parallel_jobs = 1;

    bool enabled(const std::string& name) const {
        return checks.empty() || checks.count(name) > 0;
    }
};

struct Violation {
    std::string subject; // class or sample, as text
    std::string message; // both sides of the failed inequality + decomposition
    auto operator<=>(const Violation&) const = default;
};

struct CheckResult {
    std::string name;
    std::int64_t examined = 0;
    std::vector<Violation> violations;
    std::int64_t millis = 0;
};

struct Report {
    SweepConfig config;
    std::vector<CheckResult> checks;
    bool pass = true;

    std::string to_text() const;
    std::string to_json() const;
};

// Every class of basic skew diagrams with 1..max_boxes boxes, each
// exactly once, in canonical order.
std::vector<SkewClass> enumerate_basic(int max_boxes);

// Lower bound cc(lambda/mu) >= (p_n, f_n) with n = delta value, checked
// against a supplied decomposition (exposed for harness self-tests).
bool check_lower_cc_against(const SkewClass& c, const SkewCharacter& ch, std::string* detail);
bool check_lower_cc(const SkewClass& c, std::string* detail = nullptr);

// Pair bounds: one_box_pairs >= g_n, plus the max(a,b) sub-check on
// concrete arrangements with nonempty inner partition.
// Throws HypothesisNotMet when delta < 2.
bool check_pair_bounds(const SkewClass& c, std::string* detail = nullptr);

// Upper bounds with n = box count: pairs <= g_n, components <= p_n,
// constituents <= min(f_n, p_n f^mu, p_n f^lambda-bar).
bool check_upper_bounds(const SkewClass& c, std::string* detail = nullptr);

// Reduction to the staircase class with delta preserved per step and
// the witness chain rechecked.
bool check_reduction(const SkewClass& c, std::string* detail = nullptr);

// Rotation, conjugation and argument-swap symmetries of the LR kernel,
// plus the SYT counting oracle for classes with <= 7 boxes.
bool check_symmetry(const SkewClass& c, std::string* detail = nullptr);

// Seeded random samples of the +/union monotonicity lemma at sizes <= 7.
bool check_monotonicity(std::uint64_t seed, int samples,
                        std::vector<Violation>* violations = nullptr);

Report run_suite(const SweepConfig& cfg);

} // namespace skewposet
