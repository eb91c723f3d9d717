#pragma once

// Exhaustive verification suites for the algebraic laws of the two Hopf
// structures. Each suite enumerates every input up to a vertex bound and
// compares both sides exactly.

#include "forest_hopf/forest.hpp"
#include "forest_hopf/scalar.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fhopf {

struct CheckConfig {
    Alphabet alphabet;
    /// Results are compared after specializing at this weight; the
    /// computation itself always runs with λ symbolic.
    Weight weight;
    /// Whether the weight was chosen by the caller. Suites tied to a weight
    /// (antipode-rb0, cograded-rb0, degree-drop-witness) pick their own when
    /// it was not.
    bool weight_explicit = false;
    std::size_t max_vertices = 5;
    /// 0 = FOREST_HOPF_THREADS or hardware concurrency.
    unsigned threads = 0;
};

struct CheckFailure {
    std::string input;
    std::string expected;
    std::string actual;
};

struct CheckReport {
    std::string suite;
    std::size_t instances = 0;
    std::vector<CheckFailure> failures;
    double elapsed_seconds = 0;
    /// Non-empty when the suite did not run under `check all`.
    std::string skipped;

    bool ok() const { return failures.empty(); }
};

/// The individual suite names, in run order.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for
/// an unknown name and WeightError when a single weight-bound suite is asked
/// to run at an incompatible explicit weight.
std::vector<CheckReport> run_checks(std::string_view name, const CheckConfig& cfg);
CheckReport run_suite(std::string_view name, const CheckConfig& cfg);

/// Worker count used by the suites: FOREST_HOPF_THREADS when set, capped by
/// the hardware concurrency.
unsigned worker_count(unsigned requested);

}  // namespace fhopf
