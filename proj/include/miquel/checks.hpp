#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "miquel/scene.hpp"

namespace miquel {

/// Outcome of one property suite run. `worst` is the largest residual seen
/// across evaluated samples (suite-specific metric, always normalized so
/// that `worst <= limit` means pass), and `worst_scene` is a one-line scene
/// that reproduces it through evaluate_sample.
struct PropertyResult {
    std::string suite;
    bool pass = false;
    double worst = 0.0;
    double limit = 0.0;
    int evaluated = 0;
    int skipped = 0;
    std::string worst_scene;
    std::string note;
};

/// Names of all property suites, in reporting order.
const std::vector<std::string>& suite_names();

/// One-line description of a suite. Throws UnknownSuite.
std::string suite_about(const std::string& suite);

/// Runs a suite with the given seed. `samples` <= 0 selects the suite's
/// default count. Throws UnknownSuite for names outside suite_names().
PropertyResult run_suite(const std::string& suite, std::uint64_t seed,
                         int samples = 0);

/// Residual of one sample scene under a suite's metric; reproduces the
/// value reported as `worst` for that scene. Samples that the suite would
/// skip raise the corresponding kernel error.
double evaluate_sample(const std::string& suite, const Scene& scene);

/// "name: PASS ..." line plus the worst-sample line used by cmd-check.
std::string property_result_text(const PropertyResult& result);

}  // namespace miquel
