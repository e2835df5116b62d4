#pragma once

#include <string>
#include <vector>

#include "miquel/locus.hpp"
#include "miquel/scene.hpp"

namespace miquel {

/// Sampling plan for the locus sweep: uniform samples in a box around the
/// circumcircle plus boundary bands around each defining circle probed at
/// several width scales.
struct SweepSpec {
    int samples = 2000;
    double margin = 1e-6;     // classification margin, relative to diameter
    std::uint64_t seed = 1;
    double box_scale = 3.0;   // box half-width in circumradii

    // invariant: samples >= 2
};

struct SweepRow {
    Point p;
    LocusVerdict analytic = LocusVerdict::member;
    std::string empirical;  // "internal+external", or an error name
    bool counted = false;   // both sides decidable with margins respected
    bool agree = false;     // member <=> both cevians internal
};

struct SweepResult {
    std::vector<SweepRow> rows;
    int counted = 0;
    int agreed = 0;

    double agreement() const {
        return counted == 0 ? 1.0 : static_cast<double>(agreed) / counted;
    }
};

SweepResult run_sweep(const Scene& scene, const SweepSpec& spec);

/// CSV with header x,y,analytic,empirical,agree,counted; reals at 12 digits.
std::string sweep_csv(const SweepResult& result);

}  // namespace miquel
