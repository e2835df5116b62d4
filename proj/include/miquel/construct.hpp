#pragma once

#include <optional>
#include <string>
#include <utility>

#include "miquel/locus.hpp"
#include "miquel/scene.hpp"

namespace miquel {

/// Image objects of a line payload: the line of cevian meets and the circle
/// (or degenerate line) of Miquel points.
struct LineImageReport {
    Line meet_line;
    IsogonalImage miquel_image;
};

/// Everything cmd-construct reports for one scene. `config` is present for
/// cevian, point and center payloads; `line_report` for line payloads.
struct ConstructReport {
    std::optional<MiquelConfig> config;
    std::optional<std::pair<CevianClass, CevianClass>> classes;
    std::optional<LocusVerdict> locus;
    std::optional<SideLemmaFlags> side_lemma;
    std::optional<CenterCaseReport> center_report;
    std::optional<LineImageReport> line_report;
};

ConstructReport build_construct_report(const Scene& scene,
                                       double margin = 1e-9);

/// Key-value text of a report, one item per line, reals with 12 digits.
std::string construct_report_text(const Scene& scene,
                                  const ConstructReport& report);

}  // namespace miquel
