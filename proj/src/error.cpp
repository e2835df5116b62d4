#include "miquel/error.hpp"

namespace miquel {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::collinear_input: return "CollinearInput";
        case Errc::coincident_circles: return "CoincidentCircles";
        case Errc::point_not_on_circle: return "PointNotOnCircle";
        case Errc::through_point_on_tangent: return "ThroughPointOnTangent";
        case Errc::center_inversion: return "CenterInversion";
        case Errc::degenerate_ray: return "DegenerateRay";
        case Errc::all_collinear: return "AllCollinear";
        case Errc::degenerate_triangle: return "DegenerateTriangle";
        case Errc::excluded_cevian: return "ExcludedCevian";
        case Errc::parallel_cevians: return "ParallelCevians";
        case Errc::tangent_at_a: return "TangentAtA";
        case Errc::inadmissible_point: return "InadmissiblePoint";
        case Errc::boundary_ambiguous: return "BoundaryAmbiguous";
        case Errc::degenerate_oi: return "DegenerateOI";
        case Errc::near_equilateral_degeneracy: return "NearEquilateralDegeneracy";
        case Errc::tangents_parallel: return "TangentsParallel";
        case Errc::line_along_side: return "LineAlongSide";
        case Errc::singular_denominator: return "SingularDenominator";
        case Errc::degenerate_samples: return "DegenerateSamples";
        case Errc::right_angle_at_vertex: return "RightAngleAtVertex";
        case Errc::bisector_parallel_to_side: return "BisectorParallelToSide";
        case Errc::parallel_bisectors: return "ParallelBisectors";
        case Errc::parse_error: return "ParseError";
        case Errc::unknown_suite: return "UnknownSuite";
    }
    return "UnknownError";
}

Error::Error(Errc code, std::string detail)
    : code_(code), detail_(std::move(detail)) {
    what_ = errc_name(code_);
    if (!detail_.empty()) {
        what_ += "(" + detail_ + ")";
    }
}

}  // namespace miquel
