#pragma once

#include <exception>
#include <string>

namespace miquel {

/// Typed failure modes of the kernel. Every code maps to a stable name that
/// the CLI prints verbatim on the diagnostic stream.
enum class Errc {
    collinear_input,
    coincident_circles,
    point_not_on_circle,
    through_point_on_tangent,
    center_inversion,
    degenerate_ray,
    all_collinear,
    degenerate_triangle,
    excluded_cevian,
    parallel_cevians,
    tangent_at_a,
    inadmissible_point,
    boundary_ambiguous,
    degenerate_oi,
    near_equilateral_degeneracy,
    tangents_parallel,
    line_along_side,
    singular_denominator,
    degenerate_samples,
    right_angle_at_vertex,
    bisector_parallel_to_side,
    parallel_bisectors,
    parse_error,
    unknown_suite,
};

const char* errc_name(Errc code);

class Error : public std::exception {
public:
    explicit Error(Errc code, std::string detail = "");

    Errc code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

    /// "CollinearInput" or, with a detail, "InadmissiblePoint(on_AB)".
    const char* what() const noexcept override { return what_.c_str(); }

private:
    Errc code_;
    std::string detail_;
    std::string what_;
};

}  // namespace miquel
