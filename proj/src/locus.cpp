#include "miquel/locus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace miquel {

namespace {

constexpr double k_pi = std::numbers::pi;

// Distance between two line directions given as angles, modulo pi.
double angle_gap_mod_pi(double x, double y) {
    double d = std::fmod(std::abs(x - y), k_pi);
    return std::min(d, k_pi - d);
}

// Threshold below which two nearly parallel circumcircle tangents are
// intersected via the reflected-median formula instead of the pole of BC;
// the pole recedes to infinity and its position loses accuracy well before
// the parallel test in intersect_lines fires.
constexpr double k_tangent_sine_floor = 1e-4;

}  // namespace

AuxiliaryData auxiliary_data(const Triangle& tri, VertexLabel vertex,
                             const Tolerance& tol) {
    Triangle t = tri.rotated(vertex);
    AuxiliaryData d;
    d.omega_ab = tangent_circle_through(Line::through(t.a, t.b), t.a, t.c, tol);
    d.omega_ac = tangent_circle_through(Line::through(t.a, t.c), t.a, t.b, tol);
    // Both circles pass through A; the second intersection is A's mirror
    // image in the line of centers.
    d.main_centre = reflect_point_about_line(
        t.a, Line::through(d.omega_ab.center, d.omega_ac.center));
    d.axis = Line::through(t.a, d.main_centre);
    return d;
}

CentreRelationResiduals centre_relation_residuals(const Triangle& tri,
                                                  VertexLabel vertex,
                                                  const Tolerance& tol) {
    Triangle t = tri.rotated(vertex);
    AuxiliaryData d = auxiliary_data(tri, vertex, tol);
    Circle circ = circumcircle(t.a, t.b, t.c, tol);
    if (dist(circ.center, d.main_centre) <= tol.effective(t.diameter())) {
        throw Error(Errc::degenerate_oi);
    }
    CentreRelationResiduals r;
    r.concyclic = concyclic_residual(d.omega_ab.center, d.omega_ac.center,
                                     d.main_centre, circ.center, tol);
    Line centres = Line::through(d.omega_ab.center, d.omega_ac.center);
    Line oi = Line::through(circ.center, d.main_centre);
    r.parallel_angle = line_angle_gap(centres, oi);
    r.perp_angle = std::abs(line_angle_gap(oi, d.axis) - k_pi / 2);
    return r;
}

std::array<Point, 3> second_brocard_triangle(const Triangle& tri,
                                             const Tolerance& tol) {
    return {auxiliary_data(tri, VertexLabel::a, tol).main_centre,
            auxiliary_data(tri, VertexLabel::b, tol).main_centre,
            auxiliary_data(tri, VertexLabel::c, tol).main_centre};
}

Circle brocard_circle(const Triangle& tri, const Tolerance& tol) {
    std::array<Point, 3> pts = second_brocard_triangle(tri, tol);
    double d = tri.diameter();
    double two_area = cross(pts[1] - pts[0], pts[2] - pts[0]);
    if (std::abs(two_area) <= tol.effective(d) * d) {
        throw Error(Errc::near_equilateral_degeneracy);
    }
    return circumcircle(pts[0], pts[1], pts[2], tol);
}

std::pair<Point, Point> brocard_points(const Triangle& tri,
                                       const Tolerance& tol) {
    // omega_XY is tangent to line XY at X and passes through the third
    // vertex; each consecutive pair in a triple shares one vertex, whose
    // mirror image in the line of centers is the common point sought.
    auto aux = [&](Point x, Point y, Point z) {
        return tangent_circle_through(Line::through(x, y), x, z, tol);
    };
    Circle f1 = aux(tri.a, tri.c, tri.b);  // through A and B
    Circle f2 = aux(tri.b, tri.a, tri.c);  // through B and C
    Point first = reflect_point_about_line(
        tri.b, Line::through(f1.center, f2.center));
    Circle s1 = aux(tri.a, tri.b, tri.c);  // through A and C
    Circle s2 = aux(tri.b, tri.c, tri.a);  // through B and A
    Point second = reflect_point_about_line(
        tri.a, Line::through(s1.center, s2.center));
    return {first, second};
}

Line symmedian_line(const Triangle& tri, VertexLabel vertex,
                    const Tolerance& tol) {
    Triangle t = tri.rotated(vertex);
    Circle circ = circumcircle(t.a, t.b, t.c, tol);
    Line tb = tangent_line_at(circ, t.b, tol);
    Line tc = tangent_line_at(circ, t.c, tol);
    if (std::abs(cross(tb.dir, tc.dir)) > k_tangent_sine_floor) {
        LineIntersection hit = intersect_lines(tb, tc, tol);
        return Line::through(t.a, hit.point);
    }
    // Angle at A close to right: the pole of BC is out of reach, but the
    // symmedian is equally the median reflected about the internal bisector.
    Point u = normalize(midpoint(t.b, t.c) - t.a);
    Point w = normalize(normalize(t.b - t.a) + normalize(t.c - t.a));
    Point dir = 2 * dot(u, w) * w - u;
    return Line{t.a, normalize(dir)};
}

const char* locus_verdict_name(LocusVerdict v) {
    switch (v) {
        case LocusVerdict::member: return "member";
        case LocusVerdict::excluded_outside_circumdisk:
            return "excluded_outside_circumdisk";
        case LocusVerdict::excluded_in_one_aux_disk:
            return "excluded_in_one_aux_disk";
        case LocusVerdict::excluded_in_both_aux_disks:
            return "excluded_in_both_aux_disks";
        case LocusVerdict::boundary: return "boundary";
        case LocusVerdict::inadmissible: return "inadmissible";
    }
    return "?";
}

LocusVerdict locus_membership(const Triangle& tri, VertexLabel vertex, Point p,
                              const Tolerance& tol, double margin) {
    Triangle t = tri.rotated(vertex);
    double diam = t.diameter();
    double band = std::max(margin * diam, tol.effective(diam));
    Line ab = Line::through(t.a, t.b);
    Line ac = Line::through(t.a, t.c);
    if (std::abs(ab.signed_distance(p)) <= band ||
        std::abs(ac.signed_distance(p)) <= band) {
        return LocusVerdict::inadmissible;
    }
    Circle circ = circumcircle(t.a, t.b, t.c, tol);
    AuxiliaryData d = auxiliary_data(tri, vertex, tol);
    double off_circ = circ.signed_offset(p);
    double off_ab = d.omega_ab.signed_offset(p);
    double off_ac = d.omega_ac.signed_offset(p);
    if (std::abs(off_circ) <= band || std::abs(off_ab) <= band ||
        std::abs(off_ac) <= band) {
        return LocusVerdict::boundary;
    }
    if (off_circ > 0) return LocusVerdict::excluded_outside_circumdisk;
    if (off_ab < 0 && off_ac < 0) return LocusVerdict::excluded_in_both_aux_disks;
    if (off_ab < 0 || off_ac < 0) return LocusVerdict::excluded_in_one_aux_disk;
    return LocusVerdict::member;
}

Circle omega_tan(const Triangle& tri, VertexLabel vertex,
                 const Tolerance& tol) {
    Triangle t = tri.rotated(vertex);
    Circle circ = circumcircle(t.a, t.b, t.c, tol);
    Line tb = tangent_line_at(circ, t.b, tol);
    Line tc = tangent_line_at(circ, t.c, tol);
    LineIntersection hit = intersect_lines(tb, tc, tol);
    if (hit.parallel) throw Error(Errc::tangents_parallel);
    double r = (dist(hit.point, t.b) + dist(hit.point, t.c)) / 2;
    return Circle{hit.point, r};
}

PerpendicularityGaps perpendicularity_equivalence(const Triangle& tri,
                                                  VertexLabel vertex,
                                                  const CevianPair& cev,
                                                  const Tolerance& tol) {
    MiquelConfig cfg = forward_miquel(tri, vertex, cev, tol);
    Triangle t = tri.rotated(vertex);
    double diam = t.diameter();
    Line from_b = Line::through(t.b, cfg.b_a);
    Line from_c = Line::through(t.c, cfg.c_a);
    PerpendicularityGaps gaps;
    gaps.angle_gap = std::abs(line_angle_gap(from_b, from_c) - k_pi / 2);
    double right_gap = std::abs(angle_at(t.a, t.b, t.c, tol) - k_pi / 2);
    if (right_gap <= tol.effective(1.0)) {
        gaps.degenerate_tan = true;
    } else {
        try {
            Circle cw = omega_tan(tri, vertex, tol);
            gaps.tan_offset = std::abs(cw.signed_offset(cfg.m)) / diam;
            return gaps;
        } catch (const Error& err) {
            if (err.code() != Errc::tangents_parallel) throw;
            gaps.degenerate_tan = true;
        }
    }
    Line bc = Line::through(t.b, t.c);
    gaps.tan_offset = std::abs(bc.signed_distance(cfg.m)) / diam;
    return gaps;
}

FeetSymmedianGaps feet_parallel_check(const Triangle& tri, VertexLabel vertex,
                                      const CevianPair& cev,
                                      const Tolerance& tol) {
    MiquelConfig cfg = forward_miquel(tri, vertex, cev, tol);
    Triangle t = tri.rotated(vertex);
    FeetSymmedianGaps gaps;
    gaps.feet_angle = line_angle_gap(Line::through(cfg.b_a, cfg.c_a),
                                     Line::through(t.b, t.c));
    Line sym = symmedian_line(tri, vertex, tol);
    gaps.symmedian_offset =
        std::abs(sym.signed_distance(cfg.m)) / t.diameter();
    return gaps;
}

std::complex<double> UnitFrame::to_frame(Point p) const {
    std::complex<double> z =
        std::complex<double>(p.x - origin.x, p.y - origin.y) / basis;
    return mirrored ? std::conj(z) : z;
}

Point UnitFrame::to_world(std::complex<double> z) const {
    if (mirrored) z = std::conj(z);
    z *= basis;
    return {origin.x + z.real(), origin.y + z.imag()};
}

Point UnitFrame::direction(double angle) const {
    std::complex<double> z = std::polar(1.0, angle);
    if (mirrored) z = std::conj(z);
    z *= basis;
    return normalize(Point{z.real(), z.imag()});
}

UnitFrame unit_frame(const Triangle& tri, VertexLabel vertex) {
    Triangle t = tri.rotated(vertex);
    UnitFrame fr;
    fr.origin = t.a;
    fr.basis = std::complex<double>(t.c.x - t.a.x, t.c.y - t.a.y);
    std::complex<double> bz =
        std::complex<double>(t.b.x - t.a.x, t.b.y - t.a.y) / fr.basis;
    fr.mirrored = bz.imag() < 0;
    if (fr.mirrored) bz = std::conj(bz);
    fr.b0 = std::abs(bz);
    fr.beta0 = std::arg(bz);
    return fr;
}

FrameMeet unit_frame_meet(double b0, double beta0, double m, double mu0,
                          const Tolerance& tol) {
    double band = tol.effective(1.0);
    double sin_mb = std::sin(mu0 - beta0);
    double sin_m = std::sin(mu0);
    if (std::abs(m) <= band) {
        throw Error(Errc::singular_denominator, "m");
    }
    if (std::abs(sin_mb) <= band) {
        throw Error(Errc::singular_denominator, "sin(mu0-beta0)");
    }
    if (std::abs(sin_m) <= band) {
        throw Error(Errc::singular_denominator, "sin(mu0)");
    }
    FrameMeet out;
    out.b_a = (b0 * sin_m - m * std::sin(beta0)) / sin_mb;
    double c_len = (m * std::sin(beta0) + sin_mb) / sin_m;
    out.c_a = c_len * std::complex<double>(std::cos(beta0), std::sin(beta0));
    out.n = std::complex<double>(
        1.0 + b0 * std::cos(beta0) - (b0 / m) * std::cos(mu0 - beta0),
        b0 * std::sin(beta0) + (b0 / m) * std::sin(mu0 - beta0));
    return out;
}

Line meet_image_line(const Triangle& tri, VertexLabel vertex, double mu0,
                     const Tolerance& tol) {
    Triangle t = tri.rotated(vertex);
    UnitFrame fr = unit_frame(tri, vertex);
    double band = tol.effective(1.0);
    if (angle_gap_mod_pi(mu0, 0.0) <= band) {
        throw Error(Errc::line_along_side, "AC");
    }
    if (angle_gap_mod_pi(mu0, fr.beta0) <= band) {
        throw Error(Errc::line_along_side, "AB");
    }
    Point anchor = t.b + t.c - t.a;
    return Line{anchor, fr.direction(fr.beta0 - mu0)};
}

IsogonalImage isogonal_circle(const Triangle& tri, VertexLabel vertex,
                              double line_angle, const Tolerance& tol) {
    Triangle t = tri.rotated(vertex);
    UnitFrame fr = unit_frame(tri, vertex);
    double band = tol.effective(1.0);
    if (angle_gap_mod_pi(line_angle, 0.0) <= band) {
        throw Error(Errc::line_along_side, "AC");
    }
    if (angle_gap_mod_pi(line_angle, fr.beta0) <= band) {
        throw Error(Errc::line_along_side, "AB");
    }
    Point dir = fr.direction(line_angle);
    double diam = t.diameter();
    // Deterministic probe offsets (in units of the diameter) along the line
    // of cevian meets; the first three usable ones define the image.
    static constexpr double k_probes[] = {0.7,  1.15, 1.6,  -0.8,  2.1,
                                          -1.3, 0.45, 2.8,  -2.0,  0.95,
                                          1.9,  -0.55, 3.4, 0.3,   -3.0,
                                          1.35, 2.5,  -1.7, 0.6,   4.0};
    std::vector<Point> samples;
    for (double k : k_probes) {
        if (samples.size() == 3) break;
        Point n = t.a + (k * diam) * dir;
        try {
            CevianPair cev = cevians_through_point(tri, vertex, n, tol);
            samples.push_back(forward_miquel(tri, vertex, cev, tol).m);
        } catch (const Error&) {
            continue;
        }
    }
    if (samples.size() < 3) {
        throw Error(Errc::degenerate_samples, "fewer than three usable samples");
    }
    if (orientation(samples[0], samples[1], samples[2], tol) == 0) {
        // Median input: the image is the symmedian, a straight line. Span
        // it by the two samples farthest apart.
        int i0 = 0, i1 = 1;
        double best = 0.0;
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                double d = dist(samples[i], samples[j]);
                if (d > best) {
                    best = d;
                    i0 = i;
                    i1 = j;
                }
            }
        }
        return Line::through(samples[i0], samples[i1]);
    }
    return circumcircle(samples[0], samples[1], samples[2], tol);
}

}  // namespace miquel
