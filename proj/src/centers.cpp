#include "miquel/centers.hpp"

#include <cmath>
#include <numbers>

namespace miquel {

namespace {

constexpr double k_pi = std::numbers::pi;

// Unit direction of the internal angle bisector at v toward rays vp and vq.
Point internal_bisector_dir(Point v, Point p, Point q) {
    return normalize(normalize(p - v) + normalize(q - v));
}

double affine_param(Point p, Point origin, Point toward) {
    return dot(p - origin, toward - origin) / norm2(toward - origin);
}

}  // namespace

const char* center_kind_name(CenterKind kind) {
    switch (kind) {
        case CenterKind::incenter: return "incenter";
        case CenterKind::orthocenter: return "orthocenter";
        case CenterKind::circumcenter: return "circumcenter";
    }
    return "?";
}

Point classic_center(const Triangle& tri, CenterKind kind,
                     const Tolerance& tol) {
    switch (kind) {
        case CenterKind::incenter: {
            double a = dist(tri.b, tri.c);
            double b = dist(tri.c, tri.a);
            double c = dist(tri.a, tri.b);
            return (a * tri.a + b * tri.b + c * tri.c) / (a + b + c);
        }
        case CenterKind::circumcenter:
            return circumcircle(tri.a, tri.b, tri.c, tol).center;
        case CenterKind::orthocenter: {
            Point o = circumcircle(tri.a, tri.b, tri.c, tol).center;
            return tri.a + tri.b + tri.c - 2 * o;
        }
    }
    return tri.a;
}

CenterCaseReport incenter_case(const Triangle& tri, VertexLabel vertex,
                               const Tolerance& tol) {
    Triangle t = tri.rotated(vertex);
    Point inc = classic_center(tri, CenterKind::incenter, tol);
    CevianPair cev = inverse_miquel(tri, vertex, inc, tol);
    MiquelConfig cfg = forward_miquel(tri, vertex, cev, tol);
    double s = dist(t.b, t.c);
    CenterCaseReport report{CenterKind::incenter, inc, cfg, {}, {}};
    report.residuals = {
        std::abs(dist(t.b, cfg.c_a) - s) / s,
        std::abs(dist(t.c, cfg.b_a) - s) / s,
        dist(cfg.m, inc) / t.diameter(),
        // Direct construction: lay |BC| off along the sides toward A.
        dist(cfg.b_a, t.c + s * normalize(t.a - t.c)) / s,
        dist(cfg.c_a, t.b + s * normalize(t.a - t.b)) / s,
    };
    return report;
}

std::array<Point, 4> bisector_candidates(const Triangle& tri,
                                         VertexLabel vertex,
                                         const Tolerance& tol) {
    Triangle t = tri.rotated(vertex);
    Point in_b = internal_bisector_dir(t.b, t.a, t.c);
    Point in_c = internal_bisector_dir(t.c, t.a, t.b);
    Point ex_b = perp(in_b);
    Point ex_c = perp(in_c);
    const Point dirs_b[2] = {in_b, ex_b};
    const Point dirs_c[2] = {in_c, ex_c};
    std::array<Point, 4> out;
    int k = 0;
    for (const Point& db : dirs_b) {
        for (const Point& dc : dirs_c) {
            LineIntersection hit =
                intersect_lines(Line{t.b, db}, Line{t.c, dc}, tol);
            if (hit.parallel) throw Error(Errc::parallel_bisectors);
            out[k++] = hit.point;
        }
    }
    return out;
}

CenterCaseReport orthocenter_case(const Triangle& tri, VertexLabel vertex,
                                  const Tolerance& tol) {
    Triangle t = tri.rotated(vertex);
    if (std::abs(angle_at(t.a, t.b, t.c, tol) - k_pi / 2) <=
        tol.effective(1.0)) {
        throw Error(Errc::right_angle_at_vertex);
    }
    Point h = classic_center(tri, CenterKind::orthocenter, tol);
    Line ac = Line::through(t.a, t.c);
    Line ab = Line::through(t.a, t.b);
    Point foot_b = ac.foot(t.b);  // altitude foot from B
    Point foot_c = ab.foot(t.c);  // altitude foot from C
    Point b_a = 2 * foot_b - t.c;
    Point c_a = 2 * foot_c - t.b;
    CevianPair cev{affine_param(b_a, t.a, t.c), affine_param(c_a, t.a, t.b)};
    MiquelConfig cfg = forward_miquel(tri, vertex, cev, tol);
    double s = dist(t.b, t.c);
    CevianPair recovered = inverse_miquel(tri, vertex, h, tol);
    CenterCaseReport report{CenterKind::orthocenter, h, cfg, {}, {}};
    report.residuals = {
        std::abs(dist(t.b, cfg.b_a) - s) / s,
        std::abs(dist(t.c, cfg.c_a) - s) / s,
        dist(cfg.m, h) / t.diameter(),
        std::abs(recovered.t_b - cev.t_b),
        std::abs(recovered.t_c - cev.t_c),
    };
    return report;
}

CenterCaseReport circumcenter_case(const Triangle& tri, VertexLabel vertex,
                                   const Tolerance& tol) {
    Triangle t = tri.rotated(vertex);
    Circle circ = circumcircle(t.a, t.b, t.c, tol);
    Point o = circ.center;
    double diam = t.diameter();
    Line bisector{midpoint(t.b, t.c), normalize(perp(t.c - t.b))};
    LineIntersection on_ac =
        intersect_lines(bisector, Line::through(t.a, t.c), tol);
    if (on_ac.parallel) throw Error(Errc::bisector_parallel_to_side, "AC");
    LineIntersection on_ab =
        intersect_lines(bisector, Line::through(t.a, t.b), tol);
    if (on_ab.parallel) throw Error(Errc::bisector_parallel_to_side, "AB");
    Point b_a = on_ac.point;
    Point c_a = on_ab.point;
    CevianPair cev{affine_param(b_a, t.a, t.c), affine_param(c_a, t.a, t.b)};
    MiquelConfig cfg = forward_miquel(tri, vertex, cev, tol);
    CenterCaseReport report{CenterKind::circumcenter, o, cfg, {}, cfg.n};
    Line feet_line = Line::through(cfg.b_a, cfg.c_a);
    report.residuals = {
        std::abs(dist(t.b, cfg.b_a) - dist(t.c, cfg.b_a)) / diam,
        std::abs(dist(t.b, cfg.c_a) - dist(t.c, cfg.c_a)) / diam,
        dist(cfg.m, o) / diam,
        std::abs(circ.signed_offset(cfg.n)) / circ.radius,
        std::abs(feet_line.signed_distance(o)) / diam,
    };
    return report;
}

}  // namespace miquel
