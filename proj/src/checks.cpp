#include "miquel/checks.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <sstream>
#include <vector>

#include "miquel/centers.hpp"
#include "miquel/construct.hpp"
#include "miquel/locus.hpp"
#include "miquel/rng.hpp"
#include "miquel/svg_render.hpp"
#include "miquel/sweep.hpp"

namespace miquel {

namespace {

constexpr double k_pi = std::numbers::pi;

// ----------------------------------------------------------- random shapes

struct TriangleSpec {
    double min_angle = 0.28;
    double min_side = 0.8;
    bool avoid_equilateral = false;   // keep max/min side ratio >= 1.02
    double vertex_max_angle = 0.0;    // if > 0, cap the angle at the vertex
    double vertex_min_angle = 0.0;
};

Triangle random_triangle(Rng& rng, const TriangleSpec& spec,
                         VertexLabel vertex = VertexLabel::a) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Point p{rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)};
        Point q{rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)};
        Point r{rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)};
        double ab = dist(p, q), bc = dist(q, r), ca = dist(r, p);
        double smin = std::min({ab, bc, ca});
        double smax = std::max({ab, bc, ca});
        if (smin < spec.min_side) continue;
        if (std::abs(cross(q - p, r - p)) <= 1e-3) continue;
        double a1 = angle_at(p, q, r);
        double a2 = angle_at(q, r, p);
        double a3 = angle_at(r, p, q);
        if (std::min({a1, a2, a3}) < spec.min_angle) continue;
        if (spec.avoid_equilateral && smax / smin < 1.02) continue;
        Triangle t(p, q, r);
        if (spec.vertex_max_angle > 0 || spec.vertex_min_angle > 0) {
            Triangle rot = t.rotated(vertex);
            double va = angle_at(rot.a, rot.b, rot.c);
            if (spec.vertex_max_angle > 0 && va > spec.vertex_max_angle) continue;
            if (spec.vertex_min_angle > 0 && va < spec.vertex_min_angle) continue;
        }
        return t;
    }
    throw Error(Errc::degenerate_samples, "triangle sampling exhausted");
}

VertexLabel random_vertex(Rng& rng) {
    switch (rng.index(3)) {
        case 0: return VertexLabel::a;
        case 1: return VertexLabel::b;
        default: return VertexLabel::c;
    }
}

Scene with_cevians(const Triangle& tri, VertexLabel v, CevianPair cev) {
    Scene s(tri);
    s.vertex = v;
    s.cevians = cev;
    return s;
}

Scene with_point(const Triangle& tri, VertexLabel v, Point p) {
    Scene s(tri);
    s.vertex = v;
    s.point = p;
    return s;
}

Scene with_angle(const Triangle& tri, VertexLabel v, double ang) {
    Scene s(tri);
    s.vertex = v;
    s.line_angle = ang;
    return s;
}

Scene with_center(const Triangle& tri, VertexLabel v, CenterKind kind) {
    Scene s(tri);
    s.vertex = v;
    s.center = kind;
    return s;
}

double random_param(Rng& rng) {
    // Cevian parameter away from the excluded values 0 and 1.
    for (;;) {
        double t = rng.uniform(-1.2, 2.2);
        if (std::abs(t) >= 0.05 && std::abs(t - 1.0) >= 0.05) return t;
    }
}

double angle_gap_mod_pi(double x, double y) {
    double d = std::fmod(std::abs(x - y), k_pi);
    return std::min(d, k_pi - d);
}

double loglog_slope(const std::vector<std::pair<double, double>>& pts) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        double lx = std::log(x);
        double ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double n = static_cast<double>(pts.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Circle tangent_aux(Point x, Point y, Point z, const Tolerance& tol) {
    return tangent_circle_through(Line::through(x, y), x, z, tol);
}

// ------------------------------------------------------------- evaluators
//
// Each evaluator maps a sample scene to one nonnegative residual. Samples a
// suite cannot meaningfully score raise a kernel error and are skipped.

const CevianPair& need_cevians(const Scene& s) {
    if (!s.cevians) throw Error(Errc::parse_error, "line 0, cevians, suite needs a cevian payload");
    return *s.cevians;
}

Point need_point(const Scene& s) {
    if (!s.point) throw Error(Errc::parse_error, "line 0, point, suite needs a point payload");
    return *s.point;
}

double need_angle(const Scene& s) {
    if (!s.line_angle) throw Error(Errc::parse_error, "line 0, line_angle, suite needs a line payload");
    return *s.line_angle;
}

double eval_concurrency(const Scene& s) {
    return forward_miquel(s.triangle, s.vertex, need_cevians(s), s.tolerance)
        .residual;
}

double eval_roundtrip_point(const Scene& s) {
    Point p = need_point(s);
    CevianPair cev = inverse_miquel(s.triangle, s.vertex, p, s.tolerance, 1e-6);
    MiquelConfig cfg = forward_miquel(s.triangle, s.vertex, cev, s.tolerance);
    return dist(cfg.m, p) / s.triangle.diameter();
}

double eval_roundtrip_params(const Scene& s) {
    CevianPair cev = need_cevians(s);
    MiquelConfig cfg = forward_miquel(s.triangle, s.vertex, cev, s.tolerance);
    CevianPair back = inverse_miquel(s.triangle, s.vertex, cfg.m, s.tolerance);
    double rb = std::abs(back.t_b - cev.t_b) / std::max(1.0, std::abs(cev.t_b));
    double rc = std::abs(back.t_c - cev.t_c) / std::max(1.0, std::abs(cev.t_c));
    return std::max(rb, rc);
}

double eval_locus_agreement(const Scene& s) {
    Point p = need_point(s);
    const double margin = 1e-6;
    LocusVerdict verdict =
        locus_membership(s.triangle, s.vertex, p, s.tolerance, margin);
    if (verdict == LocusVerdict::boundary ||
        verdict == LocusVerdict::inadmissible) {
        throw Error(Errc::boundary_ambiguous, "analytic margin");
    }
    bool both_internal = false;
    try {
        CevianPair cev =
            inverse_miquel(s.triangle, s.vertex, p, s.tolerance, margin);
        auto classes = classify_cevians(cev, margin);
        both_internal = classes.first == CevianClass::internal_cevian &&
                        classes.second == CevianClass::internal_cevian;
    } catch (const Error& err) {
        if (err.code() == Errc::excluded_cevian ||
            err.code() == Errc::boundary_ambiguous) {
            throw;  // parameter margin violated: skip the sample
        }
        return 1.0;  // inadmissible where the analytic side was decidable
    }
    return (verdict == LocusVerdict::member) == both_internal ? 0.0 : 1.0;
}

double eval_axis_symmedian(const Scene& s) {
    AuxiliaryData aux = auxiliary_data(s.triangle, s.vertex, s.tolerance);
    Line sym = symmedian_line(s.triangle, s.vertex, s.tolerance);
    return line_angle_gap(aux.axis, sym);
}

double eval_centre_relations(const Scene& s) {
    Triangle t = s.triangle.rotated(s.vertex);
    AuxiliaryData aux = auxiliary_data(s.triangle, s.vertex, s.tolerance);
    Point o = circumcircle(t.a, t.b, t.c, s.tolerance).center;
    if (dist(o, aux.main_centre) <= 1e-6 * t.diameter()) {
        throw Error(Errc::degenerate_oi, "skip near-degenerate gap");
    }
    CentreRelationResiduals r =
        centre_relation_residuals(s.triangle, s.vertex, s.tolerance);
    return std::max({r.concyclic, r.parallel_angle, r.perp_angle});
}

double eval_brocard_circle(const Scene& s) {
    Circle bc = brocard_circle(s.triangle, s.tolerance);
    Circle circ = circumcircle(s.triangle.a, s.triangle.b, s.triangle.c,
                               s.tolerance);
    std::array<Point, 3> pts = second_brocard_triangle(s.triangle, s.tolerance);
    double worst = std::abs(bc.signed_offset(circ.center)) / circ.radius;
    for (const Point& p : pts) {
        worst = std::max(worst, std::abs(bc.signed_offset(p)) / circ.radius);
    }
    return worst;
}

double eval_brocard_points(const Scene& s) {
    const Triangle& t = s.triangle;
    const Tolerance& tol = s.tolerance;
    auto [first, second] = brocard_points(t, tol);
    double diam = t.diameter();
    // Residuals on the third circle of each defining triple.
    double r1 = std::abs(tangent_aux(t.c, t.b, t.a, tol).signed_offset(first)) / diam;
    double r2 = std::abs(tangent_aux(t.c, t.a, t.b, tol).signed_offset(second)) / diam;
    // The three angles each point subtends against the side through the
    // corresponding vertex agree, and their cotangent matches the classic
    // identity cot w = cot A + cot B + cot C.
    double a_a = angle_at(t.a, t.b, t.c);
    double a_b = angle_at(t.b, t.c, t.a);
    double a_c = angle_at(t.c, t.a, t.b);
    double cot_expected =
        1.0 / std::tan(a_a) + 1.0 / std::tan(a_b) + 1.0 / std::tan(a_c);
    auto family = [&](Point p, Point ra, Point rb, Point rc) {
        double w1 = angle_at(t.a, p, ra);
        double w2 = angle_at(t.b, p, rb);
        double w3 = angle_at(t.c, p, rc);
        double spread = std::max({w1, w2, w3}) - std::min({w1, w2, w3});
        double w = (w1 + w2 + w3) / 3;
        double cot_gap = std::abs(1.0 / std::tan(w) - cot_expected) /
                         (1.0 + std::abs(cot_expected));
        return std::max(spread, cot_gap);
    };
    double f1 = family(first, t.c, t.a, t.b);   // sides AC, BA, CB
    double f2 = family(second, t.b, t.c, t.a);  // sides AB, BC, CA
    return std::max({r1, r2, f1, f2});
}

double eval_perpendicular_forward(const Scene& s) {
    PerpendicularityGaps gaps = perpendicularity_equivalence(
        s.triangle, s.vertex, need_cevians(s), s.tolerance);
    return std::max(gaps.angle_gap, gaps.tan_offset);
}

double eval_perpendicular_inverse(const Scene& s) {
    Point p = need_point(s);
    CevianPair cev = inverse_miquel(s.triangle, s.vertex, p, s.tolerance);
    PerpendicularityGaps gaps =
        perpendicularity_equivalence(s.triangle, s.vertex, cev, s.tolerance);
    return gaps.angle_gap;
}

double eval_parallel_forward(const Scene& s) {
    FeetSymmedianGaps gaps = feet_parallel_check(s.triangle, s.vertex,
                                                 need_cevians(s), s.tolerance);
    return std::max(gaps.feet_angle, gaps.symmedian_offset);
}

double eval_parallel_inverse(const Scene& s) {
    Point p = need_point(s);
    CevianPair cev = inverse_miquel(s.triangle, s.vertex, p, s.tolerance);
    FeetSymmedianGaps gaps =
        feet_parallel_check(s.triangle, s.vertex, cev, s.tolerance);
    return gaps.feet_angle;
}

double eval_meet_line(const Scene& s) {
    Point p = need_point(s);
    const Tolerance& tol = s.tolerance;
    Triangle t = s.triangle.rotated(s.vertex);
    double diam = t.diameter();
    UnitFrame fr = unit_frame(s.triangle, s.vertex);
    std::complex<double> z = fr.to_frame(p);
    double m = std::abs(z);
    double mu0 = std::arg(z);

    CevianPair cev = inverse_miquel(s.triangle, s.vertex, p, tol);
    MiquelConfig cfg = forward_miquel(s.triangle, s.vertex, cev, tol);
    Line image = meet_image_line(s.triangle, s.vertex, mu0, tol);
    FrameMeet fm = unit_frame_meet(fr.b0, fr.beta0, m, mu0, tol);

    double on_line = std::abs(image.signed_distance(cfg.n)) / diam;
    double dual_n = dist(fr.to_world(fm.n), cfg.n) / diam;
    double dual_b = dist(fr.to_world(fm.b_a), cfg.b_a) / diam;
    double dual_c = dist(fr.to_world(fm.c_a), cfg.c_a) / diam;
    // The image line direction is the input direction reflected about the
    // internal bisector at A.
    Point in_dir = fr.direction(mu0);
    Point w = normalize(normalize(t.b - t.a) + normalize(t.c - t.a));
    Point reflected = 2 * dot(in_dir, w) * w - in_dir;
    double dir_gap = line_angle_gap(Line{t.a, normalize(reflected)}, image);
    return std::max({on_line, dual_n, dual_b, dual_c, dir_gap});
}

double eval_isogonal_circle(const Scene& s) {
    double ang = need_angle(s);
    const Tolerance& tol = s.tolerance;
    Triangle t = s.triangle.rotated(s.vertex);
    double diam = t.diameter();
    IsogonalImage image = isogonal_circle(s.triangle, s.vertex, ang, tol);
    UnitFrame fr = unit_frame(s.triangle, s.vertex);
    Point dir = fr.direction(ang);
    // Held-out offsets, disjoint from the probe set used by the fit.
    static constexpr double k_holdout[] = {0.55,  1.05, 1.55,  2.05, -0.65,
                                           -1.15, 0.85, 1.72, -0.35, 2.45};
    std::vector<Point> samples;
    for (double k : k_holdout) {
        Point n = t.a + (k * diam) * dir;
        try {
            CevianPair cev = cevians_through_point(s.triangle, s.vertex, n, tol);
            samples.push_back(forward_miquel(s.triangle, s.vertex, cev, tol).m);
        } catch (const Error&) {
            continue;
        }
    }
    if (samples.size() < 6) {
        throw Error(Errc::degenerate_samples, "not enough held-out samples");
    }
    double worst = 0.0;
    for (const Point& p : samples) {
        if (const Circle* c = std::get_if<Circle>(&image)) {
            worst = std::max(worst, std::abs(c->signed_offset(p)) / diam);
        } else {
            worst = std::max(
                worst, std::abs(std::get<Line>(image).signed_distance(p)) / diam);
        }
    }
    // Inverting the samples about A must put them on a straight line.
    std::vector<Point> inverted;
    for (const Point& p : samples) {
        inverted.push_back(invert_point(p, t.a, diam * diam, tol));
    }
    Point centroid{0, 0};
    for (const Point& q : inverted) centroid = centroid + q;
    centroid = centroid / static_cast<double>(inverted.size());
    double cxx = 0, cxy = 0, cyy = 0;
    for (const Point& q : inverted) {
        Point d = q - centroid;
        cxx += d.x * d.x;
        cxy += d.x * d.y;
        cyy += d.y * d.y;
    }
    double theta = 0.5 * std::atan2(2 * cxy, cxx - cyy);
    Point axis{std::cos(theta), std::sin(theta)};
    double spread = 0.0;
    for (size_t i = 0; i < inverted.size(); ++i) {
        for (size_t j = i + 1; j < inverted.size(); ++j) {
            spread = std::max(spread, dist(inverted[i], inverted[j]));
        }
    }
    double fit = 0.0;
    for (const Point& q : inverted) {
        fit = std::max(fit, std::abs(cross(axis, q - centroid)));
    }
    return std::max(worst, spread > 0 ? fit / spread : 0.0);
}

double eval_side_lemma(const Scene& s) {
    Point p = need_point(s);
    CevianPair cev = inverse_miquel(s.triangle, s.vertex, p, s.tolerance, 1e-6);
    MiquelConfig cfg = forward_miquel(s.triangle, s.vertex, cev, s.tolerance);
    SideLemmaFlags flags = side_lemma_check(cfg, s.tolerance);
    return flags.m_on_bc == flags.a_feet_n_concyclic ? 0.0 : 1.0;
}

double eval_center_case(const Scene& s) {
    if (!s.center) {
        throw Error(Errc::parse_error, "line 0, center, suite needs a center payload");
    }
    auto resolve = [&]() -> CenterCaseReport {
        switch (*s.center) {
            case CenterKind::incenter:
                return incenter_case(s.triangle, s.vertex, s.tolerance);
            case CenterKind::orthocenter:
                return orthocenter_case(s.triangle, s.vertex, s.tolerance);
            default:
                return circumcenter_case(s.triangle, s.vertex, s.tolerance);
        }
    };
    CenterCaseReport report = resolve();
    double worst = 0.0;
    for (double r : report.residuals) worst = std::max(worst, r);
    return worst;
}

double eval_bisector_candidates(const Scene& s) {
    const Triangle& t0 = s.triangle;
    Triangle t = t0.rotated(s.vertex);
    std::array<Point, 4> cands =
        bisector_candidates(t0, s.vertex, s.tolerance);
    double a = dist(t.b, t.c), b = dist(t.c, t.a), c = dist(t.a, t.b);
    Point oracle[4] = {
        (a * t.a + b * t.b + c * t.c) / (a + b + c),
        (-a * t.a + b * t.b + c * t.c) / (-a + b + c),
        (a * t.a - b * t.b + c * t.c) / (a - b + c),
        (a * t.a + b * t.b - c * t.c) / (a + b - c),
    };
    double diam = t.diameter();
    double worst = 0.0;
    for (const Point& o : oracle) {
        double best = std::numeric_limits<double>::infinity();
        for (const Point& cand : cands) best = std::min(best, dist(o, cand));
        worst = std::max(worst, best / diam);
    }
    for (const Point& cand : cands) {
        double best = std::numeric_limits<double>::infinity();
        for (const Point& o : oracle) best = std::min(best, dist(o, cand));
        worst = std::max(worst, best / diam);
    }
    return worst;
}

double eval_tangency_limit(const Scene& s) {
    double theta = need_angle(s);
    const Tolerance& tol = s.tolerance;
    Triangle t = s.triangle.rotated(s.vertex);
    double diam = t.diameter();
    Point d0{std::cos(theta), std::sin(theta)};
    Line side_ac = Line::through(t.a, t.c);
    Line side_ab = Line::through(t.a, t.b);
    static constexpr double k_deltas[] = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    std::vector<std::pair<double, double>> pts;
    for (double delta : k_deltas) {
        Point dc{std::cos(theta + delta), std::sin(theta + delta)};
        LineIntersection hb = intersect_lines(Line{t.b, d0}, side_ac, tol);
        LineIntersection hc = intersect_lines(Line{t.c, dc}, side_ab, tol);
        if (hb.parallel || hc.parallel) continue;
        CevianPair cev{dot(hb.point - t.a, t.c - t.a) / norm2(t.c - t.a),
                       dot(hc.point - t.a, t.b - t.a) / norm2(t.b - t.a)};
        try {
            MiquelConfig cfg = forward_miquel(s.triangle, s.vertex, cev, tol);
            double r = dist(cfg.m, t.a) / diam;
            if (r > 0) pts.emplace_back(delta, r);
        } catch (const Error&) {
            continue;
        }
    }
    if (pts.size() < 4) {
        throw Error(Errc::degenerate_samples, "tangency ladder too short");
    }
    return std::abs(loglog_slope(pts) - 1.0);
}

double eval_limit_circles(const Scene& s) {
    const Tolerance& tol = s.tolerance;
    Triangle t = s.triangle.rotated(s.vertex);
    double diam = t.diameter();
    AuxiliaryData aux = auxiliary_data(s.triangle, s.vertex, tol);
    Circle circ = circumcircle(t.a, t.b, t.c, tol);
    static constexpr double k_eps[] = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    std::vector<std::pair<double, double>> to_aux, to_circ;
    for (double eps : k_eps) {
        Point foot0 = t.a + eps * (t.b - t.a);
        Circle c0 = circumcircle(t.a, t.c, foot0, tol);
        to_aux.emplace_back(
            eps, (dist(c0.center, aux.omega_ab.center) +
                  std::abs(c0.radius - aux.omega_ab.radius)) / diam);
        Point foot1 = t.a + (1.0 - eps) * (t.b - t.a);
        Circle c1 = circumcircle(t.a, t.c, foot1, tol);
        to_circ.emplace_back(eps, (dist(c1.center, circ.center) +
                                   std::abs(c1.radius - circ.radius)) / diam);
    }
    return std::max(std::abs(loglog_slope(to_aux) - 1.0),
                    std::abs(loglog_slope(to_circ) - 1.0));
}

double eval_determinism(const Scene& s) {
    ConstructReport rep1 = build_construct_report(s);
    ConstructReport rep2 = build_construct_report(s);
    std::string text1 = construct_report_text(s, rep1);
    std::string text2 = construct_report_text(s, rep2);
    std::string svg1 = render_svg(s);
    std::string svg2 = render_svg(s);
    SweepSpec spec;
    spec.samples = 60;
    spec.seed = 7;
    std::string csv1 = sweep_csv(run_sweep(s, spec));
    std::string csv2 = sweep_csv(run_sweep(s, spec));
    bool same = text1 == text2 && svg1 == svg2 && csv1 == csv2;
    return same ? 0.0 : 1.0;
}

// -------------------------------------------------------------- generators

using Generator = std::function<Scene(Rng&)>;

Generator make_cevian_generator() {
    return [](Rng& rng) {
        Triangle tri = random_triangle(rng, {});
        return with_cevians(tri, random_vertex(rng),
                            {random_param(rng), random_param(rng)});
    };
}

Generator make_box_point_generator(double box_scale) {
    return [box_scale](Rng& rng) {
        Triangle tri = random_triangle(rng, {});
        VertexLabel v = random_vertex(rng);
        Circle circ = circumcircle(tri.a, tri.b, tri.c);
        double half = box_scale * circ.radius;
        Point p = circ.center +
                  Point{rng.uniform(-half, half), rng.uniform(-half, half)};
        return with_point(tri, v, p);
    };
}

Generator make_locus_generator(int total) {
    int per_triangle = std::max(1, total / std::max(1, total / 10000));
    auto state = std::make_shared<std::pair<int, std::vector<Triangle>>>();
    return [per_triangle, state](Rng& rng) {
        if (state->first % per_triangle == 0) {
            state->second.clear();
            state->second.push_back(random_triangle(rng, {}));
        }
        int i = state->first++;
        const Triangle& tri = state->second.back();
        VertexLabel v = VertexLabel::a;
        Triangle t = tri.rotated(v);
        Circle circ = circumcircle(t.a, t.b, t.c);
        AuxiliaryData aux = auxiliary_data(tri, v);
        Point p;
        if (i % 5 < 3) {
            double half = 3.0 * circ.radius;
            p = circ.center +
                Point{rng.uniform(-half, half), rng.uniform(-half, half)};
        } else {
            const Circle rings[3] = {circ, aux.omega_ab, aux.omega_ac};
            const double scales[3] = {1e-2, 1e-3, 1e-4};
            const Circle& ring = rings[(i / 5) % 3];
            double scale = scales[(i / 15) % 3];
            double phi = rng.uniform(0.0, 2 * k_pi);
            double off = rng.uniform(-1.0, 1.0) * scale * t.diameter();
            p = ring.center + (ring.radius + off) *
                                  Point{std::cos(phi), std::sin(phi)};
        }
        return with_point(tri, v, p);
    };
}

Generator make_vertex_generator() {
    // Cycles the distinguished vertex over a fresh triangle every 3 samples.
    auto state = std::make_shared<std::pair<int, std::vector<Triangle>>>();
    return [state](Rng& rng) {
        if (state->first % 3 == 0) {
            state->second.clear();
            state->second.push_back(random_triangle(rng, {}));
        }
        int i = state->first++;
        VertexLabel v = i % 3 == 0   ? VertexLabel::a
                        : i % 3 == 1 ? VertexLabel::b
                                     : VertexLabel::c;
        return with_cevians(state->second.back(), v, {0.5, 0.5});
    };
}

Generator make_scalene_generator() {
    return [](Rng& rng) {
        TriangleSpec spec;
        spec.avoid_equilateral = true;
        Triangle tri = random_triangle(rng, spec);
        return with_cevians(tri, VertexLabel::a, {0.5, 0.5});
    };
}

Generator make_perp_forward_generator() {
    return [](Rng& rng) {
        TriangleSpec spec;
        spec.vertex_max_angle = k_pi / 2 - 0.1;
        spec.vertex_min_angle = 0.3;
        VertexLabel v = random_vertex(rng);
        for (;;) {
            Triangle tri = random_triangle(rng, spec, v);
            Triangle t = tri.rotated(v);
            // Cevian meet on the circle with diameter BC makes the cevians
            // perpendicular; stay away from B and C themselves.
            Circle thales{midpoint(t.b, t.c), dist(t.b, t.c) / 2};
            double phi_b = std::atan2(t.b.y - thales.center.y,
                                      t.b.x - thales.center.x);
            double phi = rng.uniform(0.0, 2 * k_pi);
            if (angle_gap_mod_pi(phi, phi_b) < 0.08) continue;
            Point n = thales.center +
                      thales.radius * Point{std::cos(phi), std::sin(phi)};
            try {
                CevianPair cev = cevians_through_point(tri, v, n, {}, 1e-6);
                return with_cevians(tri, v, cev);
            } catch (const Error&) {
                continue;
            }
        }
    };
}

Generator make_perp_inverse_generator() {
    return [](Rng& rng) {
        TriangleSpec spec;
        spec.vertex_max_angle = k_pi / 2 - 0.1;
        spec.vertex_min_angle = 0.3;
        VertexLabel v = random_vertex(rng);
        for (;;) {
            Triangle tri = random_triangle(rng, spec, v);
            Triangle t = tri.rotated(v);
            Circle ring = omega_tan(tri, v);
            double phi_b =
                std::atan2(t.b.y - ring.center.y, t.b.x - ring.center.x);
            double phi_c =
                std::atan2(t.c.y - ring.center.y, t.c.x - ring.center.x);
            double phi = rng.uniform(0.0, 2 * k_pi);
            double gap_b = std::abs(std::remainder(phi - phi_b, 2 * k_pi));
            double gap_c = std::abs(std::remainder(phi - phi_c, 2 * k_pi));
            if (gap_b < 0.08 || gap_c < 0.08) continue;
            Point p = ring.center +
                      ring.radius * Point{std::cos(phi), std::sin(phi)};
            try {
                inverse_miquel(tri, v, p, {});
            } catch (const Error&) {
                continue;
            }
            return with_point(tri, v, p);
        }
    };
}

Generator make_parallel_forward_generator() {
    return [](Rng& rng) {
        Triangle tri = random_triangle(rng, {});
        double t = random_param(rng);
        return with_cevians(tri, random_vertex(rng), {t, t});
    };
}

Generator make_parallel_inverse_generator() {
    return [](Rng& rng) {
        for (;;) {
            Triangle tri = random_triangle(rng, {});
            VertexLabel v = random_vertex(rng);
            Line sym = symmedian_line(tri, v);
            double u = rng.uniform(0.15, 2.2);
            if (rng.index(2) == 0) u = -u;
            Point p = sym.at(u * tri.diameter());
            try {
                inverse_miquel(tri, v, p, {});
            } catch (const Error&) {
                continue;
            }
            return with_point(tri, v, p);
        }
    };
}

Generator make_meet_line_generator() {
    return [](Rng& rng) {
        for (;;) {
            Triangle tri = random_triangle(rng, {});
            VertexLabel v = random_vertex(rng);
            UnitFrame fr = unit_frame(tri, v);
            double mu0 = rng.uniform(0.0, k_pi);
            if (angle_gap_mod_pi(mu0, 0.0) < 0.05 ||
                angle_gap_mod_pi(mu0, fr.beta0) < 0.05) {
                continue;
            }
            double m = rng.uniform(0.25, 2.8);
            if (rng.index(2) == 0) m = -m;
            Point p = fr.to_world(std::polar(std::abs(m), m > 0 ? mu0 : mu0 + k_pi));
            try {
                inverse_miquel(tri, v, p, {});
            } catch (const Error&) {
                continue;
            }
            return with_point(tri, v, p);
        }
    };
}

Generator make_isogonal_generator() {
    return [](Rng& rng) {
        for (;;) {
            Triangle tri = random_triangle(rng, {});
            VertexLabel v = random_vertex(rng);
            UnitFrame fr = unit_frame(tri, v);
            Triangle t = tri.rotated(v);
            std::complex<double> median_z = fr.to_frame(midpoint(t.b, t.c));
            double median_angle = std::arg(median_z);
            double ang = rng.uniform(0.0, k_pi);
            if (angle_gap_mod_pi(ang, 0.0) < 0.05 ||
                angle_gap_mod_pi(ang, fr.beta0) < 0.05 ||
                angle_gap_mod_pi(ang, median_angle) < 0.02) {
                continue;
            }
            return with_angle(tri, v, ang);
        }
    };
}

Generator make_side_lemma_generator() {
    auto counter = std::make_shared<int>(0);
    return [counter](Rng& rng) {
        Triangle tri = random_triangle(rng, {});
        VertexLabel v = random_vertex(rng);
        Triangle t = tri.rotated(v);
        int i = (*counter)++;
        if (i % 2 == 0) {
            // On line BC, away from B and C (which sit on the circumcircle).
            for (;;) {
                double u = rng.uniform(-1.2, 2.2);
                if (std::abs(u) < 0.05 || std::abs(u - 1.0) < 0.05) continue;
                return with_point(tri, v, t.b + u * (t.c - t.b));
            }
        }
        Circle circ = circumcircle(t.a, t.b, t.c);
        double half = 2.2 * circ.radius;
        Point p = circ.center +
                  Point{rng.uniform(-half, half), rng.uniform(-half, half)};
        return with_point(tri, v, p);
    };
}

Generator make_center_fixture_generator() {
    auto counter = std::make_shared<int>(0);
    return [counter](Rng&) {
        Triangle right(Point{0, 0}, Point{4, 0}, Point{0, 3});
        Triangle acute(Point{0, 0}, Point{4, 0}, Point{1, 3});
        const Scene fixtures[6] = {
            with_center(right, VertexLabel::a, CenterKind::incenter),
            with_center(acute, VertexLabel::b, CenterKind::incenter),
            with_center(acute, VertexLabel::a, CenterKind::orthocenter),
            with_center(acute, VertexLabel::c, CenterKind::orthocenter),
            with_center(right, VertexLabel::a, CenterKind::circumcenter),
            with_center(acute, VertexLabel::a, CenterKind::circumcenter),
        };
        return fixtures[(*counter)++ % 6];
    };
}

Generator make_center_sweep_generator() {
    return [](Rng& rng) {
        Triangle tri = random_triangle(rng, {});
        VertexLabel v = random_vertex(rng);
        std::size_t pick = rng.index(3);
        CenterKind kind = pick == 0   ? CenterKind::incenter
                          : pick == 1 ? CenterKind::orthocenter
                                      : CenterKind::circumcenter;
        return with_center(tri, v, kind);
    };
}

Generator make_bisector_generator() {
    return [](Rng& rng) {
        Triangle tri = random_triangle(rng, {});
        return with_cevians(tri, random_vertex(rng), {0.5, 0.5});
    };
}

Generator make_tangency_generator() {
    return [](Rng& rng) {
        for (;;) {
            Triangle tri = random_triangle(rng, {});
            VertexLabel v = random_vertex(rng);
            Triangle t = tri.rotated(v);
            double theta = rng.uniform(0.0, 2 * k_pi);
            Point d0{std::cos(theta), std::sin(theta)};
            // The base direction must cross both opposite side lines cleanly.
            Point dir_ac = normalize(t.c - t.a);
            Point dir_ab = normalize(t.b - t.a);
            if (std::abs(cross(d0, dir_ac)) < 0.15 ||
                std::abs(cross(d0, dir_ab)) < 0.15) {
                continue;
            }
            return with_angle(tri, v, theta);
        }
    };
}

Generator make_limit_circles_generator() {
    return [](Rng& rng) {
        Triangle tri = random_triangle(rng, {});
        return with_cevians(tri, random_vertex(rng), {0.5, 0.5});
    };
}

Generator make_determinism_generator() {
    return [](Rng& rng) {
        Triangle tri = random_triangle(rng, {});
        VertexLabel v = random_vertex(rng);
        Circle circ = circumcircle(tri.a, tri.b, tri.c);
        for (;;) {
            Point p = circ.center + Point{rng.uniform(-circ.radius, circ.radius),
                                          rng.uniform(-circ.radius, circ.radius)};
            try {
                inverse_miquel(tri, v, p, {});
            } catch (const Error&) {
                continue;
            }
            return with_point(tri, v, p);
        }
    };
}

// ------------------------------------------------------------- suite table

struct SuiteDef {
    const char* name;
    double limit;
    int default_samples;
    double (*eval)(const Scene&);
    Generator (*make_gen)(int total);
    const char* about;
};

Generator gen_cevian(int) { return make_cevian_generator(); }
Generator gen_box_point(int) { return make_box_point_generator(1.6); }
Generator gen_locus(int total) { return make_locus_generator(total); }
Generator gen_vertex(int) { return make_vertex_generator(); }
Generator gen_scalene(int) { return make_scalene_generator(); }
Generator gen_perp_fwd(int) { return make_perp_forward_generator(); }
Generator gen_perp_inv(int) { return make_perp_inverse_generator(); }
Generator gen_par_fwd(int) { return make_parallel_forward_generator(); }
Generator gen_par_inv(int) { return make_parallel_inverse_generator(); }
Generator gen_meet(int) { return make_meet_line_generator(); }
Generator gen_isogonal(int) { return make_isogonal_generator(); }
Generator gen_side(int) { return make_side_lemma_generator(); }
Generator gen_center_fix(int) { return make_center_fixture_generator(); }
Generator gen_center_sweep(int) { return make_center_sweep_generator(); }
Generator gen_bisector(int) { return make_bisector_generator(); }
Generator gen_tangency(int) { return make_tangency_generator(); }
Generator gen_limit_circles(int) { return make_limit_circles_generator(); }
Generator gen_determinism(int) { return make_determinism_generator(); }

const SuiteDef k_suites[] = {
    {"concurrency", 1e-9, 10000, eval_concurrency, gen_cevian,
     "all four defining circles pass through the Miquel point"},
    {"roundtrip-point", 1e-8, 10000, eval_roundtrip_point, gen_box_point,
     "forward of inverse returns the sampled Miquel point"},
    {"roundtrip-params", 1e-8, 10000, eval_roundtrip_params, gen_cevian,
     "inverse of forward returns the sampled cevian parameters"},
    {"locus-agreement", 0.0, 200000, eval_locus_agreement, gen_locus,
     "analytic locus membership matches the inverse-map classification"},
    {"axis-symmedian", 1e-10, 1000, eval_axis_symmedian, gen_vertex,
     "the axis through the second intersection is the symmedian"},
    {"brocard-circle", 1e-9, 1000, eval_brocard_circle, gen_scalene,
     "the circumcentre lies on the circle of the three second points"},
    {"centre-relations", 1e-9, 3000, eval_centre_relations, gen_vertex,
     "auxiliary centres, second point and circumcentre relations"},
    {"brocard-points", 1e-9, 1000, eval_brocard_points, gen_scalene,
     "tangent-circle triples meet at the Brocard points"},
    {"perpendicular-forward", 1e-9, 1000, eval_perpendicular_forward,
     gen_perp_fwd, "perpendicular cevians put the Miquel point on omega_tan"},
    {"perpendicular-inverse", 1e-8, 1000, eval_perpendicular_inverse,
     gen_perp_inv, "Miquel points on omega_tan give perpendicular cevians"},
    {"parallel-feet-forward", 1e-9, 1000, eval_parallel_forward, gen_par_fwd,
     "equal parameters put the Miquel point on the symmedian"},
    {"parallel-feet-inverse", 1e-8, 1000, eval_parallel_inverse, gen_par_inv,
     "Miquel points on the symmedian make the feet line parallel to BC"},
    {"meet-line", 1e-9, 1000, eval_meet_line, gen_meet,
     "closed-form and geometric meets agree and trace the image line"},
    {"isogonal-circle", 1e-8, 400, eval_isogonal_circle, gen_isogonal,
     "meets on a line through A map to Miquel points on a circle"},
    {"side-lemma", 0.0, 2000, eval_side_lemma, gen_side,
     "Miquel point on BC iff A and the feet and the meet are concyclic"},
    {"center-fixtures", 1e-10, 6, eval_center_case, gen_center_fix,
     "worked centre configurations reproduce to high accuracy"},
    {"center-sweeps", 1e-9, 600, eval_center_case, gen_center_sweep,
     "centre constructions hold across random triangles"},
    {"bisector-candidates", 1e-9, 600, eval_bisector_candidates, gen_bisector,
     "bisector intersections give the incenter and the three excenters"},
    {"tangency-limit", 0.2, 50, eval_tangency_limit, gen_tangency,
     "second intersection approaches A linearly as cevians turn parallel"},
    {"limit-circles", 0.25, 50, eval_limit_circles, gen_limit_circles,
     "defining circles converge to tangent circle and circumcircle"},
    {"determinism", 0.0, 5, eval_determinism, gen_determinism,
     "reports, sweeps and figures are byte-stable within a process"},
};

const SuiteDef* find_suite(const std::string& name) {
    for (const SuiteDef& def : k_suites) {
        if (name == def.name) return &def;
    }
    return nullptr;
}

std::uint64_t mix_seed(std::uint64_t seed, const std::string& name) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return seed * 0x9E3779B97F4A7C15ull + h;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const SuiteDef& def : k_suites) out.emplace_back(def.name);
        return out;
    }();
    return names;
}

std::string suite_about(const std::string& suite) {
    const SuiteDef* def = find_suite(suite);
    if (!def) throw Error(Errc::unknown_suite, suite);
    return def->about;
}

double evaluate_sample(const std::string& suite, const Scene& scene) {
    const SuiteDef* def = find_suite(suite);
    if (!def) throw Error(Errc::unknown_suite, suite);
    return def->eval(scene);
}

PropertyResult run_suite(const std::string& suite, std::uint64_t seed,
                         int samples) {
    const SuiteDef* def = find_suite(suite);
    if (!def) throw Error(Errc::unknown_suite, suite);
    int total = samples > 0 ? samples : def->default_samples;
    Rng rng(mix_seed(seed, def->name));
    Generator gen = def->make_gen(total);

    PropertyResult result;
    result.suite = def->name;
    result.limit = def->limit;
    for (int i = 0; i < total; ++i) {
        Scene scene = gen(rng);
        double value = 0.0;
        try {
            value = def->eval(scene);
        } catch (const Error&) {
            ++result.skipped;
            continue;
        }
        ++result.evaluated;
        if (result.evaluated == 1 || value > result.worst) {
            result.worst = value;
            result.worst_scene = serialize_scene_line(scene);
        }
    }
    result.pass = result.evaluated > 0 && result.worst <= result.limit;
    if (result.evaluated == 0) result.note = "no evaluable samples";
    return result;
}

std::string property_result_text(const PropertyResult& r) {
    std::ostringstream os;
    os << r.suite << ": " << (r.pass ? "PASS" : "FAIL")
       << " worst=" << real_text(r.worst, 6) << " limit="
       << real_text(r.limit, 6) << " evaluated=" << r.evaluated
       << " skipped=" << r.skipped << "\n";
    if (!r.worst_scene.empty()) {
        os << "  worst-sample: " << r.worst_scene << "\n";
    }
    if (!r.note.empty()) {
        os << "  note: " << r.note << "\n";
    }
    return os.str();
}

}  // namespace miquel
