#include "miquel/miquel_map.hpp"

#include <algorithm>
#include <cmath>

namespace miquel {

namespace {

void check_cevian_param(double t, double margin, const char* which) {
    if (std::abs(t) <= margin || std::abs(t - 1.0) <= margin) {
        throw Error(Errc::excluded_cevian, which);
    }
    if (!std::isfinite(t)) {
        throw Error(Errc::excluded_cevian, which);
    }
}

}  // namespace

const char* cevian_class_name(CevianClass c) {
    return c == CevianClass::internal_cevian ? "internal" : "external";
}

std::pair<Point, Point> cevian_points(const Triangle& tri, VertexLabel vertex,
                                      const CevianPair& cev,
                                      const Tolerance& tol, double margin) {
    (void)tol;
    check_cevian_param(cev.t_b, margin, "t_b");
    check_cevian_param(cev.t_c, margin, "t_c");
    Triangle t = tri.rotated(vertex);
    Point b_a = t.a + cev.t_b * (t.c - t.a);
    Point c_a = t.a + cev.t_c * (t.b - t.a);
    return {b_a, c_a};
}

Point cevian_intersection(const Triangle& tri, VertexLabel vertex,
                          const CevianPair& cev, const Tolerance& tol,
                          double margin) {
    auto [b_a, c_a] = cevian_points(tri, vertex, cev, tol, margin);
    Triangle t = tri.rotated(vertex);
    Line from_b = Line::through(t.b, b_a);
    Line from_c = Line::through(t.c, c_a);
    LineIntersection hit = intersect_lines(from_b, from_c, tol);
    if (hit.parallel) throw Error(Errc::parallel_cevians);
    return hit.point;
}

MiquelConfig forward_miquel(const Triangle& tri, VertexLabel vertex,
                            const CevianPair& cev, const Tolerance& tol,
                            double margin) {
    auto [b_a, c_a] = cevian_points(tri, vertex, cev, tol, margin);
    Triangle t = tri.rotated(vertex);
    Line from_b = Line::through(t.b, b_a);
    Line from_c = Line::through(t.c, c_a);
    LineIntersection hit = intersect_lines(from_b, from_c, tol);
    if (hit.parallel) throw Error(Errc::parallel_cevians);
    Point n = hit.point;

    // Both circles pass through A, so the two intersection points are
    // mirror images in the line of centers; the Miquel point is the mirror
    // image of A.
    Circle on_ab = circumcircle(t.a, t.b, b_a, tol);
    Circle on_ac = circumcircle(t.a, t.c, c_a, tol);
    Point m = reflect_point_about_line(t.a, Line::through(on_ab.center, on_ac.center));
    if (dist(m, t.a) <= tol.effective(t.diameter())) {
        throw Error(Errc::tangent_at_a);
    }

    MiquelConfig config{tri, vertex, cev, b_a, c_a, n, m, 0.0};
    config.residual = concurrency_residual(config, tol);
    return config;
}

CevianPair cevians_through_point(const Triangle& tri, VertexLabel vertex,
                                 Point n, const Tolerance& tol, double margin) {
    Triangle t = tri.rotated(vertex);
    Line ac = Line::through(t.a, t.c);
    Line ab = Line::through(t.a, t.b);
    LineIntersection hb = intersect_lines(Line::through(t.b, n), ac, tol);
    LineIntersection hc = intersect_lines(Line::through(t.c, n), ab, tol);
    if (hb.parallel || hc.parallel) throw Error(Errc::parallel_cevians);
    double t_b = dot(hb.point - t.a, t.c - t.a) / norm2(t.c - t.a);
    double t_c = dot(hc.point - t.a, t.b - t.a) / norm2(t.b - t.a);
    check_cevian_param(t_b, margin, "t_b");
    check_cevian_param(t_c, margin, "t_c");
    return CevianPair{t_b, t_c};
}

CevianPair inverse_miquel(const Triangle& tri, VertexLabel vertex, Point m,
                          const Tolerance& tol, double margin) {
    Triangle t = tri.rotated(vertex);
    double diam = t.diameter();
    double band = std::max(margin * diam, tol.effective(diam));

    Circle circ = circumcircle(t.a, t.b, t.c, tol);
    if (std::abs(circ.signed_offset(m)) <= band) {
        throw Error(Errc::inadmissible_point, "on_circumcircle");
    }
    Line ab = Line::through(t.a, t.b);
    if (std::abs(ab.signed_distance(m)) <= band) {
        throw Error(Errc::inadmissible_point, "on_AB");
    }
    Line ac = Line::through(t.a, t.c);
    if (std::abs(ac.signed_distance(m)) <= band) {
        throw Error(Errc::inadmissible_point, "on_AC");
    }

    // B_A is the second intersection of the circle through A, B, m with
    // line AC; dually for C_A. Both lines are anchored at A, which lies on
    // both circles, so the quadratic t^2 |u|^2 + 2 t <u, A - O> = 0 has the
    // foot at its nonzero root.
    Circle through_b = circumcircle(t.a, t.b, m, tol);
    Circle through_c = circumcircle(t.a, t.c, m, tol);
    Point u_c = t.c - t.a;
    Point u_b = t.b - t.a;
    double t_b = -2.0 * dot(u_c, t.a - through_b.center) / norm2(u_c);
    double t_c = -2.0 * dot(u_b, t.a - through_c.center) / norm2(u_b);
    check_cevian_param(t_b, margin, "t_b");
    check_cevian_param(t_c, margin, "t_c");
    return CevianPair{t_b, t_c};
}

double concurrency_residual(const MiquelConfig& config, const Tolerance& tol) {
    Triangle t = config.triangle.rotated(config.vertex);
    double diam = t.diameter();
    const Point triples[4][3] = {
        {t.a, t.b, config.b_a},
        {t.a, t.c, config.c_a},
        {t.c, config.b_a, config.n},
        {t.b, config.c_a, config.n},
    };
    double worst = 0.0;
    for (const auto& tr : triples) {
        Circle c = circumcircle(tr[0], tr[1], tr[2], tol);
        worst = std::max(worst, std::abs(c.signed_offset(config.m)) / diam);
    }
    return worst;
}

std::pair<CevianClass, CevianClass> classify_cevians(const CevianPair& cev,
                                                     double margin) {
    auto classify = [margin](double t, const char* which) {
        if (std::abs(t) <= margin || std::abs(t - 1.0) <= margin) {
            throw Error(Errc::boundary_ambiguous, which);
        }
        return (t > 0.0 && t < 1.0) ? CevianClass::internal_cevian
                                    : CevianClass::external_cevian;
    };
    return {classify(cev.t_b, "t_b"), classify(cev.t_c, "t_c")};
}

SideLemmaFlags side_lemma_check(const MiquelConfig& config,
                                const Tolerance& tol) {
    Triangle t = config.triangle.rotated(config.vertex);
    double diam = t.diameter();
    Line bc = Line::through(t.b, t.c);
    SideLemmaFlags flags;
    flags.m_on_bc = std::abs(bc.signed_distance(config.m)) <= tol.effective(diam);
    try {
        double res = concyclic_residual(t.a, config.b_a, config.c_a, config.n, tol);
        Point pts[4] = {t.a, config.b_a, config.c_a, config.n};
        double spread = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                spread = std::max(spread, dist(pts[i], pts[j]));
        flags.a_feet_n_concyclic = res * spread <= tol.effective(spread);
    } catch (const Error& err) {
        if (err.code() != Errc::all_collinear) throw;
        // Collinear quadruple counts as lying on a degenerate circle.
        flags.a_feet_n_concyclic = true;
    }
    return flags;
}

}  // namespace miquel
