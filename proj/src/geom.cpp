#include "miquel/geom.hpp"

#include <algorithm>
#include <cmath>

namespace miquel {

namespace {

// Conditioning floor used when picking triples in concyclic_residual: a
// triple is preferred when its doubled area exceeds this fraction of diam^2.
constexpr double k_triple_area_floor = 1e-7;

double max_pairwise_dist(const Point* pts, int n) {
    double d = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d = std::max(d, dist(pts[i], pts[j]));
    return d;
}

}  // namespace

Point normalize(Point p) {
    double n = norm(p);
    if (!(n > 0.0)) throw Error(Errc::degenerate_ray, "zero direction");
    return p / n;
}

Line Line::through(Point a, Point b) {
    return Line{a, normalize(b - a)};
}

const char* vertex_name(VertexLabel v) {
    switch (v) {
        case VertexLabel::a: return "A";
        case VertexLabel::b: return "B";
        case VertexLabel::c: return "C";
    }
    return "?";
}

Triangle::Triangle(Point a_, Point b_, Point c_, const Tolerance& tol)
    : a(a_), b(b_), c(c_) {
    if (!std::isfinite(a.x) || !std::isfinite(a.y) || !std::isfinite(b.x) ||
        !std::isfinite(b.y) || !std::isfinite(c.x) || !std::isfinite(c.y)) {
        throw Error(Errc::degenerate_triangle, "non-finite vertex");
    }
    double d = diameter();
    double det = cross(b - a, c - a);
    if (!(std::abs(det) > tol.effective(d) * d * d)) {
        throw Error(Errc::degenerate_triangle, "collinear or coincident vertices");
    }
}

double Triangle::diameter() const {
    return std::max({dist(a, b), dist(b, c), dist(c, a)});
}

Point Triangle::vertex(VertexLabel v) const {
    switch (v) {
        case VertexLabel::a: return a;
        case VertexLabel::b: return b;
        case VertexLabel::c: return c;
    }
    return a;
}

Triangle Triangle::rotated(VertexLabel v) const {
    switch (v) {
        case VertexLabel::a: return *this;
        case VertexLabel::b: return Triangle(b, c, a);
        case VertexLabel::c: return Triangle(c, a, b);
    }
    return *this;
}

int orientation(Point p, Point q, Point r, const Tolerance& tol) {
    double two_area = cross(q - p, r - p);
    Point pts[3] = {p, q, r};
    double diam = max_pairwise_dist(pts, 3);
    if (std::abs(two_area) / 2 <= tol.effective(diam)) return 0;
    return two_area > 0 ? 1 : -1;
}

Circle circumcircle(Point p, Point q, Point r, const Tolerance& tol) {
    if (orientation(p, q, r, tol) == 0) {
        throw Error(Errc::collinear_input);
    }
    // Use the perpendicular bisectors of the two shortest sides: dropping
    // the longest side keeps the bisector intersection well conditioned.
    Point v[3] = {p, q, r};
    double side[3] = {dist(q, r), dist(r, p), dist(p, q)};  // side[i] opposite v[i]
    int longest = 0;
    if (side[1] > side[longest]) longest = 1;
    if (side[2] > side[longest]) longest = 2;
    // The two shortest sides both have v[longest] as an endpoint.
    Point apex = v[longest];
    Point u1 = v[(longest + 1) % 3];
    Point u2 = v[(longest + 2) % 3];
    Line b1{midpoint(apex, u1), normalize(perp(u1 - apex))};
    Line b2{midpoint(apex, u2), normalize(perp(u2 - apex))};
    double denom = cross(b1.dir, b2.dir);
    double t = cross(b2.anchor - b1.anchor, b2.dir) / denom;
    Point center = b1.at(t);
    double radius = (dist(center, p) + dist(center, q) + dist(center, r)) / 3;
    return Circle{center, radius};
}

LineIntersection intersect_lines(const Line& l1, const Line& l2,
                                 const Tolerance& tol) {
    double denom = cross(l1.dir, l2.dir);  // sine of the angle between them
    if (std::abs(denom) <= tol.relative_eps) {
        double scale = std::max(1.0, dist(l1.anchor, l2.anchor));
        bool coincident =
            std::abs(l1.signed_distance(l2.anchor)) <= tol.effective(scale);
        return LineIntersection{true, coincident, {}};
    }
    double t = cross(l2.anchor - l1.anchor, l2.dir) / denom;
    return LineIntersection{false, false, l1.at(t)};
}

CircleHits intersect_circle_line(const Circle& c, const Line& l,
                                 const Tolerance& tol) {
    Point foot = l.foot(c.center);
    double d = dist(foot, c.center);
    double band = tol.effective(2 * c.radius);
    if (d > c.radius + band) return {};
    if (std::abs(d - c.radius) <= band) return {{foot}, true};
    double h = std::sqrt(std::max(0.0, c.radius * c.radius - d * d));
    return {{foot - h * l.dir, foot + h * l.dir}, false};
}

CircleHits intersect_circles(const Circle& c1, const Circle& c2,
                             const Tolerance& tol) {
    double d = dist(c1.center, c2.center);
    double scale = std::max({d, c1.radius, c2.radius});
    double band = tol.effective(2 * scale);
    if (d <= band && std::abs(c1.radius - c2.radius) <= band) {
        throw Error(Errc::coincident_circles);
    }
    if (d > c1.radius + c2.radius + band) return {};
    if (d < std::abs(c1.radius - c2.radius) - band) return {};
    Point axis = (c2.center - c1.center) / d;
    double a = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2 * d);
    bool tangent = std::abs(d - (c1.radius + c2.radius)) <= band ||
                   std::abs(d - std::abs(c1.radius - c2.radius)) <= band;
    if (tangent) return {{c1.center + a * axis}, true};
    double h = std::sqrt(std::max(0.0, c1.radius * c1.radius - a * a));
    Point base = c1.center + a * axis;
    Point off = h * perp(axis);
    return {{base - off, base + off}, false};
}

Line tangent_line_at(const Circle& c, Point p, const Tolerance& tol) {
    if (std::abs(c.signed_offset(p)) > tol.effective(2 * c.radius)) {
        throw Error(Errc::point_not_on_circle);
    }
    return Line{p, normalize(perp(p - c.center))};
}

Circle tangent_circle_through(const Line& tangent, Point touch, Point through,
                              const Tolerance& tol) {
    Point w = through - touch;
    Point n = perp(tangent.dir);  // unit normal of the tangent line
    double offset = dot(n, w);    // signed distance of `through` from the line
    if (std::abs(offset) <= tol.effective(norm(w))) {
        throw Error(Errc::through_point_on_tangent);
    }
    // Center lies on the normal at `touch`: |s n - w|^2 = s^2 gives s.
    double s = dot(w, w) / (2 * offset);
    return Circle{touch + s * n, std::abs(s)};
}

Point invert_point(Point p, Point center, double power, const Tolerance& tol) {
    Point v = p - center;
    double d2 = norm2(v);
    double scale = std::sqrt(std::abs(power));
    if (std::sqrt(d2) <= tol.effective(scale)) {
        throw Error(Errc::center_inversion);
    }
    return center + (power / d2) * v;
}

double angle_at(Point vertex, Point p, Point q, const Tolerance& tol) {
    Point u = p - vertex;
    Point v = q - vertex;
    double scale = std::max(norm(u), norm(v));
    double floor = tol.effective(scale);
    if (norm(u) <= floor || norm(v) <= floor) {
        throw Error(Errc::degenerate_ray);
    }
    return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

Point reflect_point_about_line(Point p, const Line& l) {
    Point f = l.foot(p);
    return 2 * f - p;
}

double concyclic_residual(Point p1, Point p2, Point p3, Point p4,
                          const Tolerance& tol) {
    Point pts[4] = {p1, p2, p3, p4};
    double diam = max_pairwise_dist(pts, 4);
    struct Candidate {
        double area2;
        double residual;
    };
    std::vector<Candidate> valid;
    for (int skip = 0; skip < 4; ++skip) {
        Point t[3];
        int k = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip) t[k++] = pts[i];
        if (orientation(t[0], t[1], t[2], tol) == 0) continue;
        Circle c = circumcircle(t[0], t[1], t[2], tol);
        double res = std::abs(c.signed_offset(pts[skip])) / diam;
        valid.push_back({std::abs(cross(t[1] - t[0], t[2] - t[0])), res});
    }
    if (valid.empty()) throw Error(Errc::all_collinear);
    // Prefer well-conditioned triples when any exist; otherwise fall back
    // to every non-collinear triple.
    double floor = k_triple_area_floor * diam * diam;
    double worst = 0.0;
    bool any_good = false;
    for (const auto& cand : valid) {
        if (cand.area2 >= floor) {
            any_good = true;
            worst = std::max(worst, cand.residual);
        }
    }
    if (!any_good) {
        for (const auto& cand : valid) worst = std::max(worst, cand.residual);
    }
    return worst;
}

double line_angle_gap(const Line& l1, const Line& l2) {
    double s = std::abs(cross(l1.dir, l2.dir));
    double c = std::abs(dot(l1.dir, l2.dir));
    return std::atan2(s, c);
}

}  // namespace miquel
