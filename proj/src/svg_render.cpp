#include "miquel/svg_render.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "miquel/construct.hpp"

namespace miquel {

namespace {

constexpr double k_pi = std::numbers::pi;

std::string px(double v) { return real_text(v, 9); }

/// World-to-pixel mapping with the y axis flipped.
struct Mapper {
    double scale = 1.0;
    double min_x = 0.0, max_y = 0.0;
    double pad = 0.0;
    double width = 0.0, height = 0.0;

    Point map(Point p) const {
        return {pad + (p.x - min_x) * scale, pad + (max_y - p.y) * scale};
    }
    double len(double d) const { return d * scale; }
};

struct Bounds {
    double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;
    bool empty = true;

    void add(Point p) {
        if (empty) {
            min_x = max_x = p.x;
            min_y = max_y = p.y;
            empty = false;
            return;
        }
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    void add(const Circle& c) {
        add(c.center + Point{c.radius, c.radius});
        add(c.center - Point{c.radius, c.radius});
    }
};

std::string svg_point(const Mapper& m, Point p, double r, const char* fill) {
    Point q = m.map(p);
    std::ostringstream os;
    os << "<circle cx=\"" << px(q.x) << "\" cy=\"" << px(q.y) << "\" r=\""
       << px(r) << "\" fill=\"" << fill << "\" stroke=\"none\"/>\n";
    return os.str();
}

std::string svg_label(const Mapper& m, Point p, const std::string& text) {
    Point q = m.map(p);
    std::ostringstream os;
    os << "<text x=\"" << px(q.x + 6) << "\" y=\"" << px(q.y - 6)
       << "\" font-family=\"monospace\" font-size=\"13\" fill=\"#222\">"
       << text << "</text>\n";
    return os.str();
}

std::string svg_circle(const Mapper& m, const Circle& c, const char* stroke,
                       const char* dash) {
    Point q = m.map(c.center);
    std::ostringstream os;
    os << "<circle cx=\"" << px(q.x) << "\" cy=\"" << px(q.y) << "\" r=\""
       << px(m.len(c.radius)) << "\" fill=\"none\" stroke=\"" << stroke
       << "\" stroke-width=\"1.2\"";
    if (dash && *dash) os << " stroke-dasharray=\"" << dash << "\"";
    os << "/>\n";
    return os.str();
}

std::string svg_segment(const Mapper& m, Point a, Point b, const char* stroke,
                        double width) {
    Point qa = m.map(a);
    Point qb = m.map(b);
    std::ostringstream os;
    os << "<line x1=\"" << px(qa.x) << "\" y1=\"" << px(qa.y) << "\" x2=\""
       << px(qb.x) << "\" y2=\"" << px(qb.y) << "\" stroke=\"" << stroke
       << "\" stroke-width=\"" << px(width) << "\"/>\n";
    return os.str();
}

std::string svg_line_span(const Mapper& m, const Line& l, double half_span,
                          const char* stroke, double width) {
    return svg_segment(m, l.at(-half_span), l.at(half_span), stroke, width);
}

std::string svg_disk(const Mapper& m, const Circle& c, const char* fill) {
    Point q = m.map(c.center);
    std::ostringstream os;
    os << "<circle cx=\"" << px(q.x) << "\" cy=\"" << px(q.y) << "\" r=\""
       << px(m.len(c.radius)) << "\" fill=\"" << fill << "\" stroke=\"none\"/>\n";
    return os.str();
}

}  // namespace

std::string render_svg(const Scene& scene, const RenderOptions& opts) {
    const Triangle& tri = scene.triangle;
    const Tolerance& tol = scene.tolerance;
    Triangle t = tri.rotated(scene.vertex);
    double diam = t.diameter();

    ConstructReport report;
    std::string error_text;
    try {
        report = build_construct_report(scene);
    } catch (const Error& err) {
        error_text = err.what();
    }

    Circle circ = circumcircle(tri.a, tri.b, tri.c, tol);
    AuxiliaryData aux = auxiliary_data(tri, scene.vertex, tol);

    Bounds box;
    box.add(tri.a);
    box.add(tri.b);
    box.add(tri.c);
    box.add(circ);
    box.add(aux.omega_ab);
    box.add(aux.omega_ac);
    if (report.config) {
        box.add(report.config->b_a);
        box.add(report.config->c_a);
        box.add(report.config->n);
        box.add(report.config->m);
    }
    if (scene.point) box.add(*scene.point);
    if (report.line_report) {
        box.add(report.line_report->meet_line.at(-1.5 * diam));
        box.add(report.line_report->meet_line.at(1.5 * diam));
        if (const Circle* c = std::get_if<Circle>(&report.line_report->miquel_image)) {
            if (c->radius < 4 * diam) box.add(*c);
        }
    }

    Mapper m;
    m.pad = opts.padding;
    double span_x = std::max(box.max_x - box.min_x, 1e-9);
    double span_y = std::max(box.max_y - box.min_y, 1e-9);
    m.scale = (opts.width - 2 * opts.padding) / span_x;
    m.min_x = box.min_x;
    m.max_y = box.max_y;
    m.width = opts.width;
    m.height = span_y * m.scale + 2 * opts.padding;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(m.width)
       << "\" height=\"" << px(m.height) << "\" viewBox=\"0 0 " << px(m.width)
       << " " << px(m.height) << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << px(m.width) << "\" height=\""
       << px(m.height) << "\" fill=\"#ffffff\"/>\n";

    // Shaded locus: the member region is the circumdisk with both auxiliary
    // disks carved out, so the disk is filled first and the auxiliary disks
    // are painted back over it in the background color.
    if (error_text.empty()) {
        os << svg_disk(m, circ, "#dbe7f6");
        os << svg_disk(m, aux.omega_ab, "#ffffff");
        os << svg_disk(m, aux.omega_ac, "#ffffff");
    }

    os << svg_circle(m, circ, "#556", "");
    os << svg_circle(m, aux.omega_ab, "#7a9a7a", "6 4");
    os << svg_circle(m, aux.omega_ac, "#7a9a7a", "6 4");

    os << svg_segment(m, tri.a, tri.b, "#111", 1.6);
    os << svg_segment(m, tri.b, tri.c, "#111", 1.6);
    os << svg_segment(m, tri.c, tri.a, "#111", 1.6);

    if (report.config) {
        const MiquelConfig& cfg = *report.config;
        os << svg_segment(m, t.b, cfg.b_a, "#b03737", 1.3);
        os << svg_segment(m, t.c, cfg.c_a, "#b03737", 1.3);
        const Point triples[2][3] = {
            {t.c, cfg.b_a, cfg.n},
            {t.b, cfg.c_a, cfg.n},
        };
        os << svg_circle(m, circumcircle(t.a, t.b, cfg.b_a, tol), "#8686c8", "");
        os << svg_circle(m, circumcircle(t.a, t.c, cfg.c_a, tol), "#8686c8", "");
        for (const auto& tr : triples) {
            if (orientation(tr[0], tr[1], tr[2], tol) != 0) {
                os << svg_circle(m, circumcircle(tr[0], tr[1], tr[2], tol),
                                 "#b9b9dd", "");
            }
        }
        os << svg_point(m, cfg.b_a, 2.6, "#b03737");
        os << svg_label(m, cfg.b_a, "B_A");
        os << svg_point(m, cfg.c_a, 2.6, "#b03737");
        os << svg_label(m, cfg.c_a, "C_A");
        os << svg_point(m, cfg.n, 2.6, "#2d7a2d");
        os << svg_label(m, cfg.n, "N");
        os << svg_point(m, cfg.m, 3.4, "#1f4fa0");
        os << svg_label(m, cfg.m, "M");
    }

    if (report.line_report) {
        UnitFrame fr = unit_frame(tri, scene.vertex);
        Line input{t.a, fr.direction(*scene.line_angle)};
        os << svg_line_span(m, input, 1.5 * diam, "#2d7a2d", 1.2);
        os << svg_line_span(m, report.line_report->meet_line, 1.5 * diam,
                            "#b07820", 1.2);
        if (const Circle* c = std::get_if<Circle>(&report.line_report->miquel_image)) {
            os << svg_circle(m, *c, "#1f4fa0", "2 3");
        } else {
            os << svg_line_span(m, std::get<Line>(report.line_report->miquel_image),
                                1.5 * diam, "#1f4fa0", 1.2);
        }
    }

    const Point verts[3] = {tri.a, tri.b, tri.c};
    const char* names[3] = {"A", "B", "C"};
    for (int i = 0; i < 3; ++i) {
        os << svg_point(m, verts[i], 3.0, "#111");
        os << svg_label(m, verts[i], names[i]);
    }

    if (!error_text.empty()) {
        os << "<text x=\"" << px(opts.padding) << "\" y=\""
           << px(opts.padding - 6)
           << "\" font-family=\"monospace\" font-size=\"13\" fill=\"#b01010\">"
           << "error: " << error_text << "</text>\n";
    }

    os << "</svg>\n";
    return os.str();
}

}  // namespace miquel
