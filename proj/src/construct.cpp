#include "miquel/construct.hpp"

#include <algorithm>
#include <sstream>

namespace miquel {

ConstructReport build_construct_report(const Scene& scene, double margin) {
    const Triangle& tri = scene.triangle;
    const Tolerance& tol = scene.tolerance;
    VertexLabel v = scene.vertex;
    ConstructReport report;

    if (scene.line_angle) {
        report.line_report = LineImageReport{
            meet_image_line(tri, v, *scene.line_angle, tol),
            isogonal_circle(tri, v, *scene.line_angle, tol)};
        return report;
    }

    if (scene.cevians) {
        report.config = forward_miquel(tri, v, *scene.cevians, tol, margin);
    } else if (scene.point) {
        CevianPair cev = inverse_miquel(tri, v, *scene.point, tol, margin);
        report.config = forward_miquel(tri, v, cev, tol, margin);
    } else if (scene.center) {
        auto resolve = [&]() -> CenterCaseReport {
            switch (*scene.center) {
                case CenterKind::incenter: return incenter_case(tri, v, tol);
                case CenterKind::orthocenter:
                    return orthocenter_case(tri, v, tol);
                default: return circumcenter_case(tri, v, tol);
            }
        };
        report.center_report = resolve();
        report.config = report.center_report->config;
    }

    try {
        report.classes = classify_cevians(report.config->cevians, margin);
    } catch (const Error& err) {
        if (err.code() != Errc::boundary_ambiguous) throw;
    }
    report.locus = locus_membership(tri, v, report.config->m, tol, margin);
    report.side_lemma = side_lemma_check(*report.config, tol);
    return report;
}

std::string construct_report_text(const Scene& scene,
                                  const ConstructReport& report) {
    auto pt = [](Point p) {
        return real_text(p.x, 12) + " " + real_text(p.y, 12);
    };
    auto line_text = [&](const Line& l) {
        return pt(l.anchor) + " " + pt(l.dir);
    };
    std::ostringstream os;
    os << "vertex = " << vertex_name(scene.vertex) << "\n";
    if (report.config) {
        const MiquelConfig& cfg = *report.config;
        os << "t_b = " << real_text(cfg.cevians.t_b, 12) << "\n";
        os << "t_c = " << real_text(cfg.cevians.t_c, 12) << "\n";
        os << "b_a = " << pt(cfg.b_a) << "\n";
        os << "c_a = " << pt(cfg.c_a) << "\n";
        os << "n = " << pt(cfg.n) << "\n";
        os << "m = " << pt(cfg.m) << "\n";
        os << "residual = " << real_text(cfg.residual, 12) << "\n";
        if (report.classes) {
            os << "cevian_b = " << cevian_class_name(report.classes->first)
               << "\n";
            os << "cevian_c = " << cevian_class_name(report.classes->second)
               << "\n";
        } else {
            os << "cevian_b = ambiguous\n";
            os << "cevian_c = ambiguous\n";
        }
        os << "locus = " << locus_verdict_name(*report.locus) << "\n";
        os << "m_on_bc = " << (report.side_lemma->m_on_bc ? "true" : "false")
           << "\n";
        os << "feet_meet_concyclic = "
           << (report.side_lemma->a_feet_n_concyclic ? "true" : "false")
           << "\n";
    }
    if (report.center_report) {
        const CenterCaseReport& cc = *report.center_report;
        os << "center = " << center_kind_name(cc.kind) << "\n";
        os << "center_point = " << pt(cc.center) << "\n";
        double worst = 0.0;
        for (double r : cc.residuals) worst = std::max(worst, r);
        os << "center_residual_max = " << real_text(worst, 12) << "\n";
        if (cc.meet_on_circumcircle) {
            os << "meet_on_circumcircle = " << pt(*cc.meet_on_circumcircle)
               << "\n";
        }
    }
    if (report.line_report) {
        os << "meet_line = " << line_text(report.line_report->meet_line)
           << "\n";
        if (const Circle* c =
                std::get_if<Circle>(&report.line_report->miquel_image)) {
            os << "miquel_image = circle " << pt(c->center) << " "
               << real_text(c->radius, 12) << "\n";
        } else {
            os << "miquel_image = line "
               << line_text(std::get<Line>(report.line_report->miquel_image))
               << "\n";
        }
    }
    return os.str();
}

}  // namespace miquel
