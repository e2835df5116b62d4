#include "miquel/sweep.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "miquel/rng.hpp"

namespace miquel {

namespace {

constexpr double k_band_scales[] = {1e-2, 1e-3, 1e-4};

}  // namespace

SweepResult run_sweep(const Scene& scene, const SweepSpec& spec) {
    if (spec.samples < 2) {
        throw Error(Errc::parse_error, "line 0, samples, must be at least 2");
    }
    const Triangle& tri = scene.triangle;
    const Tolerance& tol = scene.tolerance;
    VertexLabel vertex = scene.vertex;
    Triangle t = tri.rotated(vertex);
    double diam = t.diameter();
    Circle circ = circumcircle(t.a, t.b, t.c, tol);
    AuxiliaryData aux = auxiliary_data(tri, vertex, tol);
    const Circle rings[3] = {circ, aux.omega_ab, aux.omega_ac};

    Rng rng(spec.seed);
    SweepResult result;
    result.rows.reserve(spec.samples);

    for (int i = 0; i < spec.samples; ++i) {
        Point p;
        if (i % 5 < 3) {
            // Uniform over the box around the circumcircle.
            double half = spec.box_scale * circ.radius;
            p = circ.center + Point{rng.uniform(-half, half),
                                    rng.uniform(-half, half)};
        } else {
            // Band around one of the defining circles, probed at several
            // width scales to stress the boundary classification.
            const Circle& ring = rings[(i / 5) % 3];
            double scale = k_band_scales[(i / 15) % 3];
            double theta = rng.uniform(0.0, 2 * std::numbers::pi);
            double off = rng.uniform(-1.0, 1.0) * scale * diam;
            p = ring.center +
                (ring.radius + off) * Point{std::cos(theta), std::sin(theta)};
        }

        SweepRow row;
        row.p = p;
        row.analytic = locus_membership(tri, vertex, p, tol, spec.margin);
        bool analytic_decided = row.analytic != LocusVerdict::boundary &&
                                row.analytic != LocusVerdict::inadmissible;
        try {
            CevianPair cev = inverse_miquel(tri, vertex, p, tol, spec.margin);
            auto classes = classify_cevians(cev, spec.margin);
            row.empirical = std::string(cevian_class_name(classes.first)) +
                            "+" + cevian_class_name(classes.second);
            bool both_internal =
                classes.first == CevianClass::internal_cevian &&
                classes.second == CevianClass::internal_cevian;
            row.counted = analytic_decided;
            row.agree = (row.analytic == LocusVerdict::member) == both_internal;
        } catch (const Error& err) {
            row.empirical = err.what();
            switch (err.code()) {
                case Errc::excluded_cevian:
                case Errc::boundary_ambiguous:
                    // Parameter margin violated: the sample does not count.
                    row.counted = false;
                    break;
                default:
                    // Inadmissible for the inverse map. Counts (and fails)
                    // when the analytic side claimed a decidable verdict.
                    row.counted = analytic_decided;
                    row.agree = false;
                    break;
            }
        }
        if (row.counted) {
            ++result.counted;
            if (row.agree) ++result.agreed;
        }
        result.rows.push_back(row);
    }
    return result;
}

std::string sweep_csv(const SweepResult& result) {
    std::ostringstream os;
    os << "x,y,analytic,empirical,agree,counted\n";
    for (const SweepRow& row : result.rows) {
        os << real_text(row.p.x, 12) << "," << real_text(row.p.y, 12) << ","
           << locus_verdict_name(row.analytic) << "," << row.empirical << ","
           << (row.agree ? "true" : "false") << ","
           << (row.counted ? "true" : "false") << "\n";
    }
    return os.str();
}

}  // namespace miquel
