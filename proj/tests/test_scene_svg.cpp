#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "miquel/construct.hpp"
#include "miquel/scene.hpp"
#include "miquel/svg_render.hpp"
#include "miquel/sweep.hpp"

using namespace miquel;

namespace {

constexpr double k_pi = std::numbers::pi;

std::optional<std::string> parse_failure(const std::string& text) {
    try {
        parse_scene(text);
    } catch (const Error& e) {
        REQUIRE(e.code() == Errc::parse_error);
        return e.detail();
    }
    return std::nullopt;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

const char* k_reference_scene =
    "triangle.a = 0 0\n"
    "triangle.b = 4 0\n"
    "triangle.c = 1 3\n"
    "vertex = A\n"
    "cevians = 0.5 0.5\n";

}  // namespace

TEST_CASE("scene parsing: defaults, comments, one-line form") {
    Scene scene = parse_scene(k_reference_scene);
    CHECK(dist(scene.triangle.b, Point{4, 0}) < 1e-15);
    CHECK(scene.vertex == VertexLabel::a);
    REQUIRE(scene.cevians.has_value());
    CHECK(scene.cevians->t_b == doctest::Approx(0.5));
    CHECK_FALSE(scene.point.has_value());
    CHECK_FALSE(scene.line_angle.has_value());
    CHECK_FALSE(scene.center.has_value());
    CHECK(scene.seed == 0);
    CHECK(scene.tolerance.absolute_eps == doctest::Approx(1e-12));

    Scene inline_scene = parse_scene(
        "triangle.a = 0 0; triangle.b = 4 0; triangle.c = 1 3; "
        "point = 1 1 # trailing comment\n");
    REQUIRE(inline_scene.point.has_value());
    CHECK(dist(*inline_scene.point, Point{1, 1}) < 1e-15);

    Scene tuned = parse_scene(
        "triangle.a = 0 0\ntriangle.b = 4 0\ntriangle.c = 1 3\n"
        "vertex = C\ncenter = orthocenter\nseed = 42\n"
        "tolerance.absolute = 1e-10\ntolerance.relative = 1e-7\n");
    CHECK(tuned.vertex == VertexLabel::c);
    CHECK(tuned.center == CenterKind::orthocenter);
    CHECK(tuned.seed == 42);
    CHECK(tuned.tolerance.absolute_eps == doctest::Approx(1e-10));
    CHECK(tuned.tolerance.relative_eps == doctest::Approx(1e-7));
}

TEST_CASE("scene parsing failures carry line and field context") {
    auto d1 = parse_failure("triangle.a = 0 0\nbogus_key = 1\n");
    REQUIRE(d1.has_value());
    CHECK(contains(*d1, "line 2"));
    CHECK(contains(*d1, "bogus_key"));
    CHECK(contains(*d1, "unknown key"));

    CHECK(contains(*parse_failure("triangle.a 0 0\n"), "missing '='"));
    CHECK(contains(*parse_failure("triangle.a = 0\n"), "expected two reals"));
    CHECK(contains(*parse_failure("triangle.a = x y\n"),
                   "expected real number"));
    CHECK(contains(
        *parse_failure("triangle.a = 0 0\ntriangle.a = 1 1\n"),
        "duplicate key"));
    CHECK(contains(*parse_failure("vertex = D\n"), "expected A, B or C"));
    CHECK(contains(*parse_failure("center = centroid\n"),
                   "expected incenter, orthocenter or circumcenter"));
    CHECK(contains(*parse_failure("seed = -3\n"),
                   "expected unsigned integer"));

    // Structural checks after tokenizing.
    CHECK(contains(*parse_failure("triangle.a = 0 0\ntriangle.b = 4 0\n"
                                  "cevians = 0.5 0.5\n"),
                   "all three vertices required"));
    CHECK(contains(*parse_failure("triangle.a = 0 0; triangle.b = 4 0; "
                                  "triangle.c = 1 3"),
                   "exactly one of"));
    CHECK(contains(*parse_failure("triangle.a = 0 0; triangle.b = 4 0; "
                                  "triangle.c = 1 3; point = 1 1; "
                                  "cevians = 0.5 0.5"),
                   "exactly one of"));
    CHECK(contains(*parse_failure("triangle.a = 0 0; triangle.b = 1 1; "
                                  "triangle.c = 2 2; point = 1 0"),
                   "degenerate triangle"));
}

TEST_CASE("serialization round-trips every field") {
    Scene scene = parse_scene(
        "triangle.a = 0.1 -0.25\ntriangle.b = 3.75 0.125\n"
        "triangle.c = 1.0625 2.5\nvertex = B\n"
        "cevians = 0.333333333333333315 -1.75\nseed = 9\n"
        "tolerance.relative = 1e-8\n");
    Scene again = parse_scene(serialize_scene(scene));
    CHECK(again.triangle.a.x == scene.triangle.a.x);
    CHECK(again.triangle.a.y == scene.triangle.a.y);
    CHECK(again.triangle.b.x == scene.triangle.b.x);
    CHECK(again.triangle.c.y == scene.triangle.c.y);
    CHECK(again.vertex == scene.vertex);
    CHECK(again.cevians->t_b == scene.cevians->t_b);
    CHECK(again.cevians->t_c == scene.cevians->t_c);
    CHECK(again.seed == scene.seed);
    CHECK(again.tolerance.relative_eps == scene.tolerance.relative_eps);
    CHECK(serialize_scene(again) == serialize_scene(scene));

    Scene one_line = parse_scene(serialize_scene_line(scene));
    CHECK(serialize_scene(one_line) == serialize_scene(scene));
    // The one-line form has no trailing separator.
    std::string line = serialize_scene_line(scene);
    CHECK(line.back() != ' ');
    CHECK(line.back() != ';');
    CHECK_FALSE(contains(line, "\n"));
}

TEST_CASE("real_text: shortest form, signed zero normalized") {
    CHECK(real_text(0.5, 17) == "0.5");
    CHECK(real_text(-0.0, 12) == "0");
    CHECK(real_text(42.0 / 17.0, 12) == "2.47058823529");
    CHECK(real_text(1e-9, 6) == "1e-09");
}

TEST_CASE("construct report for a cevian payload") {
    Scene scene = parse_scene(k_reference_scene);
    ConstructReport report = build_construct_report(scene);
    REQUIRE(report.config.has_value());
    CHECK(dist(report.config->m, Point{42.0 / 17.0, 36.0 / 17.0}) < 1e-12);
    REQUIRE(report.classes.has_value());
    CHECK(report.classes->first == CevianClass::internal_cevian);
    CHECK(report.locus == LocusVerdict::member);

    std::string text = construct_report_text(scene, report);
    CHECK(contains(text, "vertex = A\n"));
    CHECK(contains(text, "t_b = 0.5\n"));
    CHECK(contains(text, "t_c = 0.5\n"));
    CHECK(contains(text, "n = 1.66666666667 1\n"));
    CHECK(contains(text, "m = 2.47058823529 2.11764705882\n"));
    CHECK(contains(text, "cevian_b = internal\n"));
    CHECK(contains(text, "cevian_c = internal\n"));
    CHECK(contains(text, "locus = member\n"));
    CHECK(contains(text, "m_on_bc = false\n"));
    CHECK(contains(text, "feet_meet_concyclic = false\n"));
}

TEST_CASE("construct report for point, center and line payloads") {
    Scene point_scene = parse_scene(
        "triangle.a = 0 0; triangle.b = 4 0; triangle.c = 1 3; "
        "point = 2.47058823529411764 2.11764705882352941");
    ConstructReport pr = build_construct_report(point_scene);
    REQUIRE(pr.config.has_value());
    CHECK(pr.config->cevians.t_b == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(pr.config->cevians.t_c == doctest::Approx(0.5).epsilon(1e-10));

    Scene center_scene = parse_scene(
        "triangle.a = 0 0; triangle.b = 4 0; triangle.c = 0 3; "
        "center = circumcenter");
    ConstructReport cr = build_construct_report(center_scene);
    REQUIRE(cr.center_report.has_value());
    std::string ct = construct_report_text(center_scene, cr);
    CHECK(contains(ct, "center = circumcenter\n"));
    CHECK(contains(ct, "center_point = 2 1.5\n"));
    CHECK(contains(ct, "meet_on_circumcircle = 1.12 -0.84\n"));
    CHECK(contains(ct, "center_residual_max = "));
    CHECK(contains(ct, "locus = "));

    Scene line_scene = parse_scene(
        "triangle.a = 0 0; triangle.b = 4 0; triangle.c = 1 3; "
        "line_angle = 0.8");
    ConstructReport lr = build_construct_report(line_scene);
    REQUIRE(lr.line_report.has_value());
    CHECK_FALSE(lr.config.has_value());
    std::string lt = construct_report_text(line_scene, lr);
    CHECK(contains(lt, "meet_line = "));
    CHECK(contains(lt, "miquel_image = circle "));

    Scene median_scene = parse_scene(
        "triangle.a = 0 0; triangle.b = 2 0; triangle.c = 0 2; "
        "line_angle = 0.78539816339744831");
    std::string mt = construct_report_text(
        median_scene, build_construct_report(median_scene));
    CHECK(contains(mt, "miquel_image = line "));
}

TEST_CASE("sweep: deterministic, fully agreeing, well-formed CSV") {
    Scene scene = parse_scene(k_reference_scene);
    SweepSpec spec;
    spec.samples = 300;
    spec.seed = 11;
    SweepResult first = run_sweep(scene, spec);
    SweepResult second = run_sweep(scene, spec);
    CHECK(first.counted == second.counted);
    CHECK(first.agreed == second.agreed);
    CHECK(first.counted > 100);
    CHECK(first.agreement() == 1.0);
    CHECK(first.rows.size() >= 300);

    std::string csv1 = sweep_csv(first);
    std::string csv2 = sweep_csv(second);
    CHECK(csv1 == csv2);
    CHECK(csv1.rfind("x,y,analytic,empirical,agree,counted\n", 0) == 0);
    CHECK(contains(csv1, "member"));
    CHECK(contains(csv1, "internal+internal"));

    SweepSpec other = spec;
    other.seed = 12;
    CHECK(sweep_csv(run_sweep(scene, other)) != csv1);

    // Verdicts on both sides of every boundary appear in the sample set.
    bool saw_outside = false, saw_both = false;
    for (const SweepRow& row : first.rows) {
        if (row.analytic == LocusVerdict::excluded_outside_circumdisk)
            saw_outside = true;
        if (row.analytic == LocusVerdict::excluded_in_both_aux_disks)
            saw_both = true;
    }
    CHECK(saw_outside);
    CHECK(saw_both);
}

TEST_CASE("svg rendering: deterministic, standalone, diagnostic on error") {
    Scene scene = parse_scene(k_reference_scene);
    std::string svg = render_svg(scene);
    CHECK(svg == render_svg(scene));
    CHECK(svg.rfind("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n", 0) == 0);
    CHECK(contains(svg, "<svg xmlns=\"http://www.w3.org/2000/svg\""));
    CHECK(contains(svg, "viewBox"));
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK_FALSE(contains(svg, "href"));
    CHECK_FALSE(contains(svg, "url("));
    CHECK(contains(svg, "#dbe7f6"));  // locus shading

    RenderOptions wide;
    wide.width = 1080;
    CHECK(render_svg(scene, wide) != svg);

    // Construction failures still render, carrying the error name.
    Scene bad = parse_scene(
        "triangle.a = 0 0; triangle.b = 4 0; triangle.c = 1 3; "
        "point = 3 3");  // on the circumcircle
    std::string diag = render_svg(bad);
    CHECK(contains(diag, "error: InadmissiblePoint(on_circumcircle)"));

    Scene line_scene = parse_scene(
        "triangle.a = 0 0; triangle.b = 4 0; triangle.c = 1 3; "
        "line_angle = 0.8");
    std::string line_svg = render_svg(line_scene);
    CHECK(line_svg != svg);
    CHECK(contains(line_svg, "</svg>"));

    Scene center_scene = parse_scene(
        "triangle.a = 0 0; triangle.b = 4 0; triangle.c = 0 3; "
        "center = incenter");
    CHECK(contains(render_svg(center_scene), "</svg>"));
}

TEST_CASE("line payloads skipped by angle guards report the error") {
    // line_angle = 0 runs along side AC.
    Scene scene = parse_scene(
        "triangle.a = 0 0; triangle.b = 4 0; triangle.c = 1 3; "
        "line_angle = 0");
    bool threw = false;
    try {
        build_construct_report(scene);
    } catch (const Error& e) {
        threw = e.code() == Errc::line_along_side;
    }
    CHECK(threw);
    CHECK(contains(render_svg(scene), "error: LineAlongSide"));
}
