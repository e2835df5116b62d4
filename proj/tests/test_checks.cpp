#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>
#include <string>

#include "miquel/checks.hpp"

using namespace miquel;

namespace {

template <typename F>
std::optional<Errc> thrown_code(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

bool has_suite(const std::string& name) {
    const std::vector<std::string>& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

}  // namespace

TEST_CASE("suite registry") {
    const std::vector<std::string>& names = suite_names();
    CHECK(names.size() == 21);
    for (const char* expected :
         {"concurrency", "roundtrip-point", "roundtrip-params",
          "locus-agreement", "axis-symmedian", "brocard-circle",
          "centre-relations", "brocard-points", "perpendicular-forward",
          "perpendicular-inverse", "parallel-feet-forward",
          "parallel-feet-inverse", "meet-line", "isogonal-circle",
          "side-lemma", "center-fixtures", "center-sweeps",
          "bisector-candidates", "tangency-limit", "limit-circles",
          "determinism"}) {
        CHECK(has_suite(expected));
    }
    for (const std::string& name : names) {
        CHECK_FALSE(suite_about(name).empty());
    }
    CHECK(thrown_code([] { suite_about("no-such-suite"); }) ==
          Errc::unknown_suite);
    CHECK(thrown_code([] { run_suite("no-such-suite", 1); }) ==
          Errc::unknown_suite);
}

TEST_CASE("suites pass at reduced sample counts") {
    struct Plan {
        const char* suite;
        int samples;
    };
    const Plan plans[] = {
        {"concurrency", 80},     {"roundtrip-point", 80},
        {"roundtrip-params", 80}, {"locus-agreement", 400},
        {"axis-symmedian", 40},  {"brocard-circle", 40},
        {"centre-relations", 60}, {"brocard-points", 30},
        {"perpendicular-forward", 40}, {"perpendicular-inverse", 40},
        {"parallel-feet-forward", 40}, {"parallel-feet-inverse", 40},
        {"meet-line", 40},       {"isogonal-circle", 10},
        {"side-lemma", 60},      {"center-fixtures", 6},
        {"center-sweeps", 30},   {"bisector-candidates", 30},
        {"tangency-limit", 4},   {"limit-circles", 4},
        {"determinism", 2},
    };
    for (const Plan& plan : plans) {
        CAPTURE(plan.suite);
        PropertyResult r = run_suite(plan.suite, 7, plan.samples);
        CHECK(r.pass);
        CHECK(r.worst <= r.limit);
        CHECK(r.evaluated > 0);
        CHECK(r.suite == plan.suite);
    }
}

TEST_CASE("runs are reproducible and the worst sample replays") {
    PropertyResult a = run_suite("concurrency", 5, 60);
    PropertyResult b = run_suite("concurrency", 5, 60);
    CHECK(a.worst == b.worst);
    CHECK(a.worst_scene == b.worst_scene);
    CHECK(a.evaluated == b.evaluated);
    CHECK(a.skipped == b.skipped);
    REQUIRE_FALSE(a.worst_scene.empty());

    Scene scene = parse_scene(a.worst_scene);
    double replay = evaluate_sample("concurrency", scene);
    CHECK(replay == doctest::Approx(a.worst).epsilon(1e-12));

    PropertyResult c = run_suite("concurrency", 6, 60);
    CHECK(c.worst != a.worst);  // a different seed explores new samples

    CHECK(thrown_code([&] { evaluate_sample("no-such-suite", scene); }) ==
          Errc::unknown_suite);
}

TEST_CASE("roundtrip worst sample replays through its own metric") {
    PropertyResult r = run_suite("roundtrip-point", 9, 80);
    REQUIRE(r.pass);
    Scene scene = parse_scene(r.worst_scene);
    CHECK(evaluate_sample("roundtrip-point", scene) ==
          doctest::Approx(r.worst).epsilon(1e-12));
}

TEST_CASE("result text carries verdict, worst value and worst sample") {
    PropertyResult r = run_suite("side-lemma", 3, 40);
    std::string text = property_result_text(r);
    CHECK(text.find("side-lemma: PASS") == 0);
    CHECK(text.find("worst=") != std::string::npos);
    CHECK(text.find("evaluated=") != std::string::npos);
    if (!r.worst_scene.empty()) {
        CHECK(text.find("worst-sample: ") != std::string::npos);
    }

    PropertyResult fake;
    fake.suite = "demo";
    fake.pass = false;
    fake.worst = 0.25;
    fake.limit = 1e-9;
    fake.note = "no evaluable samples";
    std::string fail_text = property_result_text(fake);
    CHECK(fail_text.find("demo: FAIL") == 0);
    CHECK(fail_text.find("note: no evaluable samples") != std::string::npos);
}
