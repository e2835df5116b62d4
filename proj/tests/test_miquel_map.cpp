#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <optional>

#include "miquel/miquel_map.hpp"

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

Triangle reference_triangle() {
    return Triangle(Point{0, 0}, Point{4, 0}, Point{1, 3});
}

}  // namespace

// Frozen oracle for the reference triangle (0,0), (4,0), (1,3) at vertex A
// with t_b = t_c = 1/2. Solving the two circles through (A,B,B_A) and
// (A,C,C_A) by hand: x^2+y^2-4x-y/3 = 0 and x^2+y^2-2x-8y/3 = 0, whose
// radical line y = 6x/7 gives the second intersection (42/17, 36/17).
TEST_CASE("forward map against a hand-solved configuration") {
    Triangle tri = reference_triangle();
    MiquelConfig cfg = forward_miquel(tri, VertexLabel::a, CevianPair{0.5, 0.5});

    CHECK(cfg.b_a.x == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(cfg.b_a.y == doctest::Approx(1.5).epsilon(1e-13));
    CHECK(cfg.c_a.x == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(cfg.c_a.y == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(cfg.n.x == doctest::Approx(5.0 / 3.0).epsilon(1e-13));
    CHECK(cfg.n.y == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(cfg.m.x == doctest::Approx(42.0 / 17.0).epsilon(1e-13));
    CHECK(cfg.m.y == doctest::Approx(36.0 / 17.0).epsilon(1e-13));
    CHECK(cfg.residual < 1e-12);
    CHECK(concurrency_residual(cfg) < 1e-12);
}

TEST_CASE("forward map at vertex b lands on both defining circles") {
    Triangle tri = reference_triangle();
    CevianPair cev{0.3, 0.7};
    MiquelConfig cfg = forward_miquel(tri, VertexLabel::b, cev);

    // Recompute the two circles directly from the rotated roles:
    // feet measured from B toward A and toward C.
    Point foot_toward_a = tri.b + 0.3 * (tri.a - tri.b);
    Point foot_toward_c = tri.b + 0.7 * (tri.c - tri.b);
    CHECK(dist(cfg.b_a, foot_toward_a) < 1e-12);
    CHECK(dist(cfg.c_a, foot_toward_c) < 1e-12);

    Circle k1 = circumcircle(tri.b, tri.c, foot_toward_a);
    Circle k2 = circumcircle(tri.b, tri.a, foot_toward_c);
    CHECK(std::abs(k1.signed_offset(cfg.m)) < 1e-10);
    CHECK(std::abs(k2.signed_offset(cfg.m)) < 1e-10);
    CHECK(dist(cfg.m, tri.b) > 1e-3);
}

TEST_CASE("cevian intersection and recovery through a point") {
    Triangle tri = reference_triangle();
    Point n = cevian_intersection(tri, VertexLabel::a, CevianPair{0.5, 0.5});
    CHECK(n.x == doctest::Approx(5.0 / 3.0).epsilon(1e-13));
    CHECK(n.y == doctest::Approx(1.0).epsilon(1e-13));

    CevianPair rec = cevians_through_point(tri, VertexLabel::a, n);
    CHECK(rec.t_b == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rec.t_c == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("inverse map inverts the forward map") {
    Triangle tri = reference_triangle();
    CevianPair cev{0.37, 0.81};
    MiquelConfig cfg = forward_miquel(tri, VertexLabel::a, cev);
    CevianPair back = inverse_miquel(tri, VertexLabel::a, cfg.m);
    CHECK(back.t_b == doctest::Approx(cev.t_b).epsilon(1e-11));
    CHECK(back.t_c == doctest::Approx(cev.t_c).epsilon(1e-11));

    // External parameters roundtrip as well.
    CevianPair wild{-0.6, 2.3};
    MiquelConfig cfg2 = forward_miquel(tri, VertexLabel::a, wild);
    CevianPair back2 = inverse_miquel(tri, VertexLabel::a, cfg2.m);
    CHECK(back2.t_b == doctest::Approx(wild.t_b).epsilon(1e-10));
    CHECK(back2.t_c == doctest::Approx(wild.t_c).epsilon(1e-10));
}

TEST_CASE("excluded parameters are rejected at every entry point") {
    Triangle tri = reference_triangle();
    CHECK(thrown_code([&] {
        cevian_points(tri, VertexLabel::a, CevianPair{0.0, 0.5});
    }) == Errc::excluded_cevian);
    CHECK(thrown_code([&] {
        cevian_points(tri, VertexLabel::a, CevianPair{0.5, 1.0});
    }) == Errc::excluded_cevian);
    // Margin widens the excluded band around 0 and 1.
    CHECK(thrown_code([&] {
        cevian_points(tri, VertexLabel::a, CevianPair{0.5, 0.9995}, {}, 1e-3);
    }) == Errc::excluded_cevian);
    CHECK_FALSE(thrown_code([&] {
        cevian_points(tri, VertexLabel::a, CevianPair{0.5, 0.9995}, {}, 1e-6);
    }).has_value());
}

TEST_CASE("parallel cevians have no intersection") {
    // t_b = 4 puts B_A at (4,12), so the cevian from B is the vertical
    // x = 4; t_c = 1/4 puts C_A at (1,0), so the cevian from C is x = 1.
    Triangle tri = reference_triangle();
    CHECK(thrown_code([&] {
        cevian_intersection(tri, VertexLabel::a, CevianPair{4.0, 0.25});
    }) == Errc::parallel_cevians);
    CHECK(thrown_code([&] {
        forward_miquel(tri, VertexLabel::a, CevianPair{4.0, 0.25});
    }) == Errc::parallel_cevians);
}

TEST_CASE("inverse map admissibility bands") {
    Triangle tri = reference_triangle();
    Circle circ = circumcircle(tri.a, tri.b, tri.c);
    Point on_circ = circ.center + Point{0, circ.radius};

    bool saw_on_circumcircle = false;
    try {
        inverse_miquel(tri, VertexLabel::a, on_circ);
    } catch (const Error& e) {
        saw_on_circumcircle = e.code() == Errc::inadmissible_point &&
                              e.detail() == "on_circumcircle";
    }
    CHECK(saw_on_circumcircle);

    bool saw_on_ab = false;
    try {
        inverse_miquel(tri, VertexLabel::a, Point{-1, 0});
    } catch (const Error& e) {
        saw_on_ab = e.code() == Errc::inadmissible_point &&
                    e.detail() == "on_AB";
    }
    CHECK(saw_on_ab);

    bool saw_on_ac = false;
    try {
        inverse_miquel(tri, VertexLabel::a, Point{2, 6});
    } catch (const Error& e) {
        saw_on_ac = e.code() == Errc::inadmissible_point &&
                    e.detail() == "on_AC";
    }
    CHECK(saw_on_ac);

    // (0, 10/3) is diametrically opposite A on the circle tangent to AB at
    // A through C; its preimage would put a foot on A itself.
    CHECK(thrown_code([&] {
        inverse_miquel(tri, VertexLabel::a, Point{0, 10.0 / 3.0});
    }) == Errc::excluded_cevian);

    // A comfortably admissible point still works under a wide margin.
    MiquelConfig cfg = forward_miquel(tri, VertexLabel::a, CevianPair{0.5, 0.5});
    CevianPair back = inverse_miquel(tri, VertexLabel::a, cfg.m, {}, 1e-3);
    CHECK(back.t_b == doctest::Approx(0.5).epsilon(1e-11));
}

TEST_CASE("classification splits internal from external") {
    auto both = classify_cevians(CevianPair{0.5, 0.25});
    CHECK(both.first == CevianClass::internal_cevian);
    CHECK(both.second == CevianClass::internal_cevian);

    auto mixed = classify_cevians(CevianPair{1.5, 0.25});
    CHECK(mixed.first == CevianClass::external_cevian);
    CHECK(mixed.second == CevianClass::internal_cevian);

    auto negatives = classify_cevians(CevianPair{-0.3, 2.0});
    CHECK(negatives.first == CevianClass::external_cevian);
    CHECK(negatives.second == CevianClass::external_cevian);

    CHECK(thrown_code([] {
        classify_cevians(CevianPair{1e-12, 0.5});
    }) == Errc::boundary_ambiguous);
    CHECK(thrown_code([] {
        classify_cevians(CevianPair{0.5, 1.0 + 1e-12});
    }) == Errc::boundary_ambiguous);

    CHECK(std::string(cevian_class_name(CevianClass::internal_cevian)) ==
          "internal");
    CHECK(std::string(cevian_class_name(CevianClass::external_cevian)) ==
          "external");
}

TEST_CASE("side lemma: Miquel point on BC iff feet are concyclic with A, N") {
    Triangle tri = reference_triangle();

    // Configuration whose Miquel point is the midpoint of BC.
    Point bc_mid = midpoint(tri.b, tri.c);
    CevianPair cev = inverse_miquel(tri, VertexLabel::a, bc_mid);
    MiquelConfig on_side = forward_miquel(tri, VertexLabel::a, cev);
    CHECK(dist(on_side.m, bc_mid) < 1e-9);
    SideLemmaFlags flags = side_lemma_check(on_side);
    CHECK(flags.m_on_bc);
    CHECK(flags.a_feet_n_concyclic);

    // A generic configuration triggers neither side of the equivalence.
    MiquelConfig generic = forward_miquel(tri, VertexLabel::a,
                                          CevianPair{0.5, 0.5});
    SideLemmaFlags off = side_lemma_check(generic);
    CHECK_FALSE(off.m_on_bc);
    CHECK_FALSE(off.a_feet_n_concyclic);
    CHECK(off.m_on_bc == off.a_feet_n_concyclic);
}
