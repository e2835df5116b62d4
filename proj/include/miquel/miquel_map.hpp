#pragma once

#include <utility>

#include "miquel/geom.hpp"

namespace miquel {

/// Affine cevian parameters at the distinguished vertex A:
///   B_A = A + t_b (C - A)   (foot of the cevian from B, on line AC)
///   C_A = A + t_c (B - A)   (foot of the cevian from C, on line AB)
/// Values 0 and 1 are excluded: the foot must not coincide with a vertex.
struct CevianPair {
    double t_b = 0.5;
    double t_c = 0.5;
};

enum class CevianClass { internal_cevian, external_cevian };

const char* cevian_class_name(CevianClass c);

/// Fully resolved configuration: feet, cevian intersection and Miquel point,
/// all in world coordinates, plus the concurrency residual of the four
/// defining circles (normalized by the triangle diameter).
struct MiquelConfig {
    Triangle triangle;
    VertexLabel vertex;
    CevianPair cevians;
    Point b_a, c_a;  // cevian feet
    Point n;         // intersection of the two cevians
    Point m;         // Miquel point
    double residual = 0.0;
};

/// Feet (B_A, C_A) in world coordinates. Throws ExcludedCevian when a
/// parameter is within `margin` of 0 or 1.
std::pair<Point, Point> cevian_points(const Triangle& tri, VertexLabel vertex,
                                      const CevianPair& cev,
                                      const Tolerance& tol = {},
                                      double margin = 1e-9);

/// Intersection of lines B B_A and C C_A. Throws ParallelCevians when the
/// cevian lines are parallel within tolerance.
Point cevian_intersection(const Triangle& tri, VertexLabel vertex,
                          const CevianPair& cev, const Tolerance& tol = {},
                          double margin = 1e-9);

/// Builds the full configuration for a cevian pair. The Miquel point is the
/// second intersection of the circles through (A, B, B_A) and (A, C, C_A);
/// throws TangentAtA when that intersection collapses onto A.
MiquelConfig forward_miquel(const Triangle& tri, VertexLabel vertex,
                            const CevianPair& cev, const Tolerance& tol = {},
                            double margin = 1e-9);

/// Cevian parameters of the pair whose cevians from B and C meet at n:
/// B_A is where line Bn crosses line AC, C_A where line Cn crosses line AB.
/// Throws ParallelCevians when a connecting line is parallel to the
/// opposite side and ExcludedCevian when a foot lands on a vertex.
CevianPair cevians_through_point(const Triangle& tri, VertexLabel vertex,
                                 Point n, const Tolerance& tol = {},
                                 double margin = 1e-9);

/// Recovers the cevian parameters whose configuration has Miquel point m.
/// Admissibility: m must keep at least `margin * diameter` away from the
/// circumcircle and from lines AB and AC; otherwise InadmissiblePoint with
/// detail on_circumcircle / on_AB / on_AC. A point on an auxiliary circle
/// would force a foot onto A itself and raises ExcludedCevian.
CevianPair inverse_miquel(const Triangle& tri, VertexLabel vertex, Point m,
                          const Tolerance& tol = {}, double margin = 1e-9);

/// Recomputes the four-circle concurrency residual of a configuration.
double concurrency_residual(const MiquelConfig& config,
                            const Tolerance& tol = {});

/// Classifies each cevian as internal (parameter strictly inside (0,1)) or
/// external. Throws BoundaryAmbiguous when a parameter sits within `margin`
/// of 0 or 1.
std::pair<CevianClass, CevianClass> classify_cevians(const CevianPair& cev,
                                                     double margin = 1e-9);

struct SideLemmaFlags {
    bool m_on_bc = false;          // Miquel point lies on line BC
    bool a_feet_n_concyclic = false;  // A, B_A, C_A, N_A lie on one circle
};

/// The two conditions are equivalent; both flags are reported so callers can
/// check the equivalence rather than assume it.
SideLemmaFlags side_lemma_check(const MiquelConfig& config,
                                const Tolerance& tol = {});

}  // namespace miquel
