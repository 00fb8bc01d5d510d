#pragma once

#include "tricontain/geometry.hpp"

namespace tricontain::closed_forms {

// P for the unit-area limacon r = c(a + cos t) with the anchor at the origin:
// 1/4 - 12 a^2 (4a^2 + 1) / ((2a^2 + 1)^3 pi^2). a = 1 is the cardioid
// (anchor on the boundary); a < 1 is rejected (inner loop appears).
double limacon_probability(double a);

// P for the regular (2m+1)-gon about its center. Uses the closed form with
// a = cos^2(pi/(2m+1)); switches to a series in 1 - a for large m, where the
// direct expression loses all significant digits to cancellation.
double regular_polygon_probability(int m);

// P for a triangle with the anchor at barycentric coordinates (alpha, beta,
// gamma). Shape-independent. Boundary anchors (a zero coordinate) return the
// continuity limit 0.
double triangle_probability(const BarycentricPoint& p);

// Same quantity with the inner integral evaluated by adaptive quadrature
// instead of the hand-derived antiderivative; cross-check guard.
double triangle_probability_quadrature(const BarycentricPoint& p);

// P for the unit square with anchor (u, v), reduced by the square's
// symmetries to 0 < v <= u <= 1/2 and evaluated by quadrature of the four
// sector integrals. Boundary anchors return the continuity limit 0.
double square_probability(double u, double v);

// P on the square's diagonal, anchor (u, u) with u in (0, 1/2):
// 1/4 - (1-2u)(1-2u^2)(1+u-6u^3)/(4(1-u)) + 3u^4 (1-2u^2) ln((1-u)/u).
double square_diagonal_probability(double u);

// P for the unit-area disk with a sector of half-angle a*pi removed, anchor
// at the disk center: (1+a)(1-2a)^2 / (4(1-a)^3), a in [0, 1/2].
double slice_disk_probability(double a);

// P for the unit-area disk with the anchor offset from the center by
// fraction r of the radius, via 1-D quadrature of the boundary integral.
double offset_disk_probability(double r);

struct OffsetDiskAverage {
    double value = 0.0;      // 2 * integral_0^1 P_r r dr (area-weighted disk average)
    double reference = 0.0;  // 35 / (48 pi^2)
};

// Average of offset_disk_probability over a uniformly random anchor in the
// disk, with the exact constant it must reproduce.
OffsetDiskAverage offset_disk_average();

} // namespace tricontain::closed_forms
