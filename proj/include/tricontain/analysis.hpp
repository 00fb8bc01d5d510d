#pragma once

#include <utility>
#include <vector>

#include "tricontain/geometry.hpp"
#include "tricontain/region.hpp"

namespace tricontain::analysis {

// Two-sided envelope for P in terms of h = min over theta of H(theta):
// 1/4 - (1+4h)(1/2-h)^2 <= P <= 1/4 - 2(1/2-h)^3.
struct BoundsReport {
    double h = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double p = 0.0; // quadrature value, asserted to lie in [lower, upper]
};

BoundsReport bounds(const Region& region, AnchorPoint anchor);

// sup over theta of |H(theta) - 1/2|; zero exactly when the region is
// centrally symmetric about the anchor.
double symmetry_defect(const Region& region, AnchorPoint anchor);

// P evaluated at anchors boundary_point + eps_k * direction for the geometric
// sequence eps_k = 0.25 * 2^-k, k = 0..steps-1. Returns (eps_k, P) pairs.
// The caller asserts that boundary_point admits a supporting line when a
// decay-to-zero conclusion is drawn.
std::vector<std::pair<double, double>> boundary_limit_probe(const Region& region,
                                                            Vec2 boundary_point,
                                                            Vec2 direction, int steps);

struct MaximizerReport {
    Vec2 argmax;
    double p_max = 0.0;
    std::vector<std::pair<Vec2, double>> trace; // improving iterates, in order
};

// Empirical maximizer of P over interior anchors: coarse grid scan (row-major,
// first-found ties) followed by deterministic Nelder-Mead refinement. Reports
// the best anchor with its trace; no global-optimality guarantee.
MaximizerReport maximize(const Region& region, int grid, int refine_iters);

} // namespace tricontain::analysis
