#include "tricontain/quadrature.hpp"

#include "tricontain/geometry.hpp"

namespace tricontain::detail {

namespace {

// Legendre P_n(x) and P_n'(x) by the three-term recurrence.
void legendre16(double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= 16; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = 16.0 * (x * p1 - p0) / (x * x - 1.0);
}

GaussLegendre16 compute_gl16() {
    GaussLegendre16 q{};
    for (int i = 0; i < 8; ++i) {
        // Chebyshev-like initial guess, then Newton to machine precision.
        double x = std::cos(kPi * (i + 0.75) / 16.5);
        double p = 0.0, dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            legendre16(x, p, dp);
            const double step = p / dp;
            x -= step;
            if (std::abs(step) < 1e-16) break;
        }
        legendre16(x, p, dp);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        q.nodes[i] = -x;
        q.nodes[15 - i] = x;
        q.weights[i] = w;
        q.weights[15 - i] = w;
    }
    return q;
}

} // namespace

const GaussLegendre16& gl16() {
    static const GaussLegendre16 table = compute_gl16();
    return table;
}

} // namespace tricontain::detail
