#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "tricontain/errors.hpp"

namespace tricontain {

struct QuadResult {
    double value = 0.0;
    double error = 0.0; // accumulated error bound of the accepted panels
};

struct QuadOptions {
    double abs_tol = 1e-10;   // absolute tolerance for the whole integral
    int max_panels = 200000;  // total bisection budget before QuadratureError
    int max_depth = 48;
};

namespace detail {

struct GaussLegendre16 {
    std::array<double, 16> nodes;   // on (-1, 1)
    std::array<double, 16> weights;
};

// Nodes/weights computed once at startup by Newton iteration on the degree-16
// Legendre polynomial (no hardcoded table to mistype).
const GaussLegendre16& gl16();

template <class F>
double gl16_panel(F&& f, double a, double b) {
    const GaussLegendre16& q = gl16();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < 16; ++i) acc += q.weights[i] * f(mid + half * q.nodes[i]);
    return acc * half;
}

template <class F>
void adapt(F&& f, double a, double b, double whole, double tol, int depth,
           int& budget, QuadResult& out) {
    if (--budget < 0)
        throw QuadratureError("quadrature panel budget exhausted (tolerance unreachable)");
    const double m = 0.5 * (a + b);
    const double left = gl16_panel(f, a, m);
    const double right = gl16_panel(f, m, b);
    const double refined = left + right;
    const double err = std::abs(whole - refined);
    // Second accept clause is a round-off floor: once the bisection stops
    // changing the answer at double precision, further splitting only adds noise.
    if (err <= tol || err <= 4e-16 * (1.0 + std::abs(refined)) || depth >= 48) {
        out.value += refined;
        out.error += err;
        return;
    }
    adapt(f, a, m, left, 0.5 * tol, depth + 1, budget, out);
    adapt(f, m, b, right, 0.5 * tol, depth + 1, budget, out);
}

} // namespace detail

// Adaptive Gauss-Legendre integration of f over [a, b].
template <class F>
QuadResult integrate(F&& f, double a, double b, QuadOptions opts = {}) {
    QuadResult out;
    if (a == b) return out;
    int budget = opts.max_panels;
    const double whole = detail::gl16_panel(f, a, b);
    detail::adapt(f, a, b, whole, opts.abs_tol, 0, budget, out);
    return out;
}

// Integrates f over consecutive panels [pts[0], pts[1]], ..., splitting the
// tolerance evenly. pts must be sorted ascending.
template <class F>
QuadResult integrate_panels(F&& f, const std::vector<double>& pts, QuadOptions opts = {}) {
    QuadResult out;
    if (pts.size() < 2) return out;
    QuadOptions per = opts;
    per.abs_tol = opts.abs_tol / static_cast<double>(pts.size() - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        QuadResult r = integrate(f, pts[i], pts[i + 1], per);
        out.value += r.value;
        out.error += r.error;
    }
    return out;
}

// Golden-section search for a local minimum of f on [a, b].
template <class F>
double golden_min(F&& f, double a, double b, double xtol = 1e-12) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

// Bisection for a root of g on [lo, hi]; g(lo) and g(hi) must straddle zero.
template <class F>
double bisect_root(F&& g, double lo, double hi, double xtol = 1e-15) {
    double flo = g(lo);
    if (flo == 0.0) return lo;
    double fhi = g(hi);
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0))
        throw DomainError("bisect_root: endpoints do not straddle a sign change");
    while (hi - lo > xtol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = g(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid; flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace tricontain
