#pragma once

#include <string>
#include <vector>

#include "tricontain/geometry.hpp"
#include "tricontain/region.hpp"

namespace tricontain {

enum class Method {
    closed_form,
    quadrature_eq15,
    quadrature_eq12,
    quadrature_eq14,
    double_integral,
    monte_carlo,
};

std::string method_name(Method m);

struct ProbabilityResult {
    double value = 0.0;         // clamped to [0, 1/4]
    Method method = Method::quadrature_eq15;
    double error_estimate = 0.0;
    double raw_value = 0.0;     // pre-clamp value, for diagnostics
};

// Cumulative mass G and half-turn mass H of a normalized angular density.
// G(0) = 0, G(2pi) = 1, and G unwraps periodically: G(t + 2pi) = G(t) + 1.
// H(t) = G(t + pi) - G(t), so H(t) + H(t + pi) = 1 holds to round-off.
class MassProfile {
public:
    explicit MassProfile(AngularDensity density, double tol = 1e-12);

    double G(double theta) const;
    double H(double theta) const;
    double density(double theta) const { return density_.f(theta); }

    // Sorted subdivision endpoints in [0, 2pi]; includes every density
    // breakpoint and its antipode, so H is smooth inside each panel.
    const std::vector<double>& panel_points() const { return pts_; }
    const AngularDensity& angular_density() const { return density_; }

private:
    AngularDensity density_;
    std::vector<double> pts_;
    std::vector<double> cum_;  // cum_[i] = unnormalized mass over [pts_[0], pts_[i]]
    double total_ = 0.0;
};

MassProfile mass_profile(const AngularDensity& f, double tol = 1e-12);

// Default production formula: P = 1/4 - 3 * integral over [0,2pi) of (1/2 - H)^2 f.
ProbabilityResult probability(const AngularDensity& f, double tol = 1e-10);
ProbabilityResult probability(const Region& region, AnchorPoint anchor, double tol = 1e-10);

// Base-point formula P = -x^2 (3 - 2x) + 6 * integral_u^{u+pi} H (1 - H) f with
// x = H(u); its companion form 1/4 - (1-2x)^3/4 - 6 * integral (1/2 - H)^2 f is
// evaluated alongside and the two must agree.
ProbabilityResult probability_via_u(const AngularDensity& f, double u, double tol = 1e-10);
ProbabilityResult probability_via_u(const MassProfile& profile, double u, double tol = 1e-10);

// Angle u* with H(u*) = 1/2 (intermediate value theorem; returns 0 when H(0) = 1/2).
double find_median_angle(const MassProfile& profile);

// Median-angle formula: P = 1/4 - 6 * integral_{u*}^{u*+pi} (1/2 - H)^2 f.
ProbabilityResult probability_eq14(const AngularDensity& f, double tol = 1e-10);
ProbabilityResult probability_eq14(const MassProfile& profile, double tol = 1e-10);

// Slow O(n^2) tensor-product oracle for P = double integral of Area(R_st) f(s) f(t);
// error estimate from Richardson extrapolation over n and 2n midpoint panels.
ProbabilityResult probability_double_integral(const Region& region, AnchorPoint anchor,
                                              int n_panels = 256);

// h = min over theta of H(theta), in [0, 1/2].
double min_half_mass(const MassProfile& profile);

} // namespace tricontain
