#include "tricontain/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "tricontain/errors.hpp"
#include "tricontain/quadrature.hpp"

namespace tricontain {

namespace {

std::vector<double> merge_sorted_unique(std::vector<double> pts, double eps) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [eps](double a, double b) { return b - a < eps; }),
              pts.end());
    return pts;
}

// Leaf subdivision of one panel until the bisection error estimate meets tol.
void subdivide(const std::function<double(double)>& f, double a, double b, double whole,
               double tol, int depth, std::vector<double>& ends, std::vector<double>& vals) {
    const double m = 0.5 * (a + b);
    const double left = detail::gl16_panel(f, a, m);
    const double right = detail::gl16_panel(f, m, b);
    const double err = std::abs(whole - (left + right));
    if (depth >= 40 || err <= tol || err <= 1e-15 * (1.0 + std::abs(left + right))) {
        ends.push_back(m);
        vals.push_back(left);
        ends.push_back(b);
        vals.push_back(right);
        return;
    }
    subdivide(f, a, m, left, 0.5 * tol, depth + 1, ends, vals);
    subdivide(f, m, b, right, 0.5 * tol, depth + 1, ends, vals);
}

} // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::closed_form: return "closed_form";
        case Method::quadrature_eq15: return "quadrature_eq15";
        case Method::quadrature_eq12: return "quadrature_eq12";
        case Method::quadrature_eq14: return "quadrature_eq14";
        case Method::double_integral: return "double_integral";
        case Method::monte_carlo: return "monte_carlo";
    }
    return "unknown";
}

MassProfile::MassProfile(AngularDensity density, double tol) : density_(std::move(density)) {
    std::vector<double> seeds{0.0, kTwoPi};
    for (double b : density_.breakpoints) {
        const double w = wrap_angle(b);
        seeds.push_back(w);
        seeds.push_back(wrap_angle(w + kPi)); // antipodes keep H smooth per panel
        if (w < 1e-13) seeds.push_back(kTwoPi);
    }
    seeds.push_back(kPi);
    seeds = merge_sorted_unique(std::move(seeds), 1e-13);

    std::vector<double> ends{seeds.front()};
    std::vector<double> vals;
    const double panel_tol = tol / static_cast<double>(seeds.size());
    for (std::size_t i = 0; i + 1 < seeds.size(); ++i) {
        const double whole = detail::gl16_panel(density_.f, seeds[i], seeds[i + 1]);
        subdivide(density_.f, seeds[i], seeds[i + 1], whole, panel_tol, 0, ends, vals);
    }
    pts_ = std::move(ends);
    cum_.assign(pts_.size(), 0.0);
    for (std::size_t i = 0; i < vals.size(); ++i) cum_[i + 1] = cum_[i] + vals[i];
    total_ = cum_.back();
    if (!(total_ > 0.0) || !std::isfinite(total_))
        throw QuadratureError("angular density has nonpositive total mass");
    if (std::abs(total_ - 1.0) > 1e-6)
        throw QuadratureError("angular density is not normalized (integral far from 1)");
}

double MassProfile::G(double theta) const {
    double k = std::floor(theta / kTwoPi);
    double t = theta - kTwoPi * k;
    if (t >= kTwoPi) { // guard against round-up at the seam
        t -= kTwoPi;
        k += 1.0;
    }
    const auto it = std::upper_bound(pts_.begin(), pts_.end(), t);
    std::size_t i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(
        0, std::distance(pts_.begin(), it) - 1));
    if (i >= pts_.size() - 1) i = pts_.size() - 2;
    const double partial = t > pts_[i] ? detail::gl16_panel(density_.f, pts_[i], t) : 0.0;
    return k + (cum_[i] + partial) / total_;
}

double MassProfile::H(double theta) const { return G(theta + kPi) - G(theta); }

MassProfile mass_profile(const AngularDensity& f, double tol) { return MassProfile(f, tol); }

namespace {

// Panel boundaries of `profile` translated into the window [u, u + pi].
std::vector<double> window_points(const MassProfile& profile, double u) {
    std::vector<double> pts{u, u + kPi};
    for (int k = -1; k <= 1; ++k) {
        for (double p : profile.panel_points()) {
            const double c = p + kTwoPi * k;
            if (c > u + 1e-13 && c < u + kPi - 1e-13) pts.push_back(c);
        }
    }
    return merge_sorted_unique(std::move(pts), 1e-13);
}

std::vector<double> full_circle_points(const MassProfile& profile) {
    std::vector<double> pts = profile.panel_points();
    if (pts.empty() || pts.front() > 1e-13) pts.insert(pts.begin(), 0.0);
    if (pts.back() < kTwoPi - 1e-13) pts.push_back(kTwoPi);
    return pts;
}

ProbabilityResult finish(double raw, double err, Method method) {
    ProbabilityResult out;
    out.raw_value = raw;
    out.method = method;
    out.error_estimate = err;
    out.value = std::clamp(raw, 0.0, 0.25);
    return out;
}

} // namespace

ProbabilityResult probability(const AngularDensity& f, double tol) {
    MassProfile profile(f, std::min(tol, 1e-11));
    auto integrand = [&profile](double t) {
        const double d = 0.5 - profile.H(t);
        return d * d * profile.density(t);
    };
    QuadResult q = integrate_panels(integrand, full_circle_points(profile),
                                    {tol / 3.0, 200000, 48});
    return finish(0.25 - 3.0 * q.value, 3.0 * q.error, Method::quadrature_eq15);
}

ProbabilityResult probability(const Region& region, AnchorPoint anchor, double tol) {
    return probability(angular_density(region, anchor), tol);
}

ProbabilityResult probability_via_u(const MassProfile& profile, double u, double tol) {
    const double x = profile.H(u);
    const std::vector<double> pts = window_points(profile, u);
    const QuadOptions opts{tol / 6.0, 200000, 48};

    auto hh = [&profile](double t) {
        const double h = profile.H(t);
        return h * (1.0 - h) * profile.density(t);
    };
    auto sq = [&profile](double t) {
        const double d = 0.5 - profile.H(t);
        return d * d * profile.density(t);
    };
    const QuadResult qa = integrate_panels(hh, pts, opts);
    const QuadResult qb = integrate_panels(sq, pts, opts);

    const double p12 = -x * x * (3.0 - 2.0 * x) + 6.0 * qa.value;
    const double one_minus = 1.0 - 2.0 * x;
    const double p13 = 0.25 - one_minus * one_minus * one_minus / 4.0 - 6.0 * qb.value;
    const double budget = 10.0 * std::max(6.0 * (qa.error + qb.error), tol);
    if (std::abs(p12 - p13) > budget)
        throw ConsistencyError("base-point probability formulas disagree beyond tolerance");
    return finish(p12, 6.0 * (qa.error + qb.error) + std::abs(p12 - p13),
                  Method::quadrature_eq12);
}

ProbabilityResult probability_via_u(const AngularDensity& f, double u, double tol) {
    MassProfile profile(f, std::min(tol, 1e-11));
    return probability_via_u(profile, u, tol);
}

double find_median_angle(const MassProfile& profile) {
    auto g = [&profile](double t) { return profile.H(t) - 0.5; };
    if (std::abs(g(0.0)) <= 1e-13) return 0.0;
    // H(pi) - 1/2 = -(H(0) - 1/2) exactly, so [0, pi] brackets a root.
    const double root = bisect_root(g, 0.0, kPi, 1e-15);
    if (std::abs(g(root)) > 1e-12)
        throw QuadratureError("median angle bisection failed to converge on H = 1/2");
    return root;
}

ProbabilityResult probability_eq14(const MassProfile& profile, double tol) {
    const double u = find_median_angle(profile);
    auto sq = [&profile](double t) {
        const double d = 0.5 - profile.H(t);
        return d * d * profile.density(t);
    };
    QuadResult q = integrate_panels(sq, window_points(profile, u), {tol / 6.0, 200000, 48});
    return finish(0.25 - 6.0 * q.value, 6.0 * q.error, Method::quadrature_eq14);
}

ProbabilityResult probability_eq14(const AngularDensity& f, double tol) {
    MassProfile profile(f, std::min(tol, 1e-11));
    return probability_eq14(profile, tol);
}

namespace {

double double_integral_pass(const MassProfile& profile, int n) {
    const double h = kTwoPi / n;
    std::vector<double> w(static_cast<std::size_t>(n));
    std::vector<double> gp(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double s = (i + 0.5) * h;
        w[static_cast<std::size_t>(i)] = profile.density(s) * h;
        gp[static_cast<std::size_t>(i)] = profile.G(s + kPi);
    }
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double si = (i + 0.5) * h;
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            const double delta = wrap_angle((j + 0.5) * h - si);
            double diff = gp[static_cast<std::size_t>(j)] - gp[static_cast<std::size_t>(i)];
            if (j < i) diff += 1.0;
            row += w[static_cast<std::size_t>(j)] * (delta <= kPi ? diff : 1.0 - diff);
        }
        acc += w[static_cast<std::size_t>(i)] * row;
    }
    return acc;
}

} // namespace

ProbabilityResult probability_double_integral(const Region& region, AnchorPoint anchor,
                                              int n_panels) {
    if (n_panels < 64) throw DomainError("double-integral oracle needs n_panels >= 64");
    MassProfile profile(angular_density(region, anchor), 1e-12);
    const double coarse = double_integral_pass(profile, n_panels);
    const double fine = double_integral_pass(profile, 2 * n_panels);
    const double raw = fine + (fine - coarse) / 3.0;
    const double err = std::max(std::abs(fine - coarse) / 3.0, 1e-12);
    return finish(raw, err, Method::double_integral);
}

double min_half_mass(const MassProfile& profile) {
    std::vector<double> grid = profile.panel_points();
    constexpr int kGrid = 2048;
    for (int i = 0; i < kGrid; ++i) grid.push_back(kTwoPi * i / kGrid);
    grid = merge_sorted_unique(std::move(grid), 1e-13);
    if (!grid.empty() && grid.back() >= kTwoPi - 1e-13) grid.pop_back();

    const std::size_t n = grid.size();
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = profile.H(grid[i]);

    double best = *std::min_element(vals.begin(), vals.end());
    auto hfun = [&profile](double t) { return profile.H(t); };
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t prev = (i + n - 1) % n;
        const std::size_t next = (i + 1) % n;
        if (vals[i] > vals[prev] || vals[i] > vals[next]) continue; // not a grid minimum
        if (vals[i] == vals[next]) continue;  // plateau: the grid value is already exact
        double lo = grid[prev];
        double hi = grid[next];
        if (prev > i) lo -= kTwoPi;
        if (next < i) hi += kTwoPi;
        best = std::min(best, hfun(golden_min(hfun, lo, hi, 1e-12)));
    }
    return std::clamp(best, 0.0, 0.5);
}

} // namespace tricontain
