#include "tricontain/closed_forms.hpp"

#include <algorithm>
#include <cmath>

#include "tricontain/errors.hpp"
#include "tricontain/quadrature.hpp"

namespace tricontain::closed_forms {

double limacon_probability(double a) {
    if (!(a >= 1.0)) throw DomainError("limacon parameter must satisfy a >= 1");
    const double q = 2.0 * a * a + 1.0;
    return 0.25 - 12.0 * a * a * (4.0 * a * a + 1.0) / (q * q * q * kPi * kPi);
}

double regular_polygon_probability(int m) {
    if (m < 1) throw DomainError("regular polygon takes m >= 1 (2m+1 vertices)");
    const int n = 2 * m + 1;
    const double c = std::cos(kPi / n);
    const double a = c * c;
    const double eps = 1.0 - a;
    double numerator_over_eps3;
    if (eps >= 0.1) {
        const double num = 1.0 + 9.0 * a - 9.0 * a * a - a * a * a +
                           6.0 * a * (1.0 + a) * std::log(a);
        numerator_over_eps3 = num / (eps * eps * eps);
    } else {
        // The numerator is O(eps^5); expand it to dodge catastrophic
        // cancellation: num/eps^3 = sum_{k>=2} 6(k-1)/((k+1)(k+2)(k+3)) eps^k.
        double sum = 0.0;
        double pw = eps * eps;
        for (int k = 2; k <= 80; ++k) {
            const double term =
                6.0 * (k - 1) / (double(k + 1) * double(k + 2) * double(k + 3)) * pw;
            sum += term;
            if (term < 1e-20 * sum) break;
            pw *= eps;
        }
        numerator_over_eps3 = sum;
    }
    return 0.25 - numerator_over_eps3 / (4.0 * n * n);
}

namespace {

void check_barycentric(const BarycentricPoint& p) {
    if (!(p.alpha >= 0.0 && p.beta >= 0.0 && p.gamma >= 0.0))
        throw DomainError("barycentric coordinates must be nonnegative");
    if (!(p.alpha <= 1.0 && p.beta <= 1.0 && p.gamma <= 1.0))
        throw DomainError("barycentric coordinates must not exceed 1");
    if (std::abs(p.alpha + p.beta + p.gamma - 1.0) > 1e-9)
        throw DomainError("barycentric coordinates must sum to 1");
}

// I(x, y) = y^2 * integral over u in [xy/(1-y), 1-x] of
//           (x+u)^2/u - y (x+u)^4/u^2 du, in closed form.
double triangle_sector(double x, double y) {
    // y^2 * log(1/y) -> 0, so the y = 0 edge continues to the limit value 0;
    // without the guard L = 0 would put log(U/L) = inf into a 0 * inf product.
    if (y <= 0.0) return 0.0;
    const double L = x * y / (1.0 - y);
    const double U = 1.0 - x;
    if (U <= L) return 0.0;
    // log(U/L) appears only with x-power coefficients; at x = 0 those vanish,
    // so the log factor is forced to 0 to avoid 0 * inf.
    const double lg = x > 0.0 ? std::log(U / L) : 0.0;
    const double t1 = x * x * lg + 2.0 * x * (U - L) + 0.5 * (U * U - L * L);
    const double quart = 4.0 * x * x * x * lg + 6.0 * x * x * (U - L) +
                         2.0 * x * (U * U - L * L) + (U * U * U - L * L * L) / 3.0;
    // The 1/u^2 antiderivative piece, with x^4/L rewritten as x^3(1-y)/y so
    // no division by a vanishing L ever happens.
    const double inv_piece = y * x * x * x * x / U - x * x * x * (1.0 - y);
    return y * y * (t1 + inv_piece - y * quart);
}

double triangle_sector_quadrature(double x, double y) {
    if (y <= 0.0) return 0.0;  // same continuity limit as the closed form
    const double L = x * y / (1.0 - y);
    const double U = 1.0 - x;
    if (U <= L) return 0.0;
    auto integrand = [x, y](double u) {
        const double s = x + u;
        return s * s / u - y * s * s * s * s / (u * u);
    };
    return y * y * integrate(integrand, L, U, {1e-13, 200000, 48}).value;
}

template <class Sector>
double triangle_probability_impl(const BarycentricPoint& p, Sector sector) {
    check_barycentric(p);
    const double al = p.alpha, be = p.beta, ga = p.gamma;
    if (al >= 1.0 - 1e-15 || be >= 1.0 - 1e-15 || ga >= 1.0 - 1e-15) return 0.0;
    const double corner =
        ga * ga * (3.0 - 3.0 * al - 2.0 * ga) / std::pow(1.0 - al, 3);
    return 6.0 * (sector(al, ga) + sector(be, ga) + sector(be, al)) - corner;
}

} // namespace

double triangle_probability(const BarycentricPoint& p) {
    return triangle_probability_impl(p, triangle_sector);
}

double triangle_probability_quadrature(const BarycentricPoint& p) {
    return triangle_probability_impl(p, triangle_sector_quadrature);
}

double square_probability(double u, double v) {
    if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0))
        throw DomainError("square anchor must lie in [0, 1]^2");
    // Fold by the square's symmetries into 0 <= v <= u <= 1/2.
    u = std::min(u, 1.0 - u);
    v = std::min(v, 1.0 - v);
    if (v > u) std::swap(u, v);
    if (v <= 0.0) return 0.0; // anchor on the boundary: continuity limit

    const QuadOptions opts{1e-13, 200000, 48};
    const double b1 = (u - v) / (1.0 - v);
    const double b2 = u / (1.0 - v);

    auto f1 = [u, v](double x) {
        const double w = 1.0 - x;
        const double q = v * w * w / (2.0 * (u - x));
        return 0.5 * v * q * (1.0 - q);
    };
    auto f2 = [u, v](double x) {
        const double q = 2.0 * v * x + u - x;
        return 0.25 * q * (1.0 - q / (2.0 * v));
    };
    auto f3 = [u, v](double x) {
        const double q = v * x * x / (2.0 * (x - u));
        return 0.5 * v * q * (1.0 - q);
    };
    auto f4 = [u, v](double y) {
        const double q = v + y * (1.0 - 2.0 * u);
        return 0.25 * q * (1.0 - q / (2.0 * (1.0 - u)));
    };

    const double i1 = integrate(f1, 0.0, b1, opts).value;
    const double i2 = integrate(f2, b1, b2, opts).value;
    const double i3 = integrate(f3, b2, 1.0, opts).value;
    const double i4 = integrate(f4, 0.0, v / u, opts).value;
    return 6.0 * (i1 + i2 + i3 + i4) - v * v * (3.0 * u - v) / (4.0 * u * u * u);
}

double square_diagonal_probability(double u) {
    if (!(u > 0.0 && u < 0.5))
        throw DomainError("diagonal anchor parameter must lie in (0, 1/2)");
    const double u2 = u * u;
    const double rational =
        (1.0 - 2.0 * u) * (1.0 - 2.0 * u2) * (1.0 + u - 6.0 * u2 * u) / (4.0 * (1.0 - u));
    const double logterm = 3.0 * u2 * u2 * (1.0 - 2.0 * u2) * std::log((1.0 - u) / u);
    return 0.25 - rational + logterm;
}

double slice_disk_probability(double a) {
    if (!(a >= 0.0 && a <= 0.5)) throw DomainError("slice fraction must lie in [0, 1/2]");
    const double w = 1.0 - 2.0 * a;
    const double d = 1.0 - a;
    return (1.0 + a) * w * w / (4.0 * d * d * d);
}

double offset_disk_probability(double r) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("offset fraction must lie in [0, 1)");
    if (r == 0.0) return 0.25;
    auto integrand = [r](double t) {
        const double s = std::sin(t);
        const double c = std::cos(t);
        const double q = 1.0 - 2.0 * r * c + r * r; // = (1 - r c)^2 + r^2 s^2 > 0
        const double arg = std::clamp(r * s / std::sqrt(q), -1.0, 1.0);
        const double bracket =
            0.5 - std::acos(arg) / kPi + r * (1.0 - r * c) * s / (kPi * q);
        return bracket * bracket * (1.0 - r * c);
    };
    QuadResult q = integrate(integrand, 0.0, kPi, {1e-12, 200000, 48});
    return 0.25 - 3.0 / kPi * q.value;
}

OffsetDiskAverage offset_disk_average() {
    auto integrand = [](double r) { return offset_disk_probability(r) * r; };
    QuadResult q = integrate(integrand, 0.0, 1.0, {1e-10, 200000, 48});
    OffsetDiskAverage out;
    out.value = 2.0 * q.value;
    out.reference = 35.0 / (48.0 * kPi * kPi);
    return out;
}

} // namespace tricontain::closed_forms
