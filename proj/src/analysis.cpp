#include "tricontain/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "tricontain/errors.hpp"
#include "tricontain/kernel.hpp"
#include "tricontain/quadrature.hpp"

namespace tricontain::analysis {

BoundsReport bounds(const Region& region, AnchorPoint anchor) {
    const MassProfile profile(angular_density(region, anchor), 1e-12);
    BoundsReport out;
    out.h = min_half_mass(profile);
    const double gap = 0.5 - out.h;
    out.lower = 0.25 - (1.0 + 4.0 * out.h) * gap * gap;
    out.upper = 0.25 - 2.0 * gap * gap * gap;
    out.p = probability(profile.angular_density(), 1e-10).value;
    if (out.p < out.lower - 1e-9 || out.p > out.upper + 1e-9)
        throw ConsistencyError("probability escaped the half-mass sandwich bounds");
    return out;
}

double symmetry_defect(const Region& region, AnchorPoint anchor) {
    const MassProfile profile(angular_density(region, anchor), 1e-12);
    auto defect = [&profile](double t) { return std::abs(profile.H(t) - 0.5); };

    std::vector<double> grid = profile.panel_points();
    constexpr int kGrid = 2048;
    for (int i = 0; i < kGrid; ++i) grid.push_back(kTwoPi * i / kGrid);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end(),
                           [](double a, double b) { return b - a < 1e-13; }),
               grid.end());
    if (!grid.empty() && grid.back() >= kTwoPi - 1e-13) grid.pop_back();

    const std::size_t n = grid.size();
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = defect(grid[i]);

    double best = *std::max_element(vals.begin(), vals.end());
    auto neg = [&defect](double t) { return -defect(t); };
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t prev = (i + n - 1) % n;
        const std::size_t next = (i + 1) % n;
        if (vals[i] < vals[prev] || vals[i] < vals[next]) continue; // not a grid maximum
        if (vals[i] == vals[next]) continue;  // plateau: grid value already exact
        double lo = grid[prev];
        double hi = grid[next];
        if (prev > i) lo -= kTwoPi;
        if (next < i) hi += kTwoPi;
        best = std::max(best, defect(golden_min(neg, lo, hi, 1e-12)));
    }
    return best;
}

std::vector<std::pair<double, double>> boundary_limit_probe(const Region& region,
                                                            Vec2 boundary_point,
                                                            Vec2 direction, int steps) {
    if (steps < 1) throw DomainError("boundary probe needs at least one step");
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        const double eps = 0.25 * std::pow(2.0, -k);
        const Vec2 anchor = boundary_point + eps * direction;
        if (!contains(region, anchor))
            throw DomainError("probe anchor left the region at step " + std::to_string(k));
        out.emplace_back(eps, probability(region, anchor, 1e-10).value);
    }
    return out;
}

namespace {

// Off-origin anchors need a polygon; polar-parametrized kinds are swapped for
// an inscribed polygon. An even vertex count keeps the polygon centrally
// symmetric about the parametrization center, so the probability at a
// symmetric maximizer is exact; elsewhere the substitution error (~1e-4) is
// far below the coarse-grid scale the search resolves.
Region anchor_free_region(const Region& region) {
    struct V {
        const Region* self;
        Region operator()(const region_detail::PolygonData&) const { return *self; }
        Region operator()(const region_detail::PolarGraphData& d) const {
            constexpr int n = 192;
            std::vector<Vec2> vs;
            vs.reserve(n);
            for (int i = 0; i < n; ++i) {
                const double t = kTwoPi * i / n;
                const double r = d.r(t);
                vs.push_back({r * std::cos(t), r * std::sin(t)});
            }
            return Region::polygon(std::move(vs));
        }
        Region operator()(const region_detail::RadialSlicesData&) const {
            throw DomainError(
                "anchor maximization is not supported for radial-slice regions");
        }
        Region operator()(const region_detail::DiskSliceData& d) const {
            const double alpha = kPi * d.a;
            const double rad = 1.0 / std::sqrt(kPi - alpha);
            constexpr int n = 190;
            std::vector<Vec2> vs;
            if (d.a == 0.0) { // plain disk: no notch, no origin vertex
                for (int i = 0; i < n; ++i) {
                    const double t = kTwoPi * i / n;
                    vs.push_back({rad * std::cos(t), rad * std::sin(t)});
                }
            } else {
                vs.push_back({0.0, 0.0});
                for (int i = 0; i <= n; ++i) {
                    const double t = alpha + (kTwoPi - 2.0 * alpha) * i / n;
                    vs.push_back({rad * std::cos(t), rad * std::sin(t)});
                }
            }
            return Region::polygon(std::move(vs));
        }
        Region operator()(const region_detail::OffsetDiskData& d) const {
            const double R = 1.0 / std::sqrt(kPi);
            const Vec2 c{-d.r * R, 0.0};
            constexpr int n = 192;
            std::vector<Vec2> vs;
            vs.reserve(n);
            for (int i = 0; i < n; ++i) {
                const double t = kTwoPi * i / n;
                vs.push_back({c.x + R * std::cos(t), c.y + R * std::sin(t)});
            }
            return Region::polygon(std::move(vs));
        }
    };
    return std::visit(V{&region}, region.data());
}

} // namespace

MaximizerReport maximize(const Region& region, int grid, int refine_iters) {
    if (grid < 8) throw DomainError("maximizer grid must be at least 8");
    if (refine_iters < 0) throw DomainError("refine_iters must be nonnegative");
    const Region eval_region = anchor_free_region(region);
    const BoundingBox box = bounding_box(eval_region);

    MaximizerReport report;
    auto evaluate = [&eval_region](Vec2 p) -> double {
        if (!contains(eval_region, p)) return -1.0;
        return probability(eval_region, p, 1e-9).value;
    };

    bool found = false;
    for (int iy = 0; iy < grid; ++iy) {
        for (int ix = 0; ix < grid; ++ix) {
            const Vec2 p{box.lo.x + (box.hi.x - box.lo.x) * (ix + 0.5) / grid,
                         box.lo.y + (box.hi.y - box.lo.y) * (iy + 0.5) / grid};
            const double v = evaluate(p);
            if (v < 0.0) continue;
            if (!found || v > report.p_max) {
                found = true;
                report.argmax = p;
                report.p_max = v;
                report.trace.emplace_back(p, v);
            }
        }
    }
    if (!found) throw DomainError("no grid anchor landed inside the region");

    // Nelder-Mead on -P, seeded at the best grid cell with cell-sized steps.
    const double hx = (box.hi.x - box.lo.x) / grid;
    const double hy = (box.hi.y - box.lo.y) / grid;
    struct Node {
        Vec2 x;
        double v; // P value; -1 outside the region
    };
    std::vector<Node> s = {{report.argmax, report.p_max},
                           {report.argmax + Vec2{hx, 0.0}, 0.0},
                           {report.argmax + Vec2{0.0, hy}, 0.0}};
    s[1].v = evaluate(s[1].x);
    s[2].v = evaluate(s[2].x);

    for (int it = 0; it < refine_iters; ++it) {
        std::sort(s.begin(), s.end(), [](const Node& a, const Node& b) { return a.v > b.v; });
        if (s[0].v > report.p_max) {
            report.p_max = s[0].v;
            report.argmax = s[0].x;
            report.trace.emplace_back(s[0].x, s[0].v);
        }
        const Vec2 centroid = 0.5 * (s[0].x + s[1].x);
        const Vec2 worst = s[2].x;
        const Vec2 refl = centroid + (centroid - worst);
        const double fr = evaluate(refl);
        if (fr > s[0].v) {
            const Vec2 expand = centroid + 2.0 * (centroid - worst);
            const double fe = evaluate(expand);
            s[2] = fe > fr ? Node{expand, fe} : Node{refl, fr};
        } else if (fr > s[1].v) {
            s[2] = {refl, fr};
        } else {
            const Vec2 contract = centroid + 0.5 * (worst - centroid);
            const double fc = evaluate(contract);
            if (fc > s[2].v) {
                s[2] = {contract, fc};
            } else {
                for (int i = 1; i < 3; ++i) { // shrink toward the best vertex
                    s[i].x = s[0].x + 0.5 * (s[i].x - s[0].x);
                    s[i].v = evaluate(s[i].x);
                }
            }
        }
    }
    std::sort(s.begin(), s.end(), [](const Node& a, const Node& b) { return a.v > b.v; });
    if (s[0].v > report.p_max) {
        report.p_max = s[0].v;
        report.argmax = s[0].x;
        report.trace.emplace_back(s[0].x, s[0].v);
    }
    return report;
}

} // namespace tricontain::analysis
