#include "tricontain/region.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <utility>

#include "tricontain/quadrature.hpp"

namespace tricontain {

using region_detail::DiskSliceData;
using region_detail::OffsetDiskData;
using region_detail::PolarGraphData;
using region_detail::PolygonData;
using region_detail::RadialSlicesData;

namespace {

double shoelace_twice(const std::vector<Vec2>& vs) {
    double acc = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Vec2& a = vs[i];
        const Vec2& b = vs[(i + 1) % vs.size()];
        acc += cross(a, b);
    }
    return acc;
}

double polygon_scale(const std::vector<Vec2>& vs) {
    double s = 0.0;
    for (const Vec2& v : vs) s = std::max({s, std::abs(v.x), std::abs(v.y)});
    return std::max(s, 1e-30);
}

int orient(Vec2 a, Vec2 b, Vec2 c, double eps) {
    const double d = cross(b - a, c - a);
    if (d > eps) return 1;
    if (d < -eps) return -1;
    return 0;
}

bool on_segment_collinear(Vec2 a, Vec2 b, Vec2 p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double eps) {
    const int o1 = orient(a, b, c, eps);
    const int o2 = orient(a, b, d, eps);
    const int o3 = orient(c, d, a, eps);
    const int o4 = orient(c, d, b, eps);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment_collinear(a, b, c)) return true;
    if (o2 == 0 && on_segment_collinear(a, b, d)) return true;
    if (o3 == 0 && on_segment_collinear(c, d, a)) return true;
    if (o4 == 0 && on_segment_collinear(c, d, b)) return true;
    return false;
}

void validate_polygon(const std::vector<Vec2>& vs) {
    if (vs.size() < 3) throw DomainError("polygon needs at least 3 vertices");
    const double scale = polygon_scale(vs);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Vec2 e = vs[(i + 1) % vs.size()] - vs[i];
        if (norm(e) <= 1e-14 * scale) throw DomainError("polygon has a zero-length edge");
    }
    const double twice = shoelace_twice(vs);
    if (std::abs(twice) <= 1e-14 * scale * scale)
        throw DegenerateRegionError("polygon area is numerically zero");
    if (twice < 0.0)
        throw DomainError("polygon vertices must be in counterclockwise order");
    // Full O(n^2) simplicity check only at modest sizes; large polygons
    // (e.g. dense curve approximations) are trusted to be simple.
    if (vs.size() <= 512) {
        const double eps = 1e-12 * scale * scale;
        const std::size_t n = vs.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
                if (adjacent) continue;
                if (segments_intersect(vs[i], vs[(i + 1) % n], vs[j], vs[(j + 1) % n], eps))
                    throw DomainError("polygon is self-intersecting");
            }
        }
    }
}

bool polygon_contains(const std::vector<Vec2>& vs, Vec2 p) {
    bool in = false;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Vec2& a = vs[i];
        const Vec2& b = vs[(i + 1) % vs.size()];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double xint = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < xint) in = !in;
        }
    }
    return in;
}

double point_segment_distance(Vec2 a, Vec2 b, Vec2 p) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return norm(p - (a + t * ab));
}

bool polygon_on_boundary(const std::vector<Vec2>& vs, Vec2 p, double tol) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (point_segment_distance(vs[i], vs[(i + 1) % vs.size()], p) <= tol) return true;
    return false;
}

void require_origin_anchor(AnchorPoint anchor, const char* kind) {
    if (norm(anchor) > 1e-12)
        throw DomainError(std::string(kind) +
                          " regions are parametrized about the origin; anchor must be (0, 0)");
}

std::vector<double> sorted_unique_angles(std::vector<double> ts) {
    for (double& t : ts) t = wrap_angle(t);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-13; }),
             ts.end());
    return ts;
}

// Ray-vs-polygon crossings by parity, pairing intervals from the far end.
// Near-degenerate hits (ray through a vertex, ray along an edge) are resolved
// by nudging the angle, which changes the answer only by a measure-zero set.
std::vector<Interval> polygon_ray_intervals(const std::vector<Vec2>& rel, double theta) {
    const double scale = polygon_scale(rel);
    for (int attempt = 0; attempt < 12; ++attempt) {
        const double th = theta + static_cast<double>(attempt) * 7.3e-12;
        const Vec2 u{std::cos(th), std::sin(th)};
        std::vector<double> ts;
        bool degenerate = false;
        for (std::size_t i = 0; i < rel.size() && !degenerate; ++i) {
            const Vec2 a = rel[i];
            const Vec2 b = rel[(i + 1) % rel.size()];
            const Vec2 e = b - a;
            const double den = cross(u, e);
            if (std::abs(den) <= 1e-13 * norm(e)) {
                // Edge parallel to the ray: only troublesome if collinear with it.
                if (std::abs(cross(u, a)) <= 1e-12 * scale) degenerate = true;
                continue;
            }
            const double sigma = cross(a, u) / den;
            if (sigma < -1e-12 || sigma > 1.0 + 1e-12) continue;
            if (sigma < 1e-10 || sigma > 1.0 - 1e-10) {
                degenerate = true; // hit too close to a vertex; retry nudged
                continue;
            }
            const double t = cross(a, b) / den;
            if (t > 1e-13 * scale) ts.push_back(t);
        }
        if (degenerate) continue;
        std::sort(ts.begin(), ts.end());
        if (ts.size() % 2 == 1) ts.insert(ts.begin(), 0.0);
        std::vector<Interval> out;
        for (std::size_t k = 0; k + 1 < ts.size(); k += 2)
            if (ts[k + 1] - ts[k] > 1e-13 * scale) out.push_back({ts[k], ts[k + 1]});
        return out;
    }
    throw DomainError("ray-polygon intersection is degenerate at this angle");
}

std::vector<Interval> prune_intervals(std::vector<Interval> iv, double scale) {
    std::vector<Interval> out;
    for (const Interval& s : iv)
        if (s.r_out - s.r_in > 1e-14 * scale) out.push_back(s);
    return out;
}

} // namespace

// --- factories ---

Region Region::polygon(std::vector<Vec2> vertices) {
    validate_polygon(vertices);
    return Region(PolygonData{std::move(vertices)});
}

Region Region::polar_graph(std::function<double(double)> r, std::vector<double> breakpoints,
                           double radius_bound, std::string family) {
    if (!r) throw DomainError("polar graph requires a radius function");
    if (!(radius_bound > 0.0)) throw DomainError("polar graph radius bound must be positive");
    std::vector<double> probe = sorted_unique_angles(breakpoints);
    for (int i = 0; i < 256; ++i) probe.push_back(kTwoPi * i / 256.0);
    for (double t : probe) {
        const double v = r(t);
        if (!(v >= -1e-12 * radius_bound)) throw DomainError("polar radius must be nonnegative");
        if (v > radius_bound * (1.0 + 1e-9) + 1e-12)
            throw DomainError("polar radius exceeds the declared bound");
    }
    return Region(PolarGraphData{std::move(r), sorted_unique_angles(breakpoints), radius_bound,
                                 std::move(family)});
}

Region Region::radial_slices(std::function<std::vector<Interval>(double)> slices,
                             std::vector<double> breakpoints, double radius_bound,
                             std::string family) {
    if (!slices) throw DomainError("radial slices require a slice function");
    if (!(radius_bound > 0.0)) throw DomainError("radial slices radius bound must be positive");
    for (int i = 0; i < 64; ++i) {
        const double t = kTwoPi * (i + 0.37) / 64.0;
        double prev_out = -1.0;
        for (const Interval& s : slices(t)) {
            if (!(s.r_in >= -1e-12) || !(s.r_out >= s.r_in - 1e-12))
                throw DomainError("radial slice intervals must satisfy 0 <= r_in <= r_out");
            if (s.r_in < prev_out - 1e-12)
                throw DomainError("radial slice intervals must be sorted and disjoint");
            if (s.r_out > radius_bound * (1.0 + 1e-9) + 1e-12)
                throw DomainError("radial slice exceeds the declared radius bound");
            prev_out = s.r_out;
        }
    }
    return Region(RadialSlicesData{std::move(slices), sorted_unique_angles(breakpoints),
                                   radius_bound, std::move(family)});
}

Region Region::disk_slice(double a) {
    if (!(a >= 0.0 && a <= 0.5)) throw DomainError("disk slice fraction must be in [0, 1/2]");
    return Region(DiskSliceData{a});
}

Region Region::offset_disk(double r) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("offset fraction must be in [0, 1)");
    return Region(OffsetDiskData{r});
}

Region Region::unit_square() {
    return polygon({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
}

Region Region::circle(double R) {
    if (!(R > 0.0)) throw DomainError("circle radius must be positive");
    return polar_graph([R](double) { return R; }, {}, R, "circle");
}

Region Region::disk() { return circle(1.0 / std::sqrt(kPi)); }

Region Region::crescent() {
    auto slices = [](double theta) -> std::vector<Interval> {
        const double c = std::cos(theta);
        if (c > 0.0) {
            if (c >= 1.0) return {};
            return {{c, 1.0}};
        }
        return {{0.0, 1.0}};
    };
    return radial_slices(std::move(slices), {kPi / 2.0, 3.0 * kPi / 2.0}, 1.0, "crescent");
}

Region Region::limacon(double a) {
    if (!(a >= 1.0)) throw DomainError("limacon parameter must satisfy a >= 1");
    const double c = std::sqrt(2.0 / ((2.0 * a * a + 1.0) * kPi)); // unit area
    return polar_graph([c, a](double t) { return c * (a + std::cos(t)); }, {}, c * (a + 1.0),
                       "limacon");
}

Region Region::equilateral_triangle() {
    const double a = std::pow(3.0, -0.25); // unit area
    return polygon({{-a, 0.0}, {a, 0.0}, {0.0, a * std::sqrt(3.0)}});
}

Region Region::regular_polygon(int m) {
    if (m < 1) throw DomainError("regular polygon takes m >= 1 (2m+1 vertices)");
    const int n = 2 * m + 1;
    const double R = std::sqrt(2.0 / (n * std::sin(kTwoPi / n))); // unit area
    std::vector<Vec2> vs;
    vs.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double t = kTwoPi * k / n;
        vs.push_back({R * std::cos(t), R * std::sin(t)});
    }
    return polygon(std::move(vs));
}

Region Region::triangle(Vec2 a, Vec2 b, Vec2 c) {
    if (cross(b - a, c - a) < 0.0) std::swap(b, c);
    return polygon({a, b, c});
}

std::string Region::describe() const {
    struct V {
        std::string operator()(const PolygonData& d) const {
            return "polygon(n=" + std::to_string(d.vertices.size()) + ")";
        }
        std::string operator()(const PolarGraphData& d) const { return d.family; }
        std::string operator()(const RadialSlicesData& d) const { return d.family; }
        std::string operator()(const DiskSliceData& d) const {
            return "disk_slice(a=" + std::to_string(d.a) + ")";
        }
        std::string operator()(const OffsetDiskData& d) const {
            return "offset_disk(r=" + std::to_string(d.r) + ")";
        }
    };
    return std::visit(V{}, data_);
}

// --- area ---

double area(const Region& region) {
    struct V {
        double operator()(const PolygonData& d) const { return 0.5 * shoelace_twice(d.vertices); }
        double operator()(const PolarGraphData& d) const {
            std::vector<double> pts = d.breakpoints;
            pts.insert(pts.begin(), 0.0);
            pts.push_back(kTwoPi);
            const auto& r = d.r;
            QuadResult q = integrate_panels([&r](double t) { const double v = r(t); return 0.5 * v * v; },
                                            pts, {1e-12, 200000, 48});
            return q.value;
        }
        double operator()(const RadialSlicesData& d) const {
            std::vector<double> pts = d.breakpoints;
            pts.insert(pts.begin(), 0.0);
            pts.push_back(kTwoPi);
            const auto& sl = d.slices;
            auto f = [&sl](double t) {
                double acc = 0.0;
                for (const Interval& s : sl(wrap_angle(t)))
                    acc += 0.5 * (s.r_out * s.r_out - s.r_in * s.r_in);
                return acc;
            };
            QuadResult q = integrate_panels(f, pts, {1e-12, 200000, 48});
            return q.value;
        }
        double operator()(const DiskSliceData& d) const {
            const double alpha = kPi * d.a;
            const double rad2 = 1.0 / (kPi - alpha);
            return (kPi - alpha) * rad2; // = 1 by construction
        }
        double operator()(const OffsetDiskData&) const { return 1.0; }
    };
    const double a = std::visit(V{}, region.data());
    if (!(a > 1e-14)) throw DegenerateRegionError("region area is numerically zero");
    return a;
}

// --- membership / bounding box ---

bool contains(const Region& region, Vec2 p) {
    struct V {
        Vec2 p;
        bool operator()(const PolygonData& d) const {
            if (polygon_contains(d.vertices, p)) return true;
            return polygon_on_boundary(d.vertices, p, 1e-12 * polygon_scale(d.vertices));
        }
        bool operator()(const PolarGraphData& d) const {
            return norm(p) <= d.r(std::atan2(p.y, p.x)) + 1e-15;
        }
        bool operator()(const RadialSlicesData& d) const {
            const double rho = norm(p);
            for (const Interval& s : d.slices(wrap_angle(std::atan2(p.y, p.x))))
                if (rho >= s.r_in - 1e-15 && rho <= s.r_out + 1e-15) return true;
            return false;
        }
        bool operator()(const DiskSliceData& d) const {
            const double alpha = kPi * d.a;
            const double rad = 1.0 / std::sqrt(kPi - alpha);
            if (norm(p) > rad + 1e-15) return false;
            return std::abs(std::atan2(p.y, p.x)) >= alpha - 1e-15;
        }
        bool operator()(const OffsetDiskData& d) const {
            const double R = 1.0 / std::sqrt(kPi);
            const Vec2 center{-d.r * R, 0.0};
            return norm(p - center) <= R + 1e-15;
        }
    };
    return std::visit(V{p}, region.data());
}

BoundingBox bounding_box(const Region& region) {
    struct V {
        BoundingBox operator()(const PolygonData& d) const {
            BoundingBox b{d.vertices[0], d.vertices[0]};
            for (const Vec2& v : d.vertices) {
                b.lo.x = std::min(b.lo.x, v.x);
                b.lo.y = std::min(b.lo.y, v.y);
                b.hi.x = std::max(b.hi.x, v.x);
                b.hi.y = std::max(b.hi.y, v.y);
            }
            return b;
        }
        BoundingBox operator()(const PolarGraphData& d) const {
            const double r = d.radius_bound;
            return {{-r, -r}, {r, r}};
        }
        BoundingBox operator()(const RadialSlicesData& d) const {
            const double r = d.radius_bound;
            return {{-r, -r}, {r, r}};
        }
        BoundingBox operator()(const DiskSliceData& d) const {
            const double rad = 1.0 / std::sqrt(kPi - kPi * d.a);
            return {{-rad, -rad}, {rad, rad}};
        }
        BoundingBox operator()(const OffsetDiskData& d) const {
            const double R = 1.0 / std::sqrt(kPi);
            const double cx = -d.r * R;
            return {{cx - R, -R}, {cx + R, R}};
        }
    };
    return std::visit(V{}, region.data());
}

// --- radial slices along a ray ---

std::vector<Interval> radial_slices_at(const Region& region, AnchorPoint anchor, double theta) {
    struct V {
        AnchorPoint anchor;
        double theta;
        std::vector<Interval> operator()(const PolygonData& d) const {
            std::vector<Vec2> rel;
            rel.reserve(d.vertices.size());
            for (const Vec2& v : d.vertices) rel.push_back(v - anchor);
            return polygon_ray_intervals(rel, theta);
        }
        std::vector<Interval> operator()(const PolarGraphData& d) const {
            require_origin_anchor(anchor, "polar graph");
            const double r = d.r(wrap_angle(theta));
            if (r <= 1e-14 * d.radius_bound) return {};
            return {{0.0, r}};
        }
        std::vector<Interval> operator()(const RadialSlicesData& d) const {
            require_origin_anchor(anchor, "radial slice");
            return prune_intervals(d.slices(wrap_angle(theta)), d.radius_bound);
        }
        std::vector<Interval> operator()(const DiskSliceData& d) const {
            require_origin_anchor(anchor, "disk slice");
            const double alpha = kPi * d.a;
            const double rad = 1.0 / std::sqrt(kPi - alpha);
            const double t = wrap_angle(theta);
            const double fold = std::min(t, kTwoPi - t);
            if (fold >= alpha) return {{0.0, rad}};
            return {};
        }
        std::vector<Interval> operator()(const OffsetDiskData& d) const {
            require_origin_anchor(anchor, "offset disk");
            const double R = 1.0 / std::sqrt(kPi);
            const double dd = d.r * R;
            const double s = std::sin(theta);
            const double rho = -dd * std::cos(theta) + std::sqrt(R * R - dd * dd * s * s);
            if (rho <= 1e-16) return {};
            return {{0.0, rho}};
        }
    };
    return std::visit(V{anchor, theta}, region.data());
}

// --- angular density ---

namespace {

struct PolygonEdge {
    double lo;    // window start angle (wrapped)
    double span;  // window width in (0, pi)
    double sign;  // +1 if the edge runs counterclockwise as seen from the anchor
    Vec2 a, b;
    double cr;    // cross(a, b), nonzero
};

// Angular bucket index over the edge windows, so a density query touches only
// the edges whose window can contain the query angle. Keeps the density
// O(active edges) per evaluation instead of O(n) for many-vertex polygons.
struct PolygonEdgeIndex {
    std::vector<PolygonEdge> edges;
    std::vector<std::vector<std::uint32_t>> buckets;
    double cell = kTwoPi;

    void build() {
        std::size_t nb = 16;
        while (nb < 4 * edges.size() && nb < 8192) nb *= 2;
        buckets.assign(nb, {});
        cell = kTwoPi / static_cast<double>(nb);
        for (std::uint32_t i = 0; i < edges.size(); ++i) {
            // Mark one spare bucket on each side: the prefilter must never
            // drop an active edge to round-off at a bucket boundary.
            const long first = static_cast<long>(edges[i].lo / cell) - 1;
            const long last = static_cast<long>((edges[i].lo + edges[i].span) / cell) + 1;
            for (long k = first; k <= last; ++k) {
                const std::size_t slot =
                    static_cast<std::size_t>(((k % static_cast<long>(nb)) +
                                              static_cast<long>(nb)) %
                                             static_cast<long>(nb));
                buckets[slot].push_back(i);
            }
        }
    }

    const std::vector<std::uint32_t>& candidates(double wrapped) const {
        std::size_t k = static_cast<std::size_t>(wrapped / cell);
        if (k >= buckets.size()) k = buckets.size() - 1;
        return buckets[k];
    }
};

AngularDensity polygon_density(const PolygonData& d, AnchorPoint anchor) {
    const double A = 0.5 * shoelace_twice(d.vertices);
    const double scale = polygon_scale(d.vertices);
    if (!polygon_contains(d.vertices, anchor) &&
        !polygon_on_boundary(d.vertices, anchor, 1e-9 * scale))
        throw DomainError("anchor must lie in the closure of the polygon");

    auto index = std::make_shared<PolygonEdgeIndex>();
    std::vector<double> bps;
    const std::size_t n = d.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = d.vertices[i] - anchor;
        const Vec2 b = d.vertices[(i + 1) % n] - anchor;
        bps.push_back(std::atan2(a.y, a.x));
        const double cr = cross(a, b);
        // Edges collinear with the anchor subtend a zero-area wedge.
        if (std::abs(cr) <= 1e-14 * scale * scale) continue;
        const double ta = std::atan2(a.y, a.x);
        const double tb = std::atan2(b.y, b.x);
        PolygonEdge e;
        if (cr > 0.0) {
            e.lo = wrap_angle(ta);
            e.span = wrap_angle(tb - ta);
            e.sign = 1.0;
        } else {
            e.lo = wrap_angle(tb);
            e.span = wrap_angle(ta - tb);
            e.sign = -1.0;
        }
        e.a = a;
        e.b = b;
        e.cr = cr;
        index->edges.push_back(e);
    }
    index->build();

    AngularDensity out;
    out.total_area = A;
    out.breakpoints = sorted_unique_angles(bps);
    out.f = [index, A](double theta) {
        const double t = wrap_angle(theta);
        const Vec2 u{std::cos(theta), std::sin(theta)};
        double acc = 0.0;
        for (std::uint32_t i : index->candidates(t)) {
            const PolygonEdge& e = index->edges[i];
            if (wrap_angle(theta - e.lo) >= e.span) continue;
            const double den = u.x * (e.b.y - e.a.y) - u.y * (e.b.x - e.a.x);
            const double r = e.cr / den;
            acc += e.sign * r * r;
        }
        return acc / (2.0 * A);
    };
    return out;
}

} // namespace

AngularDensity angular_density(const Region& region, AnchorPoint anchor) {
    struct V {
        AnchorPoint anchor;
        const Region* self;
        AngularDensity operator()(const PolygonData& d) const {
            return polygon_density(d, anchor);
        }
        AngularDensity operator()(const PolarGraphData& d) const {
            require_origin_anchor(anchor, "polar graph");
            const double A = area(*self);
            AngularDensity out;
            out.total_area = A;
            out.breakpoints = d.breakpoints;
            auto r = d.r;
            out.f = [r, A](double t) {
                const double v = r(wrap_angle(t));
                return v * v / (2.0 * A);
            };
            return out;
        }
        AngularDensity operator()(const RadialSlicesData& d) const {
            require_origin_anchor(anchor, "radial slice");
            const double A = area(*self);
            AngularDensity out;
            out.total_area = A;
            out.breakpoints = d.breakpoints;
            auto sl = d.slices;
            out.f = [sl, A](double t) {
                double acc = 0.0;
                for (const Interval& s : sl(wrap_angle(t)))
                    acc += s.r_out * s.r_out - s.r_in * s.r_in;
                return acc / (2.0 * A);
            };
            return out;
        }
        AngularDensity operator()(const DiskSliceData& d) const {
            require_origin_anchor(anchor, "disk slice");
            const double alpha = kPi * d.a;
            const double rad2 = 1.0 / (kPi - alpha);
            AngularDensity out;
            out.total_area = 1.0;
            if (d.a > 0.0) out.breakpoints = {alpha, kTwoPi - alpha};
            out.f = [alpha, rad2](double t) {
                const double w = wrap_angle(t);
                const double fold = std::min(w, kTwoPi - w);
                return fold >= alpha ? 0.5 * rad2 : 0.0;
            };
            return out;
        }
        AngularDensity operator()(const OffsetDiskData& d) const {
            require_origin_anchor(anchor, "offset disk");
            const double R = 1.0 / std::sqrt(kPi);
            const double dd = d.r * R;
            AngularDensity out;
            out.total_area = 1.0;
            out.f = [R, dd](double t) {
                const double s = std::sin(t);
                const double rho = -dd * std::cos(t) + std::sqrt(R * R - dd * dd * s * s);
                return 0.5 * rho * rho;
            };
            return out;
        }
    };
    return std::visit(V{anchor, &region}, region.data());
}

// --- barycentric helpers ---

BarycentricPoint barycentric_coordinates(Vec2 a, Vec2 b, Vec2 c, Vec2 p) {
    const double denom = cross(b - a, c - a);
    if (std::abs(denom) <= 1e-14 * (norm(b - a) + norm(c - a)))
        throw DomainError("barycentric coordinates of a degenerate triangle");
    BarycentricPoint q;
    q.alpha = cross(b - p, c - p) / denom;
    q.beta = cross(c - p, a - p) / denom;
    q.gamma = cross(a - p, b - p) / denom;
    return q;
}

Vec2 from_barycentric(Vec2 a, Vec2 b, Vec2 c, const BarycentricPoint& q) {
    return {q.alpha * a.x + q.beta * b.x + q.gamma * c.x,
            q.alpha * a.y + q.beta * b.y + q.gamma * c.y};
}

} // namespace tricontain
