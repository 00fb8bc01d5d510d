#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "tricontain/errors.hpp"
#include "tricontain/geometry.hpp"

namespace tricontain {

// One radial interval [r_in, r_out] along a ray from the anchor.
struct Interval {
    double r_in = 0.0;
    double r_out = 0.0;
};

// Normalized angular density about the anchor: the integral of f over an
// angle wedge equals the fraction of region area inside that wedge.
struct AngularDensity {
    std::function<double(double)> f;  // defined for all real theta (wraps mod 2*pi)
    std::vector<double> breakpoints;  // sorted, in [0, 2*pi); f may kink only here
    double total_area = 0.0;          // original (unnormalized) region area
};

struct BoundingBox {
    Vec2 lo;
    Vec2 hi;
};

namespace region_detail {

struct PolygonData {
    std::vector<Vec2> vertices; // counterclockwise, simple
};

struct PolarGraphData {
    std::function<double(double)> r; // radius >= 0, period 2*pi, measured from the origin
    std::vector<double> breakpoints; // sorted, in [0, 2*pi)
    double radius_bound = 0.0;       // r(theta) <= radius_bound everywhere
    std::string family;              // for printing/serialization
};

struct RadialSlicesData {
    std::function<std::vector<Interval>(double)> slices; // disjoint, sorted intervals
    std::vector<double> breakpoints;
    double radius_bound = 0.0;
    std::string family;
};

// Unit-area disk centered at the origin with a pizza-slice of half-angle
// a*pi removed around the positive x-axis; the anchor is the disk center.
struct DiskSliceData {
    double a = 0.0; // in [0, 1/2]
};

// Unit-area disk whose center sits at (-r*R, 0), R = 1/sqrt(pi), so the
// origin anchor is offset by fraction r of the radius.
struct OffsetDiskData {
    double r = 0.0; // in [0, 1)
};

} // namespace region_detail

class Region {
public:
    using Data = std::variant<region_detail::PolygonData,
                              region_detail::PolarGraphData,
                              region_detail::RadialSlicesData,
                              region_detail::DiskSliceData,
                              region_detail::OffsetDiskData>;

    // --- general constructors ---
    static Region polygon(std::vector<Vec2> vertices);
    static Region polar_graph(std::function<double(double)> r,
                              std::vector<double> breakpoints,
                              double radius_bound,
                              std::string family = "polar");
    static Region radial_slices(std::function<std::vector<Interval>(double)> slices,
                                std::vector<double> breakpoints,
                                double radius_bound,
                                std::string family = "slices");
    static Region disk_slice(double a);
    static Region offset_disk(double r);

    // --- named families ---
    static Region unit_square();                      // [0,1]^2
    static Region disk();                             // unit-area disk about the origin
    static Region circle(double R);                   // disk of radius R about the origin
    static Region crescent();                         // unit disk minus the disk r=cos(theta)
    static Region limacon(double a);                  // unit-area r = c*(a + cos), a >= 1
    static Region equilateral_triangle();             // unit area, base on the x-axis
    static Region regular_polygon(int m);             // 2m+1 vertices, unit area, centered
    static Region triangle(Vec2 a, Vec2 b, Vec2 c);   // counterclockwise-corrected

    const Data& data() const { return data_; }
    std::string describe() const;

private:
    explicit Region(Data d) : data_(std::move(d)) {}
    Data data_;
};

// Lebesgue area of the region. Throws DegenerateRegionError on zero area.
double area(const Region& region);

// Intersection of the ray from `anchor` at angle theta with the region, as
// disjoint sorted intervals. Star-shaped regions yield a single interval.
std::vector<Interval> radial_slices_at(const Region& region, AnchorPoint anchor, double theta);

// Normalized angular density about the anchor. For polar-parametrized region
// kinds (polar graph, slices, disk slices, offset disk) the anchor must be
// the parametrization origin.
AngularDensity angular_density(const Region& region, AnchorPoint anchor);

// Membership in the closed region (boundary points included up to round-off;
// exact boundary classification is not guaranteed).
bool contains(const Region& region, Vec2 p);

// Tight axis-aligned box for rejection sampling.
BoundingBox bounding_box(const Region& region);

// Areal coordinates of p in triangle (a, b, c); throws DomainError if the
// triangle is degenerate. Coordinates can be negative for outside points.
BarycentricPoint barycentric_coordinates(Vec2 a, Vec2 b, Vec2 c, Vec2 p);
Vec2 from_barycentric(Vec2 a, Vec2 b, Vec2 c, const BarycentricPoint& q);

} // namespace tricontain
