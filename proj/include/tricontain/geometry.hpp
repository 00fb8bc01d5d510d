#pragma once

#include <cmath>

namespace tricontain {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

// The fixed point whose containment in the random triangle defines the event.
using AnchorPoint = Vec2;

// Angle folded into [0, 2*pi).
inline double wrap_angle(double t) {
    double w = std::fmod(t, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    if (w >= kTwoPi) w = 0.0; // fmod can round up to 2*pi
    return w;
}

// Normalized areal coordinates of a point inside a triangle.
struct BarycentricPoint {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

} // namespace tricontain
