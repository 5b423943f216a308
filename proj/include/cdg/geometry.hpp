#pragma once

#include <cmath>
#include <vector>

#include "cdg/errors.hpp"

namespace cdg {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point2 a) { return dot(a, a); }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }
inline double dist2(Point2 a, Point2 b) { return norm2(a - b); }
inline Point2 midpoint(Point2 a, Point2 b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }
inline Point2 lerp(Point2 a, Point2 b, double t) { return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; }

inline bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Segment {
    Point2 a, b;
    double length() const { return dist(a, b); }
};

struct Triangle {
    Point2 a, b, c;
};

struct Disk {
    Point2 center;
    double radius = 0.0;

    bool contains(Point2 p) const { return dist(center, p) <= radius; }
};

// Axis-aligned closed rectangle with non-empty interior.
struct RectDomain {
    double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

    static RectDomain make(double x0, double y0, double x1, double y1) {
        require(x1 > x0 && y1 > y0, Errc::InvalidInput, "rectangle must have non-empty interior");
        return RectDomain{x0, y0, x1, y1};
    }

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    bool contains(Point2 p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
    bool contains(const RectDomain& r) const {
        return r.x0 >= x0 && r.y0 >= y0 && r.x1 <= x1 && r.y1 <= y1;
    }
    RectDomain expanded(double m) const { return RectDomain{x0 - m, y0 - m, x1 + m, y1 + m}; }
    RectDomain clipped_to(const RectDomain& frame) const {
        return RectDomain{std::max(x0, frame.x0), std::max(y0, frame.y0),
                          std::min(x1, frame.x1), std::min(y1, frame.y1)};
    }
    // Distance from p to the boundary of the rectangle, for p inside.
    double interior_depth(Point2 p) const {
        return std::min(std::min(p.x - x0, x1 - p.x), std::min(p.y - y0, y1 - p.y));
    }
    Point2 clamp(Point2 p) const {
        return {std::min(std::max(p.x, x0), x1), std::min(std::max(p.y, y0), y1)};
    }
    std::vector<Point2> corners() const {
        return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
    }
};

// Interior angle of triangle t at vertex v (0=a, 1=b, 2=c), in (0, pi).
// atan2 of cross/dot keeps full precision near 0 and pi.
double angle_at(const Triangle& t, int v);

double min_angle(const Triangle& t);

// Circumscribed disk; throws ColinearInput on degenerate triangles.
Disk circumdisk(const Triangle& t);

// Distance from c to the infinite line through a, b.
double dist_point_line(Point2 c, Point2 a, Point2 b);

// Distance from p to the closed segment ab.
double dist_point_segment(Point2 p, Point2 a, Point2 b);

// Distance from p to the closed triangle (0 when inside).
double dist_point_triangle(Point2 p, const Triangle& t);

double triangle_area(const Triangle& t);

} // namespace cdg
