#include "cdg/geometry.hpp"

#include "cdg/predicates.hpp"

#include <algorithm>

namespace cdg {

double angle_at(const Triangle& t, int v) {
    require(orientation(t.a, t.b, t.c) != Orientation::Colinear, Errc::ColinearInput,
            "angle of a degenerate triangle");
    Point2 p, q, r;
    switch (v) {
        case 0: p = t.a; q = t.b; r = t.c; break;
        case 1: p = t.b; q = t.c; r = t.a; break;
        case 2: p = t.c; q = t.a; r = t.b; break;
        default: fail(Errc::InvalidInput, "vertex index must be 0, 1, or 2");
    }
    const Point2 u = q - p, w = r - p;
    return std::abs(std::atan2(cross(u, w), dot(u, w)));
}

double min_angle(const Triangle& t) {
    return std::min({angle_at(t, 0), angle_at(t, 1), angle_at(t, 2)});
}

Disk circumdisk(const Triangle& t) {
    require(orientation(t.a, t.b, t.c) != Orientation::Colinear, Errc::ColinearInput,
            "circumdisk of a degenerate triangle");
    const Point2 b = t.b - t.a, c = t.c - t.a;
    const double d = 2.0 * cross(b, c);
    const double nb = norm2(b), nc = norm2(c);
    const Point2 u{(c.y * nb - b.y * nc) / d, (b.x * nc - c.x * nb) / d};
    return Disk{t.a + u, norm(u)};
}

double dist_point_line(Point2 c, Point2 a, Point2 b) {
    require(!(a == b), Errc::DegenerateLine, "line through equal points");
    return std::abs(cross(b - a, c - a)) / dist(a, b);
}

double dist_point_segment(Point2 p, Point2 a, Point2 b) {
    const Point2 ab = b - a;
    const double len2 = norm2(ab);
    if (len2 == 0.0) return dist(p, a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return dist(p, a + t * ab);
}

double dist_point_triangle(Point2 p, const Triangle& t) {
    const bool ccw = orientation(t.a, t.b, t.c) == Orientation::CCW;
    const Point2 a = t.a, b = ccw ? t.b : t.c, c = ccw ? t.c : t.b;
    if (orientation(a, b, p) != Orientation::CW && orientation(b, c, p) != Orientation::CW &&
        orientation(c, a, p) != Orientation::CW) {
        return 0.0;
    }
    return std::min({dist_point_segment(p, a, b), dist_point_segment(p, b, c),
                     dist_point_segment(p, c, a)});
}

double triangle_area(const Triangle& t) {
    return 0.5 * std::abs(cross(t.b - t.a, t.c - t.a));
}

} // namespace cdg
