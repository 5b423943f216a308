#include "cdg/predicates.hpp"

#include <atomic>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

namespace cdg {
namespace {

using Rational = boost::multiprecision::cpp_rational;

// Forward error bounds in the style of Shewchuk's robust predicates: if the
// double evaluation exceeds the bound, its sign is certain.
constexpr double kEps = 1.1102230246251565e-16; // 2^-53
constexpr double kOrientBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIncircleBound = (10.0 + 96.0 * kEps) * kEps;

std::atomic<unsigned long long> g_orient_calls{0}, g_orient_exact{0};
std::atomic<unsigned long long> g_incircle_calls{0}, g_incircle_exact{0};

int sign_of(const Rational& v) {
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

int orient_sign(Point2 a, Point2 b, Point2 c) {
    g_orient_calls.fetch_add(1, std::memory_order_relaxed);
    const double detleft = (b.x - a.x) * (c.y - a.y);
    const double detright = (b.y - a.y) * (c.x - a.x);
    const double det = detleft - detright;
    double detsum;
    if (detleft > 0) {
        if (detright <= 0) return det > 0 ? 1 : (det < 0 ? -1 : 0);
        detsum = detleft + detright;
    } else if (detleft < 0) {
        if (detright >= 0) return det > 0 ? 1 : (det < 0 ? -1 : 0);
        detsum = -detleft - detright;
    } else {
        return det > 0 ? 1 : (det < 0 ? -1 : 0);
    }
    if (std::abs(det) > kOrientBound * detsum) return det > 0 ? 1 : -1;

    g_orient_exact.fetch_add(1, std::memory_order_relaxed);
    const Rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
    return sign_of((bx - ax) * (cy - ay) - (by - ay) * (cx - ax));
}

// Sign of the incircle determinant for CCW (a,b,c): positive iff p lies
// strictly inside the circumcircle.
int incircle_sign(Point2 a, Point2 b, Point2 c, Point2 p) {
    g_incircle_calls.fetch_add(1, std::memory_order_relaxed);
    const double adx = a.x - p.x, ady = a.y - p.y;
    const double bdx = b.x - p.x, bdy = b.y - p.y;
    const double cdx = c.x - p.x, cdy = c.y - p.y;

    const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const double cdxady = cdx * ady, adxcdy = adx * cdy;
    const double adxbdy = adx * bdy, bdxady = bdx * ady;
    const double alift = adx * adx + ady * ady;
    const double blift = bdx * bdx + bdy * bdy;
    const double clift = cdx * cdx + cdy * cdy;

    const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                       clift * (adxbdy - bdxady);
    const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                             (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                             (std::abs(adxbdy) + std::abs(bdxady)) * clift;
    if (std::abs(det) > kIncircleBound * permanent) return det > 0 ? 1 : -1;

    g_incircle_exact.fetch_add(1, std::memory_order_relaxed);
    const Rational rax(a.x), ray(a.y), rbx(b.x), rby(b.y);
    const Rational rcx(c.x), rcy(c.y), rpx(p.x), rpy(p.y);
    const Rational eadx = rax - rpx, eady = ray - rpy;
    const Rational ebdx = rbx - rpx, ebdy = rby - rpy;
    const Rational ecdx = rcx - rpx, ecdy = rcy - rpy;
    const Rational ea = eadx * eadx + eady * eady;
    const Rational eb = ebdx * ebdx + ebdy * ebdy;
    const Rational ec = ecdx * ecdx + ecdy * ecdy;
    const Rational edet = ea * (ebdx * ecdy - ecdx * ebdy) +
                          eb * (ecdx * eady - eadx * ecdy) +
                          ec * (eadx * ebdy - ebdx * eady);
    return sign_of(edet);
}

} // namespace

Orientation orientation(Point2 a, Point2 b, Point2 c) {
    const int s = orient_sign(a, b, c);
    if (s > 0) return Orientation::CCW;
    if (s < 0) return Orientation::CW;
    return Orientation::Colinear;
}

DiskSide in_circumdisk(Point2 a, Point2 b, Point2 c, Point2 p) {
    const Orientation o = orientation(a, b, c);
    require(o != Orientation::Colinear, Errc::ColinearInput, "circumdisk of colinear points");
    if (o == Orientation::CW) std::swap(b, c);
    const int s = incircle_sign(a, b, c, p);
    if (s > 0) return DiskSide::Inside;
    if (s < 0) return DiskSide::Outside;
    return DiskSide::OnBoundary;
}

DiskSide in_diametral_disk(Point2 a, Point2 b, Point2 p) {
    const double d1x = p.x - a.x, d1y = p.y - a.y;
    const double d2x = p.x - b.x, d2y = p.y - b.y;
    const double tx = d1x * d2x, ty = d1y * d2y;
    const double dotv = tx + ty;
    const double bound = 8.0 * kEps * (std::abs(tx) + std::abs(ty));
    int s;
    if (std::abs(dotv) > bound) {
        s = dotv > 0 ? 1 : -1;
    } else {
        const Rational ax(a.x), ay(a.y), bx(b.x), by(b.y), px(p.x), py(p.y);
        s = sign_of((px - ax) * (px - bx) + (py - ay) * (py - by));
    }
    if (s > 0) return DiskSide::Outside;
    if (s < 0) return DiskSide::Inside;
    return DiskSide::OnBoundary;
}

PredicateStats predicate_stats() {
    PredicateStats s;
    s.orientation_calls = g_orient_calls.load();
    s.orientation_exact = g_orient_exact.load();
    s.incircle_calls = g_incircle_calls.load();
    s.incircle_exact = g_incircle_exact.load();
    return s;
}

void reset_predicate_stats() {
    g_orient_calls = 0;
    g_orient_exact = 0;
    g_incircle_calls = 0;
    g_incircle_exact = 0;
}

} // namespace cdg
