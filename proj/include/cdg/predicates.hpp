#pragma once

#include "cdg/geometry.hpp"

namespace cdg {

enum class Orientation { CW, Colinear, CCW };
enum class DiskSide { Inside, OnBoundary, Outside };

// Sign of det(b-a, c-a). Decided exactly: a floating-point filter with a
// forward error bound answers the easy cases, everything else is re-evaluated
// in exact rational arithmetic on the double inputs. Never epsilon-thresholded.
Orientation orientation(Point2 a, Point2 b, Point2 c);

// Exact classification of p against the circle through a, b, c. The result is
// independent of the CW/CCW labeling of (a, b, c); throws ColinearInput when
// the three points do not define a circle.
DiskSide in_circumdisk(Point2 a, Point2 b, Point2 c, Point2 p);

// Exact classification of p against the closed disk with diameter ab
// (Inside means interior). Equivalent to the sign of (p-a).(p-b).
DiskSide in_diametral_disk(Point2 a, Point2 b, Point2 p);

// Counters for the exact-fallback rate; useful in benchmarks.
struct PredicateStats {
    unsigned long long orientation_calls = 0;
    unsigned long long orientation_exact = 0;
    unsigned long long incircle_calls = 0;
    unsigned long long incircle_exact = 0;
};
PredicateStats predicate_stats();
void reset_predicate_stats();

} // namespace cdg
