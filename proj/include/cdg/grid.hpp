#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "cdg/geometry.hpp"

namespace cdg {

// Uniform hash grid over point indices for neighborhood queries.
class PointGrid {
public:
    PointGrid(const std::vector<Point2>& pts, double cell)
        : pts_(&pts), cell_(cell > 0 ? cell : 1.0) {
        for (int i = 0; i < static_cast<int>(pts.size()); ++i) insert(i);
    }

    void insert(int i) { cells_[key((*pts_)[i])].push_back(i); }

    // Indices of all points within radius r of q (exact Euclidean filter).
    std::vector<int> query(Point2 q, double r) const {
        std::vector<int> out;
        visit(q, r, [&](int i) { out.push_back(i); });
        return out;
    }

    template <typename Fn>
    void visit(Point2 q, double r, Fn&& fn) const {
        const double rr = r * r;
        const std::int64_t cx0 = coord(q.x - r), cx1 = coord(q.x + r);
        const std::int64_t cy0 = coord(q.y - r), cy1 = coord(q.y + r);
        for (std::int64_t cy = cy0; cy <= cy1; ++cy) {
            for (std::int64_t cx = cx0; cx <= cx1; ++cx) {
                const auto it = cells_.find(pack(cx, cy));
                if (it == cells_.end()) continue;
                for (const int i : it->second) {
                    if (dist2((*pts_)[i], q) <= rr) fn(i);
                }
            }
        }
    }

    // True when some point lies strictly within r of q.
    bool any_within(Point2 q, double r, int ignore = -1) const {
        const double rr = r * r;
        const std::int64_t cx0 = coord(q.x - r), cx1 = coord(q.x + r);
        const std::int64_t cy0 = coord(q.y - r), cy1 = coord(q.y + r);
        for (std::int64_t cy = cy0; cy <= cy1; ++cy) {
            for (std::int64_t cx = cx0; cx <= cx1; ++cx) {
                const auto it = cells_.find(pack(cx, cy));
                if (it == cells_.end()) continue;
                for (const int i : it->second) {
                    if (i != ignore && dist2((*pts_)[i], q) < rr) return true;
                }
            }
        }
        return false;
    }

    // Nearest point to q (expanding search); index -1 if the set is empty.
    std::pair<int, double> nearest(Point2 q) const {
        int best = -1;
        double best_d2 = std::numeric_limits<double>::infinity();
        const auto update = [&](int i) {
            const double d2 = dist2((*pts_)[i], q);
            if (d2 < best_d2 || (d2 == best_d2 && i < best)) {
                best_d2 = d2;
                best = i;
            }
        };
        for (double r = cell_; r < 1e18; r *= 2.0) {
            visit(q, r, update);
            if (best >= 0 && best_d2 <= r * r) break;
            if (r * r > 4.0 * best_d2 && best >= 0) break;
            if (cells_.empty()) break;
        }
        if (best < 0) {
            for (int i = 0; i < static_cast<int>(pts_->size()); ++i) update(i);
        }
        return {best, best < 0 ? std::numeric_limits<double>::infinity() : std::sqrt(best_d2)};
    }

private:
    std::int64_t coord(double x) const { return static_cast<std::int64_t>(std::floor(x / cell_)); }
    std::uint64_t key(Point2 p) const { return pack(coord(p.x), coord(p.y)); }
    static std::uint64_t pack(std::int64_t cx, std::int64_t cy) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(cx)) << 32) |
               static_cast<std::uint32_t>(cy);
    }

    const std::vector<Point2>* pts_;
    double cell_;
    std::unordered_map<std::uint64_t, std::vector<int>> cells_;
};

} // namespace cdg
