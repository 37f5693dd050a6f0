#include "f0f2/lattice_paths.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace f0f2 {

namespace {

int gcd_abs(int a, int b) { return std::gcd(std::abs(a), std::abs(b)); }

// Lattice points along the boundary walk from `from` to `to` through the
// polygon's vertex cycle in the given direction, endpoints included.
std::vector<Point> boundary_chain(const std::vector<Point>& verts, size_t from, size_t to,
                                  int dir) {
    std::vector<Point> chain;
    const size_t n = verts.size();
    size_t i = from;
    chain.push_back(verts[i]);
    while (i != to) {
        size_t j = (i + n + dir) % n;
        Point u = verts[i], v = verts[j];
        Vec e = v - u;
        int g = gcd_abs(e.x, e.y);
        Vec step{e.x / g, e.y / g};
        Point cur = u;
        for (int k = 0; k < g; ++k) {
            cur = cur + step;
            chain.push_back(cur);
        }
        i = j;
    }
    return chain;
}

} // namespace

PathCounter::PathCounter(const LatticePolygon& poly) : poly_(poly), pts_(poly.lattice_points()) {
    if (pts_.size() > 64)
        throw std::invalid_argument(
            "polygon has " + std::to_string(pts_.size()) +
            " lattice points; path counting supports at most 64 (desk-scale bound)");
    if (poly_.degenerate()) {
        // Both boundary chains coincide with the full point chain.
        PathMask all = (pts_.size() == 64) ? ~PathMask{0} : ((PathMask{1} << pts_.size()) - 1);
        chain_mask_[0] = chain_mask_[1] = all;
        return;
    }

    const auto& verts = poly_.vertices();
    Point p = poly_.lambda_min(), q = poly_.lambda_max();
    size_t pi = 0, qi = 0;
    for (size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] == p) pi = i;
        if (verts[i] == q) qi = i;
    }

    auto to_mask = [&](const std::vector<Point>& chain) {
        PathMask m = 0;
        for (const Point& pt : chain) {
            int idx = poly_.index_of(pt);
            assert(idx >= 0);
            m |= PathMask{1} << idx;
        }
        return m;
    };

    std::vector<Point> fwd = boundary_chain(verts, pi, qi, +1);  // counterclockwise
    std::vector<Point> bwd = boundary_chain(verts, pi, qi, -1);

    // The chain containing a point strictly left of p->q is delta_plus.
    Vec d = q - p;
    auto side_of = [&](const std::vector<Point>& chain) {
        for (const Point& pt : chain) {
            long long c = cross(d, pt - p);
            if (c != 0) return c > 0 ? +1 : -1;
        }
        return 0;
    };
    int fwd_side = side_of(fwd);
    assert(fwd_side != 0 && "nondegenerate polygon must have chains off the p->q line");
    if (fwd_side > 0) {
        chain_mask_[0] = to_mask(fwd);
        chain_mask_[1] = to_mask(bwd);
    } else {
        chain_mask_[0] = to_mask(bwd);
        chain_mask_[1] = to_mask(fwd);
    }
}

PathMask PathCounter::mask_of(const LatticePath& path) const {
    PathMask m = 0;
    for (const Point& pt : path.points) {
        int idx = poly_.index_of(pt);
        if (idx < 0) throw std::invalid_argument("path point outside polygon");
        PathMask bit = PathMask{1} << idx;
        if (m & bit) throw std::invalid_argument("path repeats a lattice point");
        m |= bit;
    }
    return m;
}

LatticePath PathCounter::path_of(PathMask mask) const {
    LatticePath path;
    for (int i = 0; i < size(); ++i)
        if (mask & (PathMask{1} << i)) path.points.push_back(pts_[i]);
    return path;
}

Count PathCounter::multiplicity(const LatticePath& path) {
    // The sequence must be lambda-increasing from p to q; since the order
    // is total this just means it is sorted and spans the extremes.
    for (size_t i = 0; i + 1 < path.points.size(); ++i)
        if (!LambdaLess{}(path.points[i], path.points[i + 1]))
            throw std::invalid_argument("path is not lambda-increasing");
    if (path.points.size() < 2 || !(path.points.front() == poly_.lambda_min()) ||
        !(path.points.back() == poly_.lambda_max()))
        return 0;
    return multiplicity(mask_of(path));
}

Count PathCounter::multiplicity(PathMask mask) {
    if (poly_.degenerate()) return mask == chain_mask_[0] ? 1 : 0;
    const PathMask ends = PathMask{1} | (PathMask{1} << (size() - 1));
    if ((mask & ends) != ends) return 0; // must run from p to q
    Count plus = mu_side(mask, 0);
    if (plus == 0) return 0;
    return plus * mu_side(mask, 1);
}

Count PathCounter::mu_side(PathMask mask, int side) {
    if (mask == chain_mask_[side]) return 1;
    auto it = memo_[side].find(mask);
    if (it != memo_[side].end()) return it->second;

    int idx[64];
    int n = 0;
    for (int i = 0; i < size(); ++i)
        if (mask & (PathMask{1} << i)) idx[n++] = i;

    const long long want = side == 0 ? +1 : -1;
    Count result = 0;
    for (int k = 1; k + 1 < n; ++k) {
        Point a = pts_[idx[k - 1]], b = pts_[idx[k]], c = pts_[idx[k + 1]];
        long long cr = cross(b - a, c - b);
        if (cr == 0 || (cr > 0 ? +1 : -1) != want) continue;

        PathMask without = mask & ~(PathMask{1} << idx[k]);
        result = Count(cr < 0 ? -cr : cr) * mu_side(without, side);

        Point reflected = a + (c - b);
        int ri = poly_.index_of(reflected);
        if (ri >= 0) {
            // lambda is linear, so the reflected point sits strictly
            // between its neighbors in the order.
            assert(ri > idx[k - 1] && ri < idx[k + 1]);
            result += mu_side(without | (PathMask{1} << ri), side);
        }
        break; // smallest k only
    }
    memo_[side].emplace(mask, result);
    return result;
}

void PathCounter::enumerate(int steps, StepPolicy policy,
                            const std::function<void(PathMask)>& f) const {
    const int last = size() - 1;
    if (steps < 1 || last < 1 || steps > last) return;

    // DFS in index order; a path with r remaining steps from index i can
    // finish iff r <= last - i.
    auto rec = [&](auto&& self, int i, int rem, PathMask mask) -> void {
        if (rem == 0) {
            if (i == last) f(mask);
            return;
        }
        for (int j = i + 1; j + (rem - 1) <= last; ++j) {
            if (policy == StepPolicy::ColumnAdjacent && pts_[j].x - pts_[i].x > 1) break;
            self(self, j, rem - 1, mask | (PathMask{1} << j));
        }
    };
    rec(rec, 0, steps, PathMask{1});
}

Count PathCounter::total(int steps, StepPolicy policy) {
    if (poly_.degenerate()) return steps == size() - 1 ? 1 : 0;
    Count sum = 0;
    enumerate(steps, policy, [&](PathMask m) { sum += multiplicity(m); });
    return sum;
}

std::optional<A2MultiplicityParams> classify_a2_path(Surface surface, int r,
                                                     const LatticePath& path) {
    // Column tops: (r, r, r) for the rectangle, (r+2, r, r-2) for the
    // quadrangle.
    const int shift = surface == Surface::F0 ? 0 : 2;
    const int top0 = r + shift, top1 = r, top2 = r - shift;

    std::vector<int> col[3];
    for (const Point& p : path.points) {
        if (p.x < 0 || p.x > 2) return std::nullopt;
        col[p.x].push_back(p.y);
    }
    if (col[0].empty() || col[1].empty() || col[2].empty()) return std::nullopt;

    // x=0: unit-step run anchored at the top; x=2: unit-step run ending at 0.
    auto unit_run = [](const std::vector<int>& ys) {
        for (size_t i = 0; i + 1 < ys.size(); ++i)
            if (ys[i] - ys[i + 1] != 1) return false;
        return true;
    };
    if (!unit_run(col[0]) || col[0].front() != top0) return std::nullopt;
    if (!unit_run(col[2]) || col[2].back() != 0) return std::nullopt;

    A2MultiplicityParams params;
    params.r = r;
    for (size_t i = 0; i + 1 < col[1].size(); ++i) params.alpha[col[1][i] - col[1][i + 1]]++;
    params.j_free = col[0].back();
    params.i_free = top1 - col[1].front();
    params.s = params.j_free + (top2 - col[2].front());
    // Free points below the x=1 run come out as r - alpha1 - t - i_free.
    assert(col[1].back() == params.r - params.alpha1() - params.t() - params.i_free);
    return params;
}

Count count_tilde(const SurfaceDegree& deg, int genus, StepPolicy policy) {
    deg.validate_query();
    int steps = point_count(deg, genus);
    if (steps < 1) return 0;
    LatticePolygon poly = dual_polygon(deg);
    if (static_cast<size_t>(steps) + 1 > poly.lattice_points().size()) return 0;
    PathCounter counter(poly);
    return counter.total(steps, policy);
}

} // namespace f0f2
