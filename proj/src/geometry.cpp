#include "f0f2/geometry.hpp"

#include <algorithm>
#include <cassert>

namespace f0f2 {

std::string_view to_string(Surface s) {
    return s == Surface::F0 ? "f0" : "f2";
}

Surface surface_from_string(std::string_view name) {
    if (name == "f0" || name == "F0") return Surface::F0;
    if (name == "f2" || name == "F2") return Surface::F2;
    throw std::invalid_argument("unknown surface '" + std::string(name) + "' (expected f0 or f2)");
}

void SurfaceDegree::validate_query() const {
    if (a < 0)
        throw std::invalid_argument("degree requires a >= 0, got a=" + std::to_string(a));
    if (f < 0)
        throw std::invalid_argument("degree requires f >= 0 for a counting query, got f=" +
                                    std::to_string(f));
    if (a + f < 1)
        throw std::invalid_argument("degree requires a+f >= 1");
}

std::string SurfaceDegree::symbol(int genus) const {
    std::string s = "N^" + std::to_string(genus) + "_";
    s += surface == Surface::F0 ? "F0" : "F2";
    s += "(" + std::to_string(a) + "," + std::to_string(f) + ")";
    return s;
}

int DirectionMultiset::total() const {
    int n = 0;
    for (const auto& [v, c] : entries) n += c;
    return n;
}

Vec DirectionMultiset::weighted_sum() const {
    Vec s{0, 0};
    for (const auto& [v, c] : entries) {
        s.x += v.x * c;
        s.y += v.y * c;
    }
    return s;
}

namespace {

// Strips consecutive duplicates and collinear middle vertices from a
// vertex cycle, normalizing to counterclockwise orientation.
std::vector<Point> normalize_vertices(std::vector<Point> vs) {
    // Duplicates first (collapsed edges, e.g. the F2 quadrangle with f=0).
    std::vector<Point> tmp;
    for (const Point& p : vs) {
        if (tmp.empty() || !(tmp.back() == p)) tmp.push_back(p);
    }
    while (tmp.size() > 1 && tmp.front() == tmp.back()) tmp.pop_back();

    long long area2 = 0;
    for (size_t i = 0; i < tmp.size(); ++i) {
        const Point& p = tmp[i];
        const Point& q = tmp[(i + 1) % tmp.size()];
        area2 += cross(p, q);
    }
    if (area2 < 0) std::reverse(tmp.begin(), tmp.end());

    // Drop vertices that are interior to an edge.
    std::vector<Point> out;
    const size_t n = tmp.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& prev = tmp[(i + n - 1) % n];
        const Point& cur = tmp[i];
        const Point& next = tmp[(i + 1) % n];
        if (n <= 2 || cross(cur - prev, next - cur) != 0) out.push_back(cur);
    }
    if (out.empty()) out = tmp; // fully degenerate (point or segment)
    return out;
}

} // namespace

LatticePolygon::LatticePolygon(std::vector<Point> vertices) {
    if (vertices.empty()) throw std::invalid_argument("polygon needs at least one vertex");
    vertices_ = normalize_vertices(std::move(vertices));

    long long area2 = 0;
    for (size_t i = 0; i < vertices_.size(); ++i) {
        const Point& p = vertices_[i];
        const Point& q = vertices_[(i + 1) % vertices_.size()];
        area2 += cross(p, q);
    }
    degenerate_ = area2 == 0;

    for (size_t i = 0; i < vertices_.size() && !degenerate_; ++i) {
        const Point& p = vertices_[i];
        const Point& q = vertices_[(i + 1) % vertices_.size()];
        const Point& r = vertices_[(i + 2) % vertices_.size()];
        if (cross(q - p, r - q) < 0)
            throw std::invalid_argument("polygon vertices are not convex");
    }

    int xmin = vertices_[0].x, xmax = xmin, ymin = vertices_[0].y, ymax = ymin;
    for (const Point& v : vertices_) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }

    auto side = [&](Point p) {
        // > 0 strictly inside, = 0 on the boundary, < 0 outside.
        long long best = 1;
        if (degenerate_) {
            // Segment (or point): containment means lying on it.
            if (vertices_.size() == 1) return p == vertices_[0] ? 0LL : -1LL;
            Point a = vertices_.front(), b = vertices_.back();
            for (const Point& v : vertices_) {
                if (LambdaLess{}(v, a)) a = v;
                if (LambdaLess{}(b, v)) b = v;
            }
            if (cross(b - a, p - a) != 0) return -1LL;
            long long d = static_cast<long long>(b.x - a.x) * (p.x - a.x) +
                          static_cast<long long>(b.y - a.y) * (p.y - a.y);
            long long len2 = static_cast<long long>(b.x - a.x) * (b.x - a.x) +
                             static_cast<long long>(b.y - a.y) * (b.y - a.y);
            return (d >= 0 && d <= len2) ? 0LL : -1LL;
        }
        for (size_t i = 0; i < vertices_.size(); ++i) {
            const Point& u = vertices_[i];
            const Point& v = vertices_[(i + 1) % vertices_.size()];
            long long c = cross(v - u, p - u);
            if (c < 0) return -1LL;
            best = std::min(best, c);
        }
        return best;
    };

    for (int x = xmin; x <= xmax; ++x) {
        for (int y = ymin; y <= ymax; ++y) {
            long long s = side({x, y});
            if (s >= 0) points_.push_back({x, y});
            if (s > 0) ++interior_count_;
        }
    }
    std::sort(points_.begin(), points_.end(), LambdaLess{});
}

int LatticePolygon::index_of(Point p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p, LambdaLess{});
    if (it == points_.end() || !(*it == p)) return -1;
    return static_cast<int>(it - points_.begin());
}

LatticePolygon dual_polygon(const SurfaceDegree& deg) {
    if (deg.a < 0) throw std::invalid_argument("dual polygon requires a >= 0");
    if (deg.f < 0) throw std::invalid_argument("dual polygon requires f >= 0");
    const int a = deg.a, f = deg.f;
    if (deg.surface == Surface::F0)
        return LatticePolygon({{0, 0}, {a, 0}, {a, f}, {0, f}});
    return LatticePolygon({{0, 0}, {a, 0}, {a, f}, {0, 2 * a + f}});
}

DirectionMultiset direction_multiset(const SurfaceDegree& deg) {
    deg.validate_query();
    const int a = deg.a, f = deg.f;
    DirectionMultiset m;
    auto add = [&m](Vec v, int c) {
        if (c > 0) m.entries.push_back({v, c});
    };
    if (deg.surface == Surface::F0) {
        add({-1, 0}, f);
        add({1, 0}, f);
        add({0, -1}, a);
        add({0, 1}, a);
    } else {
        add({-1, 0}, 2 * a + f);
        add({0, -1}, a);
        add({1, 0}, f);
        add({2, 1}, a);
    }
    return m;
}

int point_count(const SurfaceDegree& deg, int genus) {
    return 4 * deg.a + 2 * deg.class_b() + genus - 1;
}

std::pair<Point, Point> lambda_extremes(const LatticePolygon& poly) {
    return {poly.lambda_min(), poly.lambda_max()};
}

} // namespace f0f2
