#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace f0f2 {

enum class Surface { F0, F2 };

std::string_view to_string(Surface s);
Surface surface_from_string(std::string_view name);

struct Point {
    int x = 0;
    int y = 0;
    friend bool operator==(const Point&, const Point&) = default;
};

using Vec = Point;

inline Vec operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(Point a, Vec v) { return {a.x + v.x, a.y + v.y}; }

inline long long cross(Vec u, Vec v) {
    return static_cast<long long>(u.x) * v.y - static_cast<long long>(u.y) * v.x;
}

// Total order realizing lambda(x,y) = x - eps*y for an infinitesimal
// irrational eps > 0: x ascending, ties broken by y descending. Injective
// on lattice points, so a lambda-increasing path is determined by its
// point set.
struct LambdaLess {
    bool operator()(Point p, Point q) const {
        if (p.x != q.x) return p.x < q.x;
        return p.y > q.y;
    }
};

// A divisor class on F0 or F2. `f` is the second parameter exactly as
// printed in the invariant symbol: for F0 the class is aC+fF with f = a+b,
// for F2 it is aC+fF with f = b. The class coefficient b is derived in
// class_b(); nothing else converts between the two conventions.
struct SurfaceDegree {
    Surface surface = Surface::F2;
    int a = 0;
    int f = 0;

    int class_b() const { return surface == Surface::F0 ? f - a : f; }

    // Throws std::invalid_argument unless the degree is a meaningful
    // counting query (a >= 0, f >= 0, a+f >= 1).
    void validate_query() const;

    std::string symbol(int genus) const; // e.g. "N^0_F2(2,0)"

    friend bool operator==(const SurfaceDegree&, const SurfaceDegree&) = default;
};

struct DirectionMultiset {
    std::vector<std::pair<Vec, int>> entries; // (direction, count), count > 0

    int total() const;
    Vec weighted_sum() const;
};

// Convex lattice polygon, possibly degenerate (a segment or a point).
// Vertices are stored counterclockwise with collinear/duplicate vertices
// removed. Lattice points are kept sorted by LambdaLess.
class LatticePolygon {
  public:
    explicit LatticePolygon(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Point>& lattice_points() const { return points_; }

    bool degenerate() const { return degenerate_; }
    bool contains(Point p) const { return index_of(p) >= 0; }
    int index_of(Point p) const; // index into lattice_points(), -1 if absent
    int interior_count() const { return interior_count_; }

    Point lambda_min() const { return points_.front(); }
    Point lambda_max() const { return points_.back(); }

  private:
    std::vector<Point> vertices_;
    std::vector<Point> points_;
    bool degenerate_ = false;
    int interior_count_ = 0;
};

// Dual polygon of the divisor class: F0 -> rectangle (0,0),(a,0),(a,f),(0,f);
// F2 -> quadrangle (0,0),(a,0),(a,f),(0,2a+f). Degenerate cases (a = 0 or
// f = 0 on F0) come out as segments. Throws on f < 0.
LatticePolygon dual_polygon(const SurfaceDegree& deg);

// Tropical degree: the multiset of end directions.
// F0 -> {(-1,0) x f, (1,0) x f, (0,-1) x a, (0,1) x a}
// F2 -> {(-1,0) x (2a+f), (0,-1) x a, (1,0) x f, (2,1) x a}
DirectionMultiset direction_multiset(const SurfaceDegree& deg);

// Number of point conditions for genus g: 4a+2b+g-1 = |degree| + g - 1.
// Also the number of steps of the corresponding lattice paths.
int point_count(const SurfaceDegree& deg, int genus);

// Endpoints (lambda-minimal, lambda-maximal) of lambda-increasing paths.
std::pair<Point, Point> lambda_extremes(const LatticePolygon& poly);

} // namespace f0f2
