#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "f0f2/bigint.hpp"
#include "f0f2/closed_forms.hpp"
#include "f0f2/geometry.hpp"

namespace f0f2 {

// A lambda-increasing lattice path inside a polygon. Because LambdaLess is
// a strict total order, the point sequence is exactly its point set sorted,
// so paths are also handled as bitmasks over the polygon's lambda-sorted
// lattice points (bit i = lattice_points()[i] is on the path).
struct LatticePath {
    std::vector<Point> points;
};

using PathMask = std::uint64_t;

// Step policy for enumeration. ColumnAdjacent keeps only steps that stay in
// the column (moving down) or advance exactly one column; for the F0/F2
// polygon families every path with a wider step has multiplicity zero, so
// this is a pruning accelerator, validated against All in the tests.
enum class StepPolicy { All, ColumnAdjacent };

// Path enumeration and Mikhalkin multiplicity for one polygon.
//
// The multiplicity is mu = mu_plus * mu_minus, each side defined by the
// standard recursion: delta_plus / delta_minus are the boundary chains from
// p to q lying left resp. right of the segment p->q (visiting every
// boundary lattice point). mu_side(delta_side) = 1; otherwise take the
// smallest k whose triangle T = (g(k-1), g(k), g(k+1)) is nondegenerate and
// lies on that side, and
//   mu_side(g) = 2*Area(T) * mu_side(g with g(k) deleted)
//              + mu_side(g with g(k) replaced by g(k-1)+g(k+1)-g(k)),
// dropping the second term when the reflected point leaves the polygon.
// If no such k exists the multiplicity is zero.
class PathCounter {
  public:
    explicit PathCounter(const LatticePolygon& poly);

    const LatticePolygon& polygon() const { return poly_; }
    int size() const { return static_cast<int>(poly_.lattice_points().size()); }

    PathMask mask_of(const LatticePath& path) const;
    LatticePath path_of(PathMask mask) const;

    Count multiplicity(PathMask mask);
    Count multiplicity(const LatticePath& path);

    // The two factors of the multiplicity separately.
    Count mu_plus(PathMask mask) { return mu_side(mask, 0); }
    Count mu_minus(PathMask mask) { return mu_side(mask, 1); }

    // Calls f(mask) for every lambda-increasing path from p to q with the
    // given number of steps, in lexicographic order of the point sequence.
    void enumerate(int steps, StepPolicy policy, const std::function<void(PathMask)>& f) const;

    // Sum of multiplicities over enumerate(steps, policy).
    Count total(int steps, StepPolicy policy = StepPolicy::All);

    PathMask positive_chain() const { return chain_mask_[0]; }
    PathMask negative_chain() const { return chain_mask_[1]; }

  private:
    Count mu_side(PathMask mask, int side);

    LatticePolygon poly_;
    std::vector<Point> pts_;
    PathMask chain_mask_[2] = {0, 0};
    std::unordered_map<PathMask, Count> memo_[2];
};

// Classifies a path in the dual polygon of an a=2 class (the rectangle of
// the F0 class (2,r), or the quadrangle of the F2 class (2,r-2)) into the
// staircase parameters consumed by a2_mult / a2_mult_prime. Paths outside
// the staircase family (a skipped column, a gap in the x=0 or x=2 run)
// yield nullopt; those all have multiplicity zero.
std::optional<A2MultiplicityParams> classify_a2_path(Surface surface, int r,
                                                     const LatticePath& path);

// Mikhalkin path count: the number N~ of not-necessarily-irreducible
// tropical curves of the given degree and genus through point_count(deg,g)
// points, computed as the multiplicity-weighted number of lambda-increasing
// paths with that many steps in the dual polygon. Genus may be negative
// (reducible curves); if the required path length is impossible the count
// is 0. For the degenerate segment polygon the unique saturated path
// counts 1 and everything else 0.
Count count_tilde(const SurfaceDegree& deg, int genus, StepPolicy policy = StepPolicy::All);

} // namespace f0f2
