#pragma once

#include <map>
#include <mutex>
#include <tuple>

#include "f0f2/bigint.hpp"
#include "f0f2/geometry.hpp"
#include "f0f2/lattice_paths.hpp"

namespace f0f2 {

// Thrown for parameter ranges the decomposition argument does not cover
// (the component analysis behind it exists only for a <= 2).
class ScopeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Largest number of fiber components that can split off a genus-g curve of
// class coefficient b: h = floor((b+1-g)/2).
int fiber_budget(int b, int g);

// Converts between the not-necessarily-irreducible path counts N~ and the
// irreducible counts N for a <= 2, memoizing both. `b` is the class
// coefficient (the printed second parameter is a+b on F0 and b on F2).
//
// A reducible curve in these classes is C' plus i >= 1 fiber components,
// where C' has genus g+i and class coefficient b-i; each fiber passes
// through exactly one of the n = point_count point conditions, so the
// contribution is sum_{i=1}^{h} C(n,i) * N^{g+i}(2, b-i); the C(n,i)
// factor counts the choices of those conditions (the cross-method tests
// pin it).
class DecomposeOracle {
  public:
    explicit DecomposeOracle(StepPolicy policy = StepPolicy::All) : policy_(policy) {}

    // N~: plain path count, any genus (negative allowed).
    Count tilde(Surface surface, int a, int b, int g);

    // Reducible contribution; 0 for a <= 1 (a fiber split would need a
    // negative-genus component). Requires g >= 0 and a <= 2.
    Count reducible(Surface surface, int a, int b, int g);

    // N = N~ - reducible. Requires g >= 0 and a <= 2; throws
    // std::logic_error with diagnostics if the difference goes negative.
    Count irreducible(Surface surface, int a, int b, int g);

  private:
    static SurfaceDegree degree_for(Surface surface, int a, int b);

    StepPolicy policy_;
    std::mutex mutex_;
    std::map<std::tuple<Surface, int, int, int>, Count> tilde_memo_;
    std::map<std::tuple<Surface, int, int, int>, Count> irr_memo_;
};

} // namespace f0f2
