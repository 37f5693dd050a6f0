#include "f0f2/decompose.hpp"

#include <sstream>

#include "f0f2/closed_forms.hpp"

namespace f0f2 {

int fiber_budget(int b, int g) {
    int n = b + 1 - g;
    return n < 0 ? 0 : n / 2;
}

SurfaceDegree DecomposeOracle::degree_for(Surface surface, int a, int b) {
    return {surface, a, surface == Surface::F0 ? a + b : b};
}

Count DecomposeOracle::tilde(Surface surface, int a, int b, int g) {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (auto it = tilde_memo_.find({surface, a, b, g}); it != tilde_memo_.end())
            return it->second;
    }
    Count value = count_tilde(degree_for(surface, a, b), g, policy_);
    std::lock_guard<std::mutex> lock(mutex_);
    tilde_memo_.emplace(std::make_tuple(surface, a, b, g), value);
    return value;
}

Count DecomposeOracle::reducible(Surface surface, int a, int b, int g) {
    if (g < 0) throw std::invalid_argument("reducible counts need g >= 0");
    if (a < 0 || b < 0) throw std::invalid_argument("reducible counts need a, b >= 0");
    if (a > 2)
        throw ScopeError("reducible/irreducible decomposition is only available for a <= 2; "
                         "the component analysis does not cover a=" +
                         std::to_string(a));
    if (a <= 1) return 0;

    const int n = point_count(degree_for(surface, a, b), g);
    Count sum = 0;
    for (int i = 1; i <= fiber_budget(b, g); ++i)
        sum += binom(n, i) * irreducible(surface, a, b - i, g + i);
    return sum;
}

Count DecomposeOracle::irreducible(Surface surface, int a, int b, int g) {
    if (g < 0) throw std::invalid_argument("irreducible counts need g >= 0");
    if (a > 2)
        throw ScopeError("reducible/irreducible decomposition is only available for a <= 2; "
                         "the component analysis does not cover a=" +
                         std::to_string(a));
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (auto it = irr_memo_.find({surface, a, b, g}); it != irr_memo_.end())
            return it->second;
    }
    Count t = tilde(surface, a, b, g);
    Count r = reducible(surface, a, b, g);
    if (r > t) {
        std::ostringstream os;
        os << "inconsistent decomposition for " << degree_for(surface, a, b).symbol(g)
           << ": path count " << t << " < reducible contribution " << r;
        throw std::logic_error(os.str());
    }
    Count value = t - r;
    std::lock_guard<std::mutex> lock(mutex_);
    irr_memo_.emplace(std::make_tuple(surface, a, b, g), value);
    return value;
}

} // namespace f0f2
