#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace f0f2 {

// Exact arbitrary-precision integer. Signed, because the recursion
// coefficients phi0/phi21/phi22 and the F/G recurrence residuals can be
// negative; every enumerative count is asserted nonnegative at the point
// where it becomes an invariant.
using BigInt = boost::multiprecision::cpp_int;

// A BigInt that is nonnegative by contract (multiplicities, counts).
using Count = BigInt;

} // namespace f0f2
