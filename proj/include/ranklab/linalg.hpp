#pragma once

#include <optional>
#include <vector>

#include "ranklab/rational.hpp"

namespace ranklab {

using RatVec = std::vector<Rational>;
using RatMatrix = std::vector<std::vector<Rational>>;  // row-major

RatMatrix zeros(size_t rows, size_t cols);

// Exact Gaussian elimination with partial pivoting. Accepts rectangular
// systems (rows >= cols); returns the solution when it is unique, nullopt
// when the system is rank-deficient or inconsistent.
std::optional<RatVec> solve_unique(RatMatrix a, RatVec b);

}  // namespace ranklab
