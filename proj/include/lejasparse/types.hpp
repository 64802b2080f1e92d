#pragma once

#include <functional>
#include <span>

namespace lejasparse {

// Scalar input-output map g: R^N -> R. Models must be pure: the same input
// vector always yields the same output, and concurrent invocation is safe.
using ModelFn = std::function<double(std::span<const double>)>;

// Tail mass clipped from each side of an unbounded support when building
// node-search and integration domains.
inline constexpr double kTailEpsilon = 1e-12;

}  // namespace lejasparse
