#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lejasparse/distributions.hpp"
#include "lejasparse/types.hpp"

namespace lejasparse {

// Closed-form test model together with its product input measure.
struct BenchmarkModel {
  std::string name;
  std::size_t dimension = 0;
  std::vector<Distribution> dists;
  ModelFn evaluator;
};

// Water flow through a borehole, in m^3/yr. Input order:
// (r_w, r, T_u, H_u, T_l, H_l, L, K_w).
double borehole_eval(std::span<const double> y);

// Steel column limit state, in MPa. Input order:
// (F_s, P_d, P_1, P_2, B, D, H, F_0, E, L).
double steel_column_eval(std::span<const double> y);

// 16-dimensional meromorphic map 1 / (1 + w . y) with a fixed anisotropic
// weight vector.
double meromorphic_eval(std::span<const double> y);

// Known names: "borehole", "steel-column", "meromorphic".
BenchmarkModel benchmark_spec(std::string_view name);

}  // namespace lejasparse
