#pragma once

#include <vector>

namespace fsm {

// Gauss-Legendre rule on [-theta_max, theta_max].
struct RapidityQuadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
  double theta_max = 0.0;

  int size() const { return static_cast<int>(nodes.size()); }

  static RapidityQuadrature gauss_legendre(int m, double theta_max);
  // Same rule mapped onto [lo, hi].
  static RapidityQuadrature gauss_legendre(int m, double lo, double hi);
};

}  // namespace fsm
