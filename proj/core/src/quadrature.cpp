#include "fsm/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <memory>
#include <stdexcept>

namespace fsm {

RapidityQuadrature RapidityQuadrature::gauss_legendre(int m, double theta_max) {
  RapidityQuadrature q = gauss_legendre(m, -theta_max, theta_max);
  q.theta_max = theta_max;
  return q;
}

RapidityQuadrature RapidityQuadrature::gauss_legendre(int m, double lo, double hi) {
  if (m < 1) throw std::invalid_argument("quadrature: need at least one node");
  if (!(lo < hi)) throw std::invalid_argument("quadrature: empty interval");
  std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)> table(
      gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(m)), &gsl_integration_glfixed_table_free);
  if (!table) throw std::runtime_error("quadrature: table allocation failed");
  RapidityQuadrature q;
  q.nodes.resize(m);
  q.weights.resize(m);
  q.theta_max = std::max(-lo, hi);
  for (int i = 0; i < m; ++i)
    gsl_integration_glfixed_point(lo, hi, static_cast<std::size_t>(i), &q.nodes[i], &q.weights[i], table.get());
  return q;
}

}  // namespace fsm
