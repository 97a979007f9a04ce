#pragma once

#include <functional>

#include "fsm/types.hpp"

namespace fsm {

// Horizontal strip {z : lower < Im z < upper}.
struct ComplexStrip {
  double lower;
  double upper;

  ComplexStrip(double lo, double hi);
  bool contains(cplx z, double slack = 0.0) const;
};

// Lanczos (g = 7, 9 terms) with reflection for Re z < 1/2.
// Throws PoleError within 1e-9 of a non-positive integer.
cplx gamma(cplx z);

// 1/Gamma(z); entire, returns exactly 0 at the poles of gamma.
cplx rgamma(cplx z);

struct StripSamples {
  std::vector<double> re;  // n_re points on [-theta_max, theta_max]
  std::vector<double> im;  // n_im points on [lower, upper]
  CVector values;          // row-major [im][re]

  cplx at(std::size_t i_im, std::size_t i_re) const { return values[i_im * re.size() + i_re]; }
  double max_abs() const;
};

// Raised when the sampled function throws; carries the offending point.
class SampleError : public std::runtime_error {
 public:
  SampleError(cplx where, const std::string& cause);
  cplx where;
};

StripSamples sample_strip(const std::function<cplx(cplx)>& f, const ComplexStrip& strip, int n_re,
                          int n_im, double theta_max = 5.0);

}  // namespace fsm
