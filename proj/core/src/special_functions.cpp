#include "fsm/special_functions.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace fsm {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kPoleTol = 1e-9;

// Distance to the nearest non-positive integer, or +inf if Re z > 0.5.
double pole_distance(cplx z) {
  if (z.real() > 0.5) return INFINITY;
  const double k = std::round(z.real());
  if (k > 0.0) return INFINITY;
  return std::abs(z - k);
}

cplx lanczos(cplx z) {
  // valid for Re z >= 0.5
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

}  // namespace

ComplexStrip::ComplexStrip(double lo, double hi) : lower(lo), upper(hi) {
  if (!(lo < hi)) throw std::invalid_argument("ComplexStrip: lower must be < upper");
}

bool ComplexStrip::contains(cplx z, double slack) const {
  return z.imag() >= lower - slack && z.imag() <= upper + slack;
}

cplx gamma(cplx z) {
  if (pole_distance(z) < kPoleTol) {
    std::ostringstream os;
    os << "gamma: pole at z = " << z;
    throw PoleError(os.str());
  }
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * lanczos(1.0 - z));
  return lanczos(z);
}

cplx rgamma(cplx z) {
  if (pole_distance(z) < kPoleTol) {
    const double k = std::round(z.real());
    // simple zero: 1/Gamma(-k + e) ~ (-1)^k k! e
    double fact = 1.0;
    for (int i = 2; i <= static_cast<int>(-k); ++i) fact *= i;
    const double sign = (static_cast<long>(-k) % 2 == 0) ? 1.0 : -1.0;
    return sign * fact * (z - k);
  }
  if (z.real() < 0.5) return std::sin(kPi * z) * lanczos(1.0 - z) / kPi;
  return 1.0 / lanczos(z);
}

double StripSamples::max_abs() const {
  double m = 0.0;
  for (const cplx& v : values) m = std::max(m, std::abs(v));
  return m;
}

SampleError::SampleError(cplx w, const std::string& cause)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "sample_strip: evaluation failed at " << w << ": " << cause;
        return os.str();
      }()),
      where(w) {}

StripSamples sample_strip(const std::function<cplx(cplx)>& f, const ComplexStrip& strip, int n_re,
                          int n_im, double theta_max) {
  if (n_re < 2 || n_im < 2) throw std::invalid_argument("sample_strip: need n_re, n_im >= 2");
  StripSamples s;
  s.re.resize(n_re);
  s.im.resize(n_im);
  for (int i = 0; i < n_re; ++i) s.re[i] = -theta_max + 2.0 * theta_max * i / (n_re - 1);
  for (int j = 0; j < n_im; ++j) s.im[j] = strip.lower + (strip.upper - strip.lower) * j / (n_im - 1);
  s.values.resize(static_cast<std::size_t>(n_re) * n_im);
  for (int j = 0; j < n_im; ++j) {
    for (int i = 0; i < n_re; ++i) {
      const cplx z(s.re[i], s.im[j]);
      try {
        s.values[static_cast<std::size_t>(j) * n_re + i] = f(z);
      } catch (const std::exception& e) {
        throw SampleError(z, e.what());
      }
    }
  }
  return s;
}

}  // namespace fsm
