#include "fsm/spectrum.hpp"

#include <random>
#include <sstream>

namespace fsm {

void ParticleSpectrum::validate() const {
  if (dim < 1) throw std::invalid_argument("spectrum: dimension must be >= 1");
  if (static_cast<int>(masses.size()) != dim || static_cast<int>(conjugation.size()) != dim)
    throw std::invalid_argument("spectrum: masses/conjugation length must equal dimension");
  if (!charge_labels.empty() && static_cast<int>(charge_labels.size()) != dim)
    throw std::invalid_argument("spectrum: charge_labels length must equal dimension");
  for (int a = 0; a < dim; ++a) {
    if (!(masses[a] > 0.0)) throw std::invalid_argument("spectrum: masses must be positive");
    const int b = conjugation[a];
    if (b < 0 || b >= dim || conjugation[b] != a)
      throw std::invalid_argument("spectrum: conjugation is not an involution");
    if (masses[b] != masses[a]) throw std::invalid_argument("spectrum: m[bar a] != m[a]");
  }
  for (std::size_t k = 0; k < gauge_elements.size(); ++k) {
    const Mat& v = gauge_elements[k];
    if (v.rows() != dim || v.cols() != dim)
      throw std::invalid_argument("spectrum: gauge element has wrong shape");
    const double unit = (v * v.adjoint() - Mat::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (unit > 1e-12) {
      std::ostringstream os;
      os << "spectrum: gauge element " << k << " not unitary (" << unit << ")";
      throw std::invalid_argument(os.str());
    }
    // V commutes with the antiunitary alpha -> conj(psi_{alpha-bar})
    double cc = 0.0;
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b)
        cc = std::max(cc, std::abs(v(a, b) - std::conj(v(conjugation[a], conjugation[b]))));
    if (cc > 1e-12) throw std::invalid_argument("spectrum: gauge element does not commute with conjugation");
  }
}

ParticleSpectrum ParticleSpectrum::uniform(int dim, double mass) {
  ParticleSpectrum s;
  s.dim = dim;
  s.masses.assign(dim, mass);
  s.conjugation.resize(dim);
  for (int a = 0; a < dim; ++a) s.conjugation[a] = a;
  s.gauge_elements.push_back(Mat::Identity(dim, dim));
  s.charge_labels.assign(dim, 0);
  return s;
}

Mat random_orthogonal(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = nd(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0) q.col(j) *= -1.0;
  return q.cast<cplx>();
}

}  // namespace fsm
