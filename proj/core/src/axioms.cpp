#include <random>

#include "fsm/smatrix.hpp"

namespace fsm {

namespace {

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double max_norm(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

double check_unitarity(const SMatrixModel& model, double theta) {
  const Mat s = model.evaluate(theta).matrix();
  return max_norm(s * s.adjoint() - Mat::Identity(s.rows(), s.cols()));
}

double check_hermitian_analyticity(const SMatrixModel& model, double theta) {
  const Mat s = model.evaluate(theta).matrix();
  Eigen::FullPivLU<Mat> lu(s);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) throw std::runtime_error(model.name() + ": S(theta) is numerically singular");
  const Mat inv = lu.solve(Mat::Identity(s.rows(), s.cols()));
  return max_norm(model.evaluate(-theta).matrix() - inv);
}

double check_yang_baxter(const SMatrixModel& model, double theta, double theta_prime) {
  const int d = model.dim();
  const Mat one = Mat::Identity(d, d);
  const Mat a = model.evaluate(theta).matrix();
  const Mat b = model.evaluate(theta + theta_prime).matrix();
  const Mat c = model.evaluate(theta_prime).matrix();
  const Mat lhs = kron(a, one) * kron(one, b) * kron(c, one);
  const Mat rhs = kron(one, c) * kron(b, one) * kron(one, a);
  return max_norm(lhs - rhs);
}

TranslationResult check_translation_invariance(const SMatrixModel& model, int samples, std::uint64_t seed) {
  const ParticleSpectrum& sp = model.spectrum();
  const int d = sp.dim;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  TranslationResult res;
  bool any = false;
  for (int a = 0; a < d && !any; ++a)
    for (int b = 0; b < d && !any; ++b)
      if (sp.masses[a] != sp.masses[b]) any = true;
  if (!any) return res;
  for (int k = 0; k < samples; ++k) {
    const double t = u(rng);
    const STensor s = model.evaluate(t);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c)
          for (int e = 0; e < d; ++e) {
            if (sp.masses[a] == sp.masses[e] && sp.masses[b] == sp.masses[c]) continue;
            const double v = std::abs(s(a, b, c, e));
            if (v > res.worst) {
              res.worst = v;
              res.theta = t;
            }
          }
  }
  return res;
}

double check_tcp(const SMatrixModel& model, double theta) {
  const ParticleSpectrum& sp = model.spectrum();
  const int d = sp.dim;
  const STensor s = model.evaluate(theta);
  double m = 0.0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e)
          m = std::max(m, std::abs(s(a, b, c, e) - s(sp.bar(e), sp.bar(c), sp.bar(b), sp.bar(a))));
  return m;
}

double check_gauge_invariance(const SMatrixModel& model, double theta) {
  return check_gauge_invariance(model, theta, model.spectrum().gauge_elements);
}

double check_gauge_invariance(const SMatrixModel& model, double theta, const std::vector<Mat>& elements) {
  const Mat s = model.evaluate(theta).matrix();
  double m = 0.0;
  for (const Mat& v : elements) {
    const Mat vv = kron(v, v);
    m = std::max(m, max_norm(s * vv - vv * s));
  }
  return m;
}

double check_crossing(const SMatrixModel& model, double theta) {
  const ParticleSpectrum& sp = model.spectrum();
  const int d = sp.dim;
  const STensor s = model.evaluate(theta);
  const STensor sc = model.evaluate(kI * kPi - theta);
  double m = 0.0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e)
          m = std::max(m, std::abs(sc(a, b, c, e) - s(sp.bar(c), a, e, sp.bar(b))));
  return m;
}

}  // namespace fsm
