#include "fsm/smatrix.hpp"

#include <cmath>
#include <sstream>

namespace fsm {

Mat STensor::matrix() const {
  const int d = dim_;
  Mat m(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e) m(a * d + b, c * d + e) = (*this)(a, b, c, e);
  return m;
}

STensor STensor::from_matrix(const Mat& m, int dim) {
  STensor t(dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c)
        for (int e = 0; e < dim; ++e) t(a, b, c, e) = m(a * dim + b, c * dim + e);
  return t;
}

STensor STensor::flip(int dim, cplx scale) {
  STensor t(dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) t(a, b, b, a) = scale;
  return t;
}

STensor STensor::identity(int dim, cplx scale) {
  STensor t(dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) t(a, b, a, b) = scale;
  return t;
}

double max_abs_diff(const STensor& x, const STensor& y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.data().size(); ++i) m = std::max(m, std::abs(x.data()[i] - y.data()[i]));
  return m;
}

SMatrixModel::SMatrixModel(ParticleSpectrum spectrum, ModelKind kind, std::string name,
                           ComplexStrip strip)
    : spectrum_(std::move(spectrum)), kind_(kind), name_(std::move(name)), strip_(strip) {
  spectrum_.validate();
}

STensor SMatrixModel::evaluate(cplx theta) const {
  if (!strip_.contains(theta, 1e-12)) {
    std::ostringstream os;
    os << name_ << ": theta = " << theta << " outside strip [" << strip_.lower << ", "
       << strip_.upper << "]";
    throw StripError(os.str());
  }
  return compute(theta);
}

namespace {

const ComplexStrip kClosedPhysical(0.0, kPi);

class ConstantModel final : public SMatrixModel {
 public:
  ConstantModel(int eps, ParticleSpectrum sp)
      : SMatrixModel(std::move(sp), ModelKind::Constant, eps > 0 ? "constant(+1)" : "constant(-1)",
                     kClosedPhysical),
        eps_(eps) {}

 protected:
  STensor compute(cplx) const override { return STensor::flip(dim(), static_cast<double>(eps_)); }

 private:
  int eps_;
};

class ScalarModel final : public SMatrixModel {
 public:
  ScalarModel(ModelKind kind, std::string name, double mass, ScalarFunction f)
      : SMatrixModel(ParticleSpectrum::uniform(1, mass), kind, std::move(name), kClosedPhysical),
        f_(std::move(f)) {}

 protected:
  STensor compute(cplx theta) const override {
    STensor t(1);
    t(0, 0, 0, 0) = f_(theta);
    return t;
  }

 private:
  ScalarFunction f_;
};

class DiagonalModel final : public SMatrixModel {
 public:
  DiagonalModel(ParticleSpectrum sp, std::vector<std::vector<ScalarFunction>> sigma)
      : SMatrixModel(std::move(sp), ModelKind::Diagonal, "diagonal", kClosedPhysical),
        sigma_(std::move(sigma)) {}

 protected:
  STensor compute(cplx theta) const override {
    const int d = dim();
    STensor t(d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) t(a, b, b, a) = sigma_[a][b](theta);
    return t;
  }

 private:
  std::vector<std::vector<ScalarFunction>> sigma_;
};

class ONSigmaModel final : public SMatrixModel {
 public:
  ONSigmaModel(int n, ParticleSpectrum sp)
      : SMatrixModel(std::move(sp), ModelKind::ONSigma, "onsigma(" + std::to_string(n) + ")",
                     ComplexStrip(-2.0 * kPi / (n - 2) + 0.05, kPi + 2.0 * kPi / (n - 2) - 0.05)),
        n_(n) {}

 protected:
  STensor compute(cplx theta) const override {
    const auto c = on_sigma_coefficients(n_, theta);
    STensor t(n_);
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        t(a, a, b, b) += c.s1;
        t(a, b, b, a) += c.s2;
        t(a, b, a, b) += c.s3;
      }
    }
    return t;
  }

 private:
  int n_;
};

class CustomModel final : public SMatrixModel {
 public:
  CustomModel(ParticleSpectrum sp, Evaluator eval, std::string name, ComplexStrip strip)
      : SMatrixModel(std::move(sp), ModelKind::Custom, std::move(name), strip), eval_(std::move(eval)) {}

 protected:
  STensor compute(cplx theta) const override { return eval_(theta); }

 private:
  Evaluator eval_;
};

}  // namespace

ModelPtr make_constant(int epsilon, ParticleSpectrum spectrum) {
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("constant: epsilon must be +1 or -1");
  return std::make_shared<ConstantModel>(epsilon, std::move(spectrum));
}

cplx scalar_rational_value(int epsilon, double a, const std::vector<cplx>& zeros, cplx theta) {
  const cplx s = std::sinh(theta);
  cplx v = static_cast<double>(epsilon) * std::exp(kI * a * s);
  for (const cplx& b : zeros) {
    const cplx sb = std::sinh(b);
    v *= (sb - s) / (sb + s);
  }
  return v;
}

ModelPtr make_scalar_rational(int epsilon, double a, std::vector<cplx> zeros, double mass) {
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("scalar rational: epsilon must be +1 or -1");
  if (a < 0.0) throw std::invalid_argument("scalar rational: a must be >= 0");
  for (const cplx& b : zeros) {
    if (!(b.imag() > 0.0 && b.imag() <= kPi / 2 + 1e-12))
      throw std::invalid_argument("scalar rational: zeros need 0 < Im b <= pi/2");
  }
  // b -> -conj(b) must permute the list (multiplicities included)
  std::vector<bool> used(zeros.size(), false);
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    const cplx target = -std::conj(zeros[i]);
    bool found = false;
    for (std::size_t j = 0; j < zeros.size() && !found; ++j) {
      if (!used[j] && std::abs(zeros[j] - target) <= 1e-12) {
        used[j] = true;
        found = true;
      }
    }
    if (!found) {
      std::ostringstream os;
      os << "scalar rational: zero " << zeros[i] << " has no partner -conj(b)";
      throw std::invalid_argument(os.str());
    }
  }
  std::ostringstream name;
  name << "scalar_rational(eps=" << epsilon << ",a=" << a << ",k=" << zeros.size() << ")";
  auto f = [epsilon, a, zeros](cplx t) { return scalar_rational_value(epsilon, a, zeros, t); };
  return std::make_shared<ScalarModel>(ModelKind::ScalarRational, name.str(), mass, f);
}

double sinh_gordon_b(double g) { return kPi * g * g / (4.0 * kPi + g * g); }

ModelPtr make_sinh_gordon(double g, double mass) {
  if (!(g > 0.0)) throw std::invalid_argument("sinh-gordon: g must be > 0");
  const double sb = std::sin(sinh_gordon_b(g));
  auto f = [sb](cplx t) {
    const cplx s = std::sinh(t);
    return (s - kI * sb) / (s + kI * sb);
  };
  std::ostringstream name;
  name << "sinh_gordon(g=" << g << ")";
  return std::make_shared<ScalarModel>(ModelKind::SinhGordon, name.str(), mass, f);
}

DiagonalViolation::DiagonalViolation(int a_, int b_, double t, double r, const std::string& w)
    : std::invalid_argument([&] {
        std::ostringstream os;
        os << "diagonal: constraint '" << w << "' violated for sigma(" << a_ + 1 << "," << b_ + 1
           << ") at theta = " << t << " (residual " << r << ")";
        return os.str();
      }()),
      a(a_),
      b(b_),
      theta(t),
      residual(r),
      which(w) {}

ModelPtr make_diagonal(ParticleSpectrum spectrum, std::vector<std::vector<ScalarFunction>> sigma) {
  spectrum.validate();
  const int d = spectrum.dim;
  if (static_cast<int>(sigma.size()) != d) throw std::invalid_argument("diagonal: table must be D x D");
  for (const auto& row : sigma)
    if (static_cast<int>(row.size()) != d) throw std::invalid_argument("diagonal: table must be D x D");

  constexpr int kPoints = 20;
  constexpr double kTol = 1e-8;
  for (int p = 0; p < kPoints; ++p) {
    const double t = -4.75 + 9.5 * p / (kPoints - 1);
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        const cplx s = sigma[a][b](t);
        const cplx conj_s = std::conj(s);
        const double r_inv = std::abs(conj_s - 1.0 / s);
        if (r_inv > kTol) throw DiagonalViolation(a, b, t, r_inv, "conj(s_ab) = 1/s_ab");
        const double r_ha = std::abs(conj_s - sigma[b][a](-t));
        if (r_ha > kTol) throw DiagonalViolation(a, b, t, r_ha, "conj(s_ab(t)) = s_ba(-t)");
        const double r_cr = std::abs(conj_s - sigma[b][a](kI * kPi + t));
        if (r_cr > kTol) throw DiagonalViolation(a, b, t, r_cr, "conj(s_ab(t)) = s_ba(i pi + t)");
      }
    }
  }
  return std::make_shared<DiagonalModel>(std::move(spectrum), std::move(sigma));
}

ONSigmaCoefficients on_sigma_coefficients(int n, cplx theta) {
  // Q(t) = t R(t) with R free of the removable zero/pole pair at t = 0:
  // R(t) = (-i/2pi) G(nu - ix) G(1/2 - ix) / (G(1/2 + nu - ix) G(1 - ix)), x = t/2pi.
  const double nu = 1.0 / (n - 2);
  auto r = [nu](cplx t) {
    const cplx ix = kI * t / (2.0 * kPi);
    return (-kI / (2.0 * kPi)) * gamma(nu - ix) * gamma(0.5 - ix) * rgamma(0.5 + nu - ix) * rgamma(1.0 - ix);
  };
  const cplx u = kI * kPi - theta;
  const cplx ra = r(theta);
  const cplx rb = r(u);
  const cplx c = -2.0 * kPi * kI / static_cast<double>(n - 2);
  ONSigmaCoefficients out;
  out.s2 = theta * ra * u * rb;
  out.s3 = c * ra * u * rb;
  out.s1 = c * theta * ra * rb;
  return out;
}

ModelPtr make_on_sigma(int n, int n_gauge, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("onsigma: N must be >= 3");
  ParticleSpectrum sp = ParticleSpectrum::uniform(n, 1.0);
  sp.gauge_elements.clear();
  for (int k = 0; k < n_gauge; ++k) sp.gauge_elements.push_back(random_orthogonal(n, seed + k));
  if (sp.gauge_elements.empty()) sp.gauge_elements.push_back(Mat::Identity(n, n));
  return std::make_shared<ONSigmaModel>(n, std::move(sp));
}

ModelPtr make_custom(ParticleSpectrum spectrum, Evaluator eval, std::string name, ComplexStrip strip) {
  return std::make_shared<CustomModel>(std::move(spectrum), std::move(eval), std::move(name), strip);
}

}  // namespace fsm
