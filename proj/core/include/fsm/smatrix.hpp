#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "fsm/special_functions.hpp"
#include "fsm/spectrum.hpp"

namespace fsm {

// S^{ab}_{cd} stored at [a][b][c][d]; upper pair first.
class STensor {
 public:
  STensor() = default;
  explicit STensor(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim * dim * dim) {}

  int dim() const { return dim_; }
  cplx& operator()(int a, int b, int c, int d) { return data_[index(a, b, c, d)]; }
  cplx operator()(int a, int b, int c, int d) const { return data_[index(a, b, c, d)]; }
  const CVector& data() const { return data_; }
  CVector& data() { return data_; }

  // D^2 x D^2 matrix, row (a,b) -> a*D+b, column (c,d) -> c*D+d.
  Mat matrix() const;
  static STensor from_matrix(const Mat& m, int dim);

  static STensor flip(int dim, cplx scale = 1.0);      // scale * delta^a_d delta^b_c
  static STensor identity(int dim, cplx scale = 1.0);  // scale * delta^a_c delta^b_d

 private:
  std::size_t index(int a, int b, int c, int d) const {
    return ((static_cast<std::size_t>(a) * dim_ + b) * dim_ + c) * dim_ + d;
  }
  int dim_ = 0;
  CVector data_;
};

double max_abs_diff(const STensor& x, const STensor& y);

using Evaluator = std::function<STensor(cplx)>;
using ScalarFunction = std::function<cplx(cplx)>;

enum class ModelKind { Constant, ScalarRational, SinhGordon, Diagonal, ONSigma, Custom };

class SMatrixModel {
 public:
  virtual ~SMatrixModel() = default;

  // Throws StripError outside the admissible strip.
  STensor evaluate(cplx theta) const;
  STensor operator()(cplx theta) const { return evaluate(theta); }

  const ParticleSpectrum& spectrum() const { return spectrum_; }
  int dim() const { return spectrum_.dim; }
  ModelKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const ComplexStrip& strip() const { return strip_; }

  // Scalar value for D = 1 models.
  cplx scalar(cplx theta) const { return evaluate(theta)(0, 0, 0, 0); }

 protected:
  SMatrixModel(ParticleSpectrum spectrum, ModelKind kind, std::string name, ComplexStrip strip);
  virtual STensor compute(cplx theta) const = 0;

 private:
  ParticleSpectrum spectrum_;
  ModelKind kind_;
  std::string name_;
  ComplexStrip strip_;
};

using ModelPtr = std::shared_ptr<const SMatrixModel>;

// epsilon * flip; epsilon = +1 is the free Bose case, -1 the free Fermi case.
ModelPtr make_constant(int epsilon, ParticleSpectrum spectrum = ParticleSpectrum::uniform(1));

// epsilon exp(i a sinh t) prod_k (sinh b_k - sinh t)/(sinh b_k + sinh t).
// Zeros need 0 < Im b <= pi/2 and the list must be closed under b -> -conj(b).
ModelPtr make_scalar_rational(int epsilon, double a, std::vector<cplx> zeros, double mass = 1.0);
cplx scalar_rational_value(int epsilon, double a, const std::vector<cplx>& zeros, cplx theta);

// (sinh t - i sin b)/(sinh t + i sin b), b = pi g^2 / (4 pi + g^2).
ModelPtr make_sinh_gordon(double g, double mass = 1.0);
double sinh_gordon_b(double g);

// S = sigma_{ab} delta^a_d delta^b_c. The table holds analytic closures; the
// constructor verifies conj(s_ab) = 1/s_ab = s_ba(-t) = s_ba(i pi + t) at
// 20 points and rejects violations above 1e-8.
struct DiagonalViolation : std::invalid_argument {
  DiagonalViolation(int a, int b, double theta, double residual, const std::string& which);
  int a, b;
  double theta, residual;
  std::string which;
};
ModelPtr make_diagonal(ParticleSpectrum spectrum, std::vector<std::vector<ScalarFunction>> sigma);

// O(N) sigma model. gauge_elements defaults to `n_gauge` Haar samples from `seed`.
ModelPtr make_on_sigma(int n, int n_gauge = 10, std::uint64_t seed = 7);
struct ONSigmaCoefficients {
  cplx s1, s2, s3;
};
ONSigmaCoefficients on_sigma_coefficients(int n, cplx theta);

// Arbitrary tensor-valued model; used for negative controls.
ModelPtr make_custom(ParticleSpectrum spectrum, Evaluator eval, std::string name,
                     ComplexStrip strip = ComplexStrip(-1e-12, kPi + 1e-12));

// ---- axiom checkers -------------------------------------------------------

double check_unitarity(const SMatrixModel& model, double theta);

// Throws std::runtime_error when S(theta) is numerically singular.
double check_hermitian_analyticity(const SMatrixModel& model, double theta);

double check_yang_baxter(const SMatrixModel& model, double theta, double theta_prime);

struct TranslationResult {
  double worst = 0.0;
  double theta = 0.0;  // where the worst entry was seen
};
TranslationResult check_translation_invariance(const SMatrixModel& model, int samples = 20,
                                               std::uint64_t seed = 1);

double check_tcp(const SMatrixModel& model, double theta);

double check_gauge_invariance(const SMatrixModel& model, double theta);
double check_gauge_invariance(const SMatrixModel& model, double theta,
                              const std::vector<Mat>& elements);

double check_crossing(const SMatrixModel& model, double theta);

}  // namespace fsm
