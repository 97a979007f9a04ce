#pragma once

#include <array>
#include <optional>

#include "fsm/zf.hpp"

namespace fsm {

// Minkowski coordinates x = (x0, x1); light-cone u = x1 - x0, v = x1 + x0.
// W_R is {u > 0, v > 0} and W_L is {u < 0, v < 0}.
struct LightConeBox {
  double u_lo, u_hi, v_lo, v_hi;
  bool in_right_wedge(std::array<double, 2> apex = {0.0, 0.0}) const;
  bool in_left_wedge(std::array<double, 2> apex = {0.0, 0.0}) const;
};

// exp(-1 / (1 - s^2)) on |s| < 1, zero elsewhere.
double bump(double s);

struct GaussianPacket {
  std::array<double, 2> center{0.0, 0.0};
  // Symmetric positive definite; f(x) = exp(-(x-c)^T A (x-c)/2 + i k.x).
  std::array<double, 4> a{1.0, 0.0, 0.0, 1.0};
  std::array<double, 2> k{0.0, 0.0};  // Euclidean pairing k0 x0 + k1 x1
};

// bump((u - u_c)/h_u) bump((v - v_c)/h_v).
struct WedgeBump {
  double u_c = 1.0, v_c = 1.0, h_u = 0.5, h_v = 0.5;
};

// f+ (theta) = bump((theta - theta_c)/h), f- = 0.
struct MomentumBump {
  double theta_c = 0.0, h = 1.0;
};

enum class TestFunctionKind { Gaussian, Wedge, Momentum };

// A base wave packet with per-component weights, followed by a list of
// operations applied in order. Transforms are evaluated in closed form
// (WedgeBump uses a Gauss-Legendre rule for the 1D bump transform).
class TestFunction {
 public:
  static TestFunction gaussian(GaussianPacket p, CVector weights);
  static TestFunction wedge(WedgeBump b, CVector weights, int bump_nodes = 64);
  static TestFunction momentum(MomentumBump b, CVector weights);

  TestFunctionKind kind() const { return kind_; }
  int dim() const { return static_cast<int>(weights_.size()); }
  const CVector& weights() const { return weights_; }
  int bump_nodes() const { return bump_nodes_; }

  // (a, 0) |> f: f(x - a).
  TestFunction translated(std::array<double, 2> a) const;
  // (0, lambda) |> f, rapidity shift by lambda on the transforms.
  TestFunction boosted(double lambda) const;
  // f*_a(x) = conj(f_abar(x)).
  TestFunction star() const;
  // j |> f: conj(f_abar(-x)).
  TestFunction reflected() const;
  // (V f)_a = sum_b V_ab f_b.
  TestFunction gauged(const Mat& v) const;
  TestFunction scaled(cplx c) const;
  TestFunction with_bump_nodes(int n) const;

  // f^sign_a(theta) for sign = +1 / -1. Complex theta is supported for the
  // Gaussian and wedge kinds.
  cplx transform(const ParticleSpectrum& spectrum, int sign, int alpha, cplx theta) const;

  // Support box in light-cone coordinates, tracked through the operations;
  // empty for kinds without compact spacetime support.
  std::optional<LightConeBox> support() const;
  // Support interval of f+ in rapidity for the momentum kind.
  std::optional<std::pair<double, double>> rapidity_support() const;

 private:
  enum class Op { Translate, Boost, Star, Reflect, Gauge, Scale };
  struct Step {
    explicit Step(Op o) : op(o) {}
    Op op;
    std::array<double, 2> a{0.0, 0.0};
    double lambda = 0.0;
    Mat v;
    cplx c = 1.0;
  };

  cplx base(const ParticleSpectrum& spectrum, int sign, int alpha, cplx theta) const;
  cplx eval(const ParticleSpectrum& spectrum, int depth, int sign, int alpha, cplx theta) const;
  TestFunction push(Step s) const;

  TestFunctionKind kind_ = TestFunctionKind::Gaussian;
  GaussianPacket gaussian_;
  WedgeBump wedge_;
  MomentumBump momentum_;
  CVector weights_;
  int bump_nodes_ = 64;
  std::vector<Step> steps_;
};

// f+ and f- sampled at quadrature nodes, index i*D + alpha.
struct ShellTransform {
  CVector plus;
  CVector minus;
};

ShellTransform shell_transform(const TestFunction& f, const ParticleSpectrum& spectrum,
                               const RapidityQuadrature& quad);
ShellTransform shell_transform(const TestFunction& f, const FockSpace& space);

// phi(f) = z^dagger(f+) + z(J f-); primed: z^dagger(f+)' + z(J f-)'.
FockState apply_field(const ShellTransform& f, const FockState& psi, bool primed = false);
FockState apply_field(const TestFunction& f, const FockState& psi, bool primed = false);

class SupportError : public std::invalid_argument {
 public:
  explicit SupportError(const std::string& what) : std::invalid_argument(what) {}
};

struct WedgeOptions {
  int nodes = 64;             // theta' rule and bump quadrature
  double theta_max = 5.0;
  bool check_support = true;  // f in W_R + apex, g in W_L + apex
  std::array<double, 2> apex{0.0, 0.0};
};

struct WedgeDefect {
  double direct = 0.0;          // |[phi'(f), phi(g)] Omega| on an N-node grid
  double multiplication = 0.0;  // |(L + K) psi| with the N-node theta' rule
};

// Both entries are normalized by |f| |g| |psi| with |f|^2 = |f+|^2 + |f-|^2.
WedgeDefect wedge_commutator_defect(const TestFunction& f, const TestFunction& g, const FockState& psi,
                                    const WedgeOptions& opt = {});

// |sqrt(2) P_2 (f+ (x) g+ - g+ (x) f+)| / (|f+| |g+|) on the grid of `space`.
double locality_failure_witness(const FockSpace& space, const TestFunction& f, const TestFunction& g);

}  // namespace fsm
