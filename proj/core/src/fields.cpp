#include "fsm/fields.hpp"

#include <cmath>
#include <map>

namespace fsm {

bool LightConeBox::in_right_wedge(std::array<double, 2> apex) const {
  return u_lo > apex[1] - apex[0] && v_lo > apex[1] + apex[0];
}

bool LightConeBox::in_left_wedge(std::array<double, 2> apex) const {
  return u_hi < apex[1] - apex[0] && v_hi < apex[1] + apex[0];
}

double bump(double s) {
  if (std::abs(s) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - s * s));
}

namespace {

struct BumpRule {
  std::vector<double> x, bw;  // nodes and weight * bump(node)
};

const BumpRule& bump_rule(int n) {
  thread_local std::map<int, BumpRule> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const RapidityQuadrature q = RapidityQuadrature::gauss_legendre(n, 1.0);
  BumpRule r;
  r.x = q.nodes;
  r.bw.resize(q.nodes.size());
  for (std::size_t j = 0; j < q.nodes.size(); ++j) r.bw[j] = q.weights[j] * bump(q.nodes[j]);
  return cache.emplace(n, std::move(r)).first->second;
}

// int bump(x) exp(i k x) dx over [-1, 1].
cplx bump_hat(int n, cplx k) {
  const BumpRule& r = bump_rule(n);
  cplx acc = 0.0;
  for (std::size_t j = 0; j < r.x.size(); ++j) acc += r.bw[j] * std::exp(kI * k * r.x[j]);
  return acc;
}

cplx momentum_dot_c(double mass, cplx theta, std::array<double, 2> a) {
  return mass * (std::cosh(theta) * a[0] - std::sinh(theta) * a[1]);
}

}  // namespace

TestFunction TestFunction::gaussian(GaussianPacket p, CVector weights) {
  const double det = p.a[0] * p.a[3] - p.a[1] * p.a[2];
  if (p.a[1] != p.a[2] || p.a[0] <= 0.0 || det <= 0.0)
    throw std::invalid_argument("Gaussian packet matrix must be symmetric positive definite");
  TestFunction f;
  f.kind_ = TestFunctionKind::Gaussian;
  f.gaussian_ = p;
  f.weights_ = std::move(weights);
  return f;
}

TestFunction TestFunction::wedge(WedgeBump b, CVector weights, int bump_nodes) {
  if (b.h_u <= 0.0 || b.h_v <= 0.0) throw std::invalid_argument("wedge bump widths must be positive");
  if (bump_nodes < 2) throw std::invalid_argument("bump quadrature needs at least 2 nodes");
  TestFunction f;
  f.kind_ = TestFunctionKind::Wedge;
  f.wedge_ = b;
  f.weights_ = std::move(weights);
  f.bump_nodes_ = bump_nodes;
  return f;
}

TestFunction TestFunction::momentum(MomentumBump b, CVector weights) {
  if (b.h <= 0.0) throw std::invalid_argument("momentum bump width must be positive");
  TestFunction f;
  f.kind_ = TestFunctionKind::Momentum;
  f.momentum_ = b;
  f.weights_ = std::move(weights);
  return f;
}

TestFunction TestFunction::push(Step s) const {
  TestFunction f = *this;
  f.steps_.push_back(std::move(s));
  return f;
}

TestFunction TestFunction::translated(std::array<double, 2> a) const {
  Step s{Op::Translate};
  s.a = a;
  return push(s);
}

TestFunction TestFunction::boosted(double lambda) const {
  Step s{Op::Boost};
  s.lambda = lambda;
  return push(s);
}

TestFunction TestFunction::star() const { return push(Step{Op::Star}); }
TestFunction TestFunction::reflected() const { return push(Step{Op::Reflect}); }

TestFunction TestFunction::gauged(const Mat& v) const {
  if (v.rows() != dim() || v.cols() != dim()) throw MismatchError("gauge matrix does not match component count");
  Step s{Op::Gauge};
  s.v = v;
  return push(s);
}

TestFunction TestFunction::scaled(cplx c) const {
  Step s{Op::Scale};
  s.c = c;
  return push(s);
}

TestFunction TestFunction::with_bump_nodes(int n) const {
  if (n < 2) throw std::invalid_argument("bump quadrature needs at least 2 nodes");
  TestFunction f = *this;
  f.bump_nodes_ = n;
  return f;
}

cplx TestFunction::base(const ParticleSpectrum& spectrum, int sign, int alpha, cplx theta) const {
  const double m = spectrum.masses[alpha];
  const cplx w = weights_[alpha];
  switch (kind_) {
    case TestFunctionKind::Gaussian: {
      const auto& p = gaussian_;
      const cplx p0 = m * std::cosh(theta), p1 = m * std::sinh(theta);
      const cplx k0 = p.k[0] + double(sign) * p0, k1 = p.k[1] - double(sign) * p1;
      const double det = p.a[0] * p.a[3] - p.a[1] * p.a[2];
      // kappa^T A^{-1} kappa
      const cplx quad = (p.a[3] * k0 * k0 - 2.0 * p.a[1] * k0 * k1 + p.a[0] * k1 * k1) / det;
      return w * std::exp(kI * (k0 * p.center[0] + k1 * p.center[1]) - 0.5 * quad) / std::sqrt(det);
    }
    case TestFunctionKind::Wedge: {
      const auto& b = wedge_;
      const cplx e = std::exp(theta), ei = std::exp(-theta);
      const cplx phase = 0.5 * m * (b.v_c * ei - b.u_c * e);
      return w * (b.h_u * b.h_v / (4.0 * kPi)) * std::exp(double(sign) * kI * phase) *
             bump_hat(bump_nodes_, 0.5 * m * b.h_v * ei) * bump_hat(bump_nodes_, 0.5 * m * b.h_u * e);
    }
    case TestFunctionKind::Momentum: {
      if (theta.imag() != 0.0) throw std::domain_error("momentum bump transforms are defined on the real line only");
      if (sign < 0) return 0.0;
      return w * bump((theta.real() - momentum_.theta_c) / momentum_.h);
    }
  }
  return 0.0;
}

cplx TestFunction::eval(const ParticleSpectrum& spectrum, int depth, int sign, int alpha, cplx theta) const {
  if (depth == 0) return base(spectrum, sign, alpha, theta);
  const Step& s = steps_[depth - 1];
  switch (s.op) {
    case Op::Translate:
      return std::exp(double(sign) * kI * momentum_dot_c(spectrum.masses[alpha], theta, s.a)) *
             eval(spectrum, depth - 1, sign, alpha, theta);
    case Op::Boost:
      return eval(spectrum, depth - 1, sign, alpha, theta - s.lambda);
    case Op::Star:
      return std::conj(eval(spectrum, depth - 1, -sign, spectrum.bar(alpha), std::conj(theta)));
    case Op::Reflect:
      return std::conj(eval(spectrum, depth - 1, sign, spectrum.bar(alpha), std::conj(theta)));
    case Op::Gauge: {
      cplx acc = 0.0;
      for (int b = 0; b < dim(); ++b)
        if (s.v(alpha, b) != cplx(0.0)) acc += s.v(alpha, b) * eval(spectrum, depth - 1, sign, b, theta);
      return acc;
    }
    case Op::Scale:
      return s.c * eval(spectrum, depth - 1, sign, alpha, theta);
  }
  return 0.0;
}

cplx TestFunction::transform(const ParticleSpectrum& spectrum, int sign, int alpha, cplx theta) const {
  if (spectrum.dim != dim()) throw MismatchError("test function has the wrong number of components");
  return eval(spectrum, static_cast<int>(steps_.size()), sign, alpha, theta);
}

std::optional<LightConeBox> TestFunction::support() const {
  if (kind_ != TestFunctionKind::Wedge) return std::nullopt;
  LightConeBox b{wedge_.u_c - wedge_.h_u, wedge_.u_c + wedge_.h_u, wedge_.v_c - wedge_.h_v, wedge_.v_c + wedge_.h_v};
  for (const Step& s : steps_) {
    switch (s.op) {
      case Op::Translate: {
        const double du = s.a[1] - s.a[0], dv = s.a[1] + s.a[0];
        b = {b.u_lo + du, b.u_hi + du, b.v_lo + dv, b.v_hi + dv};
        break;
      }
      case Op::Boost: {
        const double eu = std::exp(-s.lambda), ev = std::exp(s.lambda);
        b = {b.u_lo * eu, b.u_hi * eu, b.v_lo * ev, b.v_hi * ev};
        break;
      }
      case Op::Reflect:
        b = {-b.u_hi, -b.u_lo, -b.v_hi, -b.v_lo};
        break;
      default:
        break;
    }
  }
  return b;
}

std::optional<std::pair<double, double>> TestFunction::rapidity_support() const {
  if (kind_ != TestFunctionKind::Momentum) return std::nullopt;
  std::pair<double, double> r{momentum_.theta_c - momentum_.h, momentum_.theta_c + momentum_.h};
  for (const Step& s : steps_) {
    if (s.op == Op::Boost) r = {r.first + s.lambda, r.second + s.lambda};
    if (s.op == Op::Star) return std::nullopt;
  }
  return r;
}

ShellTransform shell_transform(const TestFunction& f, const ParticleSpectrum& spectrum,
                               const RapidityQuadrature& quad) {
  const int d = spectrum.dim;
  ShellTransform t{CVector(quad.nodes.size() * d), CVector(quad.nodes.size() * d)};
  for (int i = 0; i < quad.size(); ++i)
    for (int a = 0; a < d; ++a) {
      t.plus[i * d + a] = f.transform(spectrum, +1, a, quad.nodes[i]);
      t.minus[i * d + a] = f.transform(spectrum, -1, a, quad.nodes[i]);
    }
  return t;
}

ShellTransform shell_transform(const TestFunction& f, const FockSpace& space) {
  return shell_transform(f, space.spectrum(), space.quadrature());
}

namespace {

bool all_zero(const CVector& v) {
  for (const cplx& x : v)
    if (x != cplx(0.0)) return false;
  return true;
}

// J on one-particle vectors sampled on an arbitrary rule.
CVector j_one(const ParticleSpectrum& spectrum, const CVector& v) {
  const int d = spectrum.dim;
  CVector out(v.size());
  for (std::size_t s = 0; s < v.size(); ++s) {
    const std::size_t i = s / d;
    out[s] = std::conj(v[i * d + spectrum.bar(static_cast<int>(s % d))]);
  }
  return out;
}

double one_norm_on(const RapidityQuadrature& q, int d, const CVector& v) {
  double acc = 0.0;
  for (std::size_t s = 0; s < v.size(); ++s) acc += q.weights[s / d] * std::norm(v[s]);
  return std::sqrt(acc);
}

}  // namespace

FockState apply_field(const ShellTransform& f, const FockState& psi, bool primed) {
  const FockSpace& space = *psi.space();
  FockState out = primed ? create_reflected(f.plus, psi) : create(f.plus, psi);
  if (!all_zero(f.minus)) {
    const CVector jm = tcp_one(space, f.minus);
    out += primed ? annihilate_reflected(jm, psi) : annihilate(jm, psi);
  }
  return out;
}

FockState apply_field(const TestFunction& f, const FockState& psi, bool primed) {
  return apply_field(shell_transform(f, *psi.space()), psi, primed);
}

WedgeDefect wedge_commutator_defect(const TestFunction& f, const TestFunction& g, const FockState& psi,
                                    const WedgeOptions& opt) {
  if (opt.check_support) {
    const auto bf = f.support(), bg = g.support();
    if (!bf || !bg) throw SupportError("wedge locality needs compactly supported test functions");
    if (!bf->in_right_wedge(opt.apex)) throw SupportError("f is not supported in the right wedge");
    if (!bg->in_left_wedge(opt.apex)) throw SupportError("g is not supported in the left wedge");
  }
  const FockSpace& space = *psi.space();
  const ParticleSpectrum& spectrum = space.spectrum();
  const int d = spectrum.dim;
  const RapidityQuadrature prime = RapidityQuadrature::gauss_legendre(opt.nodes, opt.theta_max);
  const ShellTransform fs = shell_transform(f.with_bump_nodes(opt.nodes), spectrum, prime);
  const ShellTransform gs = shell_transform(g.with_bump_nodes(opt.nodes), spectrum, prime);
  const double nf = std::hypot(one_norm_on(prime, d, fs.plus), one_norm_on(prime, d, fs.minus));
  const double ng = std::hypot(one_norm_on(prime, d, gs.plus), one_norm_on(prime, d, gs.minus));

  WedgeDefect out;
  {
    auto fine = std::make_shared<const FockSpace>(space.model_ptr(), prime, 2);
    const FockState omega = FockState::vacuum(fine);
    const FockState c = apply_field(fs, apply_field(gs, omega), true) - apply_field(gs, apply_field(fs, omega, true));
    out.direct = norm(c) / (nf * ng);
  }
  {
    const FockState c = apply_mixed_l(prime, fs.plus, j_one(spectrum, gs.minus), psi) +
                        apply_mixed_k(prime, j_one(spectrum, fs.minus), gs.plus, psi);
    out.multiplication = norm(c) / (nf * ng * norm(psi));
  }
  return out;
}

double locality_failure_witness(const FockSpace& space, const TestFunction& f, const TestFunction& g) {
  const CVector fp = shell_transform(f, space).plus;
  const CVector gp = shell_transform(g, space).plus;
  Level x = tensor(fp, gp);
  const Level y = tensor(gp, fp);
  for (std::size_t t = 0; t < x.size(); ++t) x[t] -= y[t];
  const Level p = symmetrize(space, x, 2);
  const double n2 = std::sqrt(2.0 * std::abs(level_inner(space, p, p, 2)));
  return n2 / (one_norm(space, fp) * one_norm(space, gp));
}

}  // namespace fsm
