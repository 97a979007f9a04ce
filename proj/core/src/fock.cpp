#include "fsm/fock.hpp"

#include <cmath>

namespace fsm {

FockSpace::FockSpace(ModelPtr model, RapidityQuadrature quadrature, int n_max)
    : model_(std::move(model)), quad_(std::move(quadrature)), n_max_(n_max) {
  if (!model_) throw std::invalid_argument("FockSpace: null model");
  if (n_max_ < 0) throw std::invalid_argument("FockSpace: n_max must be >= 0");
  dim_ = model_->dim();
  m_ = quad_.size();
  dd_ = dim_ * dim_;
  table_.resize(static_cast<std::size_t>(m_) * m_ * dd_ * dd_);
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) {
      const STensor s = model_->evaluate(quad_.nodes[j] - quad_.nodes[i]);
      std::copy(s.data().begin(), s.data().end(), table_.begin() + (static_cast<std::size_t>(i) * m_ + j) * dd_ * dd_);
    }
  }
}

std::size_t FockSpace::level_size(int n) const {
  std::size_t r = 1;
  for (int l = 0; l < n; ++l) r *= static_cast<std::size_t>(slots());
  return r;
}

FockSpacePtr make_fock_space(ModelPtr model, int m, double theta_max, int n_max) {
  return std::make_shared<const FockSpace>(std::move(model), RapidityQuadrature::gauss_legendre(m, theta_max),
                                           n_max);
}

// ---- FockState --------------------------------------------------------------

FockState::FockState(FockSpacePtr space) : space_(std::move(space)) {
  if (!space_) throw std::invalid_argument("FockState: null space");
  levels_.resize(space_->n_max() + 1);
}

Level& FockState::ensure(int n) {
  if (levels_[n].empty()) levels_[n].assign(space_->level_size(n), cplx(0.0));
  return levels_[n];
}

void FockState::set_level(int n, Level data) {
  if (!data.empty() && data.size() != space_->level_size(n))
    throw MismatchError("FockState: level " + std::to_string(n) + " has wrong size");
  levels_[n] = std::move(data);
}

FockState FockState::vacuum(FockSpacePtr space) {
  FockState s(std::move(space));
  s.set_level(0, Level{cplx(1.0)});
  return s;
}

FockState FockState::one_particle(FockSpacePtr space, const CVector& phi) {
  FockState s(std::move(space));
  if (s.n_max() < 1) throw TruncationError("one_particle: n_max must be >= 1");
  s.set_level(1, phi);
  return s;
}

namespace {

void check_same(const FockState& a, const FockState& b) {
  if (a.space() != b.space()) {
    const FockSpace& x = *a.space();
    const FockSpace& y = *b.space();
    if (x.grid_size() != y.grid_size() || x.dim() != y.dim() || x.n_max() != y.n_max() ||
        x.quadrature().nodes != y.quadrature().nodes)
      throw MismatchError("FockState: incompatible spaces");
  }
}

void axpy(Level& y, cplx a, const Level& x) {
  if (x.empty()) return;
  if (y.empty()) y.assign(x.size(), cplx(0.0));
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

}  // namespace

FockState& FockState::operator+=(const FockState& o) {
  check_same(*this, o);
  for (int n = 0; n <= n_max(); ++n) axpy(levels_[n], 1.0, o.levels_[n]);
  return *this;
}

FockState& FockState::operator-=(const FockState& o) {
  check_same(*this, o);
  for (int n = 0; n <= n_max(); ++n) axpy(levels_[n], -1.0, o.levels_[n]);
  return *this;
}

FockState& FockState::operator*=(cplx c) {
  for (auto& l : levels_)
    for (auto& v : l) v *= c;
  return *this;
}

FockState operator+(FockState a, const FockState& b) { return a += b; }
FockState operator-(FockState a, const FockState& b) { return a -= b; }
FockState operator*(cplx c, FockState a) { return a *= c; }

// ---- transpositions and symmetrizer -----------------------------------------

Level apply_transposition(const FockSpace& space, const Level& psi, int n, int k) {
  if (k < 1 || k > n - 1) throw std::out_of_range("apply_transposition: k out of range");
  if (psi.empty()) return {};
  const std::size_t s = space.slots();
  const int d = space.dim();
  const int m = space.grid_size();
  const int dd = d * d;
  std::size_t pre = 1, post = 1;
  for (int l = 1; l < k; ++l) pre *= s;
  for (int l = k + 2; l <= n; ++l) post *= s;
  Level out(psi.size(), cplx(0.0));
  for (std::size_t p = 0; p < pre; ++p) {
    const std::size_t base = p * s * s * post;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const cplx* t = space.s_table(i, j);
        for (int a = 0; a < d; ++a) {
          for (int b = 0; b < d; ++b) {
            cplx* o = &out[base + ((i * d + a) * s + (j * d + b)) * post];
            const cplx* row = t + (a * d + b) * dd;
            for (int c = 0; c < d; ++c) {
              for (int e = 0; e < d; ++e) {
                const cplx coef = row[c * d + e];
                if (coef == cplx(0.0)) continue;
                const cplx* x = &psi[base + ((j * d + c) * s + (i * d + e)) * post];
                for (std::size_t q = 0; q < post; ++q) o[q] += coef * x[q];
              }
            }
          }
        }
      }
    }
  }
  return out;
}

namespace {

Level symmetrize_from(const FockSpace& space, const Level& x, int n, int from) {
  const int m = n - from + 1;
  if (m <= 1) return x;
  Level y = symmetrize_from(space, x, n, from + 1);
  Level acc = y;
  for (int j = 1; j < m; ++j) {
    y = apply_transposition(space, y, n, from + j - 1);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += y[i];
  }
  const double inv = 1.0 / m;
  for (auto& v : acc) v *= inv;
  return acc;
}

}  // namespace

Level symmetrize(const FockSpace& space, const Level& psi, int n) {
  if (n > 6) throw TruncationError("symmetrize: n > 6 exceeds the factorial cost guard");
  if (psi.empty() || n <= 1) return psi;
  return symmetrize_from(space, psi, n, 1);
}

FockState symmetrize(const FockState& psi) {
  FockState out(psi.space());
  for (int n = 0; n <= psi.n_max(); ++n) out.set_level(n, symmetrize(*psi.space(), psi.level(n), n));
  return out;
}

double symmetry_defect(const FockSpace& space, const Level& psi, int n) {
  if (psi.empty() || n < 2) return 0.0;
  const double nrm = std::sqrt(std::abs(level_inner(space, psi, psi, n)));
  if (nrm == 0.0) return 0.0;
  double worst = 0.0;
  for (int k = 1; k < n; ++k) {
    Level d = apply_transposition(space, psi, n, k);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= psi[i];
    worst = std::max(worst, std::sqrt(std::abs(level_inner(space, d, d, n))) / nrm);
  }
  return worst;
}

double symmetry_defect(const FockState& psi) {
  double worst = 0.0;
  for (int n = 2; n <= psi.n_max(); ++n) worst = std::max(worst, symmetry_defect(*psi.space(), psi.level(n), n));
  return worst;
}

// ---- inner products -----------------------------------------------------------

namespace {

cplx inner_rec(const std::vector<double>& ws, const cplx* a, const cplx* b, int n, std::size_t block) {
  if (n == 0) return std::conj(*a) * *b;
  const std::size_t s = ws.size();
  const std::size_t sub = block / s;
  cplx acc = 0.0;
  if (n == 1) {
    for (std::size_t i = 0; i < s; ++i) acc += ws[i] * std::conj(a[i]) * b[i];
    return acc;
  }
  for (std::size_t i = 0; i < s; ++i) acc += ws[i] * inner_rec(ws, a + i * sub, b + i * sub, n - 1, sub);
  return acc;
}

std::vector<double> slot_weights(const FockSpace& space) {
  std::vector<double> ws(space.slots());
  for (int i = 0; i < space.grid_size(); ++i)
    for (int a = 0; a < space.dim(); ++a) ws[i * space.dim() + a] = space.weight(i);
  return ws;
}

}  // namespace

cplx level_inner(const FockSpace& space, const Level& a, const Level& b, int n) {
  if (a.empty() || b.empty()) return 0.0;
  return inner_rec(slot_weights(space), a.data(), b.data(), n, a.size());
}

cplx inner_product(const FockState& a, const FockState& b) {
  check_same(a, b);
  cplx acc = 0.0;
  for (int n = 0; n <= a.n_max(); ++n) acc += level_inner(*a.space(), a.level(n), b.level(n), n);
  return acc;
}

double norm(const FockState& a) { return std::sqrt(std::abs(inner_product(a, a))); }

double norm_diff(const FockState& a, const FockState& b) { return norm(a - b); }

double number_norm(const FockState& a, int shift) {
  double acc = 0.0;
  for (int n = 0; n <= a.n_max(); ++n)
    acc += (n + shift) * std::abs(level_inner(*a.space(), a.level(n), a.level(n), n));
  return std::sqrt(acc);
}

// ---- symmetry actions -----------------------------------------------------------

double momentum_dot(double mass, double theta, std::array<double, 2> a) {
  return mass * (std::cosh(theta) * a[0] - std::sinh(theta) * a[1]);
}

namespace {

// Multiplies each entry by prod_l f[slot_l].
void multiply_slots(Level& x, const CVector& f, int n) {
  const std::size_t s = f.size();
  std::size_t stride = 1;
  for (int l = 0; l < n; ++l) {
    for (std::size_t t = 0; t < x.size(); ++t) x[t] *= f[(t / stride) % s];
    stride *= s;
  }
}

// Applies a D x D matrix on the component index of every slot.
Level gauge_level(const FockSpace& space, const Level& x, int n, const Mat& g) {
  Level cur = x;
  const std::size_t s = space.slots();
  const int d = space.dim();
  std::size_t stride = 1;
  for (int l = 0; l < n; ++l) {
    Level nxt(cur.size(), cplx(0.0));
    for (std::size_t t = 0; t < cur.size(); ++t) {
      const std::size_t slot = (t / stride) % s;
      const int a = static_cast<int>(slot % d);
      const std::size_t base = t - static_cast<std::size_t>(a) * stride;
      cplx acc = 0.0;
      for (int b = 0; b < d; ++b) acc += g(a, b) * cur[base + static_cast<std::size_t>(b) * stride];
      nxt[t] = acc;
    }
    cur.swap(nxt);
    stride *= s;
  }
  return cur;
}

}  // namespace

CVector translate_one(const FockSpace& space, const CVector& phi, std::array<double, 2> a) {
  CVector out = phi;
  const int d = space.dim();
  for (int i = 0; i < space.grid_size(); ++i)
    for (int al = 0; al < d; ++al)
      out[i * d + al] *= std::exp(kI * momentum_dot(space.spectrum().masses[al], space.node(i), a));
  return out;
}

FockState translate(const FockState& psi, std::array<double, 2> a) {
  const FockSpace& space = *psi.space();
  CVector ph(space.slots(), cplx(1.0));
  ph = translate_one(space, ph, a);
  FockState out = psi;
  for (int n = 1; n <= psi.n_max(); ++n)
    if (!out.is_zero(n)) multiply_slots(out.level(n), ph, n);
  return out;
}

CVector gauge_one(const FockSpace& space, const CVector& phi, const Mat& g) {
  return gauge_level(space, phi, 1, g);
}

FockState gauge_transform(const FockState& psi, const Mat& g) {
  FockState out(psi.space());
  for (int n = 0; n <= psi.n_max(); ++n)
    if (!psi.is_zero(n)) out.set_level(n, gauge_level(*psi.space(), psi.level(n), n, g));
  return out;
}

CVector tcp_one(const FockSpace& space, const CVector& phi) {
  const int d = space.dim();
  CVector out(phi.size());
  for (int i = 0; i < space.grid_size(); ++i)
    for (int a = 0; a < d; ++a) out[i * d + a] = std::conj(phi[i * d + space.spectrum().bar(a)]);
  return out;
}

FockState tcp(const FockState& psi) {
  const FockSpace& space = *psi.space();
  const std::size_t s = space.slots();
  const int d = space.dim();
  std::vector<std::size_t> bar(s);
  for (std::size_t t = 0; t < s; ++t) bar[t] = (t / d) * d + space.spectrum().bar(static_cast<int>(t % d));
  FockState out(psi.space());
  for (int n = 0; n <= psi.n_max(); ++n) {
    if (psi.is_zero(n)) continue;
    const Level& x = psi.level(n);
    Level y(x.size());
    for (std::size_t t = 0; t < x.size(); ++t) {
      // slots of t, most significant first; source index reverses and conjugates them
      std::size_t rest = t, src = 0;
      for (int l = 0; l < n; ++l) {
        src = src * s + bar[rest % s];
        rest /= s;
      }
      y[t] = std::conj(x[src]);
    }
    out.set_level(n, std::move(y));
  }
  return out;
}

// ---- random states ------------------------------------------------------------

namespace {

cplx gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
  const double re = nd(rng);
  const double im = nd(rng);
  return {re, im};
}

}  // namespace

CVector random_one_particle(const FockSpace& space, std::mt19937_64& rng) {
  CVector v(space.slots());
  for (auto& x : v) x = gaussian(rng);
  return v;
}

FockState random_state(FockSpacePtr space, std::mt19937_64& rng, int top) {
  if (top > space->n_max()) throw TruncationError("random_state: top level exceeds n_max");
  FockState psi(space);
  for (int n = 0; n <= top; ++n) {
    Level x(space->level_size(n));
    for (auto& v : x) v = gaussian(rng);
    psi.set_level(n, symmetrize(*space, x, n));
  }
  const double nrm = norm(psi);
  if (nrm > 0.0) psi *= 1.0 / nrm;
  return psi;
}

Level tensor(const Level& a, const Level& b) {
  if (a.empty() || b.empty()) return {};
  Level out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

}  // namespace fsm
