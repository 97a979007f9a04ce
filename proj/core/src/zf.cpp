#include "fsm/zf.hpp"

#include <cmath>

namespace fsm {

cplx one_inner(const FockSpace& space, const CVector& a, const CVector& b) {
  const int d = space.dim();
  cplx acc = 0.0;
  for (int i = 0; i < space.grid_size(); ++i)
    for (int al = 0; al < d; ++al) acc += space.weight(i) * std::conj(a[i * d + al]) * b[i * d + al];
  return acc;
}

double one_norm(const FockSpace& space, const CVector& a) { return std::sqrt(std::abs(one_inner(space, a, a))); }

namespace {

void check_vector(const FockSpace& space, const CVector& phi) {
  if (static_cast<int>(phi.size()) != space.slots()) throw MismatchError("one-particle vector has wrong size");
}

// Weighted conjugate: w_i conj(phi^a(theta_i)).
CVector weighted_conj(const FockSpace& space, const CVector& phi) {
  CVector c(phi.size());
  const int d = space.dim();
  for (std::size_t s = 0; s < phi.size(); ++s) c[s] = space.weight(static_cast<int>(s) / d) * std::conj(phi[s]);
  return c;
}

}  // namespace

FockState annihilate(const CVector& phi, const FockState& psi) {
  const FockSpace& space = *psi.space();
  check_vector(space, phi);
  const CVector c = weighted_conj(space, phi);
  const std::size_t s = space.slots();
  FockState out(psi.space());
  for (int n = 0; n < psi.n_max(); ++n) {
    const Level& x = psi.level(n + 1);
    if (x.empty()) continue;
    const std::size_t len = space.level_size(n);
    Level y(len, cplx(0.0));
    for (std::size_t t = 0; t < s; ++t) {
      const cplx* row = &x[t * len];
      for (std::size_t r = 0; r < len; ++r) y[r] += c[t] * row[r];
    }
    const double f = std::sqrt(static_cast<double>(n + 1));
    for (auto& v : y) v *= f;
    out.set_level(n, std::move(y));
  }
  return out;
}

FockState annihilate_reflected(const CVector& phi, const FockState& psi) {
  const FockSpace& space = *psi.space();
  check_vector(space, phi);
  const CVector c = weighted_conj(space, phi);
  const std::size_t s = space.slots();
  FockState out(psi.space());
  for (int n = 0; n < psi.n_max(); ++n) {
    const Level& x = psi.level(n + 1);
    if (x.empty()) continue;
    const std::size_t len = space.level_size(n);
    Level y(len, cplx(0.0));
    const double f = std::sqrt(static_cast<double>(n + 1));
    for (std::size_t r = 0; r < len; ++r) {
      const cplx* row = &x[r * s];
      cplx acc = 0.0;
      for (std::size_t t = 0; t < s; ++t) acc += c[t] * row[t];
      y[r] = f * acc;
    }
    out.set_level(n, std::move(y));
  }
  return out;
}

FockState create(const CVector& phi, const FockState& psi) {
  const FockSpace& space = *psi.space();
  check_vector(space, phi);
  if (!psi.is_zero(psi.n_max())) {
    for (const cplx& v : psi.level(psi.n_max()))
      if (v != cplx(0.0)) throw TruncationError("create: top level of the input is nonzero");
  }
  const int d = space.dim();
  const int m = space.grid_size();
  const int dd = d * d;
  const std::size_t s = space.slots();
  FockState out(psi.space());
  for (int n = 1; n <= psi.n_max(); ++n) {
    const Level& x = psi.level(n - 1);
    if (x.empty()) continue;
    Level y(space.level_size(n), cplx(0.0));
    std::size_t dn = 1;
    for (int l = 0; l < n; ++l) dn *= d;
    std::size_t mn = 1;
    for (int l = 0; l < n; ++l) mn *= m;

    std::vector<int> node(n), comp(n);
    CVector v(dn), w(dn), acc(dn);
    const double f = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t g = 0; g < mn; ++g) {
      for (int l = n - 1, r = static_cast<int>(g); l >= 0; --l, r /= m) node[l] = r % m;
      std::fill(acc.begin(), acc.end(), cplx(0.0));
      for (int k = 1; k <= n; ++k) {
        // v = phi(theta_k) (x) psi_{n-1}(theta without theta_k)
        for (std::size_t c = 0; c < dn; ++c) {
          std::size_t r = c;
          for (int l = n - 1; l >= 0; --l, r /= d) comp[l] = static_cast<int>(r % d);
          std::size_t src = 0;
          for (int l = 0, q = 1; l < n; ++l) {
            if (l == k - 1) continue;
            src = src * s + static_cast<std::size_t>(node[l]) * d + comp[q++];
          }
          v[c] = phi[static_cast<std::size_t>(node[k - 1]) * d + comp[0]] * x[src];
        }
        // S^{sigma_k}: S(theta_k - theta_l) on slots (l, l+1) for l = 1..k-1
        for (int l = 1; l < k; ++l) {
          const cplx* t = space.s_table(node[l - 1], node[k - 1]);
          std::size_t post = 1;
          for (int q = l + 1; q < n; ++q) post *= d;
          const std::size_t pre = dn / (post * dd);
          std::fill(w.begin(), w.end(), cplx(0.0));
          for (std::size_t p = 0; p < pre; ++p)
            for (int ab = 0; ab < dd; ++ab)
              for (int ce = 0; ce < dd; ++ce) {
                const cplx coef = t[ab * dd + ce];
                if (coef == cplx(0.0)) continue;
                const cplx* src = &v[(p * dd + ce) * post];
                cplx* dst = &w[(p * dd + ab) * post];
                for (std::size_t q = 0; q < post; ++q) dst[q] += coef * src[q];
              }
          v.swap(w);
        }
        for (std::size_t c = 0; c < dn; ++c) acc[c] += v[c];
      }
      // scatter into the level tensor
      for (std::size_t c = 0; c < dn; ++c) {
        std::size_t r = c;
        for (int l = n - 1; l >= 0; --l, r /= d) comp[l] = static_cast<int>(r % d);
        std::size_t dst = 0;
        for (int l = 0; l < n; ++l) dst = dst * s + static_cast<std::size_t>(node[l]) * d + comp[l];
        y[dst] = f * acc[c];
      }
    }
    out.set_level(n, std::move(y));
  }
  return out;
}

FockState annihilate_reflected_tcp(const CVector& phi, const FockState& psi) {
  return tcp(annihilate(tcp_one(*psi.space(), phi), tcp(psi)));
}

FockState create_reflected(const CVector& phi, const FockState& psi) {
  return tcp(create(tcp_one(*psi.space(), phi), tcp(psi)));
}

// ---- mixed commutator tensors ---------------------------------------------------

namespace {

int ipow(int b, int e) {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// S(theta'_j - theta_l) for every prime node j and state rapidity l.
std::vector<STensor> prime_table(const SMatrixModel& model, const RapidityQuadrature& prime,
                                 const std::vector<double>& theta) {
  std::vector<STensor> t;
  t.reserve(prime.nodes.size() * theta.size());
  for (double tp : prime.nodes)
    for (double th : theta) t.push_back(model.evaluate(tp - th));
  return t;
}

template <bool IsL>
Mat mixed_tensor(int d, const RapidityQuadrature& prime, const CVector& phi1, const CVector& phi2,
                 const std::vector<STensor>& table, int n) {
  const int dn = ipow(d, n);
  const int mp = prime.size();
  Mat out = Mat::Zero(dn, dn);
  std::vector<int> al(n), be(n);
  CVector u(d), nu(d);
  for (int row = 0; row < dn; ++row) {
    for (int l = n - 1, r = row; l >= 0; --l, r /= d) al[l] = r % d;
    for (int col = 0; col < dn; ++col) {
      for (int l = n - 1, r = col; l >= 0; --l, r /= d) be[l] = r % d;
      cplx sum = 0.0;
      for (int j = 0; j < mp; ++j) {
        const cplx* p1 = &phi1[static_cast<std::size_t>(j) * d];
        const cplx* p2 = &phi2[static_cast<std::size_t>(j) * d];
        for (int x = 0; x < d; ++x) u[x] = IsL ? std::conj(p2[x]) : p2[x];
        for (int l = 0; l < n; ++l) {
          const STensor& s = table[static_cast<std::size_t>(j) * n + l];
          for (int y = 0; y < d; ++y) {
            cplx a = 0.0;
            for (int x = 0; x < d; ++x) {
              // K: S^{al_l y}_{x be_l};  L: conj S^{be_l y}_{x al_l}
              a += u[x] * (IsL ? std::conj(s(be[l], y, x, al[l])) : s(al[l], y, x, be[l]));
            }
            nu[y] = a;
          }
          u.swap(nu);
        }
        cplx c = 0.0;
        for (int g = 0; g < d; ++g) c += u[g] * (IsL ? p1[g] : std::conj(p1[g]));
        sum += prime.weights[j] * c;
      }
      out(row, col) = IsL ? -sum : sum;
    }
  }
  return out;
}

template <bool IsL>
FockState apply_mixed(const RapidityQuadrature& prime, const CVector& phi1, const CVector& phi2,
                      const FockState& psi) {
  const FockSpace& space = *psi.space();
  const SMatrixModel& model = space.model();
  const int d = space.dim();
  const int m = space.grid_size();
  const std::size_t s = space.slots();
  if (phi1.size() != prime.nodes.size() * d || phi2.size() != prime.nodes.size() * d)
    throw MismatchError("mixed commutator: vectors must be sampled on the theta' rule");

  // S(theta'_j - theta_i) for all state nodes, reused across grid points
  const std::vector<STensor> full = prime_table(model, prime, space.quadrature().nodes);
  FockState out(psi.space());
  for (int n = 0; n <= psi.n_max(); ++n) {
    const Level& x = psi.level(n);
    if (x.empty()) continue;
    Level y(x.size(), cplx(0.0));
    const int dn = ipow(d, n);
    const std::size_t mn = static_cast<std::size_t>(ipow(m, n));
    std::vector<int> node(n), comp(n);
    std::vector<STensor> table(static_cast<std::size_t>(prime.size()) * n);
    std::vector<std::size_t> idx(dn);
    Eigen::VectorXcd v(dn);
    for (std::size_t g = 0; g < mn; ++g) {
      for (int l = n - 1, r = static_cast<int>(g); l >= 0; --l, r /= m) node[l] = r % m;
      for (int j = 0; j < prime.size(); ++j)
        for (int l = 0; l < n; ++l)
          table[static_cast<std::size_t>(j) * n + l] = full[static_cast<std::size_t>(j) * m + node[l]];
      for (int c = 0; c < dn; ++c) {
        for (int l = n - 1, r = c; l >= 0; --l, r /= d) comp[l] = r % d;
        std::size_t dst = 0;
        for (int l = 0; l < n; ++l) dst = dst * s + static_cast<std::size_t>(node[l]) * d + comp[l];
        idx[c] = dst;
        v[c] = x[dst];
      }
      const Mat k = mixed_tensor<IsL>(d, prime, phi1, phi2, table, n);
      const Eigen::VectorXcd r = k * v;
      for (int c = 0; c < dn; ++c) y[idx[c]] = r[c];
    }
    out.set_level(n, std::move(y));
  }
  return out;
}

}  // namespace

Mat mixed_k_tensor(const SMatrixModel& model, const RapidityQuadrature& prime, const CVector& phi1,
                   const CVector& phi2, const std::vector<double>& theta) {
  return mixed_tensor<false>(model.dim(), prime, phi1, phi2, prime_table(model, prime, theta),
                             static_cast<int>(theta.size()));
}

Mat mixed_l_tensor(const SMatrixModel& model, const RapidityQuadrature& prime, const CVector& phi1,
                   const CVector& phi2, const std::vector<double>& theta) {
  return mixed_tensor<true>(model.dim(), prime, phi1, phi2, prime_table(model, prime, theta),
                            static_cast<int>(theta.size()));
}

FockState apply_mixed_k(const RapidityQuadrature& prime, const CVector& phi1, const CVector& phi2,
                        const FockState& psi) {
  return apply_mixed<false>(prime, phi1, phi2, psi);
}

FockState apply_mixed_l(const RapidityQuadrature& prime, const CVector& phi1, const CVector& phi2,
                        const FockState& psi) {
  return apply_mixed<true>(prime, phi1, phi2, psi);
}

}  // namespace fsm
