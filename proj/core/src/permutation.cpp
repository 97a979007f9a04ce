#include <algorithm>
#include <numeric>

#include "fsm/fock.hpp"

namespace fsm {

Permutation compose(const Permutation& pi, const Permutation& rho) {
  Permutation out(pi.size());
  for (std::size_t j = 0; j < pi.size(); ++j) out[j] = pi[rho[j] - 1];
  return out;
}

Permutation sigma_k(int n, int k) {
  if (k < 1 || k > n) throw std::out_of_range("sigma_k: k out of range");
  Permutation p(n);
  p[0] = k;
  for (int j = 2; j <= k; ++j) p[j - 1] = j - 1;
  for (int j = k + 1; j <= n; ++j) p[j - 1] = j;
  return p;
}

Permutation inversion(int n) {
  Permutation p(n);
  for (int k = 1; k <= n; ++k) p[k - 1] = n + 1 - k;
  return p;
}

std::vector<int> decompose(const Permutation& pi) {
  Permutation p = pi;
  std::vector<int> pushed;
  for (;;) {
    std::size_t k = 0;
    while (k + 1 < p.size() && p[k] < p[k + 1]) ++k;
    if (k + 1 >= p.size()) break;
    std::swap(p[k], p[k + 1]);  // p <- p tau_{k+1}
    pushed.push_back(static_cast<int>(k) + 1);
  }
  std::reverse(pushed.begin(), pushed.end());
  return pushed;
}

Permutation from_word(int n, const std::vector<int>& word) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  for (int i : word) std::swap(p[i - 1], p[i]);
  return p;
}

Level apply_word(const FockSpace& space, const Level& psi, int n, const std::vector<int>& word) {
  Level cur = psi;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply_transposition(space, cur, n, *it);
  return cur;
}

Level apply_permutation(const FockSpace& space, const Level& psi, int n, const Permutation& pi) {
  if (static_cast<int>(pi.size()) != n) throw std::invalid_argument("apply_permutation: size mismatch");
  return apply_word(space, psi, n, decompose(pi));
}

namespace {

int ipow(int b, int e) {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// S(x) acting on slots k, k+1 of an n-fold tensor product.
Mat embed_two_body(const Mat& s, int d, int n, int k) {
  const int pre = ipow(d, k - 1);
  const int post = ipow(d, n - k - 1);
  const int dim = pre * d * d * post;
  Mat out = Mat::Zero(dim, dim);
  for (int p = 0; p < pre; ++p)
    for (int q = 0; q < post; ++q)
      for (int r = 0; r < d * d; ++r)
        for (int c = 0; c < d * d; ++c) out((p * d * d + r) * post + q, (p * d * d + c) * post + q) = s(r, c);
  return out;
}

}  // namespace

Mat permutation_tensor_word(const SMatrixModel& model, int n, const std::vector<int>& word,
                            const std::vector<double>& theta) {
  const int d = model.dim();
  if (static_cast<int>(theta.size()) != n) throw std::invalid_argument("permutation_tensor: theta size");
  Mat acc = Mat::Identity(ipow(d, n), ipow(d, n));
  std::vector<double> th = theta;
  // S^{tau_i rho}(t) = S^{tau_i}(t) S^{rho}(t_{tau_i})
  for (int i : word) {
    const Mat s = model.evaluate(th[i] - th[i - 1]).matrix();
    acc = acc * embed_two_body(s, d, n, i);
    std::swap(th[i - 1], th[i]);
  }
  return acc;
}

Mat permutation_tensor(const SMatrixModel& model, const Permutation& pi, const std::vector<double>& theta) {
  return permutation_tensor_word(model, static_cast<int>(pi.size()), decompose(pi), theta);
}

Mat sigma_k_tensor(const SMatrixModel& model, int k, const std::vector<double>& theta) {
  const int n = static_cast<int>(theta.size());
  if (k < 1 || k > n) throw std::out_of_range("sigma_k_tensor: k out of range");
  const int d = model.dim();
  const int dn = ipow(d, n);
  std::vector<STensor> s;
  for (int l = 1; l < k; ++l) s.push_back(model.evaluate(theta[k - 1] - theta[l - 1]));

  Mat out = Mat::Zero(dn, dn);
  std::vector<int> al(n), be(n);
  Mat chain(d, d), t(d, d);
  for (int row = 0; row < dn; ++row) {
    for (int l = n - 1, r = row; l >= 0; --l, r /= d) al[l] = r % d;
    for (int col = 0; col < dn; ++col) {
      int c = col;
      for (int l = n - 1; l >= 0; --l, c /= d) be[l] = c % d;
      bool spectator = true;
      for (int l = k; l < n && spectator; ++l) spectator = al[l] == be[l];
      if (!spectator) continue;
      chain = Mat::Identity(d, d);
      for (int l = 1; l < k; ++l) {
        // T_l[xi_l][xi_{l+1}] = S^{al_l xi_{l+1}}_{xi_l be_{l+1}}
        for (int x = 0; x < d; ++x)
          for (int y = 0; y < d; ++y) t(x, y) = s[l - 1](al[l - 1], y, x, be[l]);
        chain = chain * t;
      }
      out(row, col) = chain(be[0], al[k - 1]);
    }
  }
  return out;
}

}  // namespace fsm
