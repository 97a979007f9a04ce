#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support.hpp"

using namespace fsm;

namespace {

Level random_level(const FockSpace& space, int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Level x(space.level_size(n));
  for (auto& v : x) v = cplx(g(rng), g(rng));
  return x;
}

double level_dist(const FockSpace& space, const Level& a, const Level& b, int n) {
  Level d = a;
  for (std::size_t t = 0; t < d.size(); ++t) d[t] -= b[t];
  return std::sqrt(std::abs(level_inner(space, d, d, n)));
}

double level_norm(const FockSpace& space, const Level& a, int n) {
  return std::sqrt(std::abs(level_inner(space, a, a, n)));
}

std::vector<Permutation> all_permutations(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Brute-force P_n: average of D_n(pi) over the whole group.
Level brute_symmetrize(const FockSpace& space, const Level& x, int n) {
  Level acc(x.size(), cplx(0.0));
  const auto perms = all_permutations(n);
  for (const auto& p : perms) {
    const Level y = apply_permutation(space, x, n, p);
    for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += y[t];
  }
  for (auto& v : acc) v /= static_cast<double>(perms.size());
  return acc;
}

FockSpacePtr on3_space(int m = 5, int n_max = 4) { return make_fock_space(make_on_sigma(3), m, 4.0, n_max); }

}  // namespace

TEST(Quadrature, GaussLegendreRule) {
  const auto q = RapidityQuadrature::gauss_legendre(16, 3.0);
  ASSERT_EQ(q.size(), 16);
  EXPECT_TRUE(std::is_sorted(q.nodes.begin(), q.nodes.end()));
  double w = 0.0, x4 = 0.0, x31 = 0.0;
  for (int i = 0; i < q.size(); ++i) {
    w += q.weights[i];
    x4 += q.weights[i] * std::pow(q.nodes[i], 4);
    x31 += q.weights[i] * std::pow(q.nodes[i], 31);
  }
  EXPECT_NEAR(w, 6.0, 1e-13);
  EXPECT_NEAR(x4, 2.0 * std::pow(3.0, 5) / 5.0, 1e-11);
  EXPECT_NEAR(x31, 0.0, 1e-9);
  const auto r = RapidityQuadrature::gauss_legendre(8, 1.0, 2.0);
  EXPECT_GT(r.nodes.front(), 1.0);
  EXPECT_LT(r.nodes.back(), 2.0);
}

TEST(Permutation, WordsRoundTrip) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : all_permutations(n)) {
      const auto w = decompose(p);
      EXPECT_EQ(from_word(n, w), p);
      // reduced: length equals the inversion count
      int inv = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) inv += p[i] > p[j];
      EXPECT_EQ(static_cast<int>(w.size()), inv);
    }
}

TEST(Permutation, SigmaAndInversion) {
  EXPECT_EQ(sigma_k(4, 3), (Permutation{3, 1, 2, 4}));
  EXPECT_EQ(sigma_k(4, 1), (Permutation{1, 2, 3, 4}));
  EXPECT_EQ(inversion(4), (Permutation{4, 3, 2, 1}));
  EXPECT_EQ(compose(Permutation{2, 1, 3}, Permutation{1, 3, 2}), (Permutation{2, 3, 1}));
  EXPECT_EQ(from_word(3, {2, 1}), sigma_k(3, 3));
}

TEST(Transposition, FreeBoseCaseIsSwap) {
  const auto space = make_fock_space(make_constant(1, ParticleSpectrum::uniform(2)), 4, 3.0, 3);
  std::mt19937_64 rng(1);
  const Level x = random_level(*space, 3, rng);
  const Level y = apply_transposition(*space, x, 3, 2);
  const std::size_t s = space->slots();
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b)
      for (std::size_t c = 0; c < s; ++c) ASSERT_EQ(y[(a * s + b) * s + c], x[(a * s + c) * s + b]);
}

TEST(Transposition, InvolutionAndBraid) {
  const auto space = on3_space(4, 3);
  std::mt19937_64 rng(2);
  const Level x = random_level(*space, 3, rng);
  const Level xx = apply_transposition(*space, apply_transposition(*space, x, 3, 1), 3, 1);
  EXPECT_LT(level_dist(*space, x, xx, 3) / level_norm(*space, x, 3), 1e-12);
  // tau1 tau2 tau1 = tau2 tau1 tau2
  const Level l = apply_word(*space, x, 3, {1, 2, 1});
  const Level r = apply_word(*space, x, 3, {2, 1, 2});
  EXPECT_LT(level_dist(*space, l, r, 3) / level_norm(*space, x, 3), 1e-12);
}

TEST(Representation, HomomorphismAndUnitarity) {
  const auto space = on3_space(4, 4);
  std::mt19937_64 rng(3);
  const int n = 4;
  const Level x = random_level(*space, n, rng);
  const Level z = random_level(*space, n, rng);
  const auto perms = all_permutations(n);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  for (int trial = 0; trial < 8; ++trial) {
    const Permutation& p = perms[pick(rng)];
    const Permutation& q = perms[pick(rng)];
    const Level lhs = apply_permutation(*space, x, n, compose(p, q));
    const Level rhs = apply_permutation(*space, apply_permutation(*space, x, n, q), n, p);
    EXPECT_LT(level_dist(*space, lhs, rhs, n) / level_norm(*space, x, n), 1e-10);
    const cplx a = level_inner(*space, apply_permutation(*space, x, n, p), apply_permutation(*space, z, n, p), n);
    EXPECT_LT(std::abs(a - level_inner(*space, x, z, n)), 1e-10 * level_norm(*space, x, n) * level_norm(*space, z, n));
  }
}

TEST(Representation, TensorFromWordMatchesSigmaClosedForm) {
  const auto m = make_on_sigma(3);
  const std::vector<double> th{-1.1, 0.3, 0.9, 2.2};
  for (int k = 1; k <= 4; ++k) {
    const Mat a = sigma_k_tensor(*m, k, th);
    const Mat b = permutation_tensor(*m, sigma_k(4, k), th);
    EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-11) << k;
  }
}

TEST(Representation, TensorMatchesLevelAction) {
  // (D(pi) psi)(theta) = S^pi(theta) psi(theta_pi) at a grid multi-index
  const auto space = on3_space(4, 3);
  std::mt19937_64 rng(4);
  const int n = 3, d = 3;
  const std::size_t s = space->slots();
  const Level x = random_level(*space, n, rng);
  const Permutation pi{3, 1, 2};
  const Level y = apply_permutation(*space, x, n, pi);
  const std::vector<int> node{2, 0, 3};
  std::vector<double> th;
  for (int i : node) th.push_back(space->node(i));
  const Mat t = permutation_tensor(space->model(), pi, th);
  for (int row = 0; row < 27; ++row) {
    const int al[3] = {row / 9, (row / 3) % 3, row % 3};
    cplx acc = 0.0;
    for (int col = 0; col < 27; ++col) {
      const int be[3] = {col / 9, (col / 3) % 3, col % 3};
      std::size_t idx = 0;
      for (int l = 0; l < n; ++l) idx = idx * s + node[pi[l] - 1] * d + be[l];
      acc += t(row, col) * x[idx];
    }
    std::size_t out = 0;
    for (int l = 0; l < n; ++l) out = out * s + node[l] * d + al[l];
    EXPECT_LT(std::abs(acc - y[out]), 1e-12);
  }
}

TEST(Projector, MatchesBruteForceAverage) {
  const auto space = on3_space(3, 4);
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 4; ++n) {
    const Level x = random_level(*space, n, rng);
    const Level a = symmetrize(*space, x, n);
    const Level b = brute_symmetrize(*space, x, n);
    EXPECT_LT(level_dist(*space, a, b, n) / level_norm(*space, x, n), 1e-12) << n;
  }
}

TEST(Projector, IdempotentSelfAdjointInvariant) {
  const auto space = on3_space(4, 4);
  std::mt19937_64 rng(6);
  for (int n = 1; n <= 4; ++n) {
    const Level x = random_level(*space, n, rng), z = random_level(*space, n, rng);
    const Level px = symmetrize(*space, x, n), pz = symmetrize(*space, z, n);
    const double nx = level_norm(*space, x, n), nz = level_norm(*space, z, n);
    EXPECT_LT(level_dist(*space, symmetrize(*space, px, n), px, n) / nx, 1e-10);
    EXPECT_LT(std::abs(level_inner(*space, px, z, n) - level_inner(*space, x, pz, n)) / (nx * nz), 1e-10);
    EXPECT_LT(symmetry_defect(*space, px, n), 1e-10);
  }
  EXPECT_THROW(symmetrize(*make_fock_space(make_sinh_gordon(1.0), 2, 3.0, 7), Level(128, 1.0), 7),
               TruncationError);
}

TEST(Symmetries, TranslationGroupLawAndUnitarity) {
  const auto space = make_fock_space(test::diagonal_model(), 5, 3.0, 3);
  std::mt19937_64 rng(7);
  const FockState psi = random_state(space, rng, 3);
  const std::array<double, 2> a{0.3, -0.7}, b{-1.1, 0.4};
  EXPECT_NEAR(norm(translate(psi, a)), 1.0, 1e-12);
  EXPECT_LT(norm_diff(translate(translate(psi, a), b), translate(psi, {a[0] + b[0], a[1] + b[1]})), 1e-12);
  EXPECT_LT(norm_diff(translate(translate(psi, a), {-a[0], -a[1]}), psi), 1e-12);
  EXPECT_LT(symmetry_defect(translate(psi, a)), 1e-10);
}

TEST(Symmetries, GaugeTransformCommutesWithSymmetrization) {
  const auto space = on3_space(4, 3);
  std::mt19937_64 rng(8);
  const FockState psi = random_state(space, rng, 3);
  const Mat g = space->spectrum().gauge_elements[0];
  const FockState v = gauge_transform(psi, g);
  EXPECT_NEAR(norm(v), 1.0, 1e-12);
  EXPECT_LT(symmetry_defect(v), 1e-10);
  EXPECT_LT(norm_diff(gauge_transform(v, g.adjoint()), psi), 1e-12);
}

TEST(Symmetries, TcpIsAntiunitaryInvolution) {
  const auto space = make_fock_space(test::diagonal_model(), 4, 3.0, 3);
  std::mt19937_64 rng(9);
  const FockState a = random_state(space, rng, 3), b = random_state(space, rng, 3);
  EXPECT_LT(norm_diff(tcp(tcp(a)), a), 1e-15);
  EXPECT_LT(std::abs(inner_product(tcp(a), tcp(b)) - std::conj(inner_product(a, b))), 1e-13);
  EXPECT_LT(symmetry_defect(tcp(a)), 1e-10);
}

TEST(Symmetries, TcpReversesSlots) {
  const auto space = on3_space(3, 2);
  const std::size_t s = space->slots();
  FockState psi(space);
  Level x(s * s, cplx(0.0));
  x[1 * s + 5] = cplx(0.0, 2.0);
  psi.set_level(2, x);
  const FockState j = tcp(psi);
  EXPECT_EQ(j.level(2)[5 * s + 1], cplx(0.0, -2.0));  // self-conjugate components
}

TEST(FockState, ArithmeticAndNumberNorms) {
  const auto space = on3_space(3, 3);
  std::mt19937_64 rng(10);
  const FockState a = random_state(space, rng, 3);
  FockState b = a;
  b *= 2.0;
  EXPECT_NEAR(norm(b - a), 1.0, 1e-13);
  EXPECT_NEAR(norm(a + a), 2.0, 1e-13);
  double nn = 0.0, n1 = 0.0;
  for (int n = 0; n <= 3; ++n) {
    const double ln = a.is_zero(n) ? 0.0 : std::abs(level_inner(*space, a.level(n), a.level(n), n));
    nn += n * ln;
    n1 += (n + 1) * ln;
  }
  EXPECT_NEAR(number_norm(a), std::sqrt(nn), 1e-13);
  EXPECT_NEAR(number_norm(a, 1), std::sqrt(n1), 1e-13);
  const FockState v = FockState::vacuum(space);
  EXPECT_NEAR(norm(v), 1.0, 0.0);
}
