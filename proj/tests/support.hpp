#pragma once

#include <random>

#include "fsm/scattering.hpp"

namespace fsm::test {

// Two species with masses 1 and 1.5, self-conjugate; sinh-Gordon phases on
// the diagonal and -1 between species.
inline ModelPtr diagonal_model() {
  ParticleSpectrum sp = ParticleSpectrum::uniform(2);
  sp.masses = {1.0, 1.5};
  sp.charge_labels = {0, 1};
  const double s1 = std::sin(sinh_gordon_b(1.0)), s2 = std::sin(sinh_gordon_b(2.0));
  auto sg = [](double sb) {
    return ScalarFunction([sb](cplx t) { return (std::sinh(t) - kI * sb) / (std::sinh(t) + kI * sb); });
  };
  auto minus = ScalarFunction([](cplx) { return cplx(-1.0); });
  return make_diagonal(sp, {{sg(s1), minus}, {minus, sg(s2)}});
}

inline ModelPtr rational_model() {
  return make_scalar_rational(1, 0.5, {cplx(0.4, kPi / 2), cplx(-0.4, kPi / 2)});
}

inline CVector unit_weights(int d) { return CVector(d, cplx(1.0)); }

inline CVector random_weights(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CVector w(d);
  for (auto& x : w) x = cplx(g(rng), g(rng));
  return w;
}

inline CVector normalized_one_particle(const FockSpace& space, std::mt19937_64& rng) {
  CVector v = random_one_particle(space, rng);
  const double n = one_norm(space, v);
  for (auto& x : v) x /= n;
  return v;
}

// Random symmetric unit state with the top two levels empty.
inline FockState zf_state(const FockSpacePtr& space, std::mt19937_64& rng) {
  return random_state(space, rng, space->n_max() - 2);
}

}  // namespace fsm::test
