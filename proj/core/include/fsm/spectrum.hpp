#pragma once

#include <cstdint>

#include "fsm/types.hpp"

namespace fsm {

// Single-particle data: component masses, charge conjugation, sampled
// gauge group elements and sector labels.
struct ParticleSpectrum {
  int dim = 1;
  std::vector<double> masses;
  std::vector<int> conjugation;  // 0-based involution alpha -> alpha-bar
  std::vector<Mat> gauge_elements;
  std::vector<int> charge_labels;

  // Throws std::invalid_argument when an invariant fails.
  void validate() const;

  int bar(int alpha) const { return conjugation[alpha]; }

  static ParticleSpectrum uniform(int dim, double mass = 1.0);
};

// Haar-distributed O(n) element from a seeded stream.
Mat random_orthogonal(int n, std::uint64_t seed);

}  // namespace fsm
