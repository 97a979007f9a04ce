#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "fsm/smatrix.hpp"

namespace fsmcheck {

// Bad input; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string model = "onsigma";
  int n = 3;        // O(N)
  int epsilon = 1;  // constant and rational models
  double g = 1.0;   // sinh-Gordon coupling
  double a = 0.5;   // rational exponent
  std::string zeros = "0.4,1.5707963267948966;-0.4,1.5707963267948966";
  double theta_max = 4.0;
  int nodes = 8;
  int nmax = 4;
  int samples = 100;
  int states = 5;
  std::uint64_t seed = 1;
  std::map<std::string, double> tol{
      {"axioms", 1e-9}, {"fock", 1e-10}, {"zf", 1e-10}, {"locality", 1e-5}, {"scattering", 1e-8}};
  std::string out;
  std::string csv;
  // diagonal model and wedge geometry keys, kept verbatim
  std::map<std::string, std::string> extra;

  void validate() const;
};

// Flat "key = value" lines; '#' starts a comment.
std::map<std::string, std::string> read_key_values(const std::string& path);
void apply_key_values(RunConfig& cfg, const std::map<std::string, std::string>& kv);

// Throws ConfigError on malformed descriptors; fsm::DiagonalViolation
// propagates so the caller can report it as a failed check.
fsm::ModelPtr build_model(const RunConfig& cfg);

}  // namespace fsmcheck
