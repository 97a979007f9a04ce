#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace fsm {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;
using Mat = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

// Thrown when a Gamma argument hits (or comes within 1e-9 of) a pole.
class PoleError : public std::domain_error {
 public:
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

class StripError : public std::domain_error {
 public:
  explicit StripError(const std::string& what) : std::domain_error(what) {}
};

class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

class MismatchError : public std::invalid_argument {
 public:
  explicit MismatchError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace fsm
