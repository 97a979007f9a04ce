#pragma once

#include <iosfwd>

#include "fsm/fields.hpp"

namespace fsm {

class OrderingError : public std::invalid_argument {
 public:
  explicit OrderingError(const std::string& what) : std::invalid_argument(what) {}
};

// MomentumBump packets whose f+ supports are ordered in rapidity. Ordering
// is the rapidity-interval form of the velocity-support relation: interval
// k+1 starts at least `margin` after interval k ends.
struct OrderedPacketList {
  std::vector<TestFunction> packets;
  std::vector<std::pair<double, double>> intervals;
  double margin = 0.0;

  // Reads the intervals off the packets; does not validate.
  static OrderedPacketList from_packets(std::vector<TestFunction> packets, double margin);
  bool ordered() const;
  // Throws OrderingError.
  void validate() const;
  int size() const { return static_cast<int>(packets.size()); }
};

enum class StatePath { Projector, FieldChain };

// sqrt(n!) P_n(f_1+ (x) ... (x) f_n+), or phi(f_1) ... phi(f_n) Omega.
FockState out_state(FockSpacePtr space, const OrderedPacketList& packets, StatePath path = StatePath::Projector);
// sqrt(n!) P_n(f_n+ (x) ... (x) f_1+), or phi(f_n) ... phi(f_1) Omega.
FockState in_state(FockSpacePtr space, const OrderedPacketList& packets, StatePath path = StatePath::Projector);

// Plain Bose symmetrization over all slot permutations.
Level bose_symmetrize(const FockSpace& space, const Level& psi, int n);

struct MollerNorms {
  double norm_sym = 0.0;  // |P_n^+ (x) f_k+|
  double norm_s = 0.0;    // |P_n (x) f_k+|
};
// Does not require the ordering; overlapping supports are allowed.
MollerNorms moller_norm_check(const FockSpace& space, const OrderedPacketList& packets);

// S_n(theta) from the sorted-argument S_n^iota, n <= 4. Row multi-index
// alpha (out), column multi-index beta (in), slot 1 most significant.
// Ties take the theta_i <= theta_j branch.
Mat scattering_tensor(const SMatrixModel& model, const std::vector<double>& theta);

// | <out(A), in(B)> - n! <P^+ A, S_n P^+ B_rev> | / prod |a_k+| |b_k+|.
// Throws std::invalid_argument when a packet vanishes on the grid.
double smatrix_consistency(FockSpacePtr space, const OrderedPacketList& a, const OrderedPacketList& b);

// Rows: i_1..i_n, theta_1..theta_n, in_1..in_n, out_1..out_n, re, im over all
// grid multi-indices of `space`.
void write_amplitude_csv(std::ostream& os, const FockSpace& space, int n);

}  // namespace fsm
