#pragma once

#include <array>
#include <iosfwd>
#include <memory>
#include <random>

#include "fsm/quadrature.hpp"
#include "fsm/smatrix.hpp"

namespace fsm {

// Grid, model and truncation shared by all states. Precomputes the table
// S(theta_j - theta_i) at node differences.
class FockSpace {
 public:
  FockSpace(ModelPtr model, RapidityQuadrature quadrature, int n_max);

  const SMatrixModel& model() const { return *model_; }
  const ModelPtr& model_ptr() const { return model_; }
  const RapidityQuadrature& quadrature() const { return quad_; }
  const ParticleSpectrum& spectrum() const { return model_->spectrum(); }
  int n_max() const { return n_max_; }
  int dim() const { return dim_; }
  int grid_size() const { return m_; }
  int slots() const { return m_ * dim_; }  // one-particle index s = i*D + alpha
  std::size_t level_size(int n) const;

  // S(theta_j - theta_i) as a D^2 x D^2 row-major block.
  const cplx* s_table(int i, int j) const { return &table_[(static_cast<std::size_t>(i) * m_ + j) * dd_ * dd_]; }
  double weight(int i) const { return quad_.weights[i]; }
  double node(int i) const { return quad_.nodes[i]; }

 private:
  ModelPtr model_;
  RapidityQuadrature quad_;
  int n_max_;
  int dim_;
  int m_;
  int dd_;
  CVector table_;
};

using FockSpacePtr = std::shared_ptr<const FockSpace>;
FockSpacePtr make_fock_space(ModelPtr model, int m = 16, double theta_max = 5.0, int n_max = 4);

// Level n is a dense (M D)^n tensor, slot 1 most significant. An empty
// vector stands for an identically zero level.
using Level = CVector;

class FockState {
 public:
  explicit FockState(FockSpacePtr space);

  const FockSpacePtr& space() const { return space_; }
  int n_max() const { return space_->n_max(); }

  bool is_zero(int n) const { return levels_[n].empty(); }
  const Level& level(int n) const { return levels_[n]; }
  Level& level(int n) { return levels_[n]; }
  // Allocates (zero-filled) when empty.
  Level& ensure(int n);
  void set_level(int n, Level data);
  void clear_level(int n) { levels_[n].clear(); }

  static FockState vacuum(FockSpacePtr space);
  // One-particle vector placed at level 1.
  static FockState one_particle(FockSpacePtr space, const CVector& phi);

  FockState& operator+=(const FockState& o);
  FockState& operator-=(const FockState& o);
  FockState& operator*=(cplx c);

 private:
  FockSpacePtr space_;
  std::vector<Level> levels_;
};

FockState operator+(FockState a, const FockState& b);
FockState operator-(FockState a, const FockState& b);
FockState operator*(cplx c, FockState a);

// ---- single-level kernels --------------------------------------------------

// D_{n,k}, k in 1..n-1.
Level apply_transposition(const FockSpace& space, const Level& psi, int n, int k);

// One-line notation, 1-based: pi = {pi(1), ..., pi(n)}.
using Permutation = std::vector<int>;
Permutation compose(const Permutation& pi, const Permutation& rho);  // (pi rho)(j) = pi(rho(j))
Permutation sigma_k(int n, int k);                                   // tau_{k-1} ... tau_1
Permutation inversion(int n);                                        // iota(k) = n+1-k
// Word (i_1, ..., i_r) with pi = tau_{i_1} ... tau_{i_r}.
std::vector<int> decompose(const Permutation& pi);
Permutation from_word(int n, const std::vector<int>& word);

// D_n(pi) through the word returned by decompose(pi).
Level apply_permutation(const FockSpace& space, const Level& psi, int n, const Permutation& pi);
Level apply_word(const FockSpace& space, const Level& psi, int n, const std::vector<int>& word);

// S_n^pi(theta) as a D^n x D^n matrix at real rapidities.
Mat permutation_tensor(const SMatrixModel& model, const Permutation& pi, const std::vector<double>& theta);
Mat permutation_tensor_word(const SMatrixModel& model, int n, const std::vector<int>& word,
                            const std::vector<double>& theta);
// S_n^{sigma_k} from the transfer-matrix product over the xi indices.
Mat sigma_k_tensor(const SMatrixModel& model, int k, const std::vector<double>& theta);

// P_n via the coset recursion; throws TruncationError for n > 6.
Level symmetrize(const FockSpace& space, const Level& psi, int n);
FockState symmetrize(const FockState& psi);

// Max over k of |D_{n,k} psi - psi|, relative to the level norm.
double symmetry_defect(const FockSpace& space, const Level& psi, int n);
double symmetry_defect(const FockState& psi);

// ---- inner products and symmetry actions ----------------------------------

cplx level_inner(const FockSpace& space, const Level& a, const Level& b, int n);
cplx inner_product(const FockState& a, const FockState& b);
double norm(const FockState& a);
double norm_diff(const FockState& a, const FockState& b);
// |N^{1/2} psi| and |(N+1)^{1/2} psi|.
double number_norm(const FockState& a, int shift = 0);

FockState translate(const FockState& psi, std::array<double, 2> a);
FockState gauge_transform(const FockState& psi, const Mat& g);
FockState tcp(const FockState& psi);

// Level-one versions acting on M*D vectors.
CVector translate_one(const FockSpace& space, const CVector& phi, std::array<double, 2> a);
CVector gauge_one(const FockSpace& space, const CVector& phi, const Mat& g);
CVector tcp_one(const FockSpace& space, const CVector& phi);

// Minkowski product p_m(theta) . a with p = m (cosh, sinh), a = (a0, a1).
double momentum_dot(double mass, double theta, std::array<double, 2> a);

// Random symmetric state with Gaussian entries on levels 0..top.
FockState random_state(FockSpacePtr space, std::mt19937_64& rng, int top);
CVector random_one_particle(const FockSpace& space, std::mt19937_64& rng);

// Tensor product at one level: (a (x) b)(s, t) = a(s) b(t).
Level tensor(const Level& a, const Level& b);

// ---- serialization --------------------------------------------------------

std::string to_json(const FockState& psi);
FockState from_json(FockSpacePtr space, const std::string& text);
void write_binary(std::ostream& os, const FockState& psi);
FockState read_binary(FockSpacePtr space, std::istream& is);

}  // namespace fsm
