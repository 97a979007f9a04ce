#pragma once

#include "fsm/fock.hpp"

namespace fsm {

// One-particle vectors are M*D samples phi^alpha(theta_i) at index i*D + alpha.
cplx one_inner(const FockSpace& space, const CVector& a, const CVector& b);
double one_norm(const FockSpace& space, const CVector& a);

// z(phi): left contraction of the first slot.
FockState annihilate(const CVector& phi, const FockState& psi);
// z^dagger(phi) through the sigma_k chain; throws TruncationError if the top
// level of psi is nonzero.
FockState create(const CVector& phi, const FockState& psi);

// z(phi)' by right contraction of the last slot.
FockState annihilate_reflected(const CVector& phi, const FockState& psi);
// z(phi)' = J z(J phi) J.
FockState annihilate_reflected_tcp(const CVector& phi, const FockState& psi);
// z^dagger(phi)' = J z^dagger(J phi) J.
FockState create_reflected(const CVector& phi, const FockState& psi);

enum class Relation {
  ZZ,           // z z exchange
  ZdZd,         // z^dagger z^dagger exchange
  ZZd,          // z z^dagger exchange with delta term
  ZdZ,          // sum_j z^dagger(e_j) z(e_j) = N
  ZZ_R,         // the four above for the reflected operators, S -> S'
  ZdZd_R,
  ZZd_R,
  ZdZ_R,
  MixedZZ,      // [z(phi1)', z(phi2)] = 0
  MixedZdZd,    // [z^dagger(phi1)', z^dagger(phi2)] = 0
  MixedZZd,     // [z(phi1)', z^dagger(phi2)] = K
  MixedZdZ,     // [z^dagger(phi1)', z(phi2)] = L
};

const char* relation_name(Relation r);
std::vector<Relation> all_relations();

// Norm of the deviation from the predicted relation on psi. psi must be
// symmetric with its top two levels zero.
double commutator_defect(Relation kind, const CVector& phi1, const CVector& phi2, const FockState& psi);

// ---- mixed commutator tensors --------------------------------------------
//
// phi1/phi2 are sampled on `prime` (the theta' rule), which may differ from
// the state grid. theta are the n state rapidities.

Mat mixed_k_tensor(const SMatrixModel& model, const RapidityQuadrature& prime, const CVector& phi1,
                   const CVector& phi2, const std::vector<double>& theta);
Mat mixed_l_tensor(const SMatrixModel& model, const RapidityQuadrature& prime, const CVector& phi1,
                   const CVector& phi2, const std::vector<double>& theta);

// Multiplication by K_n (or L_n) on every level of psi.
FockState apply_mixed_k(const RapidityQuadrature& prime, const CVector& phi1, const CVector& phi2,
                        const FockState& psi);
FockState apply_mixed_l(const RapidityQuadrature& prime, const CVector& phi1, const CVector& phi2,
                        const FockState& psi);

}  // namespace fsm
