#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace fsm;

namespace {

struct ZFCase {
  const char* label;
  ModelPtr model;
};

std::vector<ZFCase> cases() {
  return {{"onsigma3", make_on_sigma(3)}, {"sinh_gordon1", make_sinh_gordon(1.0)}};
}

FockSpacePtr zf_space(const ModelPtr& m) { return make_fock_space(m, m->dim() > 1 ? 4 : 6, 4.0, 5); }

}  // namespace

TEST(ZF, AnnihilatorIsAdjointOfCreator) {
  for (const auto& c : cases()) {
    const auto space = zf_space(c.model);
    std::mt19937_64 rng(1);
    for (int k = 0; k < 5; ++k) {
      const CVector phi = test::normalized_one_particle(*space, rng);
      const FockState psi = test::zf_state(space, rng);
      const FockState chi = random_state(space, rng, space->n_max() - 1);
      const cplx a = inner_product(annihilate(phi, chi), psi);
      const cplx b = inner_product(chi, create(phi, psi));
      EXPECT_LT(std::abs(a - b), 1e-10) << c.label;
    }
  }
}

TEST(ZF, NumberBounds) {
  for (const auto& c : cases()) {
    const auto space = zf_space(c.model);
    std::mt19937_64 rng(2);
    for (int k = 0; k < 5; ++k) {
      const CVector phi = test::normalized_one_particle(*space, rng);
      const FockState psi = test::zf_state(space, rng);
      EXPECT_LE(norm(annihilate(phi, psi)), number_norm(psi) * (1.0 + 1e-12)) << c.label;
      EXPECT_LE(norm(create(phi, psi)), number_norm(psi, 1) * (1.0 + 1e-12)) << c.label;
    }
  }
}

TEST(ZF, CreatorRejectsFullTopLevel) {
  const auto space = make_fock_space(make_on_sigma(3), 3, 4.0, 2);
  std::mt19937_64 rng(3);
  const FockState psi = random_state(space, rng, 2);
  EXPECT_THROW(create(random_one_particle(*space, rng), psi), TruncationError);
  EXPECT_THROW(create_reflected(random_one_particle(*space, rng), psi), TruncationError);
}

TEST(ZF, VacuumIsAnnihilated) {
  const auto space = make_fock_space(make_on_sigma(3), 4, 4.0, 3);
  std::mt19937_64 rng(4);
  const CVector phi = random_one_particle(*space, rng);
  const FockState omega = FockState::vacuum(space);
  EXPECT_EQ(norm(annihilate(phi, omega)), 0.0);
  EXPECT_EQ(norm(annihilate_reflected(phi, omega)), 0.0);
  const FockState one = create(phi, omega);
  EXPECT_EQ(one.level(1), phi);
}

TEST(ZF, AllRelationsHold) {
  for (const auto& c : cases()) {
    const auto space = zf_space(c.model);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 4; ++k) {
      const CVector p1 = test::normalized_one_particle(*space, rng);
      const CVector p2 = test::normalized_one_particle(*space, rng);
      const FockState psi = test::zf_state(space, rng);
      for (Relation r : all_relations())
        EXPECT_LT(commutator_defect(r, p1, p2, psi), 1e-10) << c.label << " " << relation_name(r);
    }
  }
}

TEST(ZF, FreeBoseAndFermiCommutators) {
  for (int eps : {1, -1}) {
    const auto space = make_fock_space(make_constant(eps, ParticleSpectrum::uniform(2)), 4, 3.0, 4);
    std::mt19937_64 rng(6);
    const CVector p1 = random_one_particle(*space, rng), p2 = random_one_particle(*space, rng);
    const FockState psi = random_state(space, rng, 2);
    FockState lhs = annihilate(p1, create(p2, psi));
    FockState rhs = create(p2, annihilate(p1, psi));
    rhs *= double(eps);
    const FockState want = one_inner(*space, p1, p2) * psi;
    EXPECT_LT(norm_diff(lhs - rhs, want), 1e-12) << eps;
  }
}

TEST(ZF, ReflectedAnnihilatorPathsAgree) {
  for (const auto& c : cases()) {
    const auto space = zf_space(c.model);
    std::mt19937_64 rng(7);
    const CVector phi = random_one_particle(*space, rng);
    const FockState psi = random_state(space, rng, 4);
    EXPECT_LT(norm_diff(annihilate_reflected(phi, psi), annihilate_reflected_tcp(phi, psi)), 1e-11) << c.label;
  }
}

TEST(ZF, ReflectedOperatorsAreAdjoint) {
  const auto space = zf_space(make_on_sigma(3));
  std::mt19937_64 rng(8);
  const CVector phi = random_one_particle(*space, rng);
  const FockState psi = test::zf_state(space, rng);
  const FockState chi = random_state(space, rng, space->n_max() - 1);
  EXPECT_LT(std::abs(inner_product(annihilate_reflected(phi, chi), psi) -
                     inner_product(chi, create_reflected(phi, psi))),
            1e-10);
}

TEST(Mixed, ScalarCaseIsInnerProduct) {
  const auto m = make_on_sigma(3);
  const auto space = zf_space(m);
  std::mt19937_64 rng(9);
  const CVector p1 = random_one_particle(*space, rng), p2 = random_one_particle(*space, rng);
  const Mat k0 = mixed_k_tensor(*m, space->quadrature(), p1, p2, {});
  ASSERT_EQ(k0.rows(), 1);
  EXPECT_LT(std::abs(k0(0, 0) - one_inner(*space, p1, p2)), 1e-11);
}

TEST(Mixed, LIsMinusKAdjoint) {
  const auto m = make_on_sigma(3);
  const auto q = RapidityQuadrature::gauss_legendre(12, 4.0);
  const auto space = make_fock_space(m, 12, 4.0, 1);
  std::mt19937_64 rng(10);
  const CVector p1 = random_one_particle(*space, rng), p2 = random_one_particle(*space, rng);
  for (const std::vector<double>& th : {std::vector<double>{0.4}, {-0.3, 1.2}, {-1.0, 0.2, 0.9}}) {
    const Mat k = mixed_k_tensor(*m, q, p1, p2, th);
    const Mat l = mixed_l_tensor(*m, q, p1, p2, th);
    EXPECT_LT((l + k.adjoint()).cwiseAbs().maxCoeff(), 1e-12) << th.size();
  }
}

TEST(Mixed, FreeBoseModelIsLocalAtLevelZero) {
  // For S = flip the mixed commutators vanish up to the scalar part.
  const auto m = make_constant(1, ParticleSpectrum::uniform(1));
  const auto q = RapidityQuadrature::gauss_legendre(10, 3.0);
  const auto space = make_fock_space(m, 10, 3.0, 1);
  std::mt19937_64 rng(11);
  const CVector p1 = random_one_particle(*space, rng), p2 = random_one_particle(*space, rng);
  const Mat k = mixed_k_tensor(*m, q, p1, p2, {0.3, -0.5});
  EXPECT_LT(std::abs(k(0, 0) - one_inner(*space, p1, p2)), 1e-12);
}
