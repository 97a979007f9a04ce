#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "support.hpp"

using namespace fsm;

TEST(FockIO, JsonRoundTripIsExact) {
  const auto space = make_fock_space(make_on_sigma(3), 3, 4.0, 3);
  std::mt19937_64 rng(1);
  FockState psi = random_state(space, rng, 2);
  const FockState back = from_json(space, to_json(psi));
  for (int n = 0; n <= 3; ++n) {
    ASSERT_EQ(back.is_zero(n), psi.is_zero(n)) << n;
    EXPECT_EQ(back.level(n), psi.level(n)) << n;
  }
}

TEST(FockIO, BinaryRoundTripIsExact) {
  const auto space = make_fock_space(test::diagonal_model(), 4, 3.0, 3);
  std::mt19937_64 rng(2);
  const FockState psi = random_state(space, rng, 3);
  std::stringstream ss;
  write_binary(ss, psi);
  const FockState back = read_binary(space, ss);
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(back.level(n), psi.level(n)) << n;
}

TEST(FockIO, ShapeMismatchIsRejected) {
  const auto a = make_fock_space(make_on_sigma(3), 3, 4.0, 2);
  const auto b = make_fock_space(make_on_sigma(3), 4, 4.0, 2);
  std::mt19937_64 rng(3);
  const FockState psi = random_state(a, rng, 2);
  EXPECT_THROW(from_json(b, to_json(psi)), MismatchError);
  std::stringstream ss;
  write_binary(ss, psi);
  EXPECT_THROW(read_binary(b, ss), MismatchError);
}

TEST(FockIO, CorruptInputIsRejected) {
  const auto space = make_fock_space(make_sinh_gordon(1.0), 3, 4.0, 2);
  std::stringstream bad("NOTASTATE");
  EXPECT_THROW(read_binary(space, bad), std::runtime_error);
  EXPECT_THROW(from_json(space, R"({"format":"other"})"), std::runtime_error);
  std::mt19937_64 rng(4);
  std::stringstream ss;
  write_binary(ss, random_state(space, rng, 2));
  std::string cut = ss.str();
  cut.resize(cut.size() - 5);
  std::stringstream tr(cut);
  EXPECT_THROW(read_binary(space, tr), std::runtime_error);
}
