#include <doctest.h>

#include "msp/bseries.hpp"

using namespace msp;

TEST_CASE("series power components") {
  CHECK(b_power_component(5, 0) == BPoly::constant(1));
  CHECK(b_power_component(0, 0) == BPoly::constant(1));
  CHECK(b_power_component(1, 7) == BPoly::mono(BMono::b(7)));
  // weight-2 part of (1 + b1 + b2 + ...)^2
  BPoly sq = b_power_component(2, 2);
  CHECK(sq.coeff(BMono::b(2)) == 2);
  CHECK(sq.coeff(BMono::b(1, 2)) == 1);
  // and of the cube
  BPoly cube = b_power_component(3, 3);
  CHECK(cube.coeff(BMono::b(3)) == 3);
  CHECK(cube.coeff(BMono::b(1) * BMono::b(2)) == 6);
  CHECK(cube.coeff(BMono::b(1, 3)) == 1);
}

TEST_CASE("conjugation components") {
  CHECK(chi_component(1, 1) == BPoly::mono(BMono::b(1), -1));
  for (unsigned t = 1; t <= 6; ++t) CHECK(chi_component(t, 0) == BPoly::constant(-1));
  // chi(B)^1_2 = 2 b1^2 - b2
  BPoly x12 = chi_component(1, 2);
  CHECK(x12.coeff(BMono::b(1, 2)) == 2);
  CHECK(x12.coeff(BMono::b(2)) == -1);
  // chi(B)^2_2 = 5 b1^2 - 2 b2
  BPoly x22 = chi_component(2, 2);
  CHECK(x22.coeff(BMono::b(1, 2)) == 5);
  CHECK(x22.coeff(BMono::b(2)) == -2);
}

TEST_CASE("coefficient extraction matches the chain sums") {
  // the identity driving everything: [b_k^m] chi(B)^{2n-km}_{km} = alpha^n_{m;k}
  for (long n = 1; n <= 8; ++n)
    for (long k = 1; k <= 10; ++k)
      for (long m = 1; m <= 10; ++m) {
        if (m * k > 10 || (m * k) % 2 != 0 || m * k >= 2 * n - 1) continue;
        BigInt lhs = chi_component(unsigned(2 * n - k * m), unsigned(k * m))
                         .coeff(BMono::b(uint32_t(k), uint32_t(m)));
        auto rhs = alpha_bruteforce({n, m, k});
        REQUIRE(std::holds_alternative<BigInt>(rhs));
        CHECK(lhs == std::get<BigInt>(rhs));
      }
}

TEST_CASE("operation index parsing") {
  CHECK(OpIndex::parse("2,2,2") == OpIndex::repeated(2, 3));
  CHECK(OpIndex::parse("b2^3") == OpIndex::repeated(2, 3));
  OpIndex mixed = OpIndex::parse("b3^1*b2^4");
  CHECK(mixed.weight() == 11);
  CHECK(mixed.parts() == std::vector<uint32_t>({2, 2, 2, 2, 3}));
  CHECK(OpIndex::parse("5").str() == "5");
  CHECK_THROWS_AS(OpIndex::parse("2,,3"), std::invalid_argument);
  CHECK_THROWS_AS(OpIndex::parse("0"), std::invalid_argument);
}

TEST_CASE("expansion coefficients of h(Phi_m)") {
  for (unsigned m = 1; m <= 8; ++m) {
    // empty index: the identity operation
    CHECK(s_on_phi(OpIndex::identity(), m) == PhiVector::phi(int(m)));
    // single top-weight generator lands on theta_1
    CHECK(s_on_phi(OpIndex::repeated(2 * m - 1, 1), m) == PhiVector::theta1());
    // b_{2j} lands on Phi_{m-j} with coefficient 1
    for (unsigned j = 1; j < m; ++j)
      CHECK(s_on_phi(OpIndex::repeated(2 * j, 1), m) == PhiVector::phi(int(m - j)));
  }
  // weight exceeding every slot
  CHECK(s_on_phi(OpIndex::repeated(99, 1), 2) == PhiVector::zero());
  // S_{2,2} Phi_9 = Phi_7
  CHECK(s_on_phi(OpIndex::repeated(2, 2), 9) == PhiVector::phi(7));
}

TEST_CASE("repeated-index values agree with the coefficient dispatcher") {
  for (long n = 1; n <= 10; ++n)
    for (long k = 1; k <= 12; ++k)
      for (long m = 1; m <= 12; ++m) {
        if (m * k > 12) continue;
        CHECK(s_on_phi(OpIndex::repeated(uint32_t(k), uint32_t(m)), unsigned(n)) ==
              s_repeated_phi(n, k, m));
      }
}

TEST_CASE("kochman_h truncated mapping") {
  auto h3 = kochman_h(3, 6);
  // the identity coefficient
  CHECK(h3.at(BMono::one()).at(3) == 1);
  // b_2 multiplies Phi_2 with coefficient congruent to 1
  auto it = h3.find(BMono::b(2));
  REQUIRE(it != h3.end());
  CHECK(it->second.count(2));
  CHECK(it->second.at(2) % 2 != 0);
}
