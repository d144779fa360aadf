#include <doctest.h>

#include <random>

#include "msp/mass.hpp"

using namespace msp;

namespace {
const Registry kReg;
Poly P(const char* s) { return parse_poly(s); }
}  // namespace

TEST_CASE("differential on generators") {
  CHECK(d1_generator(GenId::h0(), kReg).is_zero());
  CHECK(d1_generator(GenId::u(3), kReg).is_zero());
  CHECK(d1_generator(GenId::h(2), kReg) == P("h0*u2"));
  CHECK(d1_generator(GenId::c(6), kReg).is_zero());
  CHECK(d1_generator(GenId::c(10), kReg).is_zero());
  CHECK(d1_generator(GenId::c(5), kReg) == P("u2*h3 + u3*h2"));
  CHECK(d1_generator(GenId::c(2), kReg) == P("u1*h2 + u2*h1"));
  CHECK(d1_generator(GenId::c(8), kReg) == P("u1*h4 + u4*h1"));
  // the hatted-product sum for c13 = c{2,3,4}
  CHECK(d1_generator(GenId::c(13), kReg) ==
        P("u2*h3*c8 + u3*h2*c8 + u2*h4*c4 + u4*h2*c4 + u3*h4*c2 + u4*h3*c2"));
  CHECK_THROWS_AS(d1_generator(GenId::c(29), kReg), std::out_of_range);
}

TEST_CASE("hatted-product sum diagonal") {
  // the printed summation range 1 <= s <= t <= q includes s = t terms;
  // their bracket u_{i_s} h_{i_s} + u_{i_s} h_{i_s} vanishes, so the
  // strict range gives the same differential (verified, not assumed)
  for (unsigned n : {13u, 21u, 25u, 27u}) {
    auto subs = canonical_name(n);
    Poly with_diagonal = d1_generator(GenId::c(n), kReg);
    for (unsigned s = 0; s < subs.size(); ++s) {
      Poly bracket = Poly::gen(GenId::u(subs[s])) * Poly::gen(GenId::h(subs[s])) +
                     Poly::gen(GenId::u(subs[s])) * Poly::gen(GenId::h(subs[s]));
      CHECK(bracket.is_zero());
      Poly rest = Poly::one();
      for (unsigned r = 0; r < subs.size(); ++r)
        if (r != s) rest *= Poly::gen(GenId::c(1u << (subs[r] - 1)));
      with_diagonal += bracket * rest;
    }
    CHECK(with_diagonal == d1_generator(GenId::c(n), kReg));
  }
}

TEST_CASE("Leibniz extension") {
  CHECK(d1(P("c{2,3}") * P("c{2,3}"), kReg).is_zero());  // squares die
  CHECK(d1(P("h0"), kReg).is_zero());
  // additivity and the Leibniz rule on random inputs
  std::mt19937 rng(3);
  std::vector<Poly> gens = {P("h1"), P("u2"), P("c5"), P("c4"), P("c13"), P("c2*c9")};
  for (int i = 0; i < 60; ++i) {
    Poly a = gens[rng() % gens.size()] * gens[rng() % gens.size()];
    Poly b = gens[rng() % gens.size()];
    CHECK(d1(a + b, kReg) == d1(a, kReg) + d1(b, kReg));
    CHECK(d1(a * b, kReg) == d1(a, kReg) * b + a * d1(b, kReg));
    CHECK(d1(d1(a * b, kReg), kReg).is_zero());
  }
  // tridegree shift (+1,+1,0)
  Poly img = d1(P("c13"), kReg);
  CHECK(img.homogeneous_degree() == TriDegree{1, 1, 52});
}

TEST_CASE("cell bases") {
  auto b1 = cell_basis(0, 1, 2, kReg);
  REQUIRE(b1.size() == 1);
  CHECK(render_monomial(b1[0]) == "u1");

  auto b2 = cell_basis(2, 0, 4, kReg);
  REQUIRE(b2.size() == 1);
  CHECK(render_monomial(b2[0]) == "h1^2");

  auto b3 = cell_basis(0, 0, 0, kReg);
  REQUIRE(b3.size() == 1);
  CHECK(b3[0].is_one());

  CHECK(cell_basis(0, 0, 2, kReg).empty());
  CHECK(cell_basis(0, 0, 8, kReg).size() == 1);  // just c2
  CHECK_THROWS_AS(cell_basis(0, 0, 200, kReg), std::out_of_range);

  // every element has the requested tridegree, order is deterministic
  auto b4 = cell_basis(1, 1, 20, kReg);
  for (auto& m : b4) CHECK(m.degree() == TriDegree{1, 1, 20});
  auto again = cell_basis(1, 1, 20, kReg);
  CHECK(b4.size() == again.size());
  for (size_t i = 0; i < b4.size(); ++i) CHECK(b4[i] == again[i]);
}

TEST_CASE("cycles and boundaries") {
  Poly phi3 = P("u1*c5 + u2*c4 + u3*c2");
  CHECK(is_cycle(phi3, kReg));
  CHECK_FALSE(is_boundary(phi3, kReg));  // the source cell (-1,0,22) is empty

  Poly x = P("c2*c9 + c5*c6");
  Poly dx = d1(x, kReg);
  CHECK_FALSE(dx.is_zero());
  CHECK(is_boundary(dx, kReg));
  auto pre = d1_preimage(dx, kReg);
  REQUIRE(pre.has_value());
  CHECK(d1(*pre, kReg) == dx);

  CHECK(is_boundary(Poly::zero(), kReg));
  CHECK_THROWS_AS(is_boundary(P("u1 + c2"), kReg), std::invalid_argument);
}

TEST_CASE("homology of small cells") {
  CellInfo i1 = homology(0, 1, 2, kReg);
  CHECK(i1.dim_basis == 1);
  CHECK(i1.dim_cycles == 1);
  CHECK(i1.dim_boundaries == 0);
  CHECK(i1.dim_homology == 1);
  CHECK(i1.line() == "CELL 0 1 2 | 1 | 1 | 0 | 1");

  // (1,1,8): basis {h1u1^... } d1 image of (0,0,8) = {c2}
  CellInfo i2 = homology(1, 1, 8, kReg);
  CHECK(i2.dim_boundaries == 1);

  // omega_1's class is alive at (0,1,50)
  Poly omega1 = P("u2*c11 + u3*c9 + u4*c5");
  CHECK(is_cycle(omega1, kReg));
  CellInfo i3 = homology(0, 1, 50, kReg);
  CHECK(i3.dim_homology >= 1);
}

TEST_CASE("relation checking") {
  CHECK(check_relation(P("u1*c5 + u2*c4"), P("u2*c4 + u1*c5"), CheckMode::identical, kReg).ok);
  CHECK_FALSE(check_relation(P("u1*c5"), P("u2*c4"), CheckMode::identical, kReg).ok);
  // h0*u2 = 0 up to boundary (d1 h2)
  auto r = check_relation(P("h0*u2"), P("0"), CheckMode::up_to_boundary, kReg);
  CHECK(r.ok);
  CHECK(r.witness.find("h2") != std::string::npos);
}
