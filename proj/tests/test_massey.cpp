#include <doctest.h>

#include "msp/massey.hpp"

using namespace msp;

namespace {
Poly P(const char* s) { return parse_poly(s); }
}  // namespace

TEST_CASE("h-witness") {
  MasseyContext ctx;
  Poly phi3 = P("u1*c5 + u2*c4 + u3*c2");
  CHECK(ctx.h_witness(phi3) == P("h1*c5 + h2*c4 + h3*c2"));
  CHECK(ctx.h_witness(P("u2")) == P("h2"));
  CHECK_THROWS_AS(ctx.h_witness(P("u1*u2")), std::invalid_argument);
  CHECK_THROWS_AS(ctx.h_witness(P("c2")), std::invalid_argument);
}

TEST_CASE("pair witnesses") {
  MasseyContext ctx;
  CHECK(ctx.c_witness(P("u1"), P("u2")) == P("c2"));
  CHECK(ctx.c_witness(P("u2"), P("u3")) == P("c5"));
  CHECK(ctx.c_witness(P("u1"), P("u4")) == P("c8"));
  // solved witness: d1(x) = u1 h_{phi3} + phi3 h1 lands on c2*c4
  Poly w = ctx.c_witness(P("u1"), P("u1*c5 + u2*c4 + u3*c2"));
  CHECK(d1(w, ctx.registry()) ==
        P("u1") * P("h1*c5 + h2*c4 + h3*c2") + P("u1*c5 + u2*c4 + u3*c2") * P("h1"));
}

TEST_CASE("bracket representatives") {
  MasseyContext ctx;
  // A_{u1,u1} = h1^2
  CHECK(ctx.massey_A(P("u1"), P("u1")) == P("h1^2"));
  // F_{u1,u2,u3} = phi3
  CHECK(ctx.massey_F(P("u1"), P("u2"), P("u3")) == P("u1*c5 + u2*c4 + u3*c2"));
  // A_{u1,u2} = h0 c2 + h1 h2
  CHECK(ctx.massey_A(P("u1"), P("u2")) == P("h0*c2 + h1*h2"));
}

TEST_CASE("canonical elements and kappa") {
  MasseyContext ctx;
  CHECK(ctx.phi_tilde(2, 3) == P("u1*c5 + u2*c4 + u3*c2"));
  CHECK(ctx.omega_elem(2, 3, 4) == P("u2*c11 + u3*c9 + u4*c5"));
  CHECK(ctx.phi_tilde3(2, 3, 4) == P("u1*c13 + u2*c4*c8 + u3*c2*c8 + u4*c2*c4"));

  Poly kappa = kappa_element(ctx);
  CHECK(kappa.homogeneous_degree() == TriDegree{1, 1, 104});
  CHECK(is_cycle(kappa, ctx.registry()));
  // printed decomposition, alpha_{i,j} = u_i h_j + u_j h_i
  auto alpha = [&](unsigned i, unsigned j) {
    return P(("u" + std::to_string(i) + "*h" + std::to_string(j) + " + u" +
              std::to_string(j) + "*h" + std::to_string(i))
                 .c_str());
  };
  auto C = [](unsigned n) { return Poly::gen(GenId::c(n)); };
  Poly printed = (alpha(1, 2) * C(11) + alpha(1, 3) * C(9) + alpha(1, 4) * C(5)) * C(13) +
                 (alpha(2, 3) * C(2) * C(8) + alpha(2, 4) * C(2) * C(4)) * C(11) +
                 (alpha(2, 3) * C(4) * C(8) + alpha(3, 4) * C(2) * C(4)) * C(9) +
                 (alpha(2, 4) * C(4) * C(8) + alpha(3, 4) * C(2) * C(8)) * C(5);
  CHECK(kappa == printed);
}

TEST_CASE("forbidden pair raises") {
  MasseyContext ctx;
  Poly u2 = P("u2");
  Poly psi7 = ctx.psi_two_hat(3, 4, 2, 3, 4);
  CHECK_THROWS_AS(ctx.massey_A(u2, psi7), ForbiddenPair);
}

TEST_CASE("witness registration validates the invariant") {
  MasseyContext ctx;
  CHECK_THROWS_AS(ctx.register_witness(P("u1"), P("u2"), P("c4")), std::invalid_argument);
  ctx.register_witness(P("u1"), P("u2"), P("c2"));
  CHECK(ctx.has_witness(P("u1"), P("u2")));
}
