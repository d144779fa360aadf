#include <doctest.h>

#include <random>

#include "msp/algebra.hpp"

using namespace msp;

namespace {

Poly P(const char* s) { return parse_poly(s); }

Poly random_poly(std::mt19937& rng, int max_terms) {
  std::vector<GenId> gens = {GenId::h0(),  GenId::h(1), GenId::h(2), GenId::u(1),
                             GenId::u(2),  GenId::u(3), GenId::c(2), GenId::c(4),
                             GenId::c(5),  GenId::c(6)};
  std::vector<Monomial> terms;
  int nterms = 1 + int(rng() % max_terms);
  for (int t = 0; t < nterms; ++t) {
    Monomial m = Monomial::one();
    int nf = int(rng() % 4);
    for (int f = 0; f < nf; ++f)
      m = m * Monomial::gen(gens[rng() % gens.size()], 1 + rng() % 3);
    terms.push_back(m);
  }
  return poly_from_term_list(std::move(terms));
}

}  // namespace

TEST_CASE("c-index validity") {
  CHECK(valid_c_index(2));
  CHECK_FALSE(valid_c_index(3));
  CHECK(valid_c_index(4));
  CHECK(valid_c_index(5));
  CHECK(valid_c_index(6));
  CHECK_FALSE(valid_c_index(7));
  CHECK_FALSE(valid_c_index(15));
  CHECK_FALSE(valid_c_index(1));
  CHECK_FALSE(valid_c_index(0));
  CHECK_THROWS_AS(GenId::c(7), std::invalid_argument);
}

TEST_CASE("generator degrees") {
  CHECK(gen_degree(GenId::h0()) == TriDegree{2, 0, 0});
  CHECK(gen_degree(GenId::h(2)) == TriDegree{1, 0, 6});
  CHECK(gen_degree(GenId::u(1)) == TriDegree{0, 1, 2});
  CHECK(gen_degree(GenId::u(5)) == TriDegree{0, 1, 62});
  CHECK(gen_degree(GenId::c(13)) == TriDegree{0, 0, 52});
}

TEST_CASE("aliasing") {
  CHECK(canonical_name(5) == std::vector<unsigned>{2, 3});
  CHECK(canonical_name(4) == std::vector<unsigned>{1, 3});
  CHECK(canonical_name(6).empty());  // plain even generator
  CHECK(canonical_name(13) == std::vector<unsigned>{2, 3, 4});
  CHECK(canonical_name(2) == std::vector<unsigned>{1, 2});
  CHECK_THROWS_AS(canonical_name(7), std::invalid_argument);
  CHECK_THROWS_AS(canonical_name(1), std::invalid_argument);

  unsigned pair23[] = {2, 3};
  CHECK(alias_to_index(pair23) == 5);
  unsigned pair13[] = {1, 3};
  CHECK(alias_to_index(pair13) == 4);

  // total, involutive round trip over all q-tuples 2 <= i1 < ... < iq <= 6
  for (unsigned mask = 1; mask < 32; ++mask) {
    std::vector<unsigned> subs;
    for (unsigned b = 0; b < 5; ++b)
      if (mask & (1u << b)) subs.push_back(b + 2);
    if (subs.size() < 2) continue;
    unsigned n = alias_to_index(subs);
    CHECK(valid_c_index(n));
    CHECK(canonical_name(n) == subs);
  }
  // and the power-of-two forms
  for (unsigned i = 2; i <= 10; ++i) {
    unsigned subs[] = {1, i};
    unsigned n = alias_to_index(subs);
    CHECK(n == (1u << (i - 1)));
    CHECK(canonical_name(n) == std::vector<unsigned>({1, i}));
  }
}

TEST_CASE("parse and render") {
  CHECK(render_poly(P("u1*c5 + u2*c4 + u3*c2")) == "u1*c5 + u2*c4 + u3*c2");
  CHECK(P("c{2,3}") == Poly::gen(GenId::c(5)));
  CHECK(P("c{1,4}") == Poly::gen(GenId::c(8)));

  Poly h0sq = P("h0^2");
  CHECK(h0sq.homogeneous_degree() == TriDegree{4, 0, 0});

  CHECK(render_poly(Poly::zero()) == "0");
  CHECK(render_poly(Poly::one()) == "1");
  CHECK(P("0").is_zero());
  CHECK(P("1") == Poly::one());

  CHECK_THROWS_AS(P("c3"), ParseError);
  CHECK_THROWS_AS(P("w4"), ParseError);
  CHECK_THROWS_AS(P("u1 +"), ParseError);
  CHECK_THROWS_AS(P("c{3,2}"), ParseError);

  // parse o render = identity; render o parse canonicalizes
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Poly p = random_poly(rng, 5);
    CHECK(parse_poly(render_poly(p)) == p);
  }
  CHECK(P("c4*u2 + c2*u3 + c5*u1") == P("u1*c5 + u2*c4 + u3*c2"));
}

TEST_CASE("tridegree cache agrees with recomputation") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    Poly p = random_poly(rng, 4);
    for (auto& m : p.terms()) CHECK(m.degree() == m.recompute_degree());
  }
}

TEST_CASE("characteristic-2 arithmetic") {
  Poly phi3 = P("u1*c5 + u2*c4 + u3*c2");
  CHECK(P("u1*c5 + u2*c4") + P("u2*c4") == P("u1*c5"));
  CHECK((phi3 + phi3).is_zero());
  CHECK(phi3 + Poly::zero() == phi3);

  // u1 * c5 has tridegree (0,1,2) + (0,0,20)
  CHECK((Poly::gen(GenId::u(1)) * Poly::gen(GenId::c(5))).homogeneous_degree() ==
        TriDegree{0, 1, 22});
  CHECK((P("u1 + u2") * P("u1 + u2")) == P("u1^2 + u2^2"));
  CHECK(Poly::one() * phi3 == phi3);

  std::mt19937 rng(23);
  for (int i = 0; i < 100; ++i) {
    Poly a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 4);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) * (a + b) == a * a + b * b);  // Frobenius
  }
}

TEST_CASE("homogeneity") {
  CHECK(P("u1*c5 + u2*c4").is_homogeneous());
  CHECK_FALSE(P("u1*c5 + u2").is_homogeneous());
  CHECK(Poly::zero().is_homogeneous());
}
