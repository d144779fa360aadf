#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "msp/tables.hpp"

using namespace msp;

namespace {
std::filesystem::path dir() { return data_dir(); }
}  // namespace

TEST_CASE("data directory resolution") {
  CHECK(std::filesystem::exists(dir() / "table10.dat"));
  CHECK(data_dir("/tmp/custom") == std::filesystem::path("/tmp/custom"));
}

TEST_CASE("action records load with degree validation") {
  ActionDb db;
  db.load_actions(dir() / "table10.dat", "table10");
  CHECK(db.record_count() > 300);

  const ActionRecord* rec = db.find(OpIndex::parse("2"), GenId::c(4));
  REQUIRE(rec != nullptr);
  CHECK(rec->value == parse_poly("c2"));
  CHECK(rec->source == "table10");

  rec = db.find(OpIndex::parse("6"), GenId::c(10));
  REQUIRE(rec != nullptr);
  CHECK(rec->value.is_zero());

  CHECK(db.find(OpIndex::parse("2,2"), GenId::c(6)) == nullptr);  // a known gap
}

TEST_CASE("malformed records are rejected") {
  auto tmp = std::filesystem::temp_directory_path() / "msp_bad_records.dat";
  {
    std::ofstream f(tmp);
    f << "S 2 | c4 -> c4\n";  // t unchanged but weight > 0
  }
  ActionDb db;
  CHECK_THROWS_AS(db.load_actions(tmp, "tmp"), DataError);

  {
    std::ofstream f(tmp);
    f << "S 2 | c4 -> c2\n";
    f << "S 2 | c4 -> 0\n";  // duplicate key
  }
  ActionDb db2;
  CHECK_THROWS_AS(db2.load_actions(tmp, "tmp"), DataError);
  std::filesystem::remove(tmp);
}

TEST_CASE("projections load and map Phi-vectors") {
  ActionDb db;
  db.load_projections(dir() / "projections.dat");
  const Poly* phi3 = db.projection(3);
  REQUIRE(phi3 != nullptr);
  CHECK(*phi3 == parse_poly("u1*c5 + u2*c4 + u3*c2"));

  auto p = db.project(PhiVector::theta1());
  REQUIRE(p.has_value());
  CHECK(*p == parse_poly("u1"));
  CHECK(*db.project(PhiVector::phi(4)) == parse_poly("u4"));
  CHECK(*db.project(PhiVector::phi(7)) == *db.projection(7));
  CHECK_FALSE(db.project(PhiVector::phi(15)).has_value());
}

TEST_CASE("named element tables") {
  auto t11 = load_named_elements(dir() / "table11.dat");
  CHECK(t11.size() == 28);
  for (auto& el : t11) {
    auto deg = el.expansion.homogeneous_degree();
    REQUIRE(deg.has_value());
    CHECK(deg->t == el.t);
    CHECK(deg->q == 0);
    CHECK(deg->s == (el.t == 0 ? 0 : 1));
  }
  auto t13 = load_named_elements(dir() / "table13.dat");
  CHECK(t13.size() == 19);
}

TEST_CASE("operation rows and claims") {
  auto rows = load_op_rows(dir() / "table9.dat");
  CHECK(rows.size() == 39);
  int printed = 0, corrected = 0;
  for (auto& r : rows) {
    if (r.tag == "printed-discrepancy") ++printed;
    if (r.tag == "corrected") ++corrected;
  }
  CHECK(printed == 1);
  CHECK(corrected == 1);

  auto claims = load_claims(dir() / "claims.dat");
  CHECK(claims.size() == 105);
  CHECK(claims.front().m == 3);
}

TEST_CASE("shipped u-action records match regeneration") {
  ActionDb db;
  db.load_actions(dir() / "uactions.dat", "uactions");
  db.load_projections(dir() / "projections.dat");
  size_t checked = 0;
  for (unsigned j = 2; j <= 5; ++j) {
    unsigned m = 1u << (j - 2);
    long budget = 2 * m - 1;
    for (long k = 1; k <= budget; ++k)
      for (long r = 1; k * r <= budget; ++r) {
        const ActionRecord* rec = db.find(OpIndex::repeated(uint32_t(k), uint32_t(r)),
                                          GenId::u(j));
        REQUIRE(rec != nullptr);
        auto want = db.project(s_on_phi(OpIndex::repeated(uint32_t(k), uint32_t(r)), m));
        REQUIRE(want.has_value());
        CHECK(rec->value == *want);
        ++checked;
      }
  }
  CHECK(checked == db.record_count());
}

TEST_CASE("expression parser with symbols") {
  SymbolTable sym;
  sym["a2"] = parse_poly("h0*c2 + h1*h2");
  sym["phi3"] = parse_poly("u1*c5 + u2*c4 + u3*c2");
  CHECK(parse_expr("a2^2", sym) == sym["a2"] * sym["a2"]);
  CHECK(parse_expr("h0*(a2 + h1*h2)", sym) ==
        parse_poly("h0") * (sym["a2"] + parse_poly("h1*h2")));
  CHECK(parse_expr("phi3*c2 + u1*c5*c2", sym) ==
        sym["phi3"] * parse_poly("c2") + parse_poly("u1*c5*c2"));
  CHECK_THROWS_AS(parse_expr("nosuch1", sym), ParseError);
}
