#include <doctest.h>

#include <fstream>

#include "msp/cartan.hpp"

using namespace msp;

namespace {

struct Fixture {
  Registry reg;
  ActionDb db;
  Fixture() {
    auto dir = data_dir();
    db.load_actions(dir / "table10.dat", "table10");
    db.load_actions(dir / "uactions.dat", "uactions");
    if (std::filesystem::exists(dir / "supplement.dat"))
      db.load_actions(dir / "supplement.dat", "supplement");
    db.load_projections(dir / "projections.dat");
  }
};

Poly P(const char* s) { return parse_poly(s); }

}  // namespace

TEST_CASE("identity split") {
  Fixture f;
  Poly phi3 = *f.db.projection(3);
  CartanResult r = cartan_apply(OpIndex::identity(), phi3, f.db, f.reg);
  CHECK(r.ok);
  CHECK(r.value == phi3);
}

TEST_CASE("the first derivation steps") {
  Fixture f;
  // S_2 phi3 = u3: u2 * (S_2 c4) + (S_2 u3) c2 + u3 * (S_2 c2)
  CartanResult r = cartan_apply(OpIndex::parse("2"), *f.db.projection(3), f.db, f.reg);
  CHECK(r.ok);
  CHECK(r.value == P("u3"));

  // S_{2,2} phi5 = phi3
  r = cartan_apply(OpIndex::parse("2,2"), *f.db.projection(5), f.db, f.reg);
  CHECK(r.ok);
  CHECK(r.value == *f.db.projection(3));
}

TEST_CASE("Cartan product law") {
  Fixture f;
  // evaluating on a product equals the convolution of sub-operations
  Poly x = P("c4");
  Poly y = P("c8");
  OpIndex omega = OpIndex::parse("2,2");
  CartanResult whole = cartan_apply(omega, x * y, f.db, f.reg);
  REQUIRE(whole.ok);
  // splits: (|2,2), (2|2), (2,2|)
  auto act = [&](const char* w, const Poly& p) {
    CartanResult r = cartan_apply(OpIndex::parse(w), p, f.db, f.reg);
    REQUIRE(r.ok);
    return r.value;
  };
  Poly split = x * act("2,2", y) + act("2", x) * act("2", y) + act("2,2", x) * y;
  CHECK(whole.value == split);
}

TEST_CASE("missing records are reported, not zeroed") {
  Fixture f;
  // S_{7} on c16 has no record and the target cell (0,0,36) is nonempty
  CartanResult r = cartan_apply(OpIndex::parse("7"), P("c16"), f.db, f.reg);
  CHECK_FALSE(r.ok);
  REQUIRE(r.missing.size() == 1);
  CHECK(r.missing[0] == "S_{7} c16");
}

TEST_CASE("degree-forced zeros are derived and noted") {
  Fixture f;
  // weight exceeds the generator: S_{9} c4 lands below degree zero
  CartanResult r = cartan_apply(OpIndex::parse("9"), P("c4"), f.db, f.reg);
  CHECK(r.ok);
  CHECK(r.value.is_zero());
  // S_1 c4: the (0,0,12) cell has no monomials
  r = cartan_apply(OpIndex::parse("1"), P("c4"), f.db, f.reg);
  CHECK(r.ok);
  CHECK(r.value.is_zero());
  CHECK(!r.derived.empty());
}

TEST_CASE("verify_projection end to end") {
  Fixture f;
  ProjVerdict v = verify_projection(9, OpIndex::parse("2,2"), f.db, f.reg);
  CHECK(v.kind == ProjVerdict::pass_identical);

  v = verify_projection(6, OpIndex::parse("2,2,2,2"), f.db, f.reg);
  CHECK(v.kind == ProjVerdict::pass_identical);

  // fault injection: corrupt one record and exactly the affected pairs fail
  ActionDb bad;
  auto dir = data_dir();
  auto tmp = std::filesystem::temp_directory_path() / "msp_corrupt.dat";
  {
    std::ifstream in(dir / "table10.dat");
    std::ofstream out(tmp);
    std::string line;
    while (std::getline(in, line)) {
      if (line.rfind("S 2 | c4 -> c2", 0) == 0) line = "S 2 | c4 -> 0";
      out << line << "\n";
    }
  }
  bad.load_actions(tmp, "corrupt");
  bad.load_actions(dir / "uactions.dat", "uactions");
  if (std::filesystem::exists(dir / "supplement.dat"))
    bad.load_actions(dir / "supplement.dat", "supplement");
  bad.load_projections(dir / "projections.dat");
  ProjVerdict bv = verify_projection(3, OpIndex::parse("2"), bad, f.reg);
  CHECK(bv.kind == ProjVerdict::fail);
  // an unrelated step still passes
  ProjVerdict ok = verify_projection(3, OpIndex::parse("5"), bad, f.reg);
  CHECK(ok.kind == ProjVerdict::pass_identical);
  std::filesystem::remove(tmp);
}
