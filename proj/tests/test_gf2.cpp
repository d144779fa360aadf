#include <doctest.h>

#include <random>

#include "msp/gf2.hpp"

using namespace msp::gf2;

TEST_CASE("row kernels are bit-identical across variants") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    size_t n = 1 + rng() % 37;
    std::vector<Word> src(n), base(n);
    for (auto& w : src) w = rng();
    for (auto& w : base) w = rng();
    std::vector<Word> want = base;
    xor_rows_scalar(want.data(), src.data(), n);
    for (const Kernel& k : available_kernels()) {
      std::vector<Word> got = base;
      k.xor_rows(got.data(), src.data(), n);
      CHECK_MESSAGE(got == want, k.name);
    }
  }
}

TEST_CASE("elimination rank") {
  BitMatrix m(3, 4);
  // rows: 1100, 0110, 1010 -> rank 2
  m.set(0, 0); m.set(0, 1);
  m.set(1, 1); m.set(1, 2);
  m.set(2, 0); m.set(2, 2);
  CHECK(eliminate(m) == 2);

  BitMatrix id(5, 5);
  for (size_t i = 0; i < 5; ++i) id.set(i, i);
  CHECK(eliminate(id) == 5);
}

TEST_CASE("incremental solver") {
  // columns over dimension 3
  Solver s(3);
  auto col = [](std::initializer_list<int> bits) {
    std::vector<Word> v(1, 0);
    for (int b : bits) v[0] |= Word(1) << b;
    return v;
  };
  s.add_column(col({0, 1}));
  s.add_column(col({1, 2}));
  s.add_column(col({0, 2}));  // dependent: sum of the first two
  CHECK(s.rank() == 2);

  // solutions are {col0} and {col1, col2}; earlier columns preferred clear
  auto sol = s.solve_lexmin(col({0, 1}));
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == 0);
  CHECK((*sol)[1] == 1);
  CHECK((*sol)[2] == 1);

  CHECK_FALSE(s.solve_lexmin(col({0})).has_value());
}

TEST_CASE("lex-min solution over the affine solution space") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    size_t dim = 6, ncols = 8;
    std::vector<std::vector<Word>> cols(ncols, std::vector<Word>(1, 0));
    for (auto& c : cols) c[0] = rng() % 64;
    Solver s(dim);
    for (auto& c : cols) s.add_column(c);
    std::vector<Word> b(1, rng() % 64);
    auto got = s.solve_lexmin(b);

    // brute-force the lexicographically least solution
    std::optional<std::vector<uint8_t>> best;
    for (unsigned long mask = 0; mask < (1ul << ncols); ++mask) {
      Word acc = 0;
      for (size_t j = 0; j < ncols; ++j)
        if (mask & (1ul << j)) acc ^= cols[j][0];
      if (acc != b[0]) continue;
      std::vector<uint8_t> sel(ncols);
      for (size_t j = 0; j < ncols; ++j) sel[j] = (mask >> j) & 1;
      if (!best || sel < *best) best = sel;  // vector< is lexicographic
    }
    CHECK(got.has_value() == best.has_value());
    if (got && best) CHECK(*got == *best);
  }
}
