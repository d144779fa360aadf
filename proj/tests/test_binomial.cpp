#include <doctest.h>

#include "msp/binomial.hpp"

using namespace msp;

namespace {

BigInt alpha_or_throw(long n, long m, long k) {
  auto r = alpha_bruteforce({n, m, k});
  REQUIRE(std::holds_alternative<BigInt>(r));
  return std::get<BigInt>(r);
}

BigInt gamma_or_throw(long n, long m, long k) {
  auto r = gamma_bruteforce({n, m, k});
  REQUIRE(std::holds_alternative<BigInt>(r));
  return std::get<BigInt>(r);
}

}  // namespace

TEST_CASE("exact binomial") {
  CHECK(binom_exact(6, 2) == 15);
  CHECK(binom_exact(10, 0) == 1);
  CHECK(binom_exact(3, 5) == 0);  // upper > lower convention
  CHECK(binom_exact(-1, 0) == 0);
  CHECK(binom_exact(40, 20) == BigInt("137846528820"));
}

TEST_CASE("Lucas subset test agrees with exact values") {
  for (unsigned long n = 0; n <= 200; ++n)
    for (unsigned long k = 0; k <= n; ++k)
      CHECK(binom_mod2(n, k) == int(binom_exact(long(n), long(k)) % 2));
  CHECK(binom_mod2(6, 2) == 1);
  CHECK(binom_mod2(7, 7) == 1);
}

TEST_CASE("the even binomial of the remark") {
  // C(2m, 2n-1) is always even
  for (long n = 1; n <= 50; ++n)
    for (long m = 1; m <= 50; ++m)
      CHECK(binom_exact(2 * m, 2 * n - 1) % 2 == 0);
}

TEST_CASE("mu indicator") {
  CHECK(mu(5, 2) == 1);
  CHECK(mu(4, 2) == 0);
  CHECK(mu(5, 3) == 0);
  CHECK(mu(2, 5) == 0);
}

TEST_CASE("alpha chain sum") {
  // frozen by independent enumeration ahead of the build
  CHECK(alpha_or_throw(9, 4, 2) == 3325);
  // two-term expansion: alpha^n_{2;k} = -C(2(n-k),2) + (2n-k)(2(n-k))
  for (long n = 2; n <= 20; ++n) {
    for (long k = 1; k < n; ++k) {
      BigInt direct = -binom_exact(2 * (n - k), 2) + BigInt(2 * n - k) * (2 * (n - k));
      CHECK(alpha_or_throw(n, 2, k) == direct);
      CHECK((alpha_or_throw(n, 2, k) - (n - k)) % 2 == 0);
    }
  }
  // odd repetition count, even part size: always even
  for (long n = 2; n <= 14; ++n)
    for (long s = 1; s <= 3; ++s)
      for (long q = 1; q <= 3; ++q)
        if ((2 * s - 1) * 2 * q < 2 * n - 1)
          CHECK(alpha_or_throw(n, 2 * s - 1, 2 * q) % 2 == 0);

  auto na = alpha_bruteforce({5, 3, 3});
  REQUIRE(std::holds_alternative<NotApplicable>(na));
  CHECK(std::get<NotApplicable>(na).reason.find("gamma") != std::string::npos);
  CHECK(std::holds_alternative<NotApplicable>(alpha_bruteforce({3, 4, 2})));
}

TEST_CASE("gamma chain sum") {
  CHECK(gamma_or_throw(5, 3, 3) == -22);  // frozen by independent enumeration
  for (long n = 2; n <= 17; ++n) {
    if ((2 * n - 1) % 3 != 0) continue;
    long k = (2 * n - 1) / 3;
    CHECK((gamma_or_throw(n, 3, k) - (n - k)) % 2 == 0);
  }
  // five equal parts: gamma = C(k+1,4) mod 2
  for (long n = 3; n <= 20; ++n) {
    if ((2 * n - 1) % 5 != 0) continue;
    long k = (2 * n - 1) / 5;
    CHECK((gamma_or_throw(n, 5, k) - binom_exact(k + 1, 4)) % 2 == 0);
  }
  CHECK(std::holds_alternative<NotApplicable>(gamma_bruteforce({5, 2, 3})));
}

TEST_CASE("repeated-part operation values") {
  CHECK(s_repeated_phi(9, 3, 4) == PhiVector::phi(3));
  CHECK(s_repeated_phi(6, 2, 5) == PhiVector::phi(1));
  CHECK(s_repeated_phi(2, 1, 3) == PhiVector::theta1());  // mk = 2n-1
  CHECK(s_repeated_phi(4, 4, 2) == PhiVector::zero());    // mk = 2n
  CHECK(s_repeated_phi(3, 9, 9) == PhiVector::zero());
  CHECK(s_repeated_phi(7, 13, 1) == PhiVector::theta1());  // single part 2n-1
  // degree bookkeeping: dim drops by 4mk
  for (long n = 1; n <= 12; ++n)
    for (long k = 1; k <= 6; ++k)
      for (long m = 1; m <= 8; ++m) {
        PhiVector v = s_repeated_phi(n, k, m);
        if (v.is_zero()) continue;
        int slot = *v.support().begin();
        long dim = slot == 0 ? 1 : 8 * slot - 3;
        CHECK(dim == 8 * n - 3 - 4 * m * k);
      }
}

TEST_CASE("closed forms against the chain sums") {
  // the acceptance suite sweeps all shapes; spot-check the pinned examples
  ClosedForm s1 = corollary_closed_form(1, 9, 2);
  CHECK(s1.applicable);
  CHECK(s1.coeff == 1);
  CHECK(s1.target == 7);

  ClosedForm s3 = corollary_closed_form(3, 9, 2);
  CHECK(s3.applicable);
  CHECK(s3.value() == PhiVector::phi(5));

  // both summands even: zero value
  ClosedForm z = corollary_closed_form(3, 14, 2);
  CHECK(z.applicable);
  CHECK(z.value() == PhiVector::phi(10));

  CHECK_FALSE(corollary_closed_form(3, 4, 2).applicable);
  CHECK_FALSE(corollary_closed_form(13, 5, 2).applicable);

  for (int shape = 1; shape <= kClosedFormShapes; ++shape) {
    long m = shape + 1;
    for (long n = 2; n <= 20; ++n)
      for (long k = 1; k <= 8; ++k) {
        ClosedForm cf = corollary_closed_form(shape, n, k);
        if (!cf.applicable) continue;
        CHECK(cf.value() == s_repeated_phi(n, k, m));
      }
  }
}
