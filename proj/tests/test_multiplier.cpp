#include "seqfree/multiplier.hpp"

#include <numeric>
#include <random>

#include "doctest.h"

using namespace seqfree::multiplier;

TEST_CASE("jacobi symbol") {
  CHECK(jacobi_symbol(1, 1) == 1);
  CHECK(jacobi_symbol(2, 15) == 1);  // (2/3)(2/5) = (-1)(-1)
  CHECK_THROWS(jacobi_symbol(3, 4));
  CHECK_THROWS(jacobi_symbol(3, -5));

  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    long n = 2 * (rng() % 200) + 1;
    long a = (long)(rng() % 400) - 200;
    long b = (long)(rng() % 400) - 200;
    CHECK(jacobi_symbol(a, n) * jacobi_symbol(b, n) == jacobi_symbol(mpz_class(a) * b, n));
  }
}

TEST_CASE("select_hprime representatives") {
  CHECK(select_hprime(1, 5, 1) == 4);
  CHECK(select_hprime(1, 5, 24) == 24);
  CHECK(select_hprime(3, 4, 3) == 9);
  CHECK_THROWS(select_hprime(2, 4, 1));
  CHECK_THROWS(select_hprime(1, 3, 3));

  for (long k = 1; k <= 30; ++k)
    for (long h = 0; h < k; ++h) {
      if (std::gcd(h, k) != 1 && k != 1) continue;
      for (long d : {1L, 3L, 8L, 24L}) {
        if (std::gcd(d, k) != 1) continue;
        long hp = select_hprime(h == 0 ? 1 : h, k, d);
        CHECK(hp >= 0);
        CHECK(hp < d * k);
        CHECK(hp % d == 0);
        CHECK(((h == 0 ? 1 : h) * hp + 1) % k == 0);
      }
    }
}

TEST_CASE("root of unity arithmetic") {
  RootOfUnity a(mpq_class(3, 4)), b(mpq_class(1, 2));
  CHECK((a * b).e == mpq_class(1, 4));
  CHECK(a.inverse().e == mpq_class(1, 4));
  CHECK(a.pow(4).e == 0);
  RootOfUnity neg(mpq_class(-1, 3));
  CHECK(neg.e == mpq_class(2, 3));

  auto z = eval(RootOfUnity(mpq_class(1, 4)), 128);
  CHECK(z.re.to_double() == doctest::Approx(0.0).epsilon(1e-30));
  CHECK(z.im.to_double() == doctest::Approx(1.0));
}

TEST_CASE("omega basics") {
  CHECK(omega(0, 1).e == 0);
  auto w12 = omega(1, 2);
  CHECK(w12.pow(48).e == 0);  // order divides 24k
  CHECK_THROWS(omega(2, 4));
  CHECK_THROWS(omega(3, 2));

  // denominator divides 24k throughout
  for (long k = 1; k <= 40; ++k)
    for (long h = 0; h < k; ++h) {
      if (std::gcd(h, k) != 1 && k != 1) continue;
      auto w = omega(h, k);
      CHECK(mpz_class(24 * k) % w.e.get_den() == 0);
    }
}

TEST_CASE("dedekind sum: direct vs reciprocity, classical identities") {
  CHECK(dedekind_sum(1, 2) == 0);
  CHECK(dedekind_sum(0, 1) == 0);

  for (long k = 1; k <= 100; ++k)
    for (long h = 0; h < k; ++h) {
      if (std::gcd(h, k) != 1 && k != 1) continue;
      CHECK(dedekind_sum(h, k) == dedekind_sum_direct(h, k));
      // classical denominator divisibility: 6k * s(h,k) is an integer
      mpq_class v = dedekind_sum(h, k) * 6 * k;
      CHECK(v.get_den() == 1);
    }

  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    long h = 1 + rng() % 400, k = 1 + rng() % 400;
    if (std::gcd(h, k) != 1) continue;
    mpq_class lhs = dedekind_sum(h, k) + dedekind_sum(k, h);
    mpq_class rhs = mpq_class(-1, 4) +
                    (mpq_class(h, k) + mpq_class(k, h) + mpq_class(1, h * k)) / 12;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("omega equals e^{pi i s(h,k)}") {
  for (long k = 1; k <= 40; ++k)
    for (long h = 0; h < k; ++h) {
      if (std::gcd(h, k) != 1 && k != 1) continue;
      // e^{pi i s} = e^{2 pi i (s/2)}
      RootOfUnity expected(dedekind_sum(h, k) / 2);
      CAPTURE(h);
      CAPTURE(k);
      CHECK(omega(h, k) == expected);
    }
}
