#include "doctest.h"

#include <cmath>

#include "seqfree/bigseries.hpp"
#include "seqfree/exact_formula.hpp"

using namespace seqfree;
using namespace seqfree::exact_formula;

TEST_CASE("rademacher series reproduces p(n)") {
  const mpfr_prec_t prec = 160;
  auto table = bigseries::partition_pentagonal(60);
  for (long n : {1L, 2L, 5L, 10L, 30L, 60L}) {
    auto rep = rademacher_p(n, (long)std::ceil(std::sqrt((double)n)) + 5, prec);
    CHECK(rep.rounded == table[n]);
    CHECK(rep.residual.to_double() < 0.4);
  }
  CHECK(rademacher_p(1, 5, prec).rounded == 1);
  CHECK(rademacher_p(10, 8, prec).rounded == 42);
}

TEST_CASE("default truncation point") {
  CHECK(default_k_max(1) == 10);
  CHECK(default_k_max(25) == 10);
  CHECK(default_k_max(100) == 20);
  CHECK(default_k_max(2500) == 100);
  CHECK(default_k_max(1000000) == 200);
}

TEST_CASE("four-family formula hits the integer") {
  const mpfr_prec_t prec = 192;
  auto cfg = QuadratureConfig::standard(prec);
  auto table = bigseries::g2_table(600);
  // Small n: even k_max = 3 resolves n = 1.
  auto one = p2_exact_formula(1, 3, prec, cfg);
  CHECK(one.rounded == 1);
  for (long n : {5L, 12L, 30L, 75L, 150L, 300L, 600L}) {
    auto rep = p2_exact_formula(n, 40, prec, cfg);
    CHECK(rep.rounded == table.values[n]);
    CHECK(rep.residual.to_double() < 0.5);
    CHECK(rep.max_imag.to_double() < 1e-20);
    CHECK(rep.error_budget.to_double() < 0.01);
  }
}

TEST_CASE("residual shrinks as the truncation grows") {
  const mpfr_prec_t prec = 192;
  auto cfg = QuadratureConfig::standard(prec);
  // The tail is an oscillating sum, so the residual is not monotone step by
  // step; the diagnostic is the coarse trend plus stable rounding.
  auto r5 = p2_exact_formula(100, 5, prec, cfg);
  auto r25 = p2_exact_formula(100, 25, prec, cfg);
  auto r50 = p2_exact_formula(100, 50, prec, cfg);
  CHECK(r25.residual.to_double() < r5.residual.to_double());
  CHECK(r50.residual.to_double() < r5.residual.to_double());
  CHECK(r50.residual.to_double() < 0.05);
  CHECK(r5.rounded == r50.rounded);
  CHECK(r25.rounded == r50.rounded);
}

TEST_CASE("tail and small-k envelopes") {
  const mpfr_prec_t prec = 128;
  CHECK(tail_bound_large_k(1, prec).to_double() == doctest::Approx(46500.0));
  CHECK(tail_bound_large_k(256, prec).to_double() ==
        doctest::Approx(46500.0 * std::pow(256.0, 15.0 / 16)));
  double expect =
      200.0 * std::pow(100.0, 1.0 / 16) * std::exp(std::sqrt(3.0) * M_PI / 3 * 10.0);
  CHECK(small_k_bound(100, prec).to_double() == doctest::Approx(expect).epsilon(1e-12));
  // The truncated-sum deviation actually sits far under the coarse tail
  // bound for moderate n.
  auto cfg = QuadratureConfig::standard(192);
  for (long n : {25L, 100L}) {
    auto rep = p2_exact_formula(n, 40, 192, cfg);
    CHECK(rep.residual.to_double() < rep.tail_bound.to_double());
  }
}

TEST_CASE("main-term decomposition") {
  const mpfr_prec_t prec = 192;
  auto cfg = QuadratureConfig::standard(prec);
  auto table = bigseries::g2_table(1000);
  double prev_rel = 1e300;
  for (long n : {10L, 100L, 1000L}) {
    auto rep = lehmer_decomposition(n, table.values[n], prec, cfg);
    CHECK(rep.holds);
    double rel = rep.deviation.to_double() / rep.main_term.to_double();
    CHECK(rel < prev_rel);  // the k=1 terms dominate more and more
    prev_rel = rel;
  }
  // For n = 1000 the main term already carries most of p2(n).
  auto rep = lehmer_decomposition(1000, table.values[1000], prec, cfg);
  CHECK(rep.deviation.to_double() / rep.main_term.to_double() < 0.05);
}
