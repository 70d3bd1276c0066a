#include "seqfree/asymptotics.hpp"

#include <stdexcept>
#include <thread>
#include <vector>

namespace seqfree::asymptotics {

std::array<Real, 9> expansion_coefficients(mpfr_prec_t prec) {
  const Real pi = hp::pi(prec);
  const Real pi2 = pi * pi, pi3 = pi2 * pi, pi4 = pi2 * pi2;
  const Real s2 = hp::sqrt(Real(2L, prec));
  const Real s3 = hp::sqrt(Real(3L, prec));
  return {
      Real(1L, prec) / (s3 * 4L),
      Real(1L, prec) / (s2 * 18L),
      -(s3 * 3L) / (pi * 64L),
      -(Real(324L, prec) + pi2 * 5L) / (s2 * pi * 3888L),
      -(s3 * 45L) / (pi2 * 2048L),
      (Real(1080L, prec) + pi2 * 17L) / (s2 * 186624L),
      -(s3 * 945L) / (pi3 * 32768L),
      -(Real(349920L, prec) + pi2 * 33048L + pi4 * 455L) / (s2 * pi * 40310784L),
      -(s3 * 127575L) / (pi4 * 2097152L),
  };
}

Real curly_P(long n, mpfr_prec_t prec) {
  auto a = expansion_coefficients(prec);
  const Real nr(n, prec);
  // n^{-1/4} powers accumulated incrementally from n^{-3/4}.
  const Real q = hp::pow_q(nr, mpq_class(-1, 4));
  Real power = hp::pow_q(nr, mpq_class(-3, 4));
  Real sum(0L, prec);
  for (int k = 0; k < 9; ++k) {
    sum += a[k] * power;
    power *= q;
  }
  return sum;
}

Real p2_asymptotic(long n, mpfr_prec_t prec) {
  if (n < 1) throw std::invalid_argument("p2_asymptotic: need n >= 1");
  const mpfr_prec_t wp = prec + 64;
  Real expo = hp::ldexp2(hp::pi(wp), 1) / 3 * hp::sqrt(Real(n, wp));
  Real v = curly_P(n, wp) * hp::exp(expo);
  Real out(prec);
  mpfr_set(out.raw(), v.raw(), MPFR_RNDN);
  return out;
}

Real error_envelope(long n, mpfr_prec_t prec) {
  return Real(15L, prec) / Real(mpz_class(mpz_class(n) * n * n), prec);
}

SupReport verify_error_sup(long lo, long hi, const bigseries::PartitionTable& table,
                           mpfr_prec_t prec, int jobs) {
  if (lo < 1 || lo > hi) throw std::invalid_argument("verify_error_sup: bad range");
  if (table.n_max < hi) throw std::invalid_argument("verify_error_sup: table too small");
  const mpfr_prec_t wp = prec + 64;  // n^3 scaling costs ~log2(n^3) bits
  auto scaled_error = [&](long n) {
    Real expo = hp::ldexp2(hp::pi(wp), 1) / 3 * hp::sqrt(Real(n, wp));
    Real e = hp::exp(expo);
    Real diff = hp::abs(Real(table.values[n], wp) - curly_P(n, wp) * e);
    return diff * Real(mpz_class(mpz_class(n) * n * n), wp) / e;
  };
  jobs = std::max(1, jobs);
  std::vector<SupReport> partial(jobs);
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      Real best(0L, wp);
      long arg = lo;
      for (long n = lo + w; n <= hi; n += jobs) {
        Real v = scaled_error(n);
        if (v > best) {
          best = v;
          arg = n;
        }
      }
      partial[w].sup = best;
      partial[w].argmax = arg;
    });
  }
  for (auto& t : workers) t.join();
  SupReport rep = partial[0];
  for (int w = 1; w < jobs; ++w)
    if (partial[w].sup > rep.sup) rep = partial[w];
  return rep;
}

}  // namespace seqfree::asymptotics
