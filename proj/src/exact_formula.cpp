#include "seqfree/exact_formula.hpp"

#include <algorithm>
#include <numeric>
#include <cmath>

#include "seqfree/kloosterman.hpp"

namespace seqfree::exact_formula {

using special_functions::bessel_I1;
using special_functions::bessel_I32;
using special_functions::curly_I;

long default_k_max(long n) {
  long k = (long)std::ceil(2.0 * std::sqrt((double)n));
  return std::clamp(k, 10L, 200L);
}

TruncationReport rademacher_p(long n, long k_max, mpfr_prec_t prec) {
  if (n < 1 || k_max < 1) throw std::invalid_argument("rademacher_p: need n >= 1, k_max >= 1");
  const mpfr_prec_t wp = prec + 64;
  const Real pi = hp::pi(wp);
  const Real arg_base = pi * hp::sqrt(Real(24 * n - 1, wp)) / 6;
  Real sum(0L, wp);
  TruncationReport rep;
  rep.n = n;
  rep.k_max = k_max;
  rep.max_imag = Real(0L, prec);
  rep.error_budget = Real(0L, wp);
  for (long k = 1; k <= k_max; ++k) {
    auto ak = kloosterman::A_k(k, n, wp);
    sum += ak.value.re * bessel_I32(arg_base / k) / k;
    if (hp::abs(ak.value.im) > rep.max_imag) rep.max_imag = hp::abs(ak.value.im);
    rep.error_budget += ak.eval_error_bound(wp);
  }
  Real total = hp::ldexp2(pi, 1) * sum / hp::pow_q(Real(24 * n - 1, wp), mpq_class(3, 4));
  rep.family[0] = total;
  rep.total = total;
  rep.rounded = total.round_to_integer();
  rep.residual = hp::abs(total - Real(rep.rounded, wp));
  rep.tail_bound = Real(0L, prec);
  return rep;
}

TruncationReport p2_exact_formula(long n, long k_max, mpfr_prec_t prec,
                                  const QuadratureConfig& cfg) {
  if (n < 1) throw std::invalid_argument("p2_exact_formula: need n >= 1");
  const mpfr_prec_t wp = prec + 64;
  const Real pi = hp::pi(wp);
  const Real sqrt_n = hp::sqrt(Real(n, wp));
  const Real sqrt_6n = hp::sqrt(Real(6 * n, wp));

  TruncationReport rep;
  rep.n = n;
  rep.k_max = k_max;
  rep.max_imag = Real(0L, wp);
  rep.error_budget = Real(0L, wp);

  auto note_imag = [&](const kloosterman::KloostermanValue& kv) {
    if (hp::abs(kv.value.im) > rep.max_imag) rep.max_imag = hp::abs(kv.value.im);
    rep.error_budget += kv.eval_error_bound(wp);
  };

  // Family 0: gcd(k,6)=1, calK_k(n) I_1(2 pi sqrt n / (3k)) / k.
  // The 1/k weight mirrors Rademacher's A_k(n)/k; a 1/k^2 weight here leaves a
  // residual growing like e^{2 pi sqrt(n)/15} (first wrong term k=5), while 1/k
  // reconstructs p2(n) exactly. Both agree at k=1.
  Real fam0(0L, wp);
  for (long k = 1; k <= k_max; ++k) {
    if (std::gcd(k, 6L) != 1) continue;
    auto kv = kloosterman::calK(k, n, wp);
    note_imag(kv);
    fam0 += kv.value.re * bessel_I1(hp::ldexp2(pi, 1) * sqrt_n / (3 * k)) / k;
  }
  rep.family[0] = pi / (sqrt_n * 6L) * fam0;

  // nu families: {K8, b=1/18, gcd=1}, {K4, b=5/36, gcd=2}, {K6, b=1/6, gcd=3}.
  struct Family {
    int gcd_class;
    mpq_class b;
    kloosterman::KloostermanValue (*K)(long, long, long, mpfr_prec_t);
    Real prefactor;
  };
  Family fams[3] = {
      {1, mpq_class(1, 18), &kloosterman::K8, pi / (sqrt_6n * 18L)},
      {2, mpq_class(5, 36), &kloosterman::K4, pi * 5L / (sqrt_6n * 36L)},
      {3, mpq_class(1, 6), &kloosterman::K6, pi / (sqrt_6n * 6L)},
  };
  for (int f = 0; f < 3; ++f) {
    Real fam(0L, wp);
    for (long k = 1; k <= k_max; ++k) {
      if (std::gcd(k, 6L) != fams[f].gcd_class) continue;
      Real inner(0L, wp);
      for (long nu = 0; nu < k; ++nu) {
        auto kv = fams[f].K(k, nu, n, wp);
        note_imag(kv);
        auto quad = curly_I(fams[f].b, k, nu, n, wp, cfg);
        Real term = kv.value.re * quad.value;
        if (nu % 2) term = -term;
        inner += term;
        rep.error_budget += quad.err * (hp::abs(kv.value.re) + Real(1L, wp));
      }
      fam += inner / (k * k);
    }
    rep.family[f + 1] = fams[f].prefactor * fam;
  }

  rep.total = rep.family[0] + rep.family[1] + rep.family[2] + rep.family[3];
  rep.rounded = rep.total.round_to_integer();
  rep.residual = hp::abs(rep.total - Real(rep.rounded, wp));
  rep.tail_bound = tail_bound_large_k(n, prec);
  return rep;
}

Real tail_bound_large_k(long n, mpfr_prec_t prec) {
  return Real(46500L, prec) * hp::pow_q(Real(n, prec), mpq_class(15, 16));
}

Real small_k_bound(long n, mpfr_prec_t prec) {
  const Real pi = hp::pi(prec);
  Real expo = hp::sqrt(Real(3L, prec)) * pi / 3 * hp::sqrt(Real(n, prec));
  return Real(200L, prec) * hp::pow_q(Real(n, prec), mpq_class(1, 16)) * hp::exp(expo);
}

LehmerReport lehmer_decomposition(long n, const mpz_class& p2n, mpfr_prec_t prec,
                                  const QuadratureConfig& cfg) {
  const mpfr_prec_t wp = prec + 64;
  const Real pi = hp::pi(wp);
  const Real sqrt_n = hp::sqrt(Real(n, wp));
  Real main = pi / (sqrt_n * 6L) * bessel_I1(hp::ldexp2(pi, 1) * sqrt_n / 3);
  auto quad = curly_I(mpq_class(1, 18), 1, 0, n, wp, cfg);
  main += pi / (hp::sqrt(Real(6 * n, wp)) * 18L) * quad.value;
  LehmerReport rep;
  rep.main_term = main;
  rep.deviation = hp::abs(Real(p2n, wp) - main);
  rep.bound = small_k_bound(n, wp) + tail_bound_large_k(n, wp);
  rep.holds = rep.deviation <= rep.bound;
  return rep;
}

}  // namespace seqfree::exact_formula
