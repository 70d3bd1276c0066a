#pragma once

#include <gmpxx.h>

#include <vector>

#include "seqfree/hp.hpp"
#include "seqfree/multiplier.hpp"

namespace seqfree::kloosterman {

struct KloostermanValue {
  hp::Complex value;
  long num_terms = 0;
  // Evaluation error bound: num_terms * 2^{2-prec} (each term has unit modulus).
  hp::Real eval_error_bound(mpfr_prec_t prec) const {
    return hp::pow2(2 - (long)prec, prec) * num_terms;
  }
};

// A_k(n) = sum_{h} omega_{h,k} e^{-2 pi i n h / k}  (Rademacher).
KloostermanValue A_k(long k, long n, mpfr_prec_t prec);

// curly K_k(n), gcd(k,6) = 1, multiplier w_h w_{2h} w_{6h} / w_{3h}^3.
KloostermanValue calK(long k, long n, mpfr_prec_t prec);

// Modified sums with divisibility-constrained inverse h':
//   K4: gcd(k,6)=2, 3|h', phase (pi i/k)(-3 nu^2 + nu) h'
//   K6: gcd(k,6)=3, 8|h', phase (pi i/k)(-3 nu^2 + nu) h'
//   K8: gcd(k,6)=1, 24|h', phase (pi i/k)(-3 nu^2 - nu) h'
KloostermanValue K4(long k, long nu, long n, mpfr_prec_t prec);
KloostermanValue K6(long k, long nu, long n, mpfr_prec_t prec);
KloostermanValue K8(long k, long nu, long n, mpfr_prec_t prec);

// Classical K(a,b,k) = sum_h e^{(2 pi i/k)(a h + b [h]_k)}.
KloostermanValue classical_K(long a, long b, long k, mpfr_prec_t prec);

// Number of divisors.
long tau(long n);

struct DivisorBoundReport {
  bool ok = true;
  long worst_n = 1;
  double worst_ratio = 0.0;  // max over n of tau(n) / (9 n^{1/4})
};

// Checks tau(n) <= 9 n^{1/4} for all n <= n_max.
DivisorBoundReport divisor_bound_check(long n_max);

}  // namespace seqfree::kloosterman
