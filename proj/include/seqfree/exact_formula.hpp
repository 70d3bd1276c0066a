#pragma once

#include <gmpxx.h>

#include "seqfree/hp.hpp"
#include "seqfree/special_functions.hpp"

namespace seqfree::exact_formula {

using hp::Real;
using special_functions::QuadratureConfig;

struct TruncationReport {
  long n = 0;
  long k_max = 0;
  // 0: calK * I_1 family; 1: K8 (b=1/18); 2: K4 (b=5/36); 3: K6 (b=1/6).
  Real family[4];
  Real total;
  mpz_class rounded;
  Real residual;      // |total - rounded|
  Real tail_bound;    // proven bound on the omitted k-tail (coarse)
  Real error_budget;  // accumulated quadrature + phase evaluation error
  Real max_imag;      // largest |Im| seen across Kloosterman values
};

// Rademacher's series for p(n), truncated at k_max.
TruncationReport rademacher_p(long n, long k_max, mpfr_prec_t prec);

// The four-family exact formula for p2(n), truncated at k_max.
TruncationReport p2_exact_formula(long n, long k_max, mpfr_prec_t prec,
                                  const QuadratureConfig& cfg);

long default_k_max(long n);  // ceil(2 sqrt n) clamped to [10, 200]

Real tail_bound_large_k(long n, mpfr_prec_t prec);  // 46500 n^{15/16}
Real small_k_bound(long n, mpfr_prec_t prec);       // 200 n^{1/16} e^{(sqrt3 pi/3) sqrt n}

struct LehmerReport {
  Real main_term;
  Real deviation;  // |p2(n) - main_term|
  Real bound;      // small_k_bound + tail_bound_large_k
  bool holds = false;
};

LehmerReport lehmer_decomposition(long n, const mpz_class& p2n, mpfr_prec_t prec,
                                  const QuadratureConfig& cfg);

}  // namespace seqfree::exact_formula
