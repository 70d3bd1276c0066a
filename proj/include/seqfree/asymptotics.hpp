#pragma once

#include <array>

#include "seqfree/bigseries.hpp"
#include "seqfree/hp.hpp"

namespace seqfree::asymptotics {

using hp::Real;

// The nine expansion constants a_1..a_9 from their closed forms.
std::array<Real, 9> expansion_coefficients(mpfr_prec_t prec);

// sum_{k=1}^{9} a_k n^{-(k+2)/4} e^{(2 pi/3) sqrt n}.
Real p2_asymptotic(long n, mpfr_prec_t prec);

// P(n) = sum a_k n^{-(k+2)/4} (the expansion without the exponential).
Real curly_P(long n, mpfr_prec_t prec);

// E(n) = 15 / n^3.
Real error_envelope(long n, mpfr_prec_t prec);

struct SupReport {
  Real sup;
  long argmax = 0;
};

// max over n in [lo,hi] of n^3 |p2(n) - expansion| / e^{(2 pi/3) sqrt n},
// with p2 taken from the exact table (table.values must cover hi).
SupReport verify_error_sup(long lo, long hi, const bigseries::PartitionTable& table,
                           mpfr_prec_t prec, int jobs = 1);

}  // namespace seqfree::asymptotics
