#pragma once

#include <gmpxx.h>

#include <vector>

#include "seqfree/bigseries.hpp"
#include "seqfree/hp.hpp"

namespace seqfree::inequalities {

using hp::Real;

// p2(n)^2 - p2(n-1) p2(n+1), exact.
mpz_class logconcavity_check(long n, const bigseries::PartitionTable& table);

enum class Verdict { positive, negative, inconclusive };

struct ClosingReport {
  Verdict verdict = Verdict::inconclusive;
  Real value;
};

// The six-term lower bound
// pi/(288 n^3) + pi/(216 sqrt6 n^{13/4}) - 1/(50 n^{7/2}) - 9/n^{15/4}
//   - 5/(2 n^4) - 200/n^5.
ClosingReport verify_closing_inequality(long n, mpfr_prec_t prec);

struct JensenPoly {
  int d = 0;
  long n = 0;
  std::vector<mpz_class> coeffs;  // binom(d,j) p2(n+j), j = 0..d
};

JensenPoly jensen_poly(int d, long n, const bigseries::PartitionTable& table);

// Distinct real roots of a nonzero rational polynomial by an exact Sturm
// chain over (-inf, inf).
int sturm_distinct_real_roots(const std::vector<mpq_class>& poly);

struct HyperbolicityCertificate {
  int d = 0;
  long n = 0;
  int real_root_count = 0;  // distinct roots of the square-free part
  bool hyperbolic = false;  // all roots real (multiplicity via square-free part)
};

HyperbolicityCertificate certify_hyperbolic(const JensenPoly& p);

struct TuranScanReport {
  int d = 0;
  long n_max = 0;
  std::vector<long> failures;    // shifts with a non-hyperbolic Jensen polynomial
  long largest_failure = 0;      // 0 when the scan found none
};

// Scans n = 1..n_max and certifies each J^{d,n}.
TuranScanReport minimal_hyperbolic_shift(int d, long n_max, const bigseries::PartitionTable& table,
                                         int jobs = 1);

}  // namespace seqfree::inequalities
