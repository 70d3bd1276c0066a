#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace seqfree::bigseries {

// Truncated power series with exact integer coefficients, c[i] = coefficient
// of q^i, 0 <= i <= trunc_order. Arithmetic never reads past the truncation.
struct IntSeries {
  std::vector<mpz_class> c;

  IntSeries() = default;
  explicit IntSeries(int trunc_order) : c(trunc_order + 1) {}

  int trunc_order() const { return (int)c.size() - 1; }
  static IntSeries one(int trunc_order) {
    IntSeries s(trunc_order);
    s.c[0] = 1;
    return s;
  }
};

IntSeries series_mul(const IntSeries& a, const IntSeries& b, int N);

// Requires a.c[0] == +-1; throws std::invalid_argument otherwise.
IntSeries series_inverse(const IntSeries& a, int N);

// In-place multiply / exact divide by (1 + coef*q^m), coef in {+1,-1}.
void mul_sparse_factor(IntSeries& s, int m, int coef);
void div_sparse_factor(IntSeries& s, int m, int coef);

// Truncation of prod_{j>=1} (1 - sign*q^{step*j}).
IntSeries pochhammer_series(int sign, int step, int N);

// Ramanujan's third order mock theta function
// chi(q) = sum_n q^{n^2} (-q;q)_n / (-q^3;q^3)_n, truncated at order N.
IntSeries chi_series(int N);

struct PartitionTable {
  long n_max = -1;
  std::vector<mpz_class> values;  // p2(0..n_max)
  std::string source;             // "series", "oracle" or "cache-file"
};

// Exact p2(0..N) via (-q^3;q^3)_inf / (q^2;q^2)_inf * chi(q).
PartitionTable g2_table(int N);

// Independent combinatorial oracle: DP over largest part, a part k with
// positive multiplicity forbids part k-1.
mpz_class p2_oracle(long n);
std::vector<mpz_class> p2_oracle_table(long N);

// p(0..N) via 1/(q;q)_inf.
std::vector<mpz_class> partition_table(int N);
// p(0..N) via the pentagonal-number recurrence (oracle path).
std::vector<mpz_class> partition_pentagonal(int N);

// Cache file: header "# seqfree p2 v1 n_max=<N>", then "n,p2(n)" per line.
void write_cache(const std::string& path, const PartitionTable& t);
PartitionTable read_cache(const std::string& path);

}  // namespace seqfree::bigseries
