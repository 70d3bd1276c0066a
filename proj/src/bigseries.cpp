#include "seqfree/bigseries.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace seqfree::bigseries {

IntSeries series_mul(const IntSeries& a, const IntSeries& b, int N) {
  if (N > a.trunc_order() || N > b.trunc_order())
    throw std::invalid_argument("series_mul: N exceeds operand truncation");
  IntSeries r(N);
  for (int i = 0; i <= N; ++i) {
    if (a.c[i] == 0) continue;
    const int jmax = N - i;
    for (int j = 0; j <= jmax; ++j) {
      if (b.c[j] != 0)
        mpz_addmul(r.c[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
    }
  }
  return r;
}

IntSeries series_inverse(const IntSeries& a, int N) {
  if (a.c.empty() || (a.c[0] != 1 && a.c[0] != -1))
    throw std::invalid_argument("series_inverse: constant term must be a unit");
  const int u = (a.c[0] == 1) ? 1 : -1;
  IntSeries b(N);
  b.c[0] = u;
  mpz_class acc;
  for (int n = 1; n <= N; ++n) {
    acc = 0;
    const int kmax = std::min(n, a.trunc_order());
    for (int k = 1; k <= kmax; ++k) {
      if (a.c[k] != 0)
        mpz_addmul(acc.get_mpz_t(), a.c[k].get_mpz_t(), b.c[n - k].get_mpz_t());
    }
    b.c[n] = -u * acc;
  }
  return b;
}

void mul_sparse_factor(IntSeries& s, int m, int coef) {
  const int N = s.trunc_order();
  for (int i = N; i >= m; --i) {
    if (coef == 1)
      s.c[i] += s.c[i - m];
    else
      s.c[i] -= s.c[i - m];
  }
}

void div_sparse_factor(IntSeries& s, int m, int coef) {
  const int N = s.trunc_order();
  for (int i = m; i <= N; ++i) {
    if (coef == 1)
      s.c[i] -= s.c[i - m];
    else
      s.c[i] += s.c[i - m];
  }
}

IntSeries pochhammer_series(int sign, int step, int N) {
  if (step < 1) throw std::invalid_argument("pochhammer_series: step must be >= 1");
  IntSeries s = IntSeries::one(N);
  for (long m = step; m <= N; m += step) mul_sparse_factor(s, (int)m, -sign);
  return s;
}

IntSeries chi_series(int N) {
  // Term ratio r_n = (-q;q)_n / (-q^3;q^3)_n maintained incrementally:
  // r_n = r_{n-1} * (1+q^n) / (1+q^{3n}); the q^{n^2} shift is applied when
  // the term is accumulated.
  IntSeries total = IntSeries::one(N);  // n = 0 term
  if (N == 0) return total;
  IntSeries ratio = IntSeries::one(N);
  for (long n = 1; n * n <= N; ++n) {
    if (n <= N) mul_sparse_factor(ratio, (int)n, 1);
    if (3 * n <= N) div_sparse_factor(ratio, (int)(3 * n), 1);
    const long shift = n * n;
    for (long i = 0; i + shift <= N; ++i) total.c[i + shift] += ratio.c[i];
  }
  return total;
}

PartitionTable g2_table(int N) {
  IntSeries denom_inv = series_inverse(pochhammer_series(+1, 2, N), N);
  IntSeries g = series_mul(denom_inv, chi_series(N), N);
  g = series_mul(pochhammer_series(-1, 3, N), g, N);
  PartitionTable t;
  t.n_max = N;
  t.values = std::move(g.c);
  t.source = "series";
  return t;
}

std::vector<mpz_class> p2_oracle_table(long N) {
  // g[k][m] = partitions of m with parts <= k, no two consecutive parts.
  // g(m,k) = g(m,k-1) + sum_{t>=1} g(m-t*k, k-2).
  std::vector<std::vector<mpz_class>> g(N + 1, std::vector<mpz_class>(N + 1));
  for (long k = 0; k <= N; ++k) g[k][0] = 1;
  for (long k = 1; k <= N; ++k) {
    for (long m = 1; m <= N; ++m) {
      mpz_class v = g[k - 1][m];
      for (long r = m - k; r >= 0; r -= k) {
        if (k >= 2)
          v += g[k - 2][r];
        else if (r == 0)
          v += 1;  // k = 1: all parts equal to 1
      }
      g[k][m] = v;
    }
  }
  std::vector<mpz_class> out(N + 1);
  for (long n = 0; n <= N; ++n) out[n] = g[n == 0 ? 0 : n][n];
  return out;
}

mpz_class p2_oracle(long n) {
  if (n < 0) throw std::invalid_argument("p2_oracle: n must be >= 0");
  return p2_oracle_table(n).back();
}

std::vector<mpz_class> partition_table(int N) {
  IntSeries inv = series_inverse(pochhammer_series(+1, 1, N), N);
  return std::move(inv.c);
}

std::vector<mpz_class> partition_pentagonal(int N) {
  std::vector<mpz_class> p(N + 1);
  p[0] = 1;
  for (long n = 1; n <= N; ++n) {
    mpz_class v = 0;
    for (long j = 1;; ++j) {
      long g1 = j * (3 * j - 1) / 2;
      long g2 = j * (3 * j + 1) / 2;
      if (g1 > n && g2 > n) break;
      int sgn = (j % 2) ? 1 : -1;
      if (g1 <= n) v += sgn * p[n - g1];
      if (g2 <= n) v += sgn * p[n - g2];
    }
    p[n] = v;
  }
  return p;
}

void write_cache(const std::string& path, const PartitionTable& t) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("write_cache: cannot open " + path);
  f << "# seqfree p2 v1 n_max=" << t.n_max << "\n";
  for (long n = 0; n <= t.n_max; ++n) f << n << "," << t.values[n].get_str() << "\n";
  if (!f) throw std::runtime_error("write_cache: write failed for " + path);
}

PartitionTable read_cache(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("read_cache: cannot open " + path);
  std::string header;
  std::getline(f, header);
  long n_max = -1;
  if (std::sscanf(header.c_str(), "# seqfree p2 v1 n_max=%ld", &n_max) != 1 || n_max < 0)
    throw std::runtime_error("read_cache: bad header in " + path);
  PartitionTable t;
  t.n_max = n_max;
  t.values.resize(n_max + 1);
  t.source = "cache-file";
  std::string line;
  long count = 0;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("read_cache: bad record: " + line);
    long n = std::stol(line.substr(0, comma));
    if (n < 0 || n > n_max) throw std::runtime_error("read_cache: index out of range: " + line);
    t.values[n] = mpz_class(line.substr(comma + 1));
    ++count;
  }
  if (count != n_max + 1) throw std::runtime_error("read_cache: truncated file " + path);
  return t;
}

}  // namespace seqfree::bigseries
