#include "seqfree/inequalities.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace seqfree::inequalities {

mpz_class logconcavity_check(long n, const bigseries::PartitionTable& table) {
  if (n < 1 || n + 1 > table.n_max)
    throw std::out_of_range("logconcavity_check: n outside table range");
  return table.values[n] * table.values[n] - table.values[n - 1] * table.values[n + 1];
}

ClosingReport verify_closing_inequality(long n, mpfr_prec_t prec) {
  const Real pi = hp::pi(prec);
  const Real nr(n, prec);
  const Real n3 = nr * nr * nr;
  const Real terms[6] = {
      pi / (n3 * 288L),
      pi / (Real(216L, prec) * hp::sqrt(Real(6L, prec)) * hp::pow_q(nr, mpq_class(13, 4))),
      -(Real(1L, prec) / (hp::pow_q(nr, mpq_class(7, 2)) * 50L)),
      -(Real(9L, prec) / hp::pow_q(nr, mpq_class(15, 4))),
      -(Real(mpq_class(5, 2), prec) / (n3 * nr)),
      -(Real(200L, prec) / (n3 * nr * nr)),
  };
  Real v(0L, prec), scale(0L, prec);
  for (const Real& t : terms) {
    v += t;
    scale += hp::abs(t);
  }
  ClosingReport rep;
  rep.value = v;
  // Rounding margin proportional to the mass actually summed; an absolute
  // floor would drown the ~n^{-3} signal at large n.
  Real margin = hp::pow2(-(long)prec / 2, prec) * scale;
  if (v > margin)
    rep.verdict = Verdict::positive;
  else if (v < -margin)
    rep.verdict = Verdict::negative;
  else
    rep.verdict = Verdict::inconclusive;
  return rep;
}

JensenPoly jensen_poly(int d, long n, const bigseries::PartitionTable& table) {
  if (d < 1 || n < 0 || n + d > table.n_max)
    throw std::out_of_range("jensen_poly: (d,n) outside table range");
  JensenPoly p;
  p.d = d;
  p.n = n;
  p.coeffs.resize(d + 1);
  mpz_class binom = 1;
  for (int j = 0; j <= d; ++j) {
    p.coeffs[j] = binom * table.values[n + j];
    binom = binom * (d - j) / (j + 1);
  }
  return p;
}

namespace {

using Poly = std::vector<mpq_class>;  // coefficient of X^i at index i

void strip(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return (int)p.size() - 1; }

Poly derivative(const Poly& p) {
  Poly d;
  for (int i = 1; i < (int)p.size(); ++i) d.push_back(p[i] * i);
  return d;
}

// Remainder of a by b (b nonzero).
Poly poly_rem(Poly a, const Poly& b) {
  const int db = degree(b);
  while (degree(a) >= db) {
    mpq_class q = a.back() / b.back();
    int shift = degree(a) - db;
    for (int i = 0; i <= db; ++i) a[i + shift] -= q * b[i];
    a.pop_back();
    strip(a);
    if (a.empty()) break;
  }
  return a;
}

void make_monic(Poly& p) {
  if (p.empty()) return;
  mpq_class lead = p.back();
  for (auto& c : p) c /= lead;
}

Poly poly_gcd(Poly a, Poly b) {
  strip(a);
  strip(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

// Exact quotient, requires b | a.
Poly poly_div_exact(Poly a, const Poly& b) {
  Poly q(std::max<int>(0, degree(a) - degree(b) + 1));
  const int db = degree(b);
  while (degree(a) >= db && !a.empty()) {
    mpq_class c = a.back() / b.back();
    int shift = degree(a) - db;
    q[shift] = c;
    for (int i = 0; i <= db; ++i) a[i + shift] -= c * b[i];
    strip(a);
  }
  return q;
}

int sign_at_pos_inf(const Poly& p) { return sgn(p.back()); }
int sign_at_neg_inf(const Poly& p) {
  int s = sgn(p.back());
  return (degree(p) % 2) ? -s : s;
}

}  // namespace

int sturm_distinct_real_roots(const std::vector<mpq_class>& poly) {
  Poly p = poly;
  strip(p);
  if (p.empty()) throw std::invalid_argument("sturm: zero polynomial");
  if (degree(p) == 0) return 0;
  std::vector<Poly> chain;
  chain.push_back(p);
  chain.push_back(derivative(p));
  strip(chain.back());
  while (!chain.back().empty() && degree(chain.back()) > 0) {
    Poly r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  auto variations = [&](bool at_pos) {
    int count = 0, last = 0;
    for (const auto& q : chain) {
      if (q.empty()) continue;
      int s = at_pos ? sign_at_pos_inf(q) : sign_at_neg_inf(q);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return variations(false) - variations(true);
}

HyperbolicityCertificate certify_hyperbolic(const JensenPoly& jp) {
  Poly p(jp.coeffs.size());
  for (size_t i = 0; i < jp.coeffs.size(); ++i) p[i] = mpq_class(jp.coeffs[i]);
  strip(p);
  HyperbolicityCertificate cert;
  cert.d = jp.d;
  cert.n = jp.n;
  if (degree(p) < 1) {
    cert.real_root_count = 0;
    cert.hyperbolic = degree(p) == jp.d;  // degenerate; p2 > 0 makes this unreachable
    return cert;
  }
  Poly g = poly_gcd(p, derivative(p));
  Poly sf = (degree(g) > 0) ? poly_div_exact(p, g) : p;
  strip(sf);
  cert.real_root_count = sturm_distinct_real_roots(sf);
  // All roots of p are real iff all roots of its square-free part are.
  cert.hyperbolic = (cert.real_root_count == degree(sf)) && degree(p) == jp.d;
  return cert;
}

TuranScanReport minimal_hyperbolic_shift(int d, long n_max, const bigseries::PartitionTable& table,
                                         int jobs) {
  if (d < 1) throw std::invalid_argument("minimal_hyperbolic_shift: need d >= 1");
  if (n_max + d > table.n_max)
    throw std::out_of_range("minimal_hyperbolic_shift: table too small");
  TuranScanReport rep;
  rep.d = d;
  rep.n_max = n_max;
  jobs = std::max(1, jobs);
  std::vector<std::vector<long>> partial(jobs);
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (long n = 1 + w; n <= n_max; n += jobs) {
        auto cert = certify_hyperbolic(jensen_poly(d, n, table));
        if (!cert.hyperbolic) partial[w].push_back(n);
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& v : partial) rep.failures.insert(rep.failures.end(), v.begin(), v.end());
  std::sort(rep.failures.begin(), rep.failures.end());
  rep.largest_failure = rep.failures.empty() ? 0 : rep.failures.back();
  return rep;
}

}  // namespace seqfree::inequalities
