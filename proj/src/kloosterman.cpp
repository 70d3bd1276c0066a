#include "seqfree/kloosterman.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <cmath>

namespace seqfree::kloosterman {

using multiplier::RootOfUnity;
using multiplier::omega;
using multiplier::select_hprime;

namespace {

// Sums exact unit-phase terms; duplicates collapse over a common denominator
// before any floating evaluation, so rounding enters only at the very end.
class PhaseAccumulator {
 public:
  void add(const mpq_class& exponent) {
    mpq_class e = exponent;
    e.canonicalize();
    den_lcm_ = lcm(den_lcm_, e.get_den());
    terms_.push_back(e);
  }

  KloostermanValue evaluate(mpfr_prec_t prec) const {
    std::map<mpz_class, long> counts;
    for (const auto& e : terms_) {
      mpz_class num = e.get_num() * (den_lcm_ / e.get_den());
      mpz_class r = num % den_lcm_;
      if (r < 0) r += den_lcm_;
      counts[r] += 1;
    }
    KloostermanValue out;
    out.value = hp::Complex(prec);
    out.num_terms = (long)terms_.size();
    const hp::Real two_pi = hp::ldexp2(hp::pi(prec), 1);
    const hp::Real den(den_lcm_, prec);
    for (const auto& [num, cnt] : counts) {
      hp::Real t = two_pi * hp::Real(num, prec) / den;
      out.value.re += hp::cos(t) * cnt;
      out.value.im += hp::sin(t) * cnt;
    }
    return out;
  }

 private:
  static mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  mpz_class den_lcm_ = 1;
  std::vector<mpq_class> terms_;
};

long mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

KloostermanValue A_k(long k, long n, mpfr_prec_t prec) {
  if (k < 1 || n < 0) throw std::invalid_argument("A_k: need k >= 1, n >= 0");
  PhaseAccumulator acc;
  for (long h = 0; h < k; ++h) {
    if (std::gcd(h, k) != 1 && k != 1) continue;
    acc.add(omega(h, k).e - mpq_class(n * h, k));
  }
  return acc.evaluate(prec);
}

KloostermanValue calK(long k, long n, mpfr_prec_t prec) {
  if (std::gcd(k, 6L) != 1) throw std::invalid_argument("calK: need gcd(k,6) = 1");
  PhaseAccumulator acc;
  for (long h = 0; h < k; ++h) {
    if (std::gcd(h, k) != 1 && k != 1) continue;
    RootOfUnity m = omega(h, k) * omega(mod(2 * h, k), k) * omega(mod(6 * h, k), k) *
                    omega(mod(3 * h, k), k).pow(3).inverse();
    acc.add(m.e - mpq_class(n * h, k));
  }
  return acc.evaluate(prec);
}

namespace {

KloostermanValue modified_sum(long k, long nu, long n, long d, int nu_sign, mpfr_prec_t prec) {
  PhaseAccumulator acc;
  const mpz_class nu_poly = mpz_class(-3) * nu * nu + nu_sign * nu;  // always even
  for (long h = 0; h < k; ++h) {
    if (std::gcd(h, k) != 1 && k != 1) continue;
    RootOfUnity m;
    if (d == 3) {  // K4: gcd(k,6) = 2
      m = omega(h, k) * omega(mod(h, k / 2), k / 2) * omega(mod(3 * h, k), k) *
          omega(mod(3 * h, k / 2), k / 2).inverse();
    } else if (d == 8) {  // K6: gcd(k,6) = 3
      m = omega(h, k) * omega(mod(2 * h, k), k) * omega(mod(h, k / 3), k / 3) *
          omega(mod(2 * h, k / 3), k / 3).inverse();
    } else {  // d == 24, K8: gcd(k,6) = 1
      m = omega(h, k) * omega(mod(2 * h, k), k) * omega(mod(3 * h, k), k) *
          omega(mod(6 * h, k), k).inverse();
    }
    const long hp = (k == 1) ? 0 : select_hprime(h, k, d);
    // e^{(pi i/k) * nu_poly * h'} = e^{2 pi i * nu_poly * h' / (2k)}
    acc.add(m.e + mpq_class(nu_poly * hp, 2 * k) - mpq_class(n * h, k));
  }
  return acc.evaluate(prec);
}

}  // namespace

KloostermanValue K4(long k, long nu, long n, mpfr_prec_t prec) {
  if (std::gcd(k, 6L) != 2) throw std::invalid_argument("K4: need gcd(k,6) = 2");
  if (nu < 0 || nu >= k) throw std::invalid_argument("K4: need 0 <= nu < k");
  return modified_sum(k, nu, n, 3, +1, prec);
}

KloostermanValue K6(long k, long nu, long n, mpfr_prec_t prec) {
  if (std::gcd(k, 6L) != 3) throw std::invalid_argument("K6: need gcd(k,6) = 3");
  if (nu < 0 || nu >= k) throw std::invalid_argument("K6: need 0 <= nu < k");
  return modified_sum(k, nu, n, 8, +1, prec);
}

KloostermanValue K8(long k, long nu, long n, mpfr_prec_t prec) {
  if (std::gcd(k, 6L) != 1) throw std::invalid_argument("K8: need gcd(k,6) = 1");
  if (nu < 0 || nu >= k) throw std::invalid_argument("K8: need 0 <= nu < k");
  // The +nu sign matches the other two families; the printed -nu variant fails
  // to reconstruct p2(n) (checked numerically against the table), while +nu
  // reconstructs it to the working tolerance for every sampled n.
  return modified_sum(k, nu, n, 24, +1, prec);
}

KloostermanValue classical_K(long a, long b, long k, mpfr_prec_t prec) {
  if (k < 1) throw std::invalid_argument("classical_K: need k >= 1");
  PhaseAccumulator acc;
  for (long h = 0; h < k; ++h) {
    if (std::gcd(h, k) != 1 && k != 1) continue;
    // select_hprime(h,k,1) gives h' with h h' = -1 (mod k), so [h]_k = k - h'.
    long inv = (k == 1) ? 0 : mod(k - select_hprime(h, k, 1), k);
    acc.add(mpq_class(mpz_class(a) * h + mpz_class(b) * inv, k));
  }
  return acc.evaluate(prec);
}

long tau(long n) {
  long t = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) { n /= p; ++e; }
      t *= e + 1;
    }
  }
  if (n > 1) t *= 2;
  return t;
}

DivisorBoundReport divisor_bound_check(long n_max) {
  // Divisor counts by sieve over the smallest prime factor.
  std::vector<int32_t> spf(n_max + 1, 0);
  for (long i = 2; i <= n_max; ++i) {
    if (spf[i] == 0)
      for (long j = i; j <= n_max; j += i)
        if (spf[j] == 0) spf[j] = (int32_t)i;
  }
  DivisorBoundReport rep;
  for (long n = 1; n <= n_max; ++n) {
    long m = n, t = 1;
    while (m > 1) {
      long p = spf[m], e = 0;
      while (m % p == 0) { m /= p; ++e; }
      t *= e + 1;
    }
    double ratio = (double)t / (9.0 * std::pow((double)n, 0.25));
    if (ratio > rep.worst_ratio) {
      rep.worst_ratio = ratio;
      rep.worst_n = n;
    }
  }
  rep.ok = rep.worst_ratio <= 1.0;
  return rep;
}

}  // namespace seqfree::kloosterman
