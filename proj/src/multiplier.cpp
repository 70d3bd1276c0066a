#include "seqfree/multiplier.hpp"

#include <numeric>
#include <stdexcept>

namespace seqfree::multiplier {

int jacobi_symbol(const mpz_class& a, const mpz_class& n) {
  if (n <= 0 || mpz_even_p(n.get_mpz_t()))
    throw std::invalid_argument("jacobi_symbol: n must be odd and positive");
  return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

long select_hprime(long h, long k, long d) {
  if (std::gcd(h, k) != 1 || std::gcd(d, k) != 1)
    throw std::invalid_argument("select_hprime: gcd constraints violated");
  if (k == 1) return 0;
  mpz_class inv;
  mpz_class hz(h), kz(k);
  if (mpz_invert(inv.get_mpz_t(), hz.get_mpz_t(), kz.get_mpz_t()) == 0)
    throw std::invalid_argument("select_hprime: h not invertible mod k");
  long base = mpz_class((kz - inv) % kz).get_si();  // h*base == -1 (mod k)
  for (long hp = base; hp < d * k; hp += k)
    if (hp % d == 0) return hp;
  throw std::logic_error("select_hprime: no representative found");
}

hp::Complex eval(const RootOfUnity& w, mpfr_prec_t prec) {
  hp::Real t = hp::ldexp2(hp::pi(prec), 1) * hp::Real(w.e, prec);
  return {hp::cos(t), hp::sin(t)};
}

RootOfUnity omega(long h, long k) {
  if (k < 1 || h < 0 || h >= k || std::gcd(h, k) != 1)
    throw std::invalid_argument("omega: need 0 <= h < k, gcd(h,k) = 1");
  if (h == 0) return RootOfUnity(mpq_class(0));  // k = 1

  const long hp = select_hprime(h, k, 1);
  mpz_class hz(h), kz(k), hpz(hp);
  // (k - 1/k)(2h - h' + h^2 h') / 12 as an exact rational.
  mpq_class frac = mpq_class((kz * kz - 1) * (2 * hz - hpz + hz * hz * hpz), 12 * kz);

  int jac;
  mpq_class t;  // omega = jac * e^{-pi i t}
  if (h % 2 == 1) {
    jac = jacobi_symbol(-kz, hz);
    t = mpq_class(2 - hz * kz - hz, 4) + frac;
  } else {
    jac = jacobi_symbol(-hz, kz);
    t = mpq_class(kz - 1, 4) + frac;
  }
  mpq_class e = -t / 2;  // e^{-pi i t} = e^{2 pi i (-t/2)}
  if (jac < 0) e += mpq_class(1, 2);
  return RootOfUnity(e);
}

mpq_class dedekind_sum(long h, long k) {
  if (k < 1 || std::gcd(((h % k) + k) % k, k) != 1)
    throw std::invalid_argument("dedekind_sum: need gcd(h,k) = 1, k >= 1");
  // s(h,k) = -1/4 + (h^2 + k^2 + 1)/(12hk) - s(k mod h, h), s(*,1) = 0.
  mpq_class s = 0;
  long sign = 1;
  long a = ((h % k) + k) % k;
  long b = k;
  while (a != 0) {
    mpz_class az(a), bz(b);
    s += sign * (mpq_class(az * az + bz * bz + 1, 12 * az * bz) - mpq_class(1, 4));
    long r = b % a;
    b = a;
    a = r;
    sign = -sign;
  }
  s.canonicalize();
  return s;
}

mpq_class dedekind_sum_direct(long h, long k) {
  // s(h,k) = sum_{mu=1}^{k-1} ((mu/k))((h*mu/k)) with sawtooth ((x)).
  auto saw = [](long num, long den) -> mpq_class {
    long r = ((num % den) + den) % den;
    if (r == 0) return mpq_class(0);
    return mpq_class(r, den) - mpq_class(1, 2);
  };
  mpq_class s = 0;
  for (long mu = 1; mu < k; ++mu) s += saw(mu, k) * saw(h * mu, k);
  s.canonicalize();
  return s;
}

}  // namespace seqfree::multiplier
