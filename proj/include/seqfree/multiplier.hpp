#pragma once

#include <gmpxx.h>

#include "seqfree/hp.hpp"

namespace seqfree::multiplier {

// Jacobi symbol (a/n) for odd positive n; a may be any integer.
int jacobi_symbol(const mpz_class& a, const mpz_class& n);

// The unique h' in [0, d*k) with h*h' == -1 (mod k) and d | h'.
// Requires gcd(h,k) = gcd(d,k) = 1.
long select_hprime(long h, long k, long d);

// Exact e^{2*pi*i*e} with rational exponent e normalized into [0,1).
struct RootOfUnity {
  mpq_class e;

  RootOfUnity() : e(0) {}
  explicit RootOfUnity(mpq_class exponent) : e(std::move(exponent)) { normalize(); }

  void normalize() {
    e.canonicalize();
    mpz_class fl = e.get_num() / e.get_den();
    if (e < 0 && fl * e.get_den() != e.get_num()) fl -= 1;
    e -= fl;
  }

  RootOfUnity& operator*=(const RootOfUnity& o) {
    e += o.e;
    normalize();
    return *this;
  }
  friend RootOfUnity operator*(RootOfUnity a, const RootOfUnity& b) { a *= b; return a; }
  RootOfUnity inverse() const { return RootOfUnity(-e); }
  RootOfUnity pow(long n) const { return RootOfUnity(e * n); }
  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) { return a.e == b.e; }
};

hp::Complex eval(const RootOfUnity& w, mpfr_prec_t prec);

// Eta multiplier omega_{h,k}; requires 0 <= h < k, gcd(h,k) = 1.
// A 24k-th root of unity; omega_{0,1} = 1.
RootOfUnity omega(long h, long k);

// Dedekind sum s(h,k) as an exact rational (reciprocity recursion).
mpq_class dedekind_sum(long h, long k);
// Direct O(k) sawtooth evaluation, kept as an independent oracle.
mpq_class dedekind_sum_direct(long h, long k);

}  // namespace seqfree::multiplier
