#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace seqfree::hp {

// Arbitrary-precision real backed by MPFR, round-to-nearest throughout.
// The precision travels with the value; binary operations widen to the
// larger operand precision.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 192) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(int x, mpfr_prec_t prec) : Real(static_cast<long>(x), prec) {}
  Real(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
  Real(const mpz_class& x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
  }
  Real(const mpq_class& x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
  }

  Real(const Real& o) { mpfr_init2(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, o.prec()); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, o.prec());
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  mpz_class round_to_integer() const {
    Real t(prec());
    mpfr_rint(t.v_, v_, MPFR_RNDN);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
    return z;
  }
  std::string str(size_t digits = 30) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", (int)digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }

  Real& operator+=(const Real& o) { bump(o.prec()); mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { bump(o.prec()); mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { bump(o.prec()); mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { bump(o.prec()); mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend Real operator+(Real a, const Real& b) { a += b; return a; }
  friend Real operator-(Real a, const Real& b) { a -= b; return a; }
  friend Real operator*(Real a, const Real& b) { a *= b; return a; }
  friend Real operator/(Real a, const Real& b) { a /= b; return a; }
  friend Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(Real a, long b) { mpfr_mul_si(a.v_, a.v_, b, MPFR_RNDN); return a; }
  friend Real operator*(long b, Real a) { mpfr_mul_si(a.v_, a.v_, b, MPFR_RNDN); return a; }
  friend Real operator/(Real a, long b) { mpfr_div_si(a.v_, a.v_, b, MPFR_RNDN); return a; }
  friend Real operator+(Real a, long b) { mpfr_add_si(a.v_, a.v_, b, MPFR_RNDN); return a; }
  friend Real operator-(Real a, long b) { mpfr_sub_si(a.v_, a.v_, b, MPFR_RNDN); return a; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

 private:
  void bump(mpfr_prec_t p) {
    if (p > prec()) mpfr_prec_round(v_, p, MPFR_RNDN);
  }
  mpfr_t v_;
};

#define SEQFREE_HP_UNARY(name, mpfr_fn)               \
  inline Real name(const Real& x) {                   \
    Real r(x.prec());                                 \
    mpfr_fn(r.raw(), x.raw(), MPFR_RNDN);             \
    return r;                                         \
  }

SEQFREE_HP_UNARY(sqrt, mpfr_sqrt)
SEQFREE_HP_UNARY(exp, mpfr_exp)
SEQFREE_HP_UNARY(log, mpfr_log)
SEQFREE_HP_UNARY(cos, mpfr_cos)
SEQFREE_HP_UNARY(sin, mpfr_sin)
SEQFREE_HP_UNARY(cosh, mpfr_cosh)
SEQFREE_HP_UNARY(sinh, mpfr_sinh)
SEQFREE_HP_UNARY(abs, mpfr_abs)

#undef SEQFREE_HP_UNARY

inline Real pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

inline Real pow(const Real& x, const Real& y) {
  Real r(std::max(x.prec(), y.prec()));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

inline Real pow_si(const Real& x, long e) {
  Real r(x.prec());
  mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

// x^(p/q) for x > 0.
inline Real pow_q(const Real& x, const mpq_class& e) {
  return pow(x, Real(e, x.prec()));
}

inline Real ldexp2(const Real& x, long e) {  // x * 2^e
  Real r(x.prec());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

inline Real pow2(long e, mpfr_prec_t prec) {  // 2^e
  Real r(1, prec);
  return ldexp2(r, e);
}

// Complex value as a pair of Reals; only the operations the library needs.
struct Complex {
  Real re, im;

  explicit Complex(mpfr_prec_t prec = 192) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }

  friend Complex operator+(Complex a, const Complex& b) { a += b; return a; }
  friend Complex operator-(Complex a, const Complex& b) { a -= b; return a; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
};

inline Real abs(const Complex& z) {
  Real r(z.prec());
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
  return r;
}

inline Complex cosh(const Complex& z) {
  return {cosh(z.re) * cos(z.im), sinh(z.re) * sin(z.im)};
}

inline Complex exp(const Complex& z) {
  Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

// Principal branch, via the cartesian closed form.
inline Complex sqrt(const Complex& z) {
  Real m = abs(z);
  Real u = sqrt(ldexp2(m + z.re, -1));
  Real v = sqrt(ldexp2(m - z.re, -1));
  if (z.im.sign() < 0) v = -v;
  return {u, v};
}

inline Complex inv(const Complex& z) {
  Real d = z.re * z.re + z.im * z.im;
  return {z.re / d, -z.im / d};
}

inline Complex pow_si(const Complex& z, long e) {
  mpfr_prec_t p = z.prec();
  Complex acc(Real(1L, p), Real(0L, p));
  Complex base = e < 0 ? inv(z) : z;
  unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

}  // namespace seqfree::hp
