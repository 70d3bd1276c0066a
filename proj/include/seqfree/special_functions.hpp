#pragma once

#include <gmpxx.h>

#include <functional>
#include <stdexcept>
#include <vector>

#include "seqfree/hp.hpp"

namespace seqfree::special_functions {

using hp::Complex;
using hp::Real;

// Modified Bessel I_1 via the convergent power series, evaluated with 64
// guard bits and rounded back to x's precision.
Real bessel_I1(const Real& x);

// I_{3/2}(x) = sqrt(2/(pi x)) (cosh x - sinh x / x), x > 0.
Real bessel_I32(const Real& x);

// a_n(nu) = (-1)^n (1/2-nu)_n (1/2+nu)_n / (2^n n!), an exact rational.
mpq_class asymptotic_coefficient(int n, int nu = 1);

// The explicit error factor E_nu^N of the effective I_nu expansion.
Real banerjee_E(int nu, int N, mpfr_prec_t prec);

// Truncated asymptotic expansion of I_1 with its explicit error bound:
// approx = e^x/sqrt(2 pi x) sum_{j<=N} (-1)^j a_j(1)/x^j,
// bound  = e^x/sqrt(2 pi x) E_1^N |a_{N+1}(1)|/x^{N+1}.
// Requires x >= 1 and N >= 1.
std::pair<Real, Real> banerjee_expansion(const Real& x, int N);

// f_{a,b}(x) = 4 cos(a) cosh(bx) / (cos(2a) + cosh(2bx))
//            = 1/cosh(ai+bx) + 1/cosh(ai-bx).
Real f_ab(const Real& a, const Real& b, const Real& x);

struct QuadratureConfig {
  Real abs_tol;
  int max_refinements = 24;
  int panel_points = 32;

  static QuadratureConfig standard(mpfr_prec_t prec) {
    QuadratureConfig cfg;
    cfg.abs_tol = hp::pow2(-64, prec);
    return cfg;
  }
};

struct QuadResult {
  Real value;
  Real err;  // |last two refinement levels' difference|
  int refinements = 0;
};

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gauss-Legendre nodes/weights on [-1,1], computed by Newton iteration on
// the Legendre recurrence at the requested precision.
std::vector<std::pair<Real, Real>> gauss_legendre(int npts, mpfr_prec_t prec);

// Composite Gauss-Legendre on [a,b] with panel doubling until the change
// between consecutive levels is <= cfg.abs_tol. Throws QuadratureError on
// non-convergence.
QuadResult integrate(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                     const QuadratureConfig& cfg, mpfr_prec_t prec);

// curly I_{b,k,nu}(n) = int_0^1 f_{a,b_k}(x) sqrt(1-x^2)
//                         I_1((2 pi/k) sqrt(2 b n (1-x^2))) dx
// with a = (pi/k)(nu - 1/6), b_k = (pi/k) sqrt(b/3).
QuadResult curly_I(const mpq_class& b, long k, long nu, long n, mpfr_prec_t prec,
                   const QuadratureConfig& cfg);

// cosh(c*sqrt(t)) = sum_m c^{2m} t^m/(2m)!; branch-free in t.
Complex cosh_sqrt_scaled(const Complex& t, const Real& c_squared);

// The analytic helper of the saddle-point analysis; requires |z| < 1.
Complex h_function(const Complex& z, long k);

struct CoshInfReport {
  Real numeric_inf;
  Real closed_form;
  double theta_argmin = 0.0;
  bool matches = false;
  bool minimizer_near_half_pi = false;
};

// Minimizes |cos(pi/3) + cosh(2 pi sqrt(1/54) sqrt(1-(1-z^2)^2))| over
// |z| = r and compares against the closed-form infimum.
CoshInfReport verify_cosh_infimum(const Real& r, int samples, mpfr_prec_t prec);

struct TransformReport {
  Real lhs, rhs;
  Real err_lhs, err_rhs;
  bool matches = false;  // |lhs-rhs| <= 10 (err_lhs + err_rhs)
};

// Checks both sides of the change-of-variables identity
//   int_0^R F(x) (1-x^2)^{1/4-k/2} e^{(2 pi/3) sqrt(n(1-x^2))} dx
//     = 2 e^{(2 pi/3) sqrt n} int_0^{sqrt(1-sqrt(1-R^2))} h(x,k)
//         e^{-(2 pi/3) sqrt n x^2} dx
// by independent quadratures.
TransformReport verify_integral_transform(const Real& R, long k, long n, mpfr_prec_t prec,
                                          const QuadratureConfig& cfg);

struct SecSumReport {
  bool ok = true;
  long worst_k = 2;
  double worst_ratio = 0.0;  // max over k of sum / (8 k log k)
};

// sum_{nu=1}^{k} |sec((pi/k)(nu-1/6))| <= 8 k log k for 2 <= k <= k_max.
SecSumReport sec_sum_check(long k_max);

}  // namespace seqfree::special_functions
