#include "seqfree/special_functions.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace seqfree::special_functions {

Real bessel_I1(const Real& x) {
  if (x.sign() < 0) throw std::invalid_argument("bessel_I1: x must be >= 0");
  const mpfr_prec_t prec = x.prec();
  const mpfr_prec_t wp = prec + 64;
  Real half(wp);
  mpfr_div_2ui(half.raw(), x.raw(), 1, MPFR_RNDN);  // x/2
  Real q = half * half;
  Real term = half;  // m = 0 term (x/2)/(0! 1!)
  Real sum = term;
  Real eps = hp::pow2(-(long)wp, wp);
  for (long m = 0;; ++m) {
    term = term * q / ((m + 1) * (m + 2));
    sum += term;
    if (term <= eps * sum) break;
  }
  Real out(prec);
  mpfr_set(out.raw(), sum.raw(), MPFR_RNDN);
  return out;
}

Real bessel_I32(const Real& x) {
  const mpfr_prec_t wp = x.prec() + 64;
  Real xx(wp);
  mpfr_set(xx.raw(), x.raw(), MPFR_RNDN);
  Real pref = hp::sqrt(Real(2, wp) / (hp::pi(wp) * xx));
  Real sum = pref * (hp::cosh(xx) - hp::sinh(xx) / xx);
  Real out(x.prec());
  mpfr_set(out.raw(), sum.raw(), MPFR_RNDN);
  return out;
}

mpq_class asymptotic_coefficient(int n, int nu) {
  mpq_class num = 1;
  for (int j = 0; j < n; ++j) {
    num *= mpq_class(1 - 2 * nu + 2 * j, 2) * mpq_class(1 + 2 * nu + 2 * j, 2);
  }
  mpq_class den = 1;
  for (int j = 1; j <= n; ++j) den *= 2 * j;
  mpq_class a = num / den;
  if (n % 2) a = -a;
  a.canonicalize();
  return a;
}

Real banerjee_E(int nu, int N, mpfr_prec_t prec) {
  const Real logN1 = hp::log(Real((long)N + 1, prec));
  const long c = (2L * nu + 1) * (nu + 2);
  Real e_nu1 = Real(1, prec) + Real(c, prec) / logN1 + Real(c, prec) / Real((long)N + 2, prec);
  Real two_pi = hp::ldexp2(hp::pi(prec), 1);
  Real tail = (hp::sqrt(Real(2, prec)) +
               Real(1, prec) / hp::sqrt(Real(nu + N, prec) + Real(mpq_class(3, 2), prec))) /
              logN1;
  return e_nu1 / hp::sqrt(two_pi) + tail;
}

std::pair<Real, Real> banerjee_expansion(const Real& x, int N) {
  if (x < 1) throw std::invalid_argument("banerjee_expansion: requires x >= 1");
  if (N < 1) throw std::invalid_argument("banerjee_expansion: requires N >= 1");
  const mpfr_prec_t prec = x.prec();
  const Real pref = hp::exp(x) / hp::sqrt(hp::ldexp2(hp::pi(prec), 1) * x);
  Real sum(0L, prec);
  Real xk(1L, prec);
  for (int j = 0; j <= N; ++j) {
    int sgn = (j % 2) ? -1 : 1;
    sum += Real(sgn * asymptotic_coefficient(j, 1), prec) / xk;
    xk *= x;
  }
  Real bound = pref * banerjee_E(1, N, prec) *
               Real(abs(asymptotic_coefficient(N + 1, 1)), prec) / xk;
  return {pref * sum, bound};
}

Real f_ab(const Real& a, const Real& b, const Real& x) {
  Real bx = b * x;
  Real num = hp::cos(a) * hp::cosh(bx) * 4L;
  Real den = hp::cos(a + a) + hp::cosh(bx + bx);
  return num / den;
}

std::vector<std::pair<Real, Real>> gauss_legendre(int npts, mpfr_prec_t prec) {
  static std::mutex mu;
  static std::map<std::pair<int, mpfr_prec_t>, std::vector<std::pair<Real, Real>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({npts, prec});
    if (it != cache.end()) return it->second;
  }
  if (npts % 2) throw std::invalid_argument("gauss_legendre: npts must be even");
  const mpfr_prec_t wp = prec + 32;
  std::vector<std::pair<Real, Real>> nw;
  const int m = npts / 2;
  for (int i = 1; i <= m; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n.
    Real x(std::cos(M_PI * (i - 0.25) / (npts + 0.5)), wp);
    Real pp(wp);
    for (int iter = 0; iter < 200; ++iter) {
      Real p0(1L, wp), p1(0L, wp);
      for (int j = 0; j < npts; ++j) {
        Real p2 = p1;
        p1 = p0;
        p0 = (Real(2 * j + 1, wp) * x * p1 - Real((long)j, wp) * p2) / (j + 1);
      }
      pp = Real((long)npts, wp) * (x * p0 - p1) / (x * x - Real(1L, wp));
      Real dx = p0 / pp;
      x -= dx;
      if (hp::abs(dx) <= hp::pow2(-(long)wp + 8, wp)) break;
    }
    Real w = Real(2L, wp) / ((Real(1L, wp) - x * x) * pp * pp);
    nw.emplace_back(x, w);
  }
  std::vector<std::pair<Real, Real>> full;
  for (int i = 0; i < m; ++i) full.emplace_back(-nw[i].first, nw[i].second);
  for (int i = m - 1; i >= 0; --i) full.emplace_back(nw[i].first, nw[i].second);
  std::lock_guard<std::mutex> lock(mu);
  cache[{npts, prec}] = full;
  return full;
}

QuadResult integrate(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                     const QuadratureConfig& cfg, mpfr_prec_t prec) {
  const mpfr_prec_t wp = prec + 96;
  auto nodes = gauss_legendre(cfg.panel_points, wp);
  Real prev(0L, wp);
  bool have_prev = false;
  const Real len = b - a;
  for (int level = 0; level <= cfg.max_refinements; ++level) {
    const long panels = 1L << level;
    Real total(0L, wp);
    Real h = len / panels;
    Real half = hp::ldexp2(h, -1);
    for (long p = 0; p < panels; ++p) {
      Real mid = a + h * p + half;
      Real panel_sum(0L, wp);
      for (const auto& [xi, wi] : nodes) panel_sum += wi * f(mid + half * xi);
      total += panel_sum * half;
    }
    if (have_prev) {
      Real err = hp::abs(total - prev);
      if (err <= cfg.abs_tol) {
        QuadResult r;
        r.value = Real(prec);
        mpfr_set(r.value.raw(), total.raw(), MPFR_RNDN);
        r.err = Real(prec);
        mpfr_set(r.err.raw(), err.raw(), MPFR_RNDN);
        r.refinements = level;
        return r;
      }
    }
    prev = total;
    have_prev = true;
  }
  throw QuadratureError("integrate: no convergence after max_refinements");
}

QuadResult curly_I(const mpq_class& b, long k, long nu, long n, mpfr_prec_t prec,
                   const QuadratureConfig& cfg) {
  if (b <= 0 || k < 1 || nu < 0 || nu > k)
    throw std::invalid_argument("curly_I: need b > 0, k >= 1, 0 <= nu < k");
  const mpfr_prec_t wp = prec + 96;
  const Real pi = hp::pi(wp);
  const Real a = pi * Real(mpq_class(6 * nu - 1, 6 * k), wp);        // (pi/k)(nu - 1/6)
  const Real bk = pi * hp::sqrt(Real(b / 3, wp)) / k;                // (pi/k) sqrt(b/3)
  const Real c = hp::ldexp2(pi, 1) * hp::sqrt(Real(b * 2 * n, wp)) / k;  // (2 pi/k) sqrt(2 b n)
  // Substitute x = sin(theta): the sqrt(1-x^2) endpoint factor becomes
  // cos(theta)^2 and the integrand is analytic on the whole panel.
  auto integrand = [&](const Real& theta) {
    Real ct = hp::cos(theta);
    return f_ab(a, bk, hp::sin(theta)) * ct * ct * bessel_I1(c * ct);
  };
  return integrate(integrand, Real(0L, wp), hp::ldexp2(pi, -1), cfg, prec);
}

Complex cosh_sqrt_scaled(const Complex& t, const Real& c_squared) {
  const mpfr_prec_t prec = std::max(t.prec(), c_squared.prec());
  Complex u = t * c_squared;  // cosh(sqrt(c^2 t)) = sum u^m/(2m)!
  Complex term(Real(1L, prec), Real(0L, prec));
  Complex sum = term;
  Real eps = hp::pow2(-(long)prec, prec);
  for (long m = 1; m < 1000; ++m) {
    term = term * u;
    term = {term.re / (2 * m * (2 * m - 1)), term.im / (2 * m * (2 * m - 1))};
    sum += term;
    if (hp::abs(term) <= eps * (hp::abs(sum) + Real(1L, prec))) break;
  }
  return sum;
}

Complex h_function(const Complex& z, long k) {
  const mpfr_prec_t prec = z.prec();
  if (hp::abs(z) >= Real(1L, prec)) throw std::invalid_argument("h_function: requires |z| < 1");
  const Real pi = hp::pi(prec);
  const Real pi2_54 = pi * pi / 54;
  const Complex one(Real(1L, prec), Real(0L, prec));
  Complex w = one - z * z;            // 1 - z^2, re > 0 on |z| < 1
  Complex u = one - w * w;            // 1 - (1-z^2)^2
  Complex num = cosh_sqrt_scaled(u, pi2_54);
  Complex den = cosh_sqrt_scaled(u, hp::ldexp2(pi2_54, 2));
  Real cos_pi6 = hp::cos(pi / 6);
  Real cos_pi3 = hp::cos(pi / 3);
  Complex frac = (num * (cos_pi6 * 4L)) / (den + Complex(cos_pi3, Real(0L, prec)));
  // (1-z^2)^{3/2-k} = sqrt(1-z^2) (1-z^2)^{1-k}, principal branch.
  Complex wpow = hp::sqrt(w) * hp::pow_si(w, 1 - k);
  Complex two_minus = Complex(Real(2L, prec), Real(0L, prec)) - z * z;
  return frac * wpow * hp::inv(hp::sqrt(two_minus));
}

namespace {

Real cosh_denominator_abs(const Real& r, double theta, mpfr_prec_t prec) {
  Complex z(r * hp::cos(Real(theta, prec)), r * hp::sin(Real(theta, prec)));
  const Real pi = hp::pi(prec);
  Complex one(Real(1L, prec), Real(0L, prec));
  Complex w = one - z * z;
  Complex u = one - w * w;
  Complex den = cosh_sqrt_scaled(u, hp::ldexp2(pi * pi / 54, 2));
  return hp::abs(den + Complex(hp::cos(pi / 3), Real(0L, prec)));
}

}  // namespace

CoshInfReport verify_cosh_infimum(const Real& r, int samples, mpfr_prec_t prec) {
  CoshInfReport rep;
  double best_theta = 0.0;
  Real best = cosh_denominator_abs(r, 0.0, prec);
  for (int i = 1; i < samples; ++i) {
    double th = 2.0 * M_PI * i / samples;
    Real v = cosh_denominator_abs(r, th, prec);
    if (v < best) {
      best = v;
      best_theta = th;
    }
  }
  // Golden-section refinement around the grid minimum.
  double lo = best_theta - 2.0 * M_PI / samples, hi = best_theta + 2.0 * M_PI / samples;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  Real f1 = cosh_denominator_abs(r, x1, prec), f2 = cosh_denominator_abs(r, x2, prec);
  for (int it = 0; it < 120; ++it) {
    if (f1 < f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = cosh_denominator_abs(r, x1, prec);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = cosh_denominator_abs(r, x2, prec);
    }
  }
  rep.theta_argmin = (lo + hi) / 2;
  rep.numeric_inf = cosh_denominator_abs(r, rep.theta_argmin, prec);
  if (best < rep.numeric_inf) rep.numeric_inf = best;

  const Real pi = hp::pi(prec);
  Real r2 = r * r, r4 = r2 * r2, r6 = r4 * r2, r8 = r4 * r4;
  Real inner = hp::sqrt(hp::ldexp2(hp::sqrt(r4 * 4L + r6 * 4L + r8) + r2 * 2L + r4, -1));
  rep.closed_form = hp::cos(pi / 3) + hp::cos(hp::ldexp2(pi, 1) / hp::sqrt(Real(54L, prec)) * inner);

  Real tol = hp::pow2(-(long)prec / 3, prec) * (hp::abs(rep.closed_form) + Real(1L, prec));
  rep.matches = hp::abs(rep.numeric_inf - rep.closed_form) <= tol;
  if (r.is_zero()) {
    rep.minimizer_near_half_pi = true;  // constant on the degenerate circle
  } else {
    double t = std::fmod(std::abs(rep.theta_argmin), 2.0 * M_PI);
    rep.minimizer_near_half_pi =
        std::abs(t - M_PI / 2) < 1e-3 || std::abs(t - 3 * M_PI / 2) < 1e-3;
  }
  return rep;
}

TransformReport verify_integral_transform(const Real& R, long k, long n, mpfr_prec_t prec,
                                          const QuadratureConfig& cfg) {
  if (!(R > 0) || !(R < 1) || k < 1)
    throw std::invalid_argument("verify_integral_transform: need 0 < R < 1, k >= 1");
  const mpfr_prec_t wp = prec + 96;
  const Real pi = hp::pi(wp);
  const Real c54 = pi / hp::sqrt(Real(54L, wp));  // pi sqrt(1/54)
  const Real cos_pi6 = hp::cos(pi / 6), cos_pi3 = hp::cos(pi / 3);
  const Real nr(n, wp);
  const Real expo = hp::ldexp2(pi, 1) / 3;  // 2 pi / 3
  auto lhs_integrand = [&](const Real& x) {
    Real fr = cos_pi6 * 4L * hp::cosh(c54 * x) / (cos_pi3 + hp::cosh(hp::ldexp2(c54, 1) * x));
    Real w = Real(1L, wp) - x * x;
    return fr * hp::pow_q(w, mpq_class(1, 4) - mpq_class(k, 2)) * hp::exp(expo * hp::sqrt(nr * w));
  };
  Real Rw(wp);
  mpfr_set(Rw.raw(), R.raw(), MPFR_RNDN);
  QuadResult L = integrate(lhs_integrand, Real(0L, wp), Rw, cfg, prec);

  Real rlim = hp::sqrt(Real(1L, wp) - hp::sqrt(Real(1L, wp) - Rw * Rw));
  Real scale = hp::ldexp2(hp::exp(expo * hp::sqrt(nr)), 1);
  auto rhs_integrand = [&](const Real& x) {
    Complex hz = h_function(Complex(x, Real(0L, wp)), k);
    return hz.re * hp::exp(-expo * hp::sqrt(nr) * x * x);
  };
  QuadResult Rq = integrate(rhs_integrand, Real(0L, wp), rlim, cfg, prec);

  TransformReport rep;
  rep.lhs = L.value;
  rep.rhs = Real(prec);
  Real rhs_full = scale * Rq.value;
  mpfr_set(rep.rhs.raw(), rhs_full.raw(), MPFR_RNDN);
  rep.err_lhs = L.err;
  rep.err_rhs = Rq.err * scale;
  Real budget = (rep.err_lhs + rep.err_rhs) * 10L +
                hp::pow2(-(long)prec / 2, prec) * (hp::abs(rep.lhs) + Real(1L, prec));
  rep.matches = hp::abs(rep.lhs - rep.rhs) <= budget;
  return rep;
}

SecSumReport sec_sum_check(long k_max) {
  SecSumReport rep;
  for (long k = 2; k <= k_max; ++k) {
    double sum = 0.0;
    for (long nu = 1; nu <= k; ++nu)
      sum += std::abs(1.0 / std::cos(M_PI * (nu - 1.0 / 6.0) / k));
    double ratio = sum / (8.0 * k * std::log((double)k));
    if (ratio > rep.worst_ratio) {
      rep.worst_ratio = ratio;
      rep.worst_k = k;
    }
  }
  rep.ok = rep.worst_ratio <= 1.0;
  return rep;
}

}  // namespace seqfree::special_functions
