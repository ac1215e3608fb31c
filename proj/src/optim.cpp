#include "qredux/optim.hpp"

#include "qredux/asymptotics.hpp"
#include "qredux/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qredux::optim {

using specfun::log_gamma;
using specfun::trigamma;

namespace {

constexpr double kLog2 = 0.69314718055994530942;

struct BrentMin {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
  double tol_achieved = 0.0;
};

// Brent minimization (golden section with parabolic steps).
template <class F>
BrentMin brent_minimize(F&& f, double a, double b, double tol, int max_iter = 200) {
  const double gold = 0.3819660112501051;
  double x = a + gold * (b - a), w = x, v = x;
  double fx = f(x), fw = fx, fv = fx;
  double d = 0.0, e = 0.0;
  BrentMin out;
  for (int iter = 0; iter < max_iter; ++iter) {
    double m = 0.5 * (a + b);
    double tol1 = tol * std::abs(x) + 1e-15;
    double tol2 = 2.0 * tol1;
    out.iterations = iter + 1;
    out.tol_achieved = std::abs(x - m) + 0.5 * (b - a);
    if (std::abs(x - m) <= tol2 - 0.5 * (b - a)) break;
    bool golden = true;
    if (std::abs(e) > tol1) {
      // parabolic fit through x, w, v
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      if (std::abs(p) < std::abs(0.5 * q * e) && p > q * (a - x) && p < q * (b - x)) {
        e = d;
        d = p / q;
        double uu = x + d;
        if (uu - a < tol2 || b - uu < tol2) d = std::copysign(tol1, m - x);
        golden = false;
      }
    }
    if (golden) {
      e = (x < m) ? b - x : a - x;
      d = gold * e;
    }
    double uu = (std::abs(d) >= tol1) ? x + d : x + std::copysign(tol1, d);
    double fu = f(uu);
    if (fu <= fx) {
      if (uu < x)
        b = x;
      else
        a = x;
      v = w;
      fv = fw;
      w = x;
      fw = fx;
      x = uu;
      fx = fu;
    } else {
      if (uu < x)
        a = uu;
      else
        b = uu;
      if (fu <= fw || w == x) {
        v = w;
        fv = fw;
        w = uu;
        fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = uu;
        fv = fu;
      }
    }
  }
  out.x = x;
  out.fx = fx;
  return out;
}

struct BrentRoot {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
};

// Bracketed Brent root finding.
template <class F>
BrentRoot brent_root(F&& f, double a, double b, double tol, int max_iter = 200) {
  double fa = f(a), fb = f(b);
  if (fa * fb > 0.0) throw std::runtime_error("brent_root: endpoints do not bracket a root");
  if (std::abs(fa) < std::abs(fb)) {
    std::swap(a, b);
    std::swap(fa, fb);
  }
  double c = a, fc = fa, d = b - a;
  bool mflag = true;
  BrentRoot out;
  for (int iter = 0; iter < max_iter; ++iter) {
    out.iterations = iter + 1;
    if (fb == 0.0 || std::abs(b - a) < tol) break;
    double s;
    if (fa != fc && fb != fc) {
      s = a * fb * fc / ((fa - fb) * (fa - fc)) + b * fa * fc / ((fb - fa) * (fb - fc)) +
          c * fa * fb / ((fc - fa) * (fc - fb));
    } else {
      s = b - fb * (b - a) / (fb - fa);
    }
    double lo = 0.25 * (3.0 * a + b), hi = b;
    if (lo > hi) std::swap(lo, hi);
    bool bad = (s < lo || s > hi) || (mflag && std::abs(s - b) >= 0.5 * std::abs(b - c)) ||
               (!mflag && std::abs(s - b) >= 0.5 * std::abs(c - d));
    if (bad) {
      s = 0.5 * (a + b);
      mflag = true;
    } else {
      mflag = false;
    }
    double fs = f(s);
    d = c;
    c = b;
    fc = fb;
    if (fa * fs < 0.0) {
      b = s;
      fb = fs;
    } else {
      a = s;
      fa = fs;
    }
    if (std::abs(fa) < std::abs(fb)) {
      std::swap(a, b);
      std::swap(fa, fb);
    }
  }
  out.x = b;
  out.fx = fb;
  return out;
}

} // namespace

double f_ru(double r, double u) {
  if (!(u < 1.0)) throw std::domain_error("f_ru: u must be < 1");
  if (!(r > 0.0 && r <= 1.0)) throw std::domain_error("f_ru: r outside (0, 1]");
  if (r == 1.0) {
    if (u < 0.5) return std::numeric_limits<double>::infinity();
    if (u > 0.5) return -std::numeric_limits<double>::infinity();
    return -kLog2 + log_gamma(0.5) - log_gamma(2.0);
  }
  return -(1.0 - u) * (std::log1p(-r) + std::log1p(r)) +
         0.5 * (std::log1p(-r) - std::log1p(r)) / r + log_gamma(1.0 - u) - log_gamma(2.5 - u);
}

double stationary_u_of_r(double r) {
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("stationary_u_of_r: r outside (0, 1)");
  if (r < 0.02) {
    // the closed form subtracts 1/(2r^2)-sized terms; the series
    // 2/3 - r^2/15 - r^4/35 - O(r^6) is exact to ~5e-12 at the seam
    double r2 = r * r;
    return 2.0 / 3.0 - r2 / 15.0 - r2 * r2 / 35.0;
  }
  const double lr = std::log1p(-r) - std::log1p(r); // log((1-r)/(1+r))
  return 1.0 - 0.5 / (r * r) - (1.0 - r * r) / (4.0 * r * r * r) * lr;
}

MinimaxResult solve_minimax(double tol) {
  if (tol < 1e-10) tol = 1e-10;
  auto g = [](double r) { return f_ru(r, stationary_u_of_r(r)); };
  auto m = brent_minimize(g, 0.5, 0.999, tol);
  MinimaxResult res;
  res.r_star = m.x;
  res.u_star = stationary_u_of_r(m.x);
  res.f_value = m.fx;
  res.constant = m.fx - 0.5 - 1.5 * kLog2;
  res.iterations = m.iterations;
  res.tolerance_achieved = m.tol_achieved;
  return res;
}

double maximin_equation_residual(double u) {
  if (!(u > 0.0 && u < 1.0)) throw std::domain_error("maximin_equation_residual: u outside (0, 1)");
  const double omu = 1.0 - u;
  return 2.0 * omu * omu * omu * (trigamma(omu) - trigamma(2.5 - u)) - 1.0;
}

MaximinResult solve_maximin(double tol) {
  if (tol < 1e-10) tol = 1e-10;
  auto root = brent_root(maximin_equation_residual, 0.3, 0.8, tol);
  MaximinResult res;
  res.u_star = root.x;
  res.constant = bayes_constant_d8(root.x);
  res.iterations = root.iterations;
  res.residual = root.fx;
  return res;
}

double bayes_constant_d8(double u) {
  if (!(u < 1.0)) throw std::domain_error("bayes_constant_d8: u must be < 1");
  return asymptotics::vn_entropy_asymptotic(u).constant_term;
}

} // namespace qredux::optim
