#include "unimodal_lab/certmax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace unimodal_lab::certmax {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kSecondDiffStep = 1e-4;

double second_difference(const std::function<double(double)>& f, double x) {
  const double h = kSecondDiffStep;
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

struct SignBracket {
  double lo;
  double hi;
};

SignBracket initial_bracket() {
  SignBracket b{kPi / 2 + kEndpointInset, kPi - kEndpointInset};
  const double p_lo = p_value(b.lo);
  const double p_hi = p_value(b.hi);
  if (!(p_lo < 0.0 && p_hi > 0.0)) {
    throw BracketFailure("p does not change sign from - to + on (pi/2, pi): p(lo) = " + std::to_string(p_lo) +
                         ", p(hi) = " + std::to_string(p_hi));
  }
  return b;
}

// One bisection step; returns false once the midpoint is no longer strictly
// inside (the bracket is at double resolution).
bool bisect_once(SignBracket& b) {
  const double mid = 0.5 * (b.lo + b.hi);
  if (!(mid > b.lo && mid < b.hi)) return false;
  const double pm = p_value(mid);
  if (pm < 0.0) {
    b.lo = mid;
  } else if (pm > 0.0) {
    b.hi = mid;
  } else {
    // Exact zero: shrink to the smallest bracket around it that keeps strict signs.
    b.lo = std::nextafter(mid, b.lo);
    b.hi = std::nextafter(mid, b.hi);
    return false;
  }
  return true;
}

}  // namespace

Interval Interval::make(double lo, double hi) {
  if (!(lo <= hi)) throw std::invalid_argument("Interval: lo must be <= hi");
  return Interval{lo, hi};
}

double D_value(double z) {
  const double c = std::cos(z);
  if (c == 0.0) return kNegInf;
  const double z2 = z * z;
  return 2.0 * (1.0 / z2 + std::log(c * c) / (z2 * z2));
}

double p_value(double z) {
  const double c = std::cos(z);
  if (c == 0.0) return kNegInf;
  return z * z + z * std::tan(z) + 2.0 * std::log(c * c);
}

double D_prime(double z) {
  const double z2 = z * z;
  return -4.0 / (z2 * z2 * z) * p_value(z);
}

Interval bracket_critical(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("bracket_critical: tol must be > 0");
  SignBracket b = initial_bracket();
  while (b.hi - b.lo > tol && bisect_once(b)) {
  }
  return Interval{b.lo, b.hi};
}

double tangent_upper_bound(const DifferentiableFn& q, double x1, double x2) {
  if (!(x1 < x2)) throw PreconditionViolation("tangent_upper_bound: need x1 < x2");
  const double d1 = q.derivative(x1);
  const double d2 = q.derivative(x2);
  if (!(d1 > 0.0)) throw PreconditionViolation("tangent_upper_bound: q'(x1) must be > 0");
  if (!(d2 < 0.0)) throw PreconditionViolation("tangent_upper_bound: q'(x2) must be < 0");
  for (double x : {x1, 0.5 * (x1 + x2), x2}) {
    if (!(second_difference(q.value, x) < 0.0)) {
      throw PreconditionViolation("tangent_upper_bound: q is not concave at " + std::to_string(x));
    }
  }
  const double q1 = q.value(x1);
  const double q2 = q.value(x2);
  const double x_star = (q2 - q1 + d1 * x1 - d2 * x2) / (d1 - d2);
  return q1 + d1 * (x_star - x1);
}

double tangent_upper_bound(double x1, double x2) {
  return tangent_upper_bound(DifferentiableFn{D_value, D_prime}, x1, x2);
}

CertifiedMax certified_alpha(double tol, int local_grid) {
  if (!(tol > 4.0 * kBoundSlack)) throw std::invalid_argument("certified_alpha: tol too small");
  if (local_grid < 0) throw std::invalid_argument("certified_alpha: local_grid must be >= 0");

  CertifiedMax out;
  SignBracket b = initial_bracket();
  out.evaluations += 2;
  // Concavity only holds near the critical point; narrow first.
  while (b.hi - b.lo > 1e-2 && bisect_once(b)) ++out.evaluations;

  for (;;) {
    double best = std::max(D_value(b.lo), D_value(b.hi));
    for (int i = 1; i <= local_grid; ++i) {
      best = std::max(best, D_value(b.lo + (b.hi - b.lo) * i / (local_grid + 1)));
    }
    // 3 second differences x 3 evaluations, 2 values and 2 derivatives.
    const double upper = tangent_upper_bound(b.lo, b.hi);
    out.evaluations += 2 + local_grid + 13;
    out.crit_bracket = Interval{b.lo, b.hi};
    out.value_enclosure = Interval{best - kBoundSlack, upper + kBoundSlack};
    if (out.value_enclosure.width() <= tol) break;
    if (!bisect_once(b)) break;
    ++out.evaluations;
  }
  return out;
}

}  // namespace unimodal_lab::certmax
