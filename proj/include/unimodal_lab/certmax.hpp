#pragma once

// Enclosure of alpha = max D on (pi/2, pi), where
//   D(z) = 2 (1/z^2 + ln(cos^2 z) / z^4),
// and of the unique critical point of D there.
//
// D'(z) = -(4/z^5) p(z) with p(z) = z^2 + z tan z + 2 ln cos^2 z, and p is
// strictly increasing on the interval, so the critical point is the unique
// sign change of p. The upper bound comes from intersecting the tangent
// lines of a concave function at two points that bracket its maximum.
//
// Everything is plain double precision. The bounds carry a fixed slack of
// kBoundSlack rather than directed rounding; they are as trustworthy as the
// libm evaluations behind them, not interval-arithmetic rigorous.

#include <functional>
#include <stdexcept>
#include <string>

namespace unimodal_lab::certmax {

class BracketFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval make(double lo, double hi);
  [[nodiscard]] double width() const { return hi - lo; }
  [[nodiscard]] double mid() const { return 0.5 * (lo + hi); }
  [[nodiscard]] bool contains(double x) const { return lo <= x && x <= hi; }
  [[nodiscard]] bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
};

struct CertifiedMax {
  /// Contains the unique zero of p (the maximizer of D).
  Interval crit_bracket;
  /// Contains alpha.
  Interval value_enclosure;
  /// Number of D / p evaluations spent.
  long evaluations = 0;
};

inline constexpr double kEndpointInset = 1e-6;
inline constexpr double kBoundSlack = 1e-12;

/// D(z); -infinity where cos z = 0.
double D_value(double z);

/// D'(z) = -(4/z^5) p(z).
double D_prime(double z);

/// p(z) = z^2 + z tan z + 2 ln cos^2 z; -infinity where cos z = 0.
double p_value(double z);

/// Bisection on the sign of p over [pi/2 + inset, pi - inset] down to a
/// bracket of width <= tol with p(lo) < 0 < p(hi).
/// Throws BracketFailure if the endpoint signs are not (-, +).
Interval bracket_critical(double tol);

/// Scalar function with its derivative, for tangent_upper_bound.
struct DifferentiableFn {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
};

/// Upper bound for max q on [x1, x2] for concave q with q'(x1) > 0 > q'(x2):
/// the value of the tangent at x1 where it meets the tangent at x2.
/// Checks the derivative signs and, with centred second differences, that q
/// is concave at x1, the midpoint and x2. Throws PreconditionViolation.
double tangent_upper_bound(const DifferentiableFn& q, double x1, double x2);

/// The same bound for D.
double tangent_upper_bound(double x1, double x2);

/// Encloses alpha in an interval of width <= tol. The lower end is the best
/// sampled value of D (bracket endpoints plus `local_grid` interior points)
/// minus slack; the upper end is the tangent bound plus slack. The bracket is
/// halved until the enclosure is narrow enough.
CertifiedMax certified_alpha(double tol, int local_grid = 64);

}  // namespace unimodal_lab::certmax
