#pragma once

// Membership of ((1+z)/2)^m (1+z^k)/2 in the class of functions f with
// f(1) = 1 and |f(z)|^2 <= exp(-Re V(f) |1-z|^2) on the unit circle, where
// V(f) = f''(1) + f'(1) - f'(1)^2.
//
// With z = e^{i theta} and s = sin^2(theta/2) the membership defect is
//   H(m, k, theta) = exp(-(k^2 + m) s) - cos^2(k theta/2) (1 - s)^m,
// and H >= 0 exactly when m >= L(k, theta), where
//   L(k, theta) = (k^2 s + ln cos^2(k theta/2)) / (-ln(1 - s) - s).
// L = M + N splits the numerator into k^2 s and ln cos^2(k theta/2).

#include "unimodal_lab/bignum.hpp"
#include "unimodal_lab/certmax.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace unimodal_lab::eclass {

class ReductionViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- variance -------------------------------------------------------------

/// ((1+z)/2)^m
struct HalfOnePlusZPow {
  std::int64_t m;
};
/// (1+z^k)/2
struct HalfOnePlusZk {
  std::int64_t k;
};

/// A polynomial with rational coefficients and f(1) = 1, or one of the two
/// family members.
class VarianceInput {
 public:
  /// Rejects coefficient lists with f(1) != 1.
  static VarianceInput exact(std::vector<BigRational> coeffs);
  /// Divides by f(1); rejects f(1) = 0.
  static VarianceInput normalized(std::vector<BigRational> coeffs);
  static VarianceInput family(HalfOnePlusZPow f) { return VarianceInput(f); }
  static VarianceInput family(HalfOnePlusZk g) { return VarianceInput(g); }

  [[nodiscard]] const auto& value() const { return value_; }

 private:
  using Value = std::variant<std::vector<BigRational>, HalfOnePlusZPow, HalfOnePlusZk>;
  explicit VarianceInput(Value v) : value_(std::move(v)) {}
  Value value_;
};

/// V(f) = f''(1) + f'(1) - f'(1)^2, exactly.
BigRational variance(const VarianceInput& f);

/// Coefficients of ((1+z)/2)^m and (1+z^k)/2 as exact rationals.
std::vector<BigRational> half_one_plus_z_pow(std::int64_t m);
std::vector<BigRational> half_one_plus_z_k(std::int64_t k);

// --- H --------------------------------------------------------------------

/// Real polynomial with f(1) = 1 (not enforced), evaluated in double.
struct RealPoly {
  std::vector<double> coeffs;

  [[nodiscard]] std::complex<double> operator()(std::complex<double> z) const;
  /// f''(1) + f'(1) - f'(1)^2 in double.
  [[nodiscard]] double variance() const;
  [[nodiscard]] double at_one() const;
};

RealPoly operator*(const RealPoly& f, const RealPoly& g);

/// H(f)(e^{i theta}) = exp(-V(f) |1-z|^2) - |f(z)|^2.
double H_of(const RealPoly& f, double theta);

/// exp(-(k^2+m) sin^2(theta/2)) - cos^2(k theta/2) cos^2(theta/2)^m.
double H_family(std::int64_t m, std::int64_t k, double theta);

/// H_family divided by exp(-(k^2+m) sin^2(theta/2)); same sign as H_family
/// but on a scale where fixed thresholds are meaningful for large m.
double normalized_defect(std::int64_t m, std::int64_t k, double theta);

/// |H(fg) - (exp(-V(f)|1-z|^2) H(g) + |g|^2 H(f))| at z = e^{i theta},
/// relative to max(1, |H(fg)|, |each right-hand term|).
double H_product_identity_residual(const RealPoly& f, const RealPoly& g, double theta);

// --- L, M, N --------------------------------------------------------------

/// -ln(1 - s) - s = sum_{j>=2} s^j / j, without cancellation for small s.
double log_gap(double s);

/// Default guard half-width around the singular angles (2t+1) pi / k.
double default_exclusion_eps(std::int64_t k);

/// Distance from theta to the nearest singular angle (2t+1) pi / k.
double distance_to_singularity(std::int64_t k, double theta);

/// L(k, theta); -infinity within exclusion_eps of a singular angle.
double L_value(std::int64_t k, double theta, double exclusion_eps);
inline double L_value(std::int64_t k, double theta) {
  return L_value(k, theta, default_exclusion_eps(k));
}

/// The threshold function with the numerator s + ln cos^2(k theta/2), i.e.
/// without the k^2 weight. Only used to show that it does not split as M+N.
double L_unweighted_value(std::int64_t k, double theta);

/// M(k, theta) = k^2 s / (-ln(1-s) - s).
double M_value(std::int64_t k, double theta);

/// N(k, theta) = ln cos^2(k theta/2) / (-ln(1-s) - s) = L - M; -infinity in
/// the guard zones.
double N_value(std::int64_t k, double theta, double exclusion_eps);
inline double N_value(std::int64_t k, double theta) {
  return N_value(k, theta, default_exclusion_eps(k));
}

// --- threshold m(k) ---------------------------------------------------------

struct ThetaScan {
  std::int64_t k = 0;
  std::int64_t grid_points = 100000;
  double refine_tol = 1e-10;
  double exclusion_eps = 0.0;

  /// Validated scan; exclusion_eps defaults to 1e-8 pi / k.
  static ThetaScan make(std::int64_t k, std::int64_t grid_points = 100000, double refine_tol = 1e-10,
                        std::optional<double> exclusion_eps = std::nullopt);
};

struct EClassResult {
  std::int64_t k = 0;
  double max_L = 0.0;
  double argmax_theta = 0.0;
  std::int64_t m_of_k = 0;
  /// max_L within kNearIntegerTol of an integer; m_of_k then comes from
  /// direct membership certificates.
  bool near_integer = false;
  /// k < 9: outside the range where the reduction to (pi/k, 2pi/k] is backed
  /// by the interval lemmas. The computation still runs.
  bool below_supported_k = false;
  /// Largest L on the coarse scan of all of (0, pi).
  double coarse_full_max = 0.0;
  /// alpha_lo / (1 + 8/k^2) and alpha_hi, once an alpha enclosure is supplied.
  std::optional<double> sandwich_lo;
  std::optional<double> sandwich_hi;
};

inline constexpr double kNearIntegerTol = 1e-6;

/// Maximizes L over (pi/k, 2pi/k]: dense grid, then golden-section
/// refinement around the best grid point. A coarse scan of (0, pi) checks
/// that nothing outside beats it; throws ReductionViolation otherwise.
EClassResult max_L(const ThetaScan& scan);

/// Fills in the sandwich fields from an alpha enclosure.
void attach_sandwich(EClassResult& result, const certmax::Interval& alpha);

// --- membership -------------------------------------------------------------

enum class Membership { member, nonmember, inconclusive };
std::string to_string(Membership m);

inline constexpr double kMemberThreshold = -1e-12;
inline constexpr double kWitnessThreshold = -1e-9;

struct MembershipCertificate {
  Membership verdict = Membership::inconclusive;
  /// Smallest normalized defect on the grid and where it occurs.
  double min_defect = 0.0;
  double min_theta = 0.0;
  /// Set for nonmembers: an angle with normalized defect < kWitnessThreshold.
  std::optional<double> witness_theta;
};

/// Scans `grid_points` equally spaced angles in (0, pi), skipping the guard
/// zones (where the defect is positive anyway).
MembershipCertificate membership_certificate(std::int64_t m, std::int64_t k, std::int64_t grid_points);

// --- lemmas -----------------------------------------------------------------

struct Lemma23Result {
  double lhs = 0.0;  // -ln(1 - sin^2 psi) - sin^2 psi
  double rhs = 0.0;  // psi^4 / 2
  double margin = 0.0;
  bool holds = false;
};

/// Requires 0 <= psi <= 1/(2 sqrt 2).
Lemma23Result lemma23_check(double psi);

/// Pointwise and global comparison of L/k^4 with the limit shape D at
/// z = k theta / 2 over (pi/k, 2pi/k].
struct SandwichReport {
  std::int64_t k = 0;
  bool upper_checked = false;  // k >= 9
  bool lower_checked = false;  // k >= 8
  /// L/k^4 <= D(z).
  std::optional<double> upper_violation;
  /// L/k^4 >= 2/((1+8/k^2) z^2) + 2 ln(cos^2 z)/z^4.
  std::optional<double> lower_violation;
  /// Points where L/k^4 < D(z)/(1+8/k^2); this scaled-D form is not a
  /// pointwise bound where D(z) < 0.
  std::int64_t scaled_D_lower_failures = 0;
  double max_scaled_L = 0.0;
  bool max_in_enclosure = false;
  [[nodiscard]] bool holds() const {
    return !upper_violation && !lower_violation && max_in_enclosure;
  }
};

inline constexpr double kSandwichTol = 1e-9;

SandwichReport sandwich_check(std::int64_t k, const certmax::Interval& alpha, std::int64_t grid_points = 10000);

/// Grid maximum of L over the open interval (lo, hi).
double grid_max_L(std::int64_t k, double lo, double hi, std::int64_t grid_points);

struct DominationProbe {
  std::int64_t t = 0;
  double far_max = 0.0;   // on ((2t+3)pi/k, (2t+5)pi/k)
  double near_max = 0.0;  // on ((2t+1)pi/k, (2t+2)pi/k)
  [[nodiscard]] bool holds() const { return far_max < near_max; }
};

/// Compares grid maxima of L on ((2t+3)pi/k, (2t+5)pi/k) and
/// ((2t+1)pi/k, (2t+2)pi/k). Requires 2t + 5 <= k/2.
DominationProbe domination_probe(std::int64_t k, std::int64_t t, std::int64_t grid_points);

}  // namespace unimodal_lab::eclass
