#include "unimodal_lab/eclass.hpp"

#include "unimodal_lab/golden.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace unimodal_lab::eclass {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double sin_half_sq(double theta) {
  const double s = std::sin(0.5 * theta);
  return s * s;
}

double log_cos_sq(double x) {
  const double c = std::cos(x);
  return c == 0.0 ? kNegInf : std::log(c * c);
}

BigRational rational_sum(std::span<const BigRational> c) {
  BigRational total = 0;
  for (const auto& v : c) total += v;
  return total;
}

// sin(x) - x without cancellation for small x.
double sin_minus_x(double x) {
  if (std::abs(x) > 0.1) return std::sin(x) - x;
  const double x2 = x * x;
  double term = -x * x2 / 6.0;
  double sum = 0.0;
  for (int n = 3; term != 0.0 && std::abs(term) > 1e-20 * std::abs(sum); n += 2) {
    sum += term;
    term *= -x2 / ((n + 1.0) * (n + 2.0));
  }
  return sum;
}

}  // namespace

// --- variance ---------------------------------------------------------------

VarianceInput VarianceInput::exact(std::vector<BigRational> coeffs) {
  if (rational_sum(coeffs) != 1) throw std::invalid_argument("VarianceInput: f(1) must equal 1");
  return VarianceInput(std::move(coeffs));
}

VarianceInput VarianceInput::normalized(std::vector<BigRational> coeffs) {
  const BigRational total = rational_sum(coeffs);
  if (total == 0) throw std::invalid_argument("VarianceInput: f(1) = 0 cannot be normalized");
  for (auto& c : coeffs) c /= total;
  return VarianceInput(std::move(coeffs));
}

BigRational variance(const VarianceInput& f) {
  struct Visitor {
    BigRational operator()(const std::vector<BigRational>& c) const {
      BigRational d1 = 0;
      BigRational d2 = 0;
      for (std::size_t j = 0; j < c.size(); ++j) {
        const long jj = static_cast<long>(j);
        d1 += c[j] * jj;
        d2 += c[j] * (jj * (jj - 1));
      }
      return d2 + d1 - d1 * d1;
    }
    BigRational operator()(HalfOnePlusZPow f) const { return make_rational(BigInt(static_cast<long>(f.m)), 4); }
    BigRational operator()(HalfOnePlusZk g) const {
      return make_rational(BigInt(static_cast<long>(g.k * g.k)), 4);
    }
  };
  return std::visit(Visitor{}, f.value());
}

std::vector<BigRational> half_one_plus_z_pow(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("half_one_plus_z_pow: m must be >= 0");
  std::vector<BigRational> out(static_cast<std::size_t>(m) + 1);
  BigInt scale = 1;
  scale <<= static_cast<mp_bitcnt_t>(m);
  for (std::int64_t j = 0; j <= m; ++j) {
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(j));
    out[static_cast<std::size_t>(j)] = make_rational(c, scale);
  }
  return out;
}

std::vector<BigRational> half_one_plus_z_k(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("half_one_plus_z_k: k must be >= 1");
  std::vector<BigRational> out(static_cast<std::size_t>(k) + 1, BigRational(0));
  out.front() = BigRational(1, 2);
  out.back() = BigRational(1, 2);
  return out;
}

// --- H ------------------------------------------------------------------------

std::complex<double> RealPoly::operator()(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double RealPoly::at_one() const {
  double total = 0.0;
  for (double c : coeffs) total += c;
  return total;
}

double RealPoly::variance() const {
  double d1 = 0.0;
  double d2 = 0.0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const double jj = static_cast<double>(j);
    d1 += jj * coeffs[j];
    d2 += jj * (jj - 1.0) * coeffs[j];
  }
  return d2 + d1 - d1 * d1;
}

RealPoly operator*(const RealPoly& f, const RealPoly& g) {
  if (f.coeffs.empty() || g.coeffs.empty()) return RealPoly{};
  RealPoly out{std::vector<double>(f.coeffs.size() + g.coeffs.size() - 1, 0.0)};
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) out.coeffs[i + j] += f.coeffs[i] * g.coeffs[j];
  }
  return out;
}

double H_of(const RealPoly& f, double theta) {
  const double dist_sq = 4.0 * sin_half_sq(theta);  // |1 - z|^2
  return std::exp(-f.variance() * dist_sq) - std::norm(f(std::polar(1.0, theta)));
}

double H_family(std::int64_t m, std::int64_t k, double theta) {
  const double s = sin_half_sq(theta);
  const double kk = static_cast<double>(k) * static_cast<double>(k);
  const double md = static_cast<double>(m);
  const double ck = std::cos(0.5 * static_cast<double>(k) * theta);
  return std::exp(-(kk + md) * s) - ck * ck * std::exp(md * std::log1p(-s));
}

double normalized_defect(std::int64_t m, std::int64_t k, double theta) {
  const double s = sin_half_sq(theta);
  const double kk = static_cast<double>(k) * static_cast<double>(k);
  const double e = log_cos_sq(0.5 * static_cast<double>(k) * theta) + kk * s - static_cast<double>(m) * log_gap(s);
  return -std::expm1(e);
}

double H_product_identity_residual(const RealPoly& f, const RealPoly& g, double theta) {
  const double dist_sq = 4.0 * sin_half_sq(theta);
  const double left = H_of(f * g, theta);
  const double first = std::exp(-f.variance() * dist_sq) * H_of(g, theta);
  const double second = std::norm(g(std::polar(1.0, theta))) * H_of(f, theta);
  const double scale = std::max({1.0, std::abs(left), std::abs(first), std::abs(second)});
  return std::abs(left - (first + second)) / scale;
}

// --- L, M, N --------------------------------------------------------------

double log_gap(double s) {
  if (s >= 0.1) return -std::log1p(-s) - s;
  double power = s * s;
  double sum = 0.0;
  for (int j = 2; power / j > 1e-18 * sum || j == 2; ++j) {
    sum += power / j;
    power *= s;
    if (power == 0.0) break;
  }
  return sum;
}

double default_exclusion_eps(std::int64_t k) { return 1e-8 * kPi / static_cast<double>(k); }

double distance_to_singularity(std::int64_t k, double theta) {
  const double kd = static_cast<double>(k);
  const double t = std::round((kd * theta / kPi - 1.0) / 2.0);
  return std::abs(theta - (2.0 * t + 1.0) * kPi / kd);
}

double L_value(std::int64_t k, double theta, double exclusion_eps) {
  if (distance_to_singularity(k, theta) < exclusion_eps) return kNegInf;
  const double s = sin_half_sq(theta);
  const double kk = static_cast<double>(k) * static_cast<double>(k);
  return (kk * s + log_cos_sq(0.5 * static_cast<double>(k) * theta)) / log_gap(s);
}

double L_unweighted_value(std::int64_t k, double theta) {
  const double s = sin_half_sq(theta);
  return (s + log_cos_sq(0.5 * static_cast<double>(k) * theta)) / log_gap(s);
}

double M_value(std::int64_t k, double theta) {
  const double s = sin_half_sq(theta);
  return static_cast<double>(k) * static_cast<double>(k) * s / log_gap(s);
}

double N_value(std::int64_t k, double theta, double exclusion_eps) {
  if (distance_to_singularity(k, theta) < exclusion_eps) return kNegInf;
  return log_cos_sq(0.5 * static_cast<double>(k) * theta) / log_gap(sin_half_sq(theta));
}

// --- threshold m(k) ---------------------------------------------------------

ThetaScan ThetaScan::make(std::int64_t k, std::int64_t grid_points, double refine_tol,
                          std::optional<double> exclusion_eps) {
  if (k < 2) throw std::invalid_argument("ThetaScan: k must be >= 2");
  if (grid_points < 1000) throw std::invalid_argument("ThetaScan: grid_points must be >= 1000");
  if (!(refine_tol > 0.0)) throw std::invalid_argument("ThetaScan: refine_tol must be > 0");
  const double eps = exclusion_eps.value_or(default_exclusion_eps(k));
  if (!(eps > 0.0)) throw std::invalid_argument("ThetaScan: exclusion_eps must be > 0");
  return ThetaScan{k, grid_points, refine_tol, eps};
}

double grid_max_L(std::int64_t k, double lo, double hi, std::int64_t grid_points) {
  double best = kNegInf;
  const double eps = default_exclusion_eps(k);
  for (std::int64_t j = 1; j <= grid_points; ++j) {
    const double theta = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(grid_points + 1);
    best = std::max(best, L_value(k, theta, eps));
  }
  return best;
}

EClassResult max_L(const ThetaScan& scan) {
  const std::int64_t k = scan.k;
  const double kd = static_cast<double>(k);
  const double lo = kPi / kd;
  const auto theta_at = [&](std::int64_t i) {
    return lo * (1.0 + static_cast<double>(i) / static_cast<double>(scan.grid_points));
  };
  const auto L = [&](double theta) { return L_value(k, theta, scan.exclusion_eps); };

  std::int64_t best_i = 1;
  double best = kNegInf;
  for (std::int64_t i = 1; i <= scan.grid_points; ++i) {
    const double v = L(theta_at(i));
    if (v > best) {
      best = v;
      best_i = i;
    }
  }

  EClassResult out;
  out.k = k;
  out.below_supported_k = k < 9;
  out.max_L = best;
  out.argmax_theta = theta_at(best_i);

  const double a = theta_at(best_i - 1);
  const double b = theta_at(std::min(best_i + 1, scan.grid_points));
  const auto refined = golden_section_max(L, a, b, scan.refine_tol);
  if (refined.value > out.max_L) {
    out.max_L = refined.value;
    out.argmax_theta = refined.x;
  }

  // The maximum over all of (0, pi) should sit in (pi/k, 2pi/k].
  const std::int64_t coarse = std::max<std::int64_t>(10000, scan.grid_points / 10);
  out.coarse_full_max = grid_max_L(k, 0.0, kPi, coarse);
  const double slack = 1e-9 * std::max(1.0, std::abs(out.max_L));
  if (out.coarse_full_max > out.max_L + slack) {
    throw ReductionViolation("coarse scan of (0, pi) found L = " + std::to_string(out.coarse_full_max) +
                             " above the maximum " + std::to_string(out.max_L) + " on (pi/k, 2pi/k] for k = " +
                             std::to_string(k));
  }

  const double nearest = std::round(out.max_L);
  if (std::abs(out.max_L - nearest) < kNearIntegerTol) {
    out.near_integer = true;
    const auto candidate = static_cast<std::int64_t>(nearest);
    const bool member = membership_certificate(candidate, k, scan.grid_points).verdict == Membership::member;
    out.m_of_k = member ? candidate : candidate + 1;
  } else {
    out.m_of_k = static_cast<std::int64_t>(std::ceil(out.max_L));
  }
  return out;
}

void attach_sandwich(EClassResult& result, const certmax::Interval& alpha) {
  const double kd = static_cast<double>(result.k);
  result.sandwich_lo = alpha.lo / (1.0 + 8.0 / (kd * kd));
  result.sandwich_hi = alpha.hi;
}

// --- membership -------------------------------------------------------------

std::string to_string(Membership m) {
  switch (m) {
    case Membership::member: return "member";
    case Membership::nonmember: return "nonmember";
    case Membership::inconclusive: return "inconclusive";
  }
  return "unknown";
}

MembershipCertificate membership_certificate(std::int64_t m, std::int64_t k, std::int64_t grid_points) {
  if (m < 1) throw std::invalid_argument("membership_certificate: m must be >= 1");
  if (k < 2) throw std::invalid_argument("membership_certificate: k must be >= 2");
  if (grid_points < 1) throw std::invalid_argument("membership_certificate: grid_points must be >= 1");
  const double eps = default_exclusion_eps(k);
  MembershipCertificate out;
  out.min_defect = std::numeric_limits<double>::infinity();
  for (std::int64_t j = 1; j <= grid_points; ++j) {
    const double theta = kPi * static_cast<double>(j) / static_cast<double>(grid_points + 1);
    if (distance_to_singularity(k, theta) < eps) continue;
    const double r = normalized_defect(m, k, theta);
    if (r < out.min_defect) {
      out.min_defect = r;
      out.min_theta = theta;
    }
  }
  if (out.min_defect >= kMemberThreshold) {
    out.verdict = Membership::member;
  } else if (out.min_defect < kWitnessThreshold) {
    out.verdict = Membership::nonmember;
    out.witness_theta = out.min_theta;
  } else {
    out.verdict = Membership::inconclusive;
  }
  return out;
}

// --- lemmas -------------------------------------------------------------------

Lemma23Result lemma23_check(double psi) {
  const double psi_max = 1.0 / (2.0 * std::numbers::sqrt2);
  if (!(psi >= 0.0 && psi <= psi_max * (1.0 + 1e-15))) {
    throw std::invalid_argument("lemma23_check: psi must lie in [0, 1/(2 sqrt 2)]");
  }
  Lemma23Result out;
  const double sn = std::sin(psi);
  const double s = sn * sn;
  const double psi2 = psi * psi;
  out.lhs = log_gap(s);
  out.rhs = 0.5 * psi2 * psi2;
  // lhs - rhs = (s^2 - psi^4)/2 + sum_{j>=3} s^j/j, with s - psi^2 formed
  // from sin(psi) - psi so the leading psi^6 terms cancel cleanly.
  const double s_minus = sin_minus_x(psi) * (sn + psi);
  double tail = 0.0;
  if (s >= 0.1) {
    tail = out.lhs - 0.5 * s * s;
  } else {
    double power = s * s * s;
    for (int j = 3; power / j > 1e-20 * tail || j == 3; ++j) {
      tail += power / j;
      power *= s;
      if (power == 0.0) break;
    }
  }
  out.margin = 0.5 * s_minus * (s + psi2) + tail;
  out.holds = out.margin >= 0.0;
  return out;
}

SandwichReport sandwich_check(std::int64_t k, const certmax::Interval& alpha, std::int64_t grid_points) {
  if (k < 2) throw std::invalid_argument("sandwich_check: k must be >= 2");
  if (grid_points < 1) throw std::invalid_argument("sandwich_check: grid_points must be >= 1");
  const double kd = static_cast<double>(k);
  const double k4 = kd * kd * kd * kd;
  const double shrink = 1.0 + 8.0 / (kd * kd);
  const double eps = default_exclusion_eps(k);

  SandwichReport out;
  out.k = k;
  out.upper_checked = k >= 9;
  out.lower_checked = k >= 8;
  for (std::int64_t i = 1; i <= grid_points; ++i) {
    const double theta = kPi / kd * (1.0 + static_cast<double>(i) / static_cast<double>(grid_points));
    if (distance_to_singularity(k, theta) < eps) continue;
    const double scaled = L_value(k, theta, eps) / k4;
    const double z = 0.5 * kd * theta;
    const double z2 = z * z;
    const double log_term = 2.0 * log_cos_sq(z) / (z2 * z2);
    const double upper = certmax::D_value(z);
    const double lower = 2.0 / (shrink * z2) + log_term;
    const double tol = 1e-12 * std::max(1.0, std::abs(scaled));
    if (out.upper_checked && !out.upper_violation && scaled > upper + tol) out.upper_violation = theta;
    if (out.lower_checked && !out.lower_violation && scaled < lower - tol) out.lower_violation = theta;
    if (scaled < upper / shrink - tol) ++out.scaled_D_lower_failures;
  }

  const auto result = max_L(ThetaScan::make(k, std::max<std::int64_t>(grid_points, 1000)));
  out.max_scaled_L = result.max_L / k4;
  out.max_in_enclosure =
      out.max_scaled_L >= alpha.lo / shrink - kSandwichTol && out.max_scaled_L <= alpha.hi + kSandwichTol;
  return out;
}

DominationProbe domination_probe(std::int64_t k, std::int64_t t, std::int64_t grid_points) {
  if (t < 0 || 2 * (2 * t + 5) > k) throw std::invalid_argument("domination_probe: need 2t + 5 <= k/2");
  const double step = kPi / static_cast<double>(k);
  DominationProbe out;
  out.t = t;
  out.far_max = grid_max_L(k, (2.0 * t + 3.0) * step, (2.0 * t + 5.0) * step, grid_points);
  out.near_max = grid_max_L(k, (2.0 * t + 1.0) * step, (2.0 * t + 2.0) * step, grid_points);
  return out;
}

}  // namespace unimodal_lab::eclass
