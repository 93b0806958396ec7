#include "unimodal_lab/certmax.hpp"
#include "unimodal_lab/eclass.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

using namespace unimodal_lab;
using namespace unimodal_lab::eclass;

namespace {

constexpr double kPi = std::numbers::pi;

RealPoly half_pow(int m) {
  RealPoly p{{1.0}};
  for (int i = 0; i < m; ++i) p = p * RealPoly{{0.5, 0.5}};
  return p;
}

RealPoly half_zk(int k) {
  RealPoly p;
  p.coeffs.assign(k + 1, 0.0);
  p.coeffs[0] = 0.5;
  p.coeffs[k] = 0.5;
  return p;
}

certmax::Interval alpha_enclosure() {
  static const auto a = certmax::certified_alpha(1e-9).value_enclosure;
  return a;
}

}  // namespace

TEST_CASE("variance") {
  CHECK(variance(VarianceInput::family(HalfOnePlusZPow{12})) == 3);
  CHECK(variance(VarianceInput::family(HalfOnePlusZk{5})) == BigRational(25, 4));
  CHECK(variance(VarianceInput::exact({BigRational(0), BigRational(1)})) == 0);
  CHECK(variance(VarianceInput::exact(half_one_plus_z_pow(12))) == 3);
  CHECK(variance(VarianceInput::exact(half_one_plus_z_k(5))) == BigRational(25, 4));
  CHECK(variance(VarianceInput::normalized({BigRational(1), BigRational(1)})) == BigRational(1, 4));
  CHECK_THROWS_AS(VarianceInput::exact({BigRational(1), BigRational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(VarianceInput::normalized({BigRational(1), BigRational(-1)}), std::invalid_argument);

  // Variance is additive under products; a few pairs with exact arithmetic.
  for (int m = 1; m <= 6; ++m) {
    for (int k = 2; k <= 6; ++k) {
      const auto f = half_one_plus_z_pow(m);
      const auto g = half_one_plus_z_k(k);
      std::vector<BigRational> fg(f.size() + g.size() - 1, BigRational(0));
      for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) fg[i + j] += f[i] * g[j];
      CHECK(variance(VarianceInput::exact(fg)) == make_rational(m + k * k, 4));
    }
  }
  CHECK(half_pow(12).variance() == doctest::Approx(3.0));
}

TEST_CASE("H basics") {
  for (int k : {3, 9, 16})
    for (int m : {1, 20, 500}) CHECK(std::abs(H_family(m, k, 0.0)) < 1e-15);
  // cos(k theta/2) = 0 at theta = pi/k, so H = exp(...) > 0.
  for (int k : {3, 9, 16}) CHECK(H_family(100, k, kPi / k) > 0.0);

  // H_family agrees with H_of on the polynomial itself.
  for (int m : {4, 10}) {
    for (int k : {3, 5}) {
      const auto p = half_pow(m) * half_zk(k);
      for (double theta : {0.1, 0.7, 1.9, 3.0})
        CHECK(H_of(p, theta) == doctest::Approx(H_family(m, k, theta)).epsilon(1e-10));
    }
  }
  // normalized_defect has the sign of H.
  for (double theta = 0.05; theta < kPi; theta += 0.05) {
    const double h = H_family(30, 4, theta);
    const double n = normalized_defect(30, 4, theta);
    if (std::abs(h) > 1e-14) CHECK((h > 0) == (n > 0));
  }
}

TEST_CASE("H product identity") {
  std::mt19937_64 rng(20260417);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto random_poly = [&](int deg) {
    RealPoly p;
    double sum = 0;
    for (int i = 0; i <= deg; ++i) {
      p.coeffs.push_back(u(rng));
      sum += p.coeffs.back();
    }
    for (auto& c : p.coeffs) c /= sum;
    return p;
  };
  double worst = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto f = random_poly(1 + trial % 7);
    const auto g = random_poly(1 + trial % 5);
    const double theta = (u(rng) * 2 - 1) * kPi;
    worst = std::max(worst, H_product_identity_residual(f, g, theta));
  }
  CHECK(worst <= 1e-12);
  for (int m : {1, 8, 40})
    for (int k : {2, 9})
      for (double theta : {0.01, 0.3, 1.0, 2.5})
        CHECK(H_product_identity_residual(half_pow(m), half_zk(k), theta) <= 1e-12);
}

TEST_CASE("log_gap") {
  for (double s : {1e-8, 1e-4, 0.05, 0.0999, 0.1, 0.3, 0.9})
    CHECK(log_gap(s) == doctest::Approx(-std::log1p(-s) - s).epsilon(s < 1e-4 ? 1e-6 : 1e-12));
  CHECK(log_gap(1e-6) == doctest::Approx(0.5e-12 + 1e-18 / 3).epsilon(1e-12));
  CHECK(log_gap(0.0) == 0.0);
}

TEST_CASE("L = M + N and the unweighted form") {
  for (int k : {3, 9, 17}) {
    for (double theta = 0.013; theta < kPi; theta += 0.0371) {
      if (distance_to_singularity(k, theta) < 1e-6) continue;
      const double L = L_value(k, theta);
      CHECK(L == doctest::Approx(M_value(k, theta) + N_value(k, theta)).epsilon(1e-12));
    }
  }
  // Without the k^2 weight the numerator is not M's numerator plus N's.
  int mismatched = 0;
  for (double theta = 0.1; theta < 1.0; theta += 0.1) {
    const double k = 9;
    if (std::abs(L_unweighted_value(9, theta) - (M_value(9, theta) + N_value(9, theta))) > 1e-6 * k) ++mismatched;
  }
  CHECK(mismatched > 0);
}

TEST_CASE("L in guard zones and on (0, pi/k)") {
  CHECK(std::isinf(L_value(9, kPi / 9)));
  CHECK(L_value(9, kPi / 9) < 0);
  CHECK(std::isinf(N_value(9, 3 * kPi / 9)));
  for (int k = 9; k <= 30; ++k) {
    for (double theta : {1e-4, 1e-3}) CHECK(L_value(k, theta) < 0.0);
    for (int i = 1; i < 200; ++i) {
      const double theta = kPi / k * i / 200.0;
      REQUIRE(L_value(k, theta) < 0.0);
    }
  }
}

TEST_CASE("M decreasing, N negative") {
  for (int k : {2, 9, 25}) {
    double prev = M_value(k, 1e-3);
    for (int i = 2; i < 1000; ++i) {
      const double theta = kPi / 2 * i / 1000.0;
      const double cur = M_value(k, theta);
      REQUIRE(cur < prev);
      prev = cur;
    }
    for (int i = 1; i < 1000; ++i) {
      const double theta = kPi * i / 1000.0;
      if (distance_to_singularity(k, theta) < 1e-9) continue;
      REQUIRE(N_value(k, theta) <= 0.0);
    }
  }
}

TEST_CASE("max_L for k = 9") {
  auto r = max_L(ThetaScan::make(9));
  CHECK(r.max_L == doctest::Approx(2064.9345).epsilon(1e-7));
  CHECK(r.argmax_theta == doctest::Approx(0.49348).epsilon(1e-4));
  CHECK(r.argmax_theta > kPi / 9);
  CHECK(r.argmax_theta <= 2 * kPi / 9);
  CHECK(r.m_of_k == 2065);
  CHECK_FALSE(r.near_integer);
  CHECK_FALSE(r.below_supported_k);
  CHECK(r.coarse_full_max <= r.max_L);
  attach_sandwich(r, alpha_enclosure());
  REQUIRE(r.sandwich_lo);
  CHECK(*r.sandwich_lo * 6561 <= r.max_L);
  CHECK(r.max_L <= *r.sandwich_hi * 6561);
  CHECK(r.m_of_k >= 1929);
  CHECK(r.m_of_k <= 2119);
}

TEST_CASE("max_L for other k") {
  CHECK(max_L(ThetaScan::make(8)).max_L == doctest::Approx(1280.2405).epsilon(1e-7));
  CHECK(max_L(ThetaScan::make(8)).below_supported_k);
  CHECK(max_L(ThetaScan::make(12)).max_L == doctest::Approx(6600.4959).epsilon(1e-7));
  auto r16 = max_L(ThetaScan::make(16));
  CHECK(r16.max_L == doctest::Approx(20993.185).epsilon(1e-7));
  CHECK(r16.argmax_theta == doctest::Approx(0.27758).epsilon(1e-4));
  attach_sandwich(r16, alpha_enclosure());
  CHECK(r16.max_L / 65536.0 >= *r16.sandwich_lo);
  CHECK(r16.max_L / 65536.0 <= *r16.sandwich_hi);
  CHECK_THROWS_AS(ThetaScan::make(1), std::invalid_argument);
  CHECK_THROWS_AS(ThetaScan::make(9, 10), std::invalid_argument);
}

TEST_CASE("membership certificates") {
  for (int k : {9, 12, 16}) {
    const auto r = max_L(ThetaScan::make(k));
    const auto in = membership_certificate(r.m_of_k, k, 200000);
    CHECK(in.verdict == Membership::member);
    CHECK(in.min_defect >= kMemberThreshold);
    const auto out = membership_certificate(r.m_of_k - 1, k, 200000);
    CHECK(out.verdict == Membership::nonmember);
    REQUIRE(out.witness_theta);
    CHECK(normalized_defect(r.m_of_k - 1, k, *out.witness_theta) < kWitnessThreshold);
    CHECK(L_value(k, *out.witness_theta) > r.m_of_k - 1);
    const auto big = static_cast<std::int64_t>(std::pow(k, 5));
    CHECK(membership_certificate(big, k, 100000).verdict == Membership::member);
  }
  CHECK(membership_certificate(10, 9, 10000).verdict == Membership::nonmember);
  CHECK(to_string(Membership::inconclusive) == "inconclusive");
}

TEST_CASE("lemma23") {
  const double top = 1 / (2 * std::numbers::sqrt2);
  for (double psi : {0.0, 0.01, 0.05, 0.1, 0.2, 0.3, top}) {
    const auto r = lemma23_check(psi);
    CHECK(r.holds);
    CHECK(r.margin >= 0.0);
  }
  CHECK(lemma23_check(0.0).margin == 0.0);
  // For small psi the margin is psi^8/60 to leading order.
  for (double psi : {0.02, 0.01, 0.005}) {
    CHECK(lemma23_check(psi).margin == doctest::Approx(std::pow(psi, 8) / 60).epsilon(0.02));
  }
  CHECK_THROWS_AS(lemma23_check(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(lemma23_check(top + 0.01), std::invalid_argument);
}

TEST_CASE("sandwich") {
  const auto alpha = alpha_enclosure();
  for (int k : {9, 10, 13, 20}) {
    const auto s = sandwich_check(k, alpha);
    CHECK(s.upper_checked);
    CHECK(s.lower_checked);
    CHECK_FALSE(s.upper_violation);
    CHECK_FALSE(s.lower_violation);
    CHECK(s.max_in_enclosure);
    CHECK(s.holds());
    // The scaled-D form is violated near pi/k, where D(z) < 0.
    CHECK(s.scaled_D_lower_failures > 0);
  }
  const auto s8 = sandwich_check(8, alpha);
  CHECK_FALSE(s8.upper_checked);
  CHECK(s8.lower_checked);
  CHECK_FALSE(s8.lower_violation);
  CHECK(sandwich_check(9, alpha).max_scaled_L == doctest::Approx(0.31473).epsilon(1e-4));
}

TEST_CASE("domination probes") {
  for (int k : {10, 14, 20, 30}) {
    for (int t = 0; 2 * (2 * t + 5) <= k; ++t) {
      const auto d = domination_probe(k, t, 4000);
      CHECK(d.holds());
    }
  }
  CHECK_THROWS_AS(domination_probe(9, 0, 1000), std::invalid_argument);
}

TEST_CASE("symmetry") {
  // L depends on theta through sin^2(theta/2) and cos^2(k theta/2), both
  // invariant under theta -> 2pi - theta.
  for (int k : {9, 12}) {
    for (double theta = 0.05; theta < kPi; theta += 0.07) {
      if (distance_to_singularity(k, theta) < 1e-6) continue;
      CHECK(M_value(k, 2 * kPi - theta) == doctest::Approx(M_value(k, theta)).epsilon(1e-9));
      CHECK(L_value(k, 2 * kPi - theta) == doctest::Approx(L_value(k, theta)).epsilon(1e-9));
    }
  }
  // theta -> pi - theta is not a symmetry of M.
  CHECK(std::abs(M_value(9, 0.3) - M_value(9, kPi - 0.3)) > 1.0);
}
