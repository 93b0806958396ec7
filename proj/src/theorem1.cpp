#include "unimodal_lab/theorem1.hpp"

#include <string>

namespace unimodal_lab::theorem1 {

namespace {

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

void require_k(std::int64_t k, std::int64_t min_k = 2) {
  if (k < min_k) throw std::invalid_argument("k must be >= " + std::to_string(min_k));
}

}  // namespace

BigRational central_ratio_odd(std::int64_t m, std::int64_t k) {
  if ((m + k) % 2 == 0) throw std::invalid_argument("central_ratio_odd: m + k must be odd");
  const BigInt M = big(m);
  const BigInt K = big(k);
  const BigInt num = M * M + 2 * M + 3 * (K * K - 1);
  const BigInt den = (M + 3) * (M + 3) - K * K;
  if (den <= 0) throw std::invalid_argument("central_ratio_odd: nonpositive denominator");
  return make_rational(num, den);
}

BigRational central_ratio_even(std::int64_t m, std::int64_t k) {
  if ((m + k) % 2 != 0) throw std::invalid_argument("central_ratio_even: m + k must be even");
  const BigInt M = big(m);
  const BigInt K = big(k);
  const BigInt num = M * M + K * K + 2 * M;
  const BigInt den = M * M + 4 * M + 4 - K * K;
  if (den <= 0) throw std::invalid_argument("central_ratio_even: nonpositive denominator");
  return make_rational(num, den);
}

RatioPair ratio_vs_coefficients(std::int64_t m, std::int64_t k) {
  const auto params = exactpoly::FamilyParams::make(m, k);
  const bool odd = (m + k) % 2 != 0;
  BigRational closed = odd ? central_ratio_odd(m, k) : central_ratio_even(m, k);
  // Outer position j, inner position j + 1.
  const std::int64_t j = odd ? (m + k - 3) / 2 : (m + k - 2) / 2;
  const auto seq = exactpoly::expand_family(params);
  return RatioPair{std::move(closed), make_rational(seq.at(j), seq.at(j + 1))};
}

BigRational a_of_u(std::int64_t k, std::int64_t u) {
  require_k(k);
  if (u < k) return BigRational(0);
  if (u > critical_m(k)) throw std::invalid_argument("a_of_u: u exceeds k^2 - 3");
  BigInt num = 1;
  BigInt den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= big(u - i);
    den *= big(k * k - 2 - u + i);
  }
  return make_rational(num, den);
}

BigRational c_plus(std::int64_t k, std::int64_t u) {
  require_k(k);
  const BigInt den = big(u - k + 1) * big(k * k - u - 3);
  if (den == 0) throw std::domain_error("c_plus: zero denominator");
  return 1 + make_rational(big(k) * big(k * k - 2), den);
}

BigRational c_minus(std::int64_t k, std::int64_t u) {
  require_k(k);
  const BigInt den = big(u) * big(k * k - u + k - 2);
  if (den == 0) throw std::domain_error("c_minus: zero denominator");
  return 1 - make_rational(big(k) * big(k * k - 2), den);
}

BigRational B_of_u(std::int64_t k, std::int64_t u) {
  require_k(k);
  return make_rational(big(k * k - 2 - u) * big(u + 1), big(k * k - 3 - u) * big(u));
}

BigRational A_of_u(std::int64_t k, std::int64_t u) {
  const BigRational one_a = 1 + a_of_u(k, u);
  return checked_div(one_a * one_a, (1 + a_of_u(k, u + 1)) * (1 + a_of_u(k, u - 1)));
}

BetaResult beta_exact(std::int64_t k, std::int64_t u) {
  require_k(k);
  if (u < 1 || u > k * k + k - 4) throw std::invalid_argument("beta_exact: u out of range");
  const exactpoly::FamilyParams params{critical_m(k), k};
  BetaResult out;
  const BigInt mid = exactpoly::coefficient(params, u);
  const BigInt below = exactpoly::coefficient(params, u - 1);
  const BigInt above = exactpoly::coefficient(params, u + 1);
  if (below != 0 && above != 0) out.beta = make_rational(mid * mid, above * below);
  if (u <= k * k - 4) out.product = B_of_u(k, u) * A_of_u(k, u);
  return out;
}

InequalityProbe inequality_one_probe(std::int64_t k, std::int64_t u) {
  require_k(k, 3);
  if (u < k || u > probe_upper(k)) throw std::invalid_argument("inequality_one_probe: u out of range");
  InequalityProbe probe;
  probe.k = k;
  probe.u = u;
  probe.lhs = B_of_u(k, u) - 1;
  const BigRational a = a_of_u(k, u);
  const BigRational cp = c_plus(k, u);
  const BigRational cm = c_minus(k, u);
  const BigRational one_a = 1 + a;
  probe.rhs = ((cp + cm - 2) * a + (cp * cm - 1) * a * a) / (one_a * one_a);
  probe.holds = probe.lhs >= probe.rhs;
  return probe;
}

BigRational case_scale_R(std::int64_t k, std::int64_t u) {
  return make_rational(big(u - k + 1) * big(k * k - 3 - u) * big(k * k + k - u - 2) * big(u), big(k * k - 2));
}

namespace {

BigInt as_integer(const BigRational& r) {
  if (r.get_den() != 1) throw std::logic_error("expected an integer-valued rational");
  return r.get_num();
}

}  // namespace

CasePolynomialProbe case_polynomial_probe(std::int64_t k, std::int64_t u) {
  require_k(k, 3);
  // R > 0 exactly on k <= u <= k^2 - 4.
  if (u < k || u > k * k - 4) throw std::invalid_argument("case_polynomial_probe: u out of range");
  const BigRational R = case_scale_R(k, u);
  const BigRational scaled_b = 4 * (B_of_u(k, u) - 1) * R;
  const BigRational scaled_c = (c_plus(k, u) + c_minus(k, u) - 2) * R;
  return CasePolynomialProbe{as_integer(scaled_b), as_integer(scaled_c)};
}

PrintedCaseForms printed_case_forms(std::int64_t k, std::int64_t u) {
  const BigInt K = big(k);
  const BigInt U = big(u);
  const BigInt K2 = K * K;
  const BigInt K3 = K2 * K;
  PrintedCaseForms out;
  out.scaled_b = 4 * (U * K2 - U * U - K3 + 2 * U * K - 3 * U + 3 * K - 2);
  out.scaled_c = K * (K3 - 2 * U * K - K2 + 2 * U - 3 * K + 3);
  out.difference = (6 * U * K2 - K2 * K2 - 4 * U * U) + (6 * U * K - 3 * K3) + (3 * K2 - 12 * U) + 9 * K - 8;
  return out;
}

std::string to_string(Predicate p) { return p == Predicate::strong ? "strong" : "unimodal"; }

bool family_passes(std::int64_t m, std::int64_t k, Predicate predicate) {
  const auto seq = exactpoly::expand_family(exactpoly::FamilyParams::make(m, k));
  return predicate == Predicate::strong ? exactpoly::is_strongly_unimodal(seq).strongly_unimodal
                                        : exactpoly::is_unimodal(seq).unimodal;
}

MinimalSearch minimal_m(std::int64_t k, Predicate predicate, std::int64_t cap, bool exhaustive) {
  require_k(k);
  if (cap < k * k) throw std::invalid_argument("minimal_m: cap must be >= k^2");
  const auto passes = [&](std::int64_t m) { return family_passes(m, k, predicate); };
  if (!passes(cap)) {
    throw NotFound("no m <= " + std::to_string(cap) + " passes for k = " + std::to_string(k));
  }
  std::int64_t lo = 1;
  std::int64_t hi = cap;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (passes(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const auto linear_from = [&](std::int64_t start, std::int64_t stop) -> std::optional<std::int64_t> {
    for (std::int64_t m = start; m < stop; ++m) {
      if (passes(m)) return m;
    }
    return std::nullopt;
  };
  MinimalSearch out{lo, false};
  if (lo > 1 && passes(lo - 1)) {
    // Not monotone in m: the bisection answer cannot be trusted.
    out.m = *linear_from(1, lo);
    out.exhaustive = true;
    return out;
  }
  if (exhaustive) {
    if (auto earlier = linear_from(1, lo - 1)) out.m = *earlier;
    out.exhaustive = true;
  }
  return out;
}

ThresholdResult threshold(std::int64_t k, std::int64_t cap, bool exhaustive) {
  if (cap == 0) cap = 2 * k * k;
  ThresholdResult out;
  out.k = k;
  out.minimal_m_strong = minimal_m(k, Predicate::strong, cap, exhaustive).m;
  out.minimal_m_unimodal = minimal_m(k, Predicate::unimodal, cap, exhaustive).m;
  out.predicted = critical_m(k);
  return out;
}

std::int64_t generic_min_N(const exactpoly::CoeffSeq& p, std::int64_t cap) {
  if (p.is_zero()) throw std::invalid_argument("generic_min_N: p must be nonzero");
  if (cap < 0) throw std::invalid_argument("generic_min_N: cap must be >= 0");
  const exactpoly::CoeffSeq one_plus_x{1, 1};
  exactpoly::CoeffSeq current = p;
  for (std::int64_t n = 0; n <= cap; ++n) {
    if (exactpoly::is_strongly_unimodal(current).strongly_unimodal) return n;
    if (n < cap) current = exactpoly::poly_mul(current, one_plus_x);
  }
  throw NotFound("no N <= " + std::to_string(cap) + " makes (1+x)^N p strongly unimodal");
}

}  // namespace unimodal_lab::theorem1
