#pragma once

// Exact machinery for the family P = (1+x)^m (1+x^k): closed-form central
// ratios, the log-concavity quotient beta(u) and its factorization B(u)A(u),
// the tail ratio a(u) with its neighbour ratios c+ and c-, and threshold
// searches over m.
//
// Unless stated otherwise, functions taking (k, u) work with m = k^2 - 3,
// the smallest m for which P is strongly unimodal.

#include "unimodal_lab/bignum.hpp"
#include "unimodal_lab/exactpoly.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace unimodal_lab::theorem1 {

/// Raised when a bounded search exhausts its cap.
class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// m = k^2 - 3.
inline std::int64_t critical_m(std::int64_t k) { return k * k - 3; }

/// Upper end of the reduced u-range, floor((k^2 + k - 5) / 2).
inline std::int64_t probe_upper(std::int64_t k) { return (k * k + k - 5) / 2; }

/// (m^2 + 2m + 3(k^2-1)) / ((m+3)^2 - k^2): the ratio of the coefficient at
/// (m+k-3)/2 to the one at (m+k-1)/2. Requires m+k odd and a positive
/// denominator; throws std::invalid_argument otherwise.
BigRational central_ratio_odd(std::int64_t m, std::int64_t k);

/// (m^2 + k^2 + 2m) / (m^2 + 4m + 4 - k^2): the ratio of the coefficient at
/// (m+k-2)/2 to the central one at (m+k)/2. Requires m+k even and a positive
/// denominator.
BigRational central_ratio_even(std::int64_t m, std::int64_t k);

struct RatioPair {
  BigRational closed_form;
  BigRational from_coefficients;
  [[nodiscard]] bool agree() const { return closed_form == from_coefficients; }
};

/// Closed-form central ratio next to the same ratio read off expand_family.
RatioPair ratio_vs_coefficients(std::int64_t m, std::int64_t k);

/// a(u) = prod_{i<k} (u-i)/(k^2-2-u+i) = C(k^2-3, u-k) / C(k^2-3, u).
/// Zero for u < k. Requires u <= k^2 - 3.
BigRational a_of_u(std::int64_t k, std::int64_t u);

/// a(u+1)/a(u) = 1 + k(k^2-2)/((u-k+1)(k^2-u-3)).
BigRational c_plus(std::int64_t k, std::int64_t u);

/// a(u-1)/a(u) = 1 - k(k^2-2)/(u(k^2-u+k-2)).
BigRational c_minus(std::int64_t k, std::int64_t u);

/// B(u) = (k^2-2-u)(u+1) / ((k^2-3-u) u).
BigRational B_of_u(std::int64_t k, std::int64_t u);

/// A(u) = (1+a(u))^2 / ((1+a(u+1))(1+a(u-1))).
BigRational A_of_u(std::int64_t k, std::int64_t u);

struct BetaResult {
  /// beta(u) = (P,x^u)^2 / ((P,x^{u+1}) (P,x^{u-1})); empty when a neighbour
  /// coefficient vanishes.
  std::optional<BigRational> beta;
  /// B(u) * A(u), when u lies in [k, k^2-4] where a and its neighbours are
  /// defined.
  std::optional<BigRational> product;
  [[nodiscard]] bool factorization_holds() const {
    return beta && product && *beta == *product;
  }
};

/// Requires 1 <= u <= k^2 + k - 4.
BetaResult beta_exact(std::int64_t k, std::int64_t u);

struct InequalityProbe {
  std::int64_t k = 0;
  std::int64_t u = 0;
  /// B(u) - 1 = (k^2-2) / (u (k^2-3-u)).
  BigRational lhs;
  /// ((c+ + c- - 2) a + (c+ c- - 1) a^2) / (1 + a)^2.
  BigRational rhs;
  bool holds = false;
};

/// Both sides of the inequality B(u) - 1 >= rhs, equivalent to beta(u) >= 1.
/// Requires k <= u <= (k^2+k-5)/2.
InequalityProbe inequality_one_probe(std::int64_t k, std::int64_t u);

/// Scaled quantities used to audit the sufficient bound 4(B-1) > c+ + c- - 2
/// on the upper part of the u-range.
struct CasePolynomialProbe {
  /// 4 (B(u) - 1) R, an integer.
  BigInt scaled_b;
  /// (c+ + c- - 2) R, an integer.
  BigInt scaled_c;
  [[nodiscard]] bool bound_holds() const { return scaled_b > scaled_c; }
};

/// R = (u-k+1)(k^2-3-u)(k^2+k-u-2) u / (k^2-2).
BigRational case_scale_R(std::int64_t k, std::int64_t u);

/// Computes both scaled quantities from the rational definitions. The bound
/// is meant for ceil(2k^2/5) <= u <= (k^2+k-5)/2; any k <= u <= k^2 - 4
/// (where R > 0) is accepted. Requires k >= 3.
CasePolynomialProbe case_polynomial_probe(std::int64_t k, std::int64_t u);

/// Expanded polynomial forms of the two scaled quantities, only compared
/// against case_polynomial_probe. scaled_c differs from it by -2uk^2.
struct PrintedCaseForms {
  /// 4(uk^2 - u^2 - k^3 + 2uk - 3u + 3k - 2)
  BigInt scaled_b;
  /// k(k^3 - 2uk - k^2 + 2u - 3k + 3)
  BigInt scaled_c;
  /// (6uk^2 - k^4 - 4u^2) + (6uk - 3k^3) + (3k^2 - 12u) + 9k - 8
  BigInt difference;
};
PrintedCaseForms printed_case_forms(std::int64_t k, std::int64_t u);

enum class Predicate { strong, unimodal };
std::string to_string(Predicate p);

bool family_passes(std::int64_t m, std::int64_t k, Predicate predicate);

struct ThresholdResult {
  std::int64_t k = 0;
  std::int64_t minimal_m_strong = 0;
  std::int64_t minimal_m_unimodal = 0;
  std::int64_t predicted = 0;
  [[nodiscard]] bool matches() const {
    return minimal_m_strong == predicted && minimal_m_unimodal == predicted;
  }
};

struct MinimalSearch {
  std::int64_t m = 0;
  /// Every m' < m was checked directly (not only m - 1).
  bool exhaustive = false;
};

/// Smallest m in [1, cap] with expand_family(m, k) passing `predicate`.
/// A bisection proposes a candidate; the candidate and its predecessor are
/// then checked directly, falling back to a linear scan if the predecessor
/// also passes. With `exhaustive` every m below the result is checked.
/// Throws NotFound if no m <= cap passes. Requires k >= 2 and cap >= k^2.
MinimalSearch minimal_m(std::int64_t k, Predicate predicate, std::int64_t cap,
                        bool exhaustive = false);

/// Both searches for one k, with cap defaulting to 2k^2.
ThresholdResult threshold(std::int64_t k, std::int64_t cap = 0, bool exhaustive = false);

/// Smallest N in [0, cap] with (1+x)^N p strongly unimodal.
/// Throws NotFound when the cap is exhausted, std::invalid_argument for p = 0.
std::int64_t generic_min_N(const exactpoly::CoeffSeq& p, std::int64_t cap);

}  // namespace unimodal_lab::theorem1
