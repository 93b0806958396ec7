#pragma once

// Exact coefficient sequences of polynomials with nonnegative integer
// coefficients, and the two unimodality predicates on them.

#include "unimodal_lab/bignum.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace unimodal_lab::exactpoly {

/// Coefficient list a_0, a_1, ..., a_n of a polynomial with nonnegative
/// integer coefficients. Trailing zeros are trimmed on construction, so the
/// last stored entry is nonzero unless the polynomial is zero (stored as the
/// single entry 0).
class CoeffSeq {
 public:
  CoeffSeq() : coeffs_{BigInt(0)} {}
  explicit CoeffSeq(std::vector<BigInt> coeffs);
  CoeffSeq(std::initializer_list<long> coeffs);

  [[nodiscard]] std::size_t degree() const { return coeffs_.size() - 1; }
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }
  [[nodiscard]] bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  /// (p, x^i); zero outside [0, degree].
  [[nodiscard]] BigInt at(std::int64_t i) const;
  [[nodiscard]] const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }
  [[nodiscard]] std::span<const BigInt> coeffs() const { return coeffs_; }

  [[nodiscard]] BigInt sum() const;
  [[nodiscard]] std::vector<std::string> to_strings() const;

  friend bool operator==(const CoeffSeq&, const CoeffSeq&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Selects P = (1+x)^m (1+x^k).
struct FamilyParams {
  std::int64_t m;
  std::int64_t k;

  /// Throws std::invalid_argument unless m >= 1 and k >= 2.
  static FamilyParams make(std::int64_t m, std::int64_t k);
};

/// C(n, j), zero when j < 0 or j > n. Requires n >= 0.
BigInt binomial(std::int64_t n, std::int64_t j);

/// Row C(n, 0), ..., C(n, n).
std::vector<BigInt> binomial_row(std::int64_t n);

/// Coefficients of (1+x)^m (1+x^k): entry u is C(m,u) + C(m,u-k).
CoeffSeq expand_family(const FamilyParams& params);

/// Entry u of expand_family(params), zero outside [0, m+k].
BigInt coefficient(const FamilyParams& params, std::int64_t u);

/// Schoolbook convolution.
CoeffSeq poly_mul(const CoeffSeq& a, const CoeffSeq& b);

/// (1+x)^n as a coefficient sequence.
CoeffSeq one_plus_x_pow(std::int64_t n);

struct UnimodalVerdict {
  bool unimodal = true;
  /// On failure, (i, i+1) with a_i < a_{i+1} after an earlier strict fall.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

enum class StrongFailure { none, log_concavity, internal_zero };

struct StrongVerdict {
  bool strongly_unimodal = true;
  StrongFailure failure = StrongFailure::none;
  /// For log_concavity: the interior index i with a_i^2 < a_{i-1} a_{i+1}.
  /// For internal_zero: the last nonzero index i before a run of zeros that
  /// is followed by another nonzero entry.
  std::size_t index = 0;
};

std::string to_string(StrongFailure f);

UnimodalVerdict is_unimodal(const CoeffSeq& s);
StrongVerdict is_strongly_unimodal(const CoeffSeq& s);

/// Both verdicts together, as surfaced by the CLI.
struct UnimodalReport {
  UnimodalVerdict unimodal;
  StrongVerdict strong;
};

UnimodalReport classify(const CoeffSeq& s);

}  // namespace unimodal_lab::exactpoly
