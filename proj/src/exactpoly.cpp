#include "unimodal_lab/exactpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace unimodal_lab::exactpoly {

CoeffSeq::CoeffSeq(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c < 0) throw std::invalid_argument("CoeffSeq: negative coefficient");
  }
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

CoeffSeq::CoeffSeq(std::initializer_list<long> coeffs)
    : CoeffSeq([&] {
        std::vector<BigInt> v;
        v.reserve(coeffs.size());
        for (long c : coeffs) v.emplace_back(c);
        return v;
      }()) {}

BigInt CoeffSeq::at(std::int64_t i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

BigInt CoeffSeq::sum() const {
  BigInt total = 0;
  for (const auto& c : coeffs_) total += c;
  return total;
}

std::vector<std::string> CoeffSeq::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

FamilyParams FamilyParams::make(std::int64_t m, std::int64_t k) {
  if (m < 1) throw std::invalid_argument("FamilyParams: m must be >= 1");
  if (k < 2) throw std::invalid_argument("FamilyParams: k must be >= 2");
  return FamilyParams{m, k};
}

BigInt binomial(std::int64_t n, std::int64_t j) {
  if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
  if (j < 0 || j > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
  return out;
}

std::vector<BigInt> binomial_row(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("binomial_row: n must be >= 0");
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (std::int64_t j = 0; j < n; ++j) {
    BigInt next = row[static_cast<std::size_t>(j)] * (n - j);
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(j + 1));
    row[static_cast<std::size_t>(j) + 1] = std::move(next);
  }
  return row;
}

CoeffSeq expand_family(const FamilyParams& params) {
  const auto row = binomial_row(params.m);
  const auto m = static_cast<std::size_t>(params.m);
  const auto k = static_cast<std::size_t>(params.k);
  std::vector<BigInt> coeffs(m + k + 1);
  for (std::size_t u = 0; u <= m; ++u) {
    coeffs[u] += row[u];
    coeffs[u + k] += row[u];
  }
  return CoeffSeq(std::move(coeffs));
}

BigInt coefficient(const FamilyParams& params, std::int64_t u) {
  return binomial(params.m, u) + binomial(params.m, u - params.k);
}

CoeffSeq poly_mul(const CoeffSeq& a, const CoeffSeq& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return CoeffSeq(std::move(out));
}

CoeffSeq one_plus_x_pow(std::int64_t n) { return CoeffSeq(binomial_row(n)); }

std::string to_string(StrongFailure f) {
  switch (f) {
    case StrongFailure::none: return "none";
    case StrongFailure::log_concavity: return "log_concavity";
    case StrongFailure::internal_zero: return "internal_zero";
  }
  return "unknown";
}

UnimodalVerdict is_unimodal(const CoeffSeq& s) {
  const auto c = s.coeffs();
  bool fallen = false;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    const int cmp = ::cmp(c[i], c[i + 1]);
    if (cmp > 0) {
      fallen = true;
    } else if (cmp < 0 && fallen) {
      return UnimodalVerdict{false, std::make_pair(i, i + 1)};
    }
  }
  return UnimodalVerdict{};
}

StrongVerdict is_strongly_unimodal(const CoeffSeq& s) {
  const auto all = s.coeffs();
  std::size_t first = 0;
  while (first + 1 < all.size() && all[first] == 0) ++first;
  const auto c = all.subspan(first);

  BigInt sq;
  BigInt prod;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i >= 1 && i + 1 < c.size()) {
      sq = c[i] * c[i];
      prod = c[i - 1] * c[i + 1];
      if (sq < prod) return StrongVerdict{false, StrongFailure::log_concavity, first + i};
    }
    // c.front() and c.back() are nonzero, so any zero after a nonzero entry
    // is internal. This covers a_i a_{i+2} != 0 => a_{i+1} != 0 and also
    // longer gaps such as 1, 0, 0, 1.
    if (i + 1 < c.size() && c[i] != 0 && c[i + 1] == 0) {
      return StrongVerdict{false, StrongFailure::internal_zero, first + i};
    }
  }
  return StrongVerdict{};
}

UnimodalReport classify(const CoeffSeq& s) { return UnimodalReport{is_unimodal(s), is_strongly_unimodal(s)}; }

}  // namespace unimodal_lab::exactpoly
