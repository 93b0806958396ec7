#include "unimodal_lab/exactpoly.hpp"

#include "doctest.h"

#include <random>

using namespace unimodal_lab;
using namespace unimodal_lab::exactpoly;

namespace {

// Pascal's triangle by repeated addition; shares nothing with binomial().
std::vector<std::vector<BigInt>> pascal(int rows) {
  std::vector<std::vector<BigInt>> t(rows + 1);
  for (int n = 0; n <= rows; ++n) {
    t[n].assign(n + 1, BigInt(1));
    for (int j = 1; j < n; ++j) t[n][j] = t[n - 1][j - 1] + t[n - 1][j];
  }
  return t;
}

// Plain convolution over vectors, independent of poly_mul.
std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

CoeffSeq seq(std::initializer_list<long> v) { return CoeffSeq(v); }

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(6, -1) == 0);
  CHECK(binomial(6, 7) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);

  const auto t = pascal(80);
  for (int n = 0; n <= 80; ++n) {
    const auto row = binomial_row(n);
    for (int j = 0; j <= n; ++j) {
      REQUIRE(binomial(n, j) == t[n][j]);
      REQUIRE(row[j] == t[n][j]);
    }
  }
}

TEST_CASE("CoeffSeq invariants") {
  CHECK(seq({1, 2, 0, 0}).degree() == 1);
  CHECK(seq({0}).is_zero());
  CHECK(CoeffSeq().is_zero());
  CHECK_THROWS_AS(seq({1, -1}), std::invalid_argument);
  CHECK(seq({3, 4}).at(-1) == 0);
  CHECK(seq({3, 4}).at(5) == 0);
}

TEST_CASE("FamilyParams validation") {
  CHECK_NOTHROW(FamilyParams::make(1, 2));
  CHECK_THROWS_AS(FamilyParams::make(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(FamilyParams::make(3, 1), std::invalid_argument);
}

TEST_CASE("expand_family examples") {
  CHECK(expand_family({1, 2}) == seq({1, 1, 1, 1}));
  CHECK(expand_family({6, 3}) == seq({1, 6, 15, 21, 21, 21, 21, 15, 6, 1}));
  CHECK(expand_family({5, 3}) == seq({1, 5, 10, 11, 10, 11, 10, 5, 1}));
  // Oracle for the two examples above: convolution with 1 + x^3.
  const auto t = pascal(6);
  const std::vector<BigInt> g{1, 0, 0, 1};
  CHECK(CoeffSeq(convolve(t[6], g)) == expand_family({6, 3}));
  CHECK(CoeffSeq(convolve(t[5], g)) == expand_family({5, 3}));
}

TEST_CASE("poly_mul") {
  CHECK(poly_mul(seq({1, 1}), seq({1, 1})) == seq({1, 2, 1}));
  const auto s = seq({4, 0, 7, 1});
  CHECK(poly_mul(seq({1}), s) == s);
  CHECK(poly_mul(one_plus_x_pow(6), seq({1, 0, 0, 1})) == expand_family({6, 3}));
}

TEST_CASE("coefficient") {
  const FamilyParams p{6, 3};
  CHECK(coefficient(p, 3) == 21);
  CHECK(coefficient(p, -1) == 0);
  CHECK(coefficient(p, 10) == 0);
  CHECK(coefficient(p, 5) == 21);
  CHECK(coefficient(p, 9 - 5) == coefficient(p, 5));
}

TEST_CASE("family invariants: symmetry, sum, agreement with convolution") {
  const auto t = pascal(64);
  for (std::int64_t m = 1; m <= 64; ++m) {
    for (std::int64_t k = 2; k <= 16; ++k) {
      const FamilyParams p{m, k};
      const auto s = expand_family(p);
      REQUIRE(s.degree() == static_cast<std::size_t>(m + k));
      std::vector<BigInt> g(k + 1, BigInt(0));
      g.front() = 1;
      g.back() = 1;
      REQUIRE(s == CoeffSeq(convolve(t[m], g)));
      REQUIRE(s == poly_mul(one_plus_x_pow(m), CoeffSeq(g)));
      BigInt two_pow = 1;
      two_pow <<= static_cast<mp_bitcnt_t>(m + 1);
      REQUIRE(s.sum() == two_pow);
      for (std::int64_t u = 0; u <= m + k; ++u) {
        REQUIRE(coefficient(p, u) == coefficient(p, m + k - u));
        REQUIRE(coefficient(p, u) == s.at(u));
      }
    }
  }
}

TEST_CASE("is_unimodal") {
  const auto r = is_unimodal(seq({1, 5, 10, 11, 10, 11, 10, 5, 1}));
  CHECK_FALSE(r.unimodal);
  REQUIRE(r.witness);
  CHECK(r.witness->first == 4);
  CHECK(r.witness->second == 5);
  CHECK(is_unimodal(seq({1, 6, 15, 21, 21, 21, 21, 15, 6, 1})).unimodal);
  CHECK(is_unimodal(seq({3})).unimodal);
  CHECK(is_unimodal(seq({0, 0, 2, 2, 1})).unimodal);
  CHECK_FALSE(is_unimodal(seq({2, 1, 1, 2})).unimodal);
}

TEST_CASE("is_strongly_unimodal") {
  const auto gap = is_strongly_unimodal(seq({1, 0, 1}));
  CHECK_FALSE(gap.strongly_unimodal);
  CHECK(gap.failure == StrongFailure::internal_zero);
  CHECK(gap.index == 0);

  CHECK(is_strongly_unimodal(seq({1, 6, 15, 21, 21, 21, 21, 15, 6, 1})).strongly_unimodal);
  CHECK(is_strongly_unimodal(seq({1, 2, 4})).strongly_unimodal);  // 4 >= 4

  const auto lc = is_strongly_unimodal(seq({1, 2, 5}));
  CHECK_FALSE(lc.strongly_unimodal);
  CHECK(lc.failure == StrongFailure::log_concavity);
  CHECK(lc.index == 1);

  // Leading zeros are trimmed, so the reported index is into the original list.
  const auto shifted = is_strongly_unimodal(seq({0, 0, 1, 2, 5}));
  CHECK(shifted.failure == StrongFailure::log_concavity);
  CHECK(shifted.index == 3);
  CHECK(is_strongly_unimodal(seq({0, 0, 1, 1})).strongly_unimodal);

  // 10^2 < 11 * 11 at index 4.
  const auto fam = is_strongly_unimodal(expand_family({5, 3}));
  CHECK_FALSE(fam.strongly_unimodal);
  CHECK(fam.failure == StrongFailure::log_concavity);
  CHECK(fam.index == 4);
}

TEST_CASE("property: strongly unimodal without internal zeros implies unimodal") {
  std::mt19937_64 rng(20261017);
  std::uniform_int_distribution<int> len_dist(1, 12);
  std::uniform_int_distribution<long> val_dist(1, 50);
  int strong_seen = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    std::vector<BigInt> v(len_dist(rng));
    // Build concave-ish profiles half the time so the predicate is exercised.
    const bool shaped = trial % 2 == 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const long x = static_cast<long>(i) - static_cast<long>(v.size()) / 2;
      v[i] = shaped ? BigInt(std::max(1L, 400 - x * x * val_dist(rng) / 5)) : BigInt(val_dist(rng));
    }
    const CoeffSeq s(v);
    if (is_strongly_unimodal(s).strongly_unimodal) {
      ++strong_seen;
      REQUIRE(is_unimodal(s).unimodal);
    }
  }
  CHECK(strong_seen > 100);
}

TEST_CASE("internal zero runs longer than one entry") {
  const auto r = is_strongly_unimodal(seq({1, 0, 0, 1}));
  CHECK_FALSE(r.strongly_unimodal);
  CHECK(r.failure == StrongFailure::internal_zero);
  CHECK(r.index == 0);
  CHECK_FALSE(is_unimodal(seq({1, 0, 0, 1})).unimodal);
  const auto later = is_strongly_unimodal(seq({0, 2, 3, 0, 0, 0, 1}));
  CHECK(later.failure == StrongFailure::internal_zero);
  CHECK(later.index == 2);
}
