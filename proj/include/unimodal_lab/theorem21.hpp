#pragma once

// Classifies N for ((1+x)/2)^N (1+x^k)/2 against the k^4 bounds
//   N >= alpha k^4                  => member,
//   N <  alpha k^4 / (1 + 8/k^2)   => not a member,
// using an enclosure of alpha; N in between is settled by a direct
// membership certificate.

#include "unimodal_lab/certmax.hpp"
#include "unimodal_lab/eclass.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace unimodal_lab::certmax {

enum class BoundClass { member_by_bound, nonmember_by_bound, gap };
std::string to_string(BoundClass c);

struct Theorem21Verdict {
  std::int64_t k = 0;
  std::int64_t N = 0;
  BoundClass bound_class = BoundClass::gap;
  /// alpha_hi k^4: every N from here on is a member.
  double member_from = 0.0;
  /// alpha_lo k^4 / (1 + 8/k^2): every N below is a nonmember.
  double nonmember_below = 0.0;
  /// Direct certificate; always computed for gap cases, and for the others
  /// when requested.
  std::optional<eclass::MembershipCertificate> certificate;
};

/// Requires k >= 9.
Theorem21Verdict theorem21_bounds(std::int64_t k, std::int64_t N, const Interval& alpha,
                                  std::int64_t grid_points = 100000, bool always_certify = false);

}  // namespace unimodal_lab::certmax
