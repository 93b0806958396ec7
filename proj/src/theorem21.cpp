#include "unimodal_lab/theorem21.hpp"

#include <stdexcept>

namespace unimodal_lab::certmax {

std::string to_string(BoundClass c) {
  switch (c) {
    case BoundClass::member_by_bound: return "member-by-bound";
    case BoundClass::nonmember_by_bound: return "nonmember-by-bound";
    case BoundClass::gap: return "gap";
  }
  return "unknown";
}

Theorem21Verdict theorem21_bounds(std::int64_t k, std::int64_t N, const Interval& alpha, std::int64_t grid_points,
                                  bool always_certify) {
  if (k < 9) throw std::invalid_argument("theorem21_bounds: requires k >= 9");
  if (N < 1) throw std::invalid_argument("theorem21_bounds: N must be >= 1");
  const double kd = static_cast<double>(k);
  const double k4 = kd * kd * kd * kd;
  Theorem21Verdict out;
  out.k = k;
  out.N = N;
  out.member_from = alpha.hi * k4;
  out.nonmember_below = alpha.lo * k4 / (1.0 + 8.0 / (kd * kd));
  const double n = static_cast<double>(N);
  if (n >= out.member_from) {
    out.bound_class = BoundClass::member_by_bound;
  } else if (n < out.nonmember_below) {
    out.bound_class = BoundClass::nonmember_by_bound;
  } else {
    out.bound_class = BoundClass::gap;
  }
  if (always_certify || out.bound_class == BoundClass::gap) {
    out.certificate = eclass::membership_certificate(N, k, grid_points);
  }
  return out;
}

}  // namespace unimodal_lab::certmax
