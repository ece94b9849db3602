#include "germsig/gsign.hpp"

#include "germsig/error.hpp"

namespace germsig {

void FixedPointData::validate() const {
  for (const auto& s : surfaces) {
    if (s.psi.is_zero())
      throw Error("ZeroAngle", "fixed surface with zero rotation angle");
    if (!s.psi.at_most_pi())
      throw Error("BadSpec", "surface angle " + s.psi.to_string() + " exceeds pi");
  }
  for (const auto& p : points)
    if (p.phi.is_zero() || p.phi_prime.is_zero())
      throw Error("PoleAngle", "fixed point with zero rotation angle");
}

void GroupActionData::validate() const {
  if (order < 1) throw Error("BadSpec", "group order must be positive");
  if (per_element.size() != static_cast<std::size_t>(order - 1))
    throw Error("BadSpec", "expected " + std::to_string(order - 1) +
                               " nontrivial elements, got " +
                               std::to_string(per_element.size()));
  for (const auto& [label, fp] : per_element) fp.validate();
}

AlgReal g_signature(const FixedPointData& fp) {
  fp.validate();
  AlgReal total;
  for (const auto& s : fp.surfaces)
    if (s.euler != 0) total = total + AlgReal(s.euler) * cosec2_half(s.psi);
  for (const auto& p : fp.points) total = total - cot_half(p.phi) * cot_half(p.phi_prime);
  return total.canonical();
}

Rational total_signature(const GroupActionData& gd) {
  gd.validate();
  AlgReal sum;
  for (const auto& [label, fp] : gd.per_element) sum = sum + g_signature(fp);
  return -as_rational(sum.canonical()) + Rational(gd.sign_quotient * gd.order);
}

}  // namespace germsig
