#pragma once

#include <map>
#include <string>
#include <vector>

#include "germsig/exact.hpp"
#include "germsig/matrix.hpp"

namespace germsig {

// A fixed surface with normal rotation angle psi in (0, pi] and normal Euler
// number e. e is an integer for closed actions; germ data carries the
// rational local Euler numbers here.
struct FixedSurface {
  Angle psi;
  Rational euler;
};

// An isolated fixed point with rotation angles (phi, phi').
struct FixedPoint {
  Angle phi;
  Angle phi_prime;
};

struct FixedPointData {
  std::vector<FixedSurface> surfaces;
  std::vector<FixedPoint> points;

  // Throws Error("ZeroAngle") / Error("BadSpec") on invalid angles.
  void validate() const;
};

struct GroupActionData {
  int order = 1;
  Integer sign_quotient = 0;
  // Keyed by an opaque label for each nontrivial element.
  std::map<std::string, FixedPointData> per_element;

  void validate() const;
};

// sum_i e_i cosec^2(psi_i/2) - sum_j cot(phi_j/2) cot(phi'_j/2).
AlgReal g_signature(const FixedPointData& fp);

// -sum_{h != 1} g_signature(h) + |G| Sign(X/G). Throws Error("NotRational").
Rational total_signature(const GroupActionData& gd);

}  // namespace germsig
