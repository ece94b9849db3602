#pragma once

#include <complex>
#include <vector>

#include "germsig/matrix.hpp"

namespace germsig {

// The coefficient of d/dw of (t_b^{ijk})_*(d/dz) at alpha_i(b), where
// alpha_1 = sqrt(b), alpha_2 = -sqrt(b) and alpha_i = exp(2 pi i (i-2)/(m-2))
// for i >= 3, in the coordinate w = x_2 / x_1.
struct SectionSpec {
  int m = 3;
  int i = 1;
  int j = 2;
  int k = 3;

  // Throws Error("BadSpec") unless i, j, k are distinct in 1..m.
  void validate() const;
};

// Tensor product of sections (powers allowed). `projection_power` counts
// factors of the normal projection onto N(S_12): d/dw = -2 sqrt(b) d/db
// modulo the tangent space of {w^2 = b}.
struct TensorSection {
  std::vector<std::pair<SectionSpec, int>> factors;
  int projection_power = 0;

  TensorSection() = default;
  TensorSection(const SectionSpec& s, int power = 1) : factors{{s, power}} {}  // NOLINT
  TensorSection& operator*=(const TensorSection& other);
  friend TensorSection operator*(TensorSection a, const TensorSection& b) { return a *= b; }
  TensorSection pow(int n) const;
};

// b = radius * exp(i theta), theta in [0, 2 pi * sheets], sqrt(b) continued.
struct BoundaryLoop {
  Rational radius = Rational(1, 2);
  int sheets = 1;

  void validate() const;
};

// Evaluated with the given continuation of sqrt(b). Throws Error("Collision").
std::complex<double> section_value(const SectionSpec& spec, std::complex<double> b,
                                   std::complex<double> sqrt_b);
std::complex<long double> section_value(const SectionSpec& spec,
                                        std::complex<long double> b,
                                        std::complex<long double> sqrt_b);

// Winding number of the section's coefficient along the loop, by adaptive
// phase continuation (every accepted step turns by less than pi/4).
// Throws Error("NonVanishingViolated").
long winding(const TensorSection& s, const BoundaryLoop& loop);
// Winding of a / b.
long relative_winding(const TensorSection& a, const TensorSection& b,
                      const BoundaryLoop& loop);
// Intersection number a . b of the boundary curves in the punctured normal
// bundle, normalized so that a curve winding k times relative to b meets it
// -k times: a . b = -relative_winding(a, b).
long intersection_number(const TensorSection& a, const TensorSection& b,
                         const BoundaryLoop& loop);

// Sample counts used by the continuation; doubling is used in tests.
struct WindingOptions {
  int initial_samples = 64;
  bool extended = false;  // long double from the start
};
long winding(const TensorSection& s, const BoundaryLoop& loop, const WindingOptions& opts);

// Boundary numbers over the disk of the p1 germ, per horizontal component.
struct P1BoundaryNumbers {
  int m = 0;
  std::vector<long> per_si;         // n over S_i, i = 3..m
  std::vector<long> s12_pairs;      // n(r s12(j,k)), ordered j != k >= 3
  std::vector<long> s12_plus;       // n(r s12^+(j)), j = 3..m
  std::vector<long> s12_minus;      // n(r s12^-(j))
  long s12_subtotal = 0;            // all factors together
  long total = 0;
};

// Section s_i(j,k) tensored over all admissible ordered (j,k).
TensorSection si_boundary_section(int m, int i);
// s_12 boundary section before normal projection.
TensorSection s12_boundary_section(int m);
// Reference section for S_i: s_i(j',k') with the smallest admissible
// j' < k' >= 3, or the constant section d/dw when m is too small.
TensorSection si_reference(int m, int i);
// n over S_i by the boundary rule against the reference.
long boundary_number_si(int m, int i);
// n(r s) over S_12 against the trivialization by d/db, which extends.
long boundary_number_s12(int m, const TensorSection& s);

P1BoundaryNumbers p1_boundary_numbers(int m);
// m(m-2) / (d (m-1)(m-2)) assembled from the computed boundary numbers.
Rational chi_loc_p1(int d, int m);

}  // namespace germsig
