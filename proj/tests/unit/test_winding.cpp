#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <cstdlib>
#include <numbers>
#include <random>

#include "germsig/localsig.hpp"
#include "germsig/winding.hpp"

using namespace germsig;
using C = std::complex<double>;

namespace {

const BoundaryLoop kOne{Rational(1, 2), 1};
const BoundaryLoop kTwo{Rational(1, 2), 2};

C value_at(const SectionSpec& s, double theta, double radius = 0.5) {
  const C sqrt_b = std::polar(std::sqrt(radius), theta / 2);
  return section_value(s, sqrt_b * sqrt_b, sqrt_b);
}

TensorSection projection_only(int power) {
  TensorSection t;
  t.projection_power = power;
  return t;
}

}  // namespace

TEST_CASE("section values") {
  // m = 4: alpha_3 = -1, alpha_1 = 1/2, alpha_2 = -1/2 at b = 1/4.
  const C v = section_value(SectionSpec{4, 3, 1, 2}, C(0.25), C(0.5));
  CHECK(std::abs(v - C(-0.75)) < 1e-14);

  // Indices >= 3 do not see the branch of sqrt(b).
  const SectionSpec s{5, 3, 4, 5};
  CHECK(std::abs(section_value(s, C(0, 0.5), std::sqrt(C(0, 0.5))) -
                 section_value(s, C(0, 0.5), -std::sqrt(C(0, 0.5)))) < 1e-14);
  CHECK(std::abs(value_at(s, 0) - value_at(s, 2 * std::numbers::pi)) < 1e-12);

  // Continuing sqrt(b) once around swaps alpha_1 and alpha_2.
  for (const auto& [j, k] : {std::pair{3, 4}, {2, 3}, {4, 2}}) {
    const SectionSpec one{4, 1, j, k};
    SectionSpec two = one;
    two.i = 2;
    if (one.j == 2) two.j = 1;
    if (one.k == 2) two.k = 1;
    for (double theta : {0.3, 1.7, 4.0}) {
      const C after = value_at(one, theta + 2 * std::numbers::pi);
      CHECK(std::abs(after - value_at(two, theta)) < 1e-12);
    }
  }
}

TEST_CASE("section errors") {
  // alpha_1 = sqrt(b) = 1 = alpha_3 when m = 3.
  CHECK_ERROR(section_value(SectionSpec{3, 1, 3, 2}, C(1), C(1)), "Collision");
  CHECK_ERROR(section_value(SectionSpec{3, 1, 1, 2}, C(0.5), std::sqrt(C(0.5))), "BadSpec");
  CHECK_ERROR(section_value(SectionSpec{3, 1, 4, 2}, C(0.5), std::sqrt(C(0.5))), "BadSpec");
  CHECK_ERROR(section_value(SectionSpec{3, 1, 3, 2}, C(0.5), C(0.5)), "BadSpec");
  CHECK_ERROR(winding(TensorSection(SectionSpec{4, 3, 1, 2}), BoundaryLoop{Rational(1, 2), 3}),
              "BadSpec");
  // A section winding only half way does not close on one sheet.
  CHECK_ERROR(winding(projection_only(1), kOne), "BadSpec");
  // Overflow at both precisions.
  CHECK_ERROR(winding(TensorSection(SectionSpec{4, 3, 1, 2}, 4000000), kOne),
              "NonVanishingViolated");
}

TEST_CASE("windings against the argument principle") {
  // sqrt(b) turns once over two sheets.
  CHECK(winding(projection_only(1), kTwo) == 1);
  CHECK(winding(projection_only(-3), kTwo) == -3);
  CHECK(winding(projection_only(2), kOne) == 1);
  // Constant in b.
  CHECK(winding(TensorSection(SectionSpec{6, 3, 4, 5}), kOne) == 0);
  // (1 - b)/(-2): no zero inside |b| = 1/2.
  CHECK(winding(TensorSection(SectionSpec{4, 1, 3, 4}), kTwo) == 0);
  // 2 sqrt(b) (a3 - sqrt(b)) / (-(a3 + sqrt(b))): one turn from the sqrt(b).
  CHECK(winding(TensorSection(SectionSpec{3, 1, 2, 3}), kTwo) == 1);
  CHECK(winding(TensorSection(SectionSpec{3, 1, 2, 3}, -2), kTwo) == -2);
  // At radius 2 the factor alpha_3 - sqrt(b) vanishes inside.
  CHECK(winding(TensorSection(SectionSpec{3, 1, 2, 3}), BoundaryLoop{Rational(2), 2}) == 1);
}

TEST_CASE("relative winding and intersections") {
  const TensorSection a(SectionSpec{5, 3, 4, 5});
  CHECK(relative_winding(a, a, kOne) == 0);
  for (int m = 4; m <= 7; ++m)
    for (int i = 3; i <= m; ++i) {
      const TensorSection ref = si_reference(m, i);
      const TensorSection s = TensorSection(SectionSpec{m, i, 1, 2}) * SectionSpec{m, i, 2, 1};
      CHECK(relative_winding(s, ref.pow(2), kOne) == -1);
      CHECK(intersection_number(s, ref.pow(2), kOne) == 1);
      for (int j = 3; j <= m; ++j)
        for (int k = 3; k <= m; ++k)
          if (j != k && j != i && k != i)
            CHECK(intersection_number(SectionSpec{m, i, j, k}, ref, kOne) == 0);
    }
}

TEST_CASE("windings are additive and stable under refinement") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 40; ++t) {
    const int m = 3 + static_cast<int>(rng() % 5);
    auto random_tensor = [&] {
      TensorSection s;
      for (int n = 0; n < 3; ++n) {
        int i = 1 + static_cast<int>(rng() % m), j, k;
        do j = 1 + static_cast<int>(rng() % m); while (j == i);
        do k = 1 + static_cast<int>(rng() % m); while (k == i || k == j);
        s *= TensorSection(SectionSpec{m, i, j, k}, static_cast<int>(rng() % 5) - 2);
      }
      s.projection_power = static_cast<int>(rng() % 3) - 1;
      return s;
    };
    const TensorSection a = random_tensor(), b = random_tensor();
    const long wa = winding(a, kTwo), wb = winding(b, kTwo);
    CHECK(winding(a * b, kTwo) == wa + wb);
    CHECK(winding(a.pow(3), kTwo) == 3 * wa);
    for (int samples : {16, 128, 1024})
      CHECK(winding(a, kTwo, WindingOptions{samples, false}) == wa);
    CHECK(winding(a, kTwo, WindingOptions{64, true}) == wa);
  }
}

TEST_CASE("GERMSIG_PRECISION raises the starting precision") {
  const TensorSection s = s12_boundary_section(6);
  const long plain = winding(s, kTwo);
  setenv("GERMSIG_PRECISION", "200", 1);
  CHECK(winding(s, kTwo) == plain);
  unsetenv("GERMSIG_PRECISION");
}

TEST_CASE("boundary numbers of the p1 germ") {
  for (int m = 3; m <= 8; ++m) {
    INFO("m=" << m);
    const P1BoundaryNumbers n = p1_boundary_numbers(m);
    CHECK(n.per_si.size() == static_cast<std::size_t>(m - 2));
    for (long x : n.per_si) CHECK(x == -1);
    for (long x : n.s12_pairs) CHECK(x == 1);
    for (long x : n.s12_plus) CHECK(x == 2);
    for (long x : n.s12_minus) CHECK(x == 2);
    CHECK(n.s12_subtotal == static_cast<long>(m + 1) * (m - 2));
    CHECK(n.total == static_cast<long>(m) * (m - 2));
  }
  CHECK(chi_loc_p1(2, 6) == Rational(3, 5));
  CHECK(chi_loc_p1(3, 3) == Rational(1, 2));
  CHECK(chi_loc_p1(4, 8) == p1_germ(4, 8).horizontal.begin()->second);
  CHECK_ERROR(chi_loc_p1(2, 5), "BadSpec");
}
