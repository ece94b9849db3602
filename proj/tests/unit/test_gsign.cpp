#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <cmath>
#include <numbers>
#include <array>
#include <random>

#include "germsig/gsign.hpp"

using namespace germsig;

namespace {

double numeric(const FixedPointData& fp) {
  double v = 0;
  for (const auto& s : fp.surfaces) {
    const double x = std::sin(s.psi.radians() / 2);
    v += s.euler.get_d() / (x * x);
  }
  for (const auto& p : fp.points)
    v -= 1 / std::tan(p.phi.radians() / 2) / std::tan(p.phi_prime.radians() / 2);
  return v;
}

double value(const AlgReal& x) { return std::stod(x.approx(30)); }

FixedPointData random_fixed_data(std::mt19937_64& rng) {
  const std::array<int, 8> dens{2, 3, 4, 5, 6, 8, 10, 12};
  std::uniform_int_distribution<std::size_t> pick(0, dens.size() - 1);
  std::uniform_int_distribution<int> count(0, 3);
  std::uniform_int_distribution<int> euler(-4, 4);
  FixedPointData fp;
  auto angle = [&] {
    const int q = dens[pick(rng)];
    return Angle(std::uniform_int_distribution<int>(1, q - 1)(rng), q);
  };
  for (int n = count(rng); n > 0; --n)
    fp.surfaces.push_back(FixedSurface{angle().reduced_to_half_turn(), Rational(euler(rng))});
  for (int n = count(rng); n > 0; --n) fp.points.push_back(FixedPoint{angle(), angle()});
  return fp;
}

}  // namespace

TEST_CASE("g_signature examples") {
  CHECK(g_signature({}).is_zero());
  CHECK(as_rational(g_signature({{FixedSurface{Angle(1, 2), Rational(5)}}, {}})) == 5);
  CHECK(g_signature({{}, {FixedPoint{Angle(1, 2), Angle(1, 2)}}}).is_zero());
  CHECK(as_rational(g_signature({{}, {FixedPoint{Angle(1, 4), Angle(3, 4)}}})) == 1);
  CHECK_ERROR(g_signature({{FixedSurface{Angle(0, 1), Rational(1)}}, {}}), "ZeroAngle");
  CHECK_ERROR(g_signature({{FixedSurface{Angle(2, 3), Rational(1)}}, {}}), "BadSpec");
  CHECK_ERROR(g_signature({{}, {FixedPoint{Angle(0, 1), Angle(1, 3)}}}), "PoleAngle");
}

TEST_CASE("total_signature examples") {
  GroupActionData trivial;
  trivial.order = 1;
  trivial.sign_quotient = 7;
  CHECK(total_signature(trivial) == 7);

  GroupActionData inv;
  inv.order = 2;
  inv.sign_quotient = 0;
  inv.per_element["t"] = {{FixedSurface{Angle(1, 2), Rational(-2)}}, {}};
  CHECK(total_signature(inv) == 2);

  inv.per_element.clear();
  CHECK_ERROR(total_signature(inv), "BadSpec");

  GroupActionData irr;
  irr.order = 2;
  irr.per_element["t"] = {{}, {FixedPoint{Angle(1, 3), Angle(1, 4)}}};
  CHECK_ERROR(total_signature(irr), "NotRational");
}

TEST_CASE("g_signature properties") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const FixedPointData a = random_fixed_data(rng), b = random_fixed_data(rng);
    FixedPointData u = a;
    u.surfaces.insert(u.surfaces.end(), b.surfaces.begin(), b.surfaces.end());
    u.points.insert(u.points.end(), b.points.begin(), b.points.end());
    CHECK(g_signature(u) == g_signature(a) + g_signature(b));

    FixedPointData swapped = a, inverted = a;
    for (auto& p : swapped.points) std::swap(p.phi, p.phi_prime);
    for (auto& p : inverted.points) p = FixedPoint{p.phi.negated(), p.phi_prime.negated()};
    CHECK(g_signature(swapped) == g_signature(a));
    CHECK(g_signature(inverted) == g_signature(a));

    CHECK(std::abs(value(g_signature(a)) - numeric(a)) < 1e-9 * (1 + std::abs(numeric(a))));
  }
}
