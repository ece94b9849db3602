#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <array>
#include <random>
#include <thread>

#include "germsig/localsig.hpp"
#include "germsig/sampling.hpp"

using namespace germsig;

namespace {

Rational closed_form(int d, int m) {
  return make_rational(Integer((d - 1) * (d + 1)) * m, Integer(3 * d) * (m - 1));
}

GeneratorWord w(const std::string& s) { return GeneratorWord::parse(s); }

}  // namespace

TEST_CASE("p1 germ data") {
  const GermData g26 = p1_germ(2, 6);
  CHECK(g26.order == 2);
  REQUIRE(g26.horizontal.size() == 1);
  CHECK(g26.horizontal.begin()->first.second == Angle(1, 2));
  CHECK(g26.horizontal.begin()->second == Rational(3, 5));

  const GermData g33 = p1_germ(3, 3);
  REQUIRE(g33.horizontal.size() == 2);
  for (const auto& [key, chi] : g33.horizontal) {
    CHECK(key.second == Angle(1, 3));
    CHECK(chi == Rational(1, 2));
  }
  CHECK_ERROR(p1_germ(2, 5), "BadSpec");
}

TEST_CASE("sigma_loc examples") {
  GermData trivial;
  trivial.order = 4;
  trivial.sign_quotient = -3;
  CHECK(sigma_loc(trivial) == -12);
  CHECK(sigma_loc(p1_germ(2, 6)) == Rational(-3, 5));
  CHECK(sigma_loc(p1_germ(3, 3)) == Rational(-4, 3));

  GermData bad;
  bad.order = 2;
  bad.horizontal[{"1", Angle(0, 1)}] = 1;
  CHECK_ERROR(sigma_loc(bad), "ZeroAngle");
}

TEST_CASE("closed forms for the p1 germ") {
  for (int d = 2; d <= 5; ++d)
    for (int m = d; m <= 12; m += d) {
      if (m < 3) continue;
      INFO("d=" << d << " m=" << m);
      CHECK(sigma_loc(p1_germ(d, m)) == -closed_form(d, m));
      CHECK(total_signature(germ_action(p1_germ(d, m))) == -closed_form(d, m));
      CHECK(p1_base(d, m) == closed_form(d, m));
    }
  // Hyperelliptic case: (g + 1)/(2g + 1).
  for (int g = 1; g <= 6; ++g)
    CHECK(phi_word(PhiTable::p1(2, 2 * g + 2), w("s12")) == make_rational(g + 1, 2 * g + 1));
}

TEST_CASE("germ assembly agrees with the G-signature route") {
  std::mt19937_64 rng(37);
  const std::array<int, 6> dens{2, 3, 4, 6, 8, 12};
  std::uniform_int_distribution<std::size_t> pick(0, dens.size() - 1);
  std::uniform_int_distribution<int> small(-3, 3);
  auto angle = [&] {
    const int q = dens[pick(rng)];
    return Angle(std::uniform_int_distribution<int>(1, q - 1)(rng), q);
  };
  int rational_cases = 0;
  for (int t = 0; t < 200; ++t) {
    GermData g;
    g.order = 3;
    g.sign_quotient = small(rng);
    for (int n = 0; n < 2; ++n)
      g.horizontal[{std::to_string(1 + n), angle().reduced_to_half_turn()}] =
          make_rational(small(rng), 1 + std::abs(small(rng)));
    if (rng() % 2) g.vertical_points["1"].push_back(FixedPoint{angle(), angle()});
    if (rng() % 2)
      g.vertical_surfaces["2"].push_back(FixedSurface{angle().reduced_to_half_turn(), small(rng)});
    std::string direct, routed;
    Rational a, b;
    try {
      a = sigma_loc(g);
    } catch (const Error& e) {
      direct = e.name();
    }
    try {
      b = total_signature(germ_action(g));
    } catch (const Error& e) {
      routed = e.name();
    }
    CHECK(direct == routed);
    if (direct.empty()) {
      CHECK(a == b);
      ++rational_cases;
    }
  }
  CHECK(rational_cases > 20);
}

TEST_CASE("phi examples") {
  const PhiTable t24 = PhiTable::p1(2, 4);
  CHECK(phi_word(t24, w("")) == 0);
  CHECK(phi_word(t24, w("s12 s23 s12")) == phi_word(t24, w("s23 s12 s23")));
  CHECK(phi_word(t24, w("s12 s12^-1")) == 0);
  CHECK(phi_word(t24, w("s12^-1")) == -phi_word(t24, w("s12")));
  CHECK(phi_word(t24, w("t12")) == phi_word(t24, w("s12^2")));
  CHECK(t24.canonical(w("t12 s23")) == w("s12 s12 s23"));
  for (int d = 2; d <= 4; ++d) {
    const int m = d == 2 ? 6 : d * 2;
    const PhiTable t = PhiTable::p1(d, m);
    CHECK(sigma_loc_broad(0, w(""), t) == 0);
    CHECK(sigma_loc_broad(0, w("s12^-1"), t) == sigma_loc(p1_germ(d, m)));
    CHECK(sigma_loc_broad(1, w("s12"), t) == closed_form(d, m) + 1);
  }
  CHECK_ERROR(PhiTable(CoverSpec{3, 4, {1, 2, 1, 2}}, Rational(1)), "BadSpec");
  CHECK_ERROR(phi_word(t24, w("s17")), "InvalidWord");
}

TEST_CASE("coboundary relation on random words") {
  std::mt19937_64 rng(41);
  for (const auto& [d, m] : {std::pair{2, 4}, {2, 6}, {3, 3}, {4, 4}}) {
    const PhiTable t = PhiTable::p1(d, m);
    const CoverSpec spec = CoverSpec::p1(d, m);
    for (int n = 0; n < 25; ++n) {
      const GeneratorWord u = random_word(rng, m, 5), v = random_word(rng, m, 5);
      const SpMatrix mu = word_to_matrix(spec, u), mv = word_to_matrix(spec, v);
      CHECK(phi_word(t, u) + phi_word(t, v) + phi_word(t, (u * v).inverse()) ==
            meyer_tau(mu, mv));
      const GeneratorWord c = random_word(rng, m, 4);
      CHECK(phi_word(t, c * u * c.inverse()) == phi_word(t, u));
    }
  }
}

TEST_CASE("phi vanishes on the full twist relator") {
  for (const auto& [d, m] : {std::pair{2, 4}, {2, 6}, {3, 3}, {3, 6}}) {
    std::string chain;
    for (int i = 1; i < m; ++i) chain += "s" + std::to_string(i) + "," + std::to_string(i + 1) + " ";
    std::string delta2;
    for (int n = 0; n < m; ++n) delta2 += chain;
    CHECK(phi_word(PhiTable::p1(d, m), w(delta2)) == 0);
  }
}

TEST_CASE("shared table under concurrent use") {
  const PhiTable t = PhiTable::p1(3, 6);
  std::mt19937_64 rng(43);
  std::vector<GeneratorWord> words;
  for (int n = 0; n < 30; ++n) words.push_back(random_word(rng, 6, 6));
  std::vector<Rational> serial;
  {
    const PhiTable fresh = PhiTable::p1(3, 6);
    for (const auto& x : words) serial.push_back(phi_word(fresh, x));
  }
  std::vector<std::vector<Rational>> results(4);
  std::vector<std::thread> threads;
  for (std::size_t k = 0; k < results.size(); ++k)
    threads.emplace_back([&, k] {
      for (const auto& x : words) results[k].push_back(phi_word(t, x));
    });
  for (auto& th : threads) th.join();
  for (const auto& r : results) CHECK(r == serial);
}
