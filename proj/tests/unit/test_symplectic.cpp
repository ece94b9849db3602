#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <fstream>
#include <random>

#include "germsig/exact.hpp"
#include "germsig/json_io.hpp"
#include "germsig/sampling.hpp"
#include "germsig/symplectic.hpp"

using namespace germsig;

namespace {

Json load(const std::string& name) {
  std::ifstream in(std::string(GERMSIG_FIXTURES) + "/" + name);
  REQUIRE(in);
  return Json::parse(in);
}

IntMatrix omega(std::size_t g) { return standard_form(g); }

bool is_symplectic(const IntMatrix& a) {
  return a.transpose() * omega(a.rows() / 2) * a == omega(a.rows() / 2);
}

}  // namespace

TEST_CASE("check_symplectic examples") {
  CHECK(check_symplectic(IntMatrix::identity(4)) == SpMatrix(2));
  CHECK(check_symplectic(standard_form(2)).matrix() == standard_form(2));
  CHECK_ERROR(check_symplectic(IntMatrix{{2, 0}, {0, 1}}), "NotSymplectic");
  CHECK_ERROR(check_symplectic(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), "NotSymplectic");
  try {
    check_symplectic(IntMatrix{{2, 0}, {0, 1}});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
  }
}

TEST_CASE("transvections") {
  CHECK(transvection({0, 0}, 1) == SpMatrix(1));
  const SpMatrix t = transvection({1, 0}, 1);
  const std::vector<Integer> c{1, 0};
  CHECK(t.matrix() * c == c);
  CHECK(is_symplectic(t.matrix()));
  CHECK(t * transvection({1, 0}, -1) == SpMatrix(1));

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int n = 0; n < 50; ++n) {
    std::vector<Integer> v(4);
    for (auto& x : v) x = entry(rng);
    const SpMatrix a = transvection(v, n % 2 ? 1 : -1);
    CHECK(is_symplectic(a.matrix()));
    CHECK(a.matrix() * v == v);
    // (A - I)^2 = 0.
    const IntMatrix n1 = a.matrix() - IntMatrix::identity(4);
    CHECK(n1 * n1 == IntMatrix(4, 4));
  }
}

TEST_CASE("inverse and products") {
  std::mt19937_64 rng(5);
  for (std::size_t g = 1; g <= 3; ++g)
    for (int n = 0; n < 20; ++n) {
      const SpMatrix a = random_symplectic(rng, g);
      const SpMatrix b = random_symplectic(rng, g);
      CHECK(a * a.inverse() == SpMatrix(g));
      CHECK(is_symplectic((a * b).matrix()));
    }
}

TEST_CASE("tau(S, S) against the hand-derived fixture") {
  const Json fx = load("meyer_g1.json");
  const SpMatrix s = matrix_from_json(fx["S"]);

  // Rebuild the Gram matrix from the recorded kernel basis and the defining
  // formula, independently of meyer_gram.
  const IntMatrix& a = s.matrix();
  const IntMatrix ainv = s.inverse().matrix();
  const IntMatrix id = IntMatrix::identity(2);
  std::vector<std::vector<Integer>> xs, ys;
  for (const auto& v : fx["kernel_basis"]) {
    std::vector<Integer> x{v[0].get<long>(), v[1].get<long>()};
    std::vector<Integer> y{v[2].get<long>(), v[3].get<long>()};
    std::vector<Integer> lhs = (ainv - id) * x, rhs = (a - id) * y;
    for (std::size_t r = 0; r < 2; ++r) CHECK(lhs[r] + rhs[r] == 0);
    xs.push_back(x);
    ys.push_back(y);
  }
  const IntMatrix w = omega(1) * (id - a);
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q < 2; ++q) {
      const std::vector<Integer> wy = w * ys[q];
      Integer v = 0;
      for (std::size_t r = 0; r < 2; ++r) v += (xs[p][r] + ys[p][r]) * wy[r];
      CHECK(v == fx["gram"][p][q].get<long>());
    }

  CHECK(form_signature(meyer_gram(s, s)) == fx["raw_signature"].get<int>());
  CHECK(meyer_tau(s, s) == fx["tau"].get<int>());
}

TEST_CASE("Meyer cocycle properties on random matrices") {
  std::mt19937_64 rng(17);
  for (std::size_t g = 1; g <= 3; ++g)
    for (int n = 0; n < 25; ++n) {
      const SpMatrix a = random_symplectic(rng, g);
      const SpMatrix b = random_symplectic(rng, g);
      const SpMatrix c = random_symplectic(rng, g);
      CHECK(meyer_tau(SpMatrix(g), b) == 0);
      CHECK(meyer_tau(a, SpMatrix(g)) == 0);
      CHECK(meyer_tau(a, a.inverse()) == 0);
      CHECK(meyer_tau(a, b) + meyer_tau(a * b, c) == meyer_tau(a, b * c) + meyer_tau(b, c));
      CHECK(meyer_tau(c * a * c.inverse(), c * b * c.inverse()) == meyer_tau(a, b));
      CHECK(meyer_tau(a, b) == meyer_tau(b, a));
      const RatMatrix gram = meyer_gram(a, b);
      CHECK(gram == gram.transpose());
      CHECK(std::abs(meyer_tau(a, b)) <= static_cast<int>(gram.rows()));
    }
}
