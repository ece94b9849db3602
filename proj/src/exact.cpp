#include "germsig/exact.hpp"

#include <mpfr.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "germsig/error.hpp"

namespace germsig {
namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint32_t> divisors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t k = 1; k <= n; ++k)
    if (n % k == 0) out.push_back(k);
  return out;
}

using IntPoly = std::vector<Integer>;

// Exact division of a by the monic polynomial b.
IntPoly divide_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    Integer c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

const IntPoly& cyclotomic_polynomial(std::uint32_t n) {
  static std::mutex mu;
  static std::map<std::uint32_t, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (auto d : divisors(n))
    if (d < n) p = divide_monic(p, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

// Reduces a polynomial in zeta_N (any degree) to the power basis.
std::vector<Rational> reduce(std::vector<Rational> poly, std::uint32_t n) {
  // zeta^N = 1 first, then modulo Phi_N.
  if (poly.size() > n) {
    for (std::size_t i = n; i < poly.size(); ++i) poly[i % n] += poly[i];
    poly.resize(n);
  }
  const IntPoly& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (sgn(poly[i]) == 0) continue;
    Rational c = poly[i];
    for (std::size_t j = 0; j <= deg; ++j)
      if (phi[j] != 0) poly[i - deg + j] -= c * phi[j];
  }
  poly.resize(deg, Rational(0));
  return poly;
}

// Substitutes zeta_from^j -> zeta_to^(j*k) and reduces at conductor `to`.
std::vector<Rational> substitute(const std::vector<Rational>& coords,
                                 std::int64_t k, std::uint32_t to) {
  std::vector<Rational> poly(to, Rational(0));
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (sgn(coords[j]) != 0)
      poly[floor_mod(static_cast<std::int64_t>(j) * k, to)] += coords[j];
  return reduce(std::move(poly), to);
}

}  // namespace

// ---------------------------------------------------------------- Angle

Angle::Angle(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("angle denominator must be positive");
  num = floor_mod(num, den);
  std::int64_t g = std::gcd(num, den);
  if (num == 0) g = den;
  num_ = num / g;
  den_ = den / g;
}

Angle Angle::reduced_to_half_turn() const {
  return at_most_pi() ? *this : negated();
}

double Angle::radians() const {
  return 2.0 * M_PI * static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Angle::to_string() const {
  return "2pi*" + std::to_string(num_) + "/" + std::to_string(den_);
}

// ---------------------------------------------------------------- Cyclotomic

Cyclotomic::Cyclotomic() : conductor_(1), coords_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(const Rational& value) : conductor_(1), coords_(1, value) {}

Cyclotomic::Cyclotomic(std::uint32_t conductor, std::vector<Rational> coords)
    : conductor_(conductor), coords_(std::move(coords)) {
  if (conductor_ == 0) throw std::invalid_argument("conductor must be positive");
  if (coords_.size() != euler_phi(conductor_))
    throw std::invalid_argument("coordinate count must equal phi(conductor)");
}

Cyclotomic Cyclotomic::zeta_power(std::uint32_t conductor, std::int64_t k) {
  std::vector<Rational> poly(conductor, Rational(0));
  poly[floor_mod(k, conductor)] = 1;
  return Cyclotomic(conductor, reduce(std::move(poly), conductor));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coords_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (sgn(coords_[i]) != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::lift(std::uint32_t conductor) const {
  if (conductor == conductor_) return *this;
  if (conductor % conductor_ != 0)
    throw std::invalid_argument("lift target must be a multiple of the conductor");
  return Cyclotomic(conductor, substitute(coords_, conductor / conductor_, conductor));
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  if (std::gcd(floor_mod(k, conductor_), static_cast<std::int64_t>(conductor_)) != 1 &&
      conductor_ > 1)
    throw std::invalid_argument("galois exponent must be a unit");
  return Cyclotomic(conductor_, substitute(coords_, k, conductor_));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  // Solve (multiplication-by-this) x = 1 in the power basis.
  const std::size_t n = coords_.size();
  RatMatrix mul(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Cyclotomic col = *this * zeta_power(conductor_, static_cast<std::int64_t>(j));
    for (std::size_t i = 0; i < n; ++i) mul(i, j) = col.coords_[i];
  }
  std::vector<Rational> one(n, Rational(0));
  one[0] = 1;
  auto x = rational_solve(mul, one);
  return Cyclotomic(conductor_, std::move(*x));
}

Cyclotomic Cyclotomic::canonical() const {
  if (is_rational()) return Cyclotomic(coords_[0]);
  for (auto sub : divisors(conductor_)) {
    if (sub == conductor_) break;
    const std::uint32_t step = conductor_ / sub;
    const std::uint32_t dim = euler_phi(sub);
    RatMatrix basis(coords_.size(), dim);
    for (std::uint32_t j = 0; j < dim; ++j) {
      std::vector<Rational> poly(conductor_, Rational(0));
      poly[j * step] = 1;
      auto col = reduce(std::move(poly), conductor_);
      for (std::size_t i = 0; i < col.size(); ++i) basis(i, j) = col[i];
    }
    if (auto x = rational_solve(basis, coords_)) return Cyclotomic(sub, std::move(*x));
  }
  return *this;
}

namespace {
std::uint32_t common_conductor(const Cyclotomic& a, const Cyclotomic& b) {
  return std::lcm(a.conductor(), b.conductor());
}
}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  const auto n = common_conductor(a, b);
  Cyclotomic x = a.lift(n), y = b.lift(n);
  for (std::size_t i = 0; i < x.coords_.size(); ++i) x.coords_[i] += y.coords_[i];
  return x;
}

Cyclotomic operator-(const Cyclotomic& a) {
  Cyclotomic x = a;
  for (auto& c : x.coords_) c = -c;
  return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  const auto n = common_conductor(a, b);
  Cyclotomic x = a.lift(n), y = b.lift(n);
  std::vector<Rational> poly(x.coords_.size() + y.coords_.size(), Rational(0));
  for (std::size_t i = 0; i < x.coords_.size(); ++i) {
    if (sgn(x.coords_[i]) == 0) continue;
    for (std::size_t j = 0; j < y.coords_.size(); ++j)
      if (sgn(y.coords_[j]) != 0) poly[i + j] += x.coords_[i] * y.coords_[j];
  }
  return Cyclotomic(n, reduce(std::move(poly), n));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  const auto n = common_conductor(a, b);
  return a.lift(n).coords_ == b.lift(n).coords_;
}

// ---------------------------------------------------------------- AlgReal

AlgReal::AlgReal(Cyclotomic value) : value_(std::move(value)) {
  if (!(value_.conjugate() == value_))
    throw Error("NotReal", "cyclotomic value is not fixed by complex conjugation");
}

namespace {

// Real embedding sum c_k cos(2 pi k / N) at `prec` bits, with a bound on the
// absolute error of the returned value.
struct Enclosure {
  mpfr_t mid;
  mpfr_t radius;
  Enclosure(const AlgReal& x, mpfr_prec_t prec) {
    mpfr_inits2(prec, mid, radius, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(mid, 1);
    mpfr_t term, angle, coeff, abs_sum;
    mpfr_inits2(prec, term, angle, coeff, abs_sum, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(abs_sum, 1);
    const auto& cs = x.coords();
    const std::uint32_t n = x.conductor();
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (sgn(cs[k]) == 0) continue;
      mpfr_const_pi(angle, MPFR_RNDN);
      mpfr_mul_ui(angle, angle, 2 * k, MPFR_RNDN);
      mpfr_div_ui(angle, angle, n, MPFR_RNDN);
      mpfr_cos(term, angle, MPFR_RNDN);
      mpfr_set_q(coeff, cs[k].get_mpq_t(), MPFR_RNDN);
      mpfr_mul(term, term, coeff, MPFR_RNDN);
      mpfr_add(mid, mid, term, MPFR_RNDN);
      mpfr_abs(coeff, coeff, MPFR_RNDU);
      mpfr_add(abs_sum, abs_sum, coeff, MPFR_RNDU);
    }
    // Each term is off by at most |c_k| * 2^(6-prec); each addition adds at
    // most one more such unit relative to the running absolute sum.
    mpfr_mul_ui(radius, abs_sum, static_cast<unsigned long>(2 * cs.size() + 2), MPFR_RNDU);
    mpfr_mul_2si(radius, radius, 6 - static_cast<long>(prec), MPFR_RNDU);
    mpfr_clears(term, angle, coeff, abs_sum, static_cast<mpfr_ptr>(nullptr));
  }
  ~Enclosure() { mpfr_clears(mid, radius, static_cast<mpfr_ptr>(nullptr)); }
  Enclosure(const Enclosure&) = delete;
  Enclosure& operator=(const Enclosure&) = delete;
};

}  // namespace

std::string AlgReal::approx(int digits) const {
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33) + 64;
  Enclosure e(*this, prec);
  mpfr_exp_t exp = 0;
  char* s = mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), e.mid, MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);
  std::ostringstream out;
  bool neg = !mant.empty() && mant[0] == '-';
  if (neg) mant.erase(0, 1);
  if (mpfr_zero_p(e.mid)) return "0";
  out << (neg ? "-" : "") << "0." << mant << "e" << exp;
  return out.str();
}

// ---------------------------------------------------------------- functions

namespace {

// 1 / (zeta - zeta^-1) for zeta = zeta_{2q}^p, using
// 1/(1 - x) = -(1/n) sum_k k x^k for x = zeta^2 of order n.
Cyclotomic inverse_of_difference(std::int64_t p, std::int64_t q, std::uint32_t conductor) {
  const std::int64_t zeta_step = conductor / (2 * q);
  const std::int64_t order = q / std::gcd(p, q);
  std::vector<Rational> poly(conductor, Rational(0));
  // zeta * sum_k k zeta^(2k) / n
  for (std::int64_t k = 1; k < order; ++k)
    poly[floor_mod((2 * k + 1) * p * zeta_step, conductor)] += make_rational(k, order);
  return Cyclotomic(conductor, reduce(std::move(poly), conductor));
}

}  // namespace

AlgReal cosec2_half(const Angle& psi) {
  if (psi.is_zero()) throw Error("ZeroAngle", "cosec^2(psi/2) is undefined at psi = 0");
  const auto q = static_cast<std::uint32_t>(psi.den());
  const std::uint32_t conductor = std::lcm(2 * q, 4u);
  Cyclotomic inv = inverse_of_difference(psi.num(), psi.den(), conductor);
  // 1/sin^2 = -4 / (zeta - zeta^-1)^2
  return AlgReal((Cyclotomic(Rational(-4)) * inv * inv).canonical());
}

AlgReal cot_half(const Angle& phi) {
  if (phi.is_zero()) throw Error("PoleAngle", "cot(phi/2) has a pole at phi = 0");
  const auto q = static_cast<std::uint32_t>(phi.den());
  const std::uint32_t conductor = std::lcm(2 * q, 4u);
  const std::int64_t zeta_step = conductor / (2 * q);
  Cyclotomic zeta = Cyclotomic::zeta_power(conductor, phi.num() * zeta_step);
  Cyclotomic zeta_inv = Cyclotomic::zeta_power(conductor, -phi.num() * zeta_step);
  Cyclotomic i = Cyclotomic::zeta_power(conductor, conductor / 4);
  Cyclotomic inv = inverse_of_difference(phi.num(), phi.den(), conductor);
  // cot = i (zeta + zeta^-1) / (zeta - zeta^-1)
  return AlgReal((i * (zeta + zeta_inv) * inv).canonical());
}

Rational as_rational(const AlgReal& x) {
  if (!x.cyclotomic().is_rational())
    throw Error("NotRational", "value is irrational (conductor " +
                                   std::to_string(x.conductor()) + ")");
  return x.coords()[0];
}

int sign_of(const AlgReal& x) {
  if (x.is_zero()) return 0;
  if (x.cyclotomic().is_rational()) return sgn(x.coords()[0]);
  for (mpfr_prec_t prec = 64;; prec *= 2) {
    Enclosure e(x, prec);
    mpfr_t mag;
    mpfr_init2(mag, prec);
    mpfr_abs(mag, e.mid, MPFR_RNDD);
    const bool separated = mpfr_cmp(mag, e.radius) > 0;
    mpfr_clear(mag);
    if (separated) return mpfr_sgn(e.mid) > 0 ? 1 : -1;
  }
}

int form_signature(const RatMatrix& input) {
  if (!input.square()) throw Error("NotSymmetric", "form matrix must be square");
  const std::size_t n = input.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (input(i, j) != input(j, i))
        throw Error("NotSymmetric", "form matrix is not symmetric at (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
  RatMatrix m = input;
  // Symmetric row+column operations keep the matrix congruent to the input.
  auto sym_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(m(a, c), m(b, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(m(r, a), m(r, b));
  };
  auto sym_add = [&](std::size_t target, std::size_t src, const Rational& f) {
    for (std::size_t c = 0; c < n; ++c) m(target, c) += f * m(src, c);
    for (std::size_t r = 0; r < n; ++r) m(r, target) += f * m(r, src);
  };

  int signature = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n && pivot == n; ++i)
      if (sgn(m(i, i)) != 0) pivot = i;
    if (pivot == n) {
      // Zero diagonal: an off-diagonal entry m(i,j) gives row_i += row_j a
      // nonzero diagonal 2 m(i,j).
      bool fixed = false;
      for (std::size_t i = k; i < n && !fixed; ++i)
        for (std::size_t j = i + 1; j < n && !fixed; ++j)
          if (sgn(m(i, j)) != 0) {
            sym_add(i, j, Rational(1));
            pivot = i;
            fixed = true;
          }
      if (!fixed) break;  // remaining block is the radical
    }
    sym_swap(k, pivot);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(m(r, k)) == 0) continue;
      Rational f = -m(r, k) / m(k, k);
      sym_add(r, k, f);
    }
    signature += sgn(m(k, k));
  }
  return signature;
}

}  // namespace germsig
