#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "germsig/matrix.hpp"

namespace germsig {

// The angle 2*pi*num/den, canonicalized so that 0 <= num < den and
// gcd(num, den) = 1 (zero is 0/1).
class Angle {
 public:
  Angle() = default;
  Angle(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  // True when the angle lies in [0, pi].
  bool at_most_pi() const { return 2 * num_ <= den_; }
  // Reflection psi -> 2*pi - psi into [0, pi].
  Angle reduced_to_half_turn() const;
  Angle negated() const { return Angle(-num_, den_); }
  double radians() const;
  std::string to_string() const;

  friend auto operator<=>(const Angle&, const Angle&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1),
// zeta = exp(2*pi*i/N). Not necessarily real.
class Cyclotomic {
 public:
  Cyclotomic();
  explicit Cyclotomic(const Rational& value);
  Cyclotomic(std::uint32_t conductor, std::vector<Rational> coords);

  static Cyclotomic zeta_power(std::uint32_t conductor, std::int64_t k);

  std::uint32_t conductor() const { return conductor_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  Cyclotomic lift(std::uint32_t conductor) const;
  // Image under zeta -> zeta^k, gcd(k, N) = 1.
  Cyclotomic galois(std::int64_t k) const;
  Cyclotomic conjugate() const { return galois(-1); }
  Cyclotomic inverse() const;
  // Same value at the smallest conductor whose field contains it.
  Cyclotomic canonical() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  std::uint32_t conductor_ = 1;
  std::vector<Rational> coords_;
};

// A real element of a cyclotomic field. Construction rejects values not fixed
// by complex conjugation.
class AlgReal {
 public:
  AlgReal() = default;
  explicit AlgReal(const Rational& value) : value_(value) {}
  explicit AlgReal(Cyclotomic value);

  std::uint32_t conductor() const { return value_.conductor(); }
  const std::vector<Rational>& coords() const { return value_.coords(); }
  const Cyclotomic& cyclotomic() const { return value_; }

  AlgReal canonical() const { return AlgReal(value_.canonical()); }
  bool is_zero() const { return value_.is_zero(); }
  AlgReal inverse() const { return AlgReal(value_.inverse()); }
  // Decimal approximation of the real embedding, `digits` significant digits.
  std::string approx(int digits) const;

  friend AlgReal operator+(const AlgReal& a, const AlgReal& b) {
    return AlgReal(a.value_ + b.value_);
  }
  friend AlgReal operator-(const AlgReal& a, const AlgReal& b) {
    return AlgReal(a.value_ - b.value_);
  }
  friend AlgReal operator-(const AlgReal& a) { return AlgReal(-a.value_); }
  friend AlgReal operator*(const AlgReal& a, const AlgReal& b) {
    return AlgReal(a.value_ * b.value_);
  }
  friend bool operator==(const AlgReal& a, const AlgReal& b) {
    return a.value_ == b.value_;
  }

 private:
  Cyclotomic value_;
};

// Exact 1/sin^2(psi/2). Throws Error("ZeroAngle") for psi = 0.
AlgReal cosec2_half(const Angle& psi);
// Exact cot(phi/2). Throws Error("PoleAngle") for phi = 0.
AlgReal cot_half(const Angle& phi);
// Throws Error("NotRational") when x is irrational.
Rational as_rational(const AlgReal& x);
// Sign of the real value: exact zero test, then certified interval
// evaluation at doubling precision.
int sign_of(const AlgReal& x);
// Signature of a symmetric rational form by congruence diagonalization.
// Throws Error("NotSymmetric").
int form_signature(const RatMatrix& m);

}  // namespace germsig
