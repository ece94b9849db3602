#pragma once

#include <vector>

#include "germsig/matrix.hpp"

namespace germsig {

// The standard skew form J = [[0, I_g], [-I_g, 0]].
IntMatrix standard_form(std::size_t g);

// A 2g x 2g integer matrix with A^T J A = J.
class SpMatrix {
 public:
  // Identity of genus g.
  explicit SpMatrix(std::size_t g = 1);

  std::size_t genus() const { return g_; }
  const IntMatrix& matrix() const { return a_; }

  // A^-1 = -J A^T J.
  SpMatrix inverse() const;

  friend SpMatrix operator*(const SpMatrix& a, const SpMatrix& b);
  friend bool operator==(const SpMatrix& a, const SpMatrix& b) {
    return a.g_ == b.g_ && a.a_ == b.a_;
  }

 private:
  friend SpMatrix check_symplectic(const IntMatrix& a);
  SpMatrix(std::size_t g, IntMatrix a) : g_(g), a_(std::move(a)) {}

  std::size_t g_;
  IntMatrix a_;
};

// Validates A^T J A = J. Throws Error("NotSymplectic") naming the first
// violated entry of A^T J A - J.
SpMatrix check_symplectic(const IntMatrix& a);

// x -> x + sign * <x, c> c with <x, c> = x^T J c.
SpMatrix transvection(const std::vector<Integer>& c, int sign);

// Global orientation constant of the Meyer form; see meyer_tau.
inline constexpr int kMeyerFormSign = 1;

// Meyer's signature cocycle. Signature of
//   <(x1,y1),(x2,y2)> = (x1 + y1)^T J (I - B) y2
// on V = {(x, y) : (A^-1 - I) x + (B - I) y = 0}, multiplied by
// kMeyerFormSign. The sign is the one for which the cobounding function on
// the cyclic cover with base value (d^2-1)m/(3d(m-1)) vanishes on the
// full-twist relator (see localsig).
int meyer_tau(const SpMatrix& a, const SpMatrix& b);

// Gram matrix of the restricted form on a kernel basis of V (exposed for
// tests; symmetric for symplectic A, B).
RatMatrix meyer_gram(const SpMatrix& a, const SpMatrix& b);

}  // namespace germsig
