#include "germsig/symplectic.hpp"

#include <string>

#include "germsig/error.hpp"
#include "germsig/exact.hpp"

namespace germsig {

IntMatrix standard_form(std::size_t g) {
  IntMatrix j(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    j(i, g + i) = 1;
    j(g + i, i) = -1;
  }
  return j;
}

SpMatrix::SpMatrix(std::size_t g) : g_(g), a_(IntMatrix::identity(2 * g)) {}

SpMatrix SpMatrix::inverse() const {
  const IntMatrix j = standard_form(g_);
  return SpMatrix(g_, -(j * a_.transpose() * j));
}

SpMatrix operator*(const SpMatrix& a, const SpMatrix& b) {
  if (a.g_ != b.g_) throw std::invalid_argument("genus mismatch in SpMatrix product");
  return SpMatrix(a.g_, a.a_ * b.a_);
}

SpMatrix check_symplectic(const IntMatrix& a) {
  if (!a.square() || a.rows() % 2 != 0 || a.rows() == 0)
    throw Error("NotSymplectic", "matrix must be square of positive even size");
  const std::size_t g = a.rows() / 2;
  const IntMatrix j = standard_form(g);
  const IntMatrix defect = a.transpose() * j * a - j;
  for (std::size_t r = 0; r < defect.rows(); ++r)
    for (std::size_t c = 0; c < defect.cols(); ++c)
      if (defect(r, c) != 0)
        throw Error("NotSymplectic", "(A^T J A - J)(" + std::to_string(r) + "," +
                                         std::to_string(c) + ") = " +
                                         defect(r, c).get_str());
  return SpMatrix(g, a);
}

SpMatrix transvection(const std::vector<Integer>& c, int sign) {
  if (c.empty() || c.size() % 2 != 0)
    throw std::invalid_argument("transvection vector must have even length");
  const std::size_t n = c.size();
  const IntMatrix j = standard_form(n / 2);
  // <x, c> = x^T J c = (Jc) . x, so A = I + sign * c (Jc)^T.
  const std::vector<Integer> jc = j * c;
  IntMatrix a = IntMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) a(r, k) += sign * c[r] * jc[k];
  return check_symplectic(a);
}

RatMatrix meyer_gram(const SpMatrix& a, const SpMatrix& b) {
  if (a.genus() != b.genus())
    throw std::invalid_argument("meyer_tau: genus mismatch");
  const std::size_t n = 2 * a.genus();
  const IntMatrix id = IntMatrix::identity(n);
  const IntMatrix left = a.inverse().matrix() - id;
  const IntMatrix right = b.matrix() - id;
  RatMatrix system(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      system(r, c) = Rational(left(r, c));
      system(r, n + c) = Rational(right(r, c));
    }
  const RatMatrix basis = rational_kernel(system);
  const std::size_t dim = basis.cols();

  // Form matrix on (x, y) coordinates: (x1+y1)^T W y2 with W = J (I - B).
  const RatMatrix w = to_rational(standard_form(a.genus()) * (id - b.matrix()));
  std::vector<std::vector<Rational>> sums(dim), images(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<Rational> s(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = basis(n + i, k);
      s[i] = basis(i, k) + y[i];
    }
    sums[k] = std::move(s);
    images[k] = w * y;
  }
  RatMatrix gram(dim, dim);
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = 0; q < dim; ++q) {
      Rational acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc += sums[p][i] * images[q][i];
      gram(p, q) = acc;
    }
  return gram;
}

int meyer_tau(const SpMatrix& a, const SpMatrix& b) {
  return kMeyerFormSign * form_signature(meyer_gram(a, b));
}

}  // namespace germsig
