#include <algorithm>
#include <stdexcept>
#include <utility>

#include "germsig/matrix.hpp"

namespace germsig {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return make_rational(Integer(text.substr(0, slash)),
                         Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && sgn(a(p, col)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || sgn(a(r, col)) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (sgn(a(row, c)) != 0) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RatMatrix rational_kernel(const RatMatrix& a) {
  RatMatrix r = a;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  RatMatrix k(a.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], f) = -r(i, free[f]);
  }
  return k;
}

std::size_t rational_rank(const RatMatrix& a) {
  RatMatrix r = a;
  return rref(r).size();
}

std::optional<std::vector<Rational>> rational_solve(const RatMatrix& a,
                                                    const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("shape mismatch in solve");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<Rational> x(a.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  SmithForm out{IntMatrix::identity(rows), IntMatrix::identity(rows), {}};
  IntMatrix& u = out.left;
  IntMatrix& uinv = out.left_inverse;

  auto row_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < rows; ++c) std::swap(u(i, c), u(j, c));
    for (std::size_t r = 0; r < rows; ++r) std::swap(uinv(r, i), uinv(r, j));
  };
  // row_i -= q * row_j
  auto row_sub = [&](std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < cols; ++c) a(i, c) -= q * a(j, c);
    for (std::size_t c = 0; c < rows; ++c) u(i, c) -= q * u(j, c);
    for (std::size_t r = 0; r < rows; ++r) uinv(r, j) += q * uinv(r, i);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
  };
  auto col_sub = [&](std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < rows; ++r) a(r, i) -= q * a(r, j);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pr = t, pc = t;
    Integer best;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (a(r, c) != 0 && (!found || abs(a(r, c)) < best)) {
          found = true;
          best = abs(a(r, c));
          pr = r;
          pc = c;
        }
    if (!found) break;
    row_swap(t, pr);
    col_swap(t, pc);

    for (;;) {
      bool dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
        row_sub(r, t, q);
        if (a(r, t) != 0) {
          row_swap(t, r);
          dirty = true;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
        col_sub(c, t, q);
        if (a(t, c) != 0) {
          col_swap(t, c);
          dirty = true;
        }
      }
      if (!dirty) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < rows; ++c) u(t, c) = -u(t, c);
      for (std::size_t r = 0; r < rows; ++r) uinv(r, t) = -uinv(r, t);
    }
    out.diagonal.push_back(a(t, t));
  }
  return out;
}

std::vector<std::vector<Integer>> lattice_basis(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return {};
  const std::size_t n = rows.front().size();
  std::size_t p = 0;
  for (std::size_t col = 0; col < n && p < rows.size(); ++col) {
    for (;;) {
      // Move the smallest nonzero |entry| in this column to row p.
      std::size_t best = rows.size();
      for (std::size_t r = p; r < rows.size(); ++r)
        if (rows[r][col] != 0 &&
            (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])))
          best = r;
      if (best == rows.size()) break;
      std::swap(rows[p], rows[best]);
      bool others = false;
      for (std::size_t r = p + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[p][col].get_mpz_t());
        for (std::size_t c = col; c < n; ++c) rows[r][c] -= q * rows[p][c];
        if (rows[r][col] != 0) others = true;
      }
      if (!others) break;
    }
    if (rows[p][col] == 0) continue;
    if (rows[p][col] < 0)
      for (auto& x : rows[p]) x = -x;
    for (std::size_t r = 0; r < p; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[p][col].get_mpz_t());
      if (q != 0)
        for (std::size_t c = col; c < n; ++c) rows[r][c] -= q * rows[p][c];
    }
    ++p;
  }
  rows.resize(p);
  return rows;
}

}  // namespace germsig
