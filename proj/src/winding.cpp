#include "germsig/winding.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>

#include "germsig/error.hpp"

namespace germsig {

void SectionSpec::validate() const {
  if (m < 3) throw Error("BadSpec", "sections need m >= 3");
  for (int x : {i, j, k})
    if (x < 1 || x > m)
      throw Error("BadSpec", "section index " + std::to_string(x) + " outside 1.." +
                                 std::to_string(m));
  if (i == j || j == k || i == k)
    throw Error("BadSpec", "section indices must be distinct");
}

TensorSection& TensorSection::operator*=(const TensorSection& other) {
  factors.insert(factors.end(), other.factors.begin(), other.factors.end());
  projection_power += other.projection_power;
  return *this;
}

TensorSection TensorSection::pow(int n) const {
  TensorSection out;
  for (const auto& [s, p] : factors) out.factors.emplace_back(s, p * n);
  out.projection_power = projection_power * n;
  return out;
}

void BoundaryLoop::validate() const {
  if (radius <= 0) throw Error("BadSpec", "loop radius must be positive");
  if (sheets != 1 && sheets != 2) throw Error("BadSpec", "sheets must be 1 or 2");
}

namespace {

template <typename T>
std::complex<T> alpha(int m, int i, std::complex<T> sqrt_b) {
  if (i == 1) return sqrt_b;
  if (i == 2) return -sqrt_b;
  const T angle = 2 * std::numbers::pi_v<T> * static_cast<T>(i - 2) / static_cast<T>(m - 2);
  return std::polar(T(1), angle);
}

template <typename T>
std::complex<T> section_value_impl(const SectionSpec& s, std::complex<T> sqrt_b) {
  const auto ai = alpha(s.m, s.i, sqrt_b);
  const auto aj = alpha(s.m, s.j, sqrt_b);
  const auto ak = alpha(s.m, s.k, sqrt_b);
  const T tol = std::sqrt(std::numeric_limits<T>::epsilon());
  if (std::abs(ai - aj) < tol || std::abs(aj - ak) < tol || std::abs(ak - ai) < tol)
    throw Error("Collision", "branch trajectories meet at sqrt(b) = (" +
                                 std::to_string(static_cast<double>(sqrt_b.real())) + ", " +
                                 std::to_string(static_cast<double>(sqrt_b.imag())) + ")");
  return (ai - aj) * (ak - ai) / (aj - ak);
}

template <typename T>
void check_branch(std::complex<T> b, std::complex<T> sqrt_b) {
  if (std::abs(sqrt_b * sqrt_b - b) > 1e3 * std::numeric_limits<T>::epsilon() * (1 + std::abs(b)))
    throw Error("BadSpec", "branch value is not a square root of b");
}

// Values of the individual factors (the projection factor last).
template <typename T>
void factor_values(const TensorSection& s, T radius, T theta, std::vector<std::complex<T>>& out) {
  const std::complex<T> sqrt_b = std::polar(std::sqrt(radius), theta / 2);
  out.clear();
  for (const auto& [spec, power] : s.factors) out.push_back(section_value_impl(spec, sqrt_b));
  out.push_back(T(-2) * sqrt_b);
}

template <typename T>
std::complex<T> product(const TensorSection& s, const std::vector<std::complex<T>>& f) {
  std::complex<T> v(1);
  auto mul = [&](std::complex<T> x, int power) {
    for (int n = 0; n < std::abs(power); ++n) v = power > 0 ? v * x : v / x;
  };
  for (std::size_t q = 0; q < s.factors.size(); ++q) mul(f[q], s.factors[q].second);
  mul(f.back(), s.projection_power);
  return v;
}

struct Failure {};

template <typename T>
long continue_phase(const TensorSection& s, const BoundaryLoop& loop, int samples) {
  const T radius = static_cast<T>(loop.radius.get_d());
  const T span = 2 * std::numbers::pi_v<T> * loop.sheets;
  const T quarter = std::numbers::pi_v<T> / 4;
  const T min_step = span * 64 * std::numeric_limits<T>::epsilon();
  const T tiny = std::numeric_limits<T>::min() * 1e6L;

  std::vector<int> powers;
  for (const auto& f : s.factors) powers.push_back(std::abs(f.second));
  powers.push_back(std::abs(s.projection_power));

  std::vector<std::complex<T>> f0, f1;
  auto sample = [&](T theta, std::vector<std::complex<T>>& f) {
    factor_values<T>(s, radius, theta, f);
    const auto v = product(s, f);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) || std::abs(v) < tiny)
      throw Failure{};
    return v;
  };

  const T h0 = span / static_cast<T>(samples);
  T t = 0, acc = 0, h = h0;
  std::complex<T> v = sample(0, f0);
  const std::complex<T> v_start = v;
  while (t < span) {
    T step = std::min(h, span - t);
    for (;;) {
      const auto v1 = sample(t + step, f1);
      // The product turns by at most the weighted sum of the factor turns,
      // so its principal argument change is the true one.
      T bound = 0;
      for (std::size_t q = 0; q < f0.size(); ++q)
        if (powers[q] != 0) bound += powers[q] * std::abs(std::arg(f1[q] / f0[q]));
      if (bound < quarter) {
        acc += std::arg(v1 / v);
        t += step;
        v = v1;
        f0.swap(f1);
        h = std::min(h0, 2 * step);
        break;
      }
      step /= 2;
      if (step < min_step) throw Failure{};
    }
  }
  if (std::abs(v - v_start) > 1e-6 * std::abs(v_start))
    throw Error("BadSpec", "section does not close up along the loop");
  const T turns = acc / (2 * std::numbers::pi_v<T>);
  const long k = std::lround(static_cast<double>(turns));
  if (std::abs(turns - static_cast<T>(k)) > T(1e-6)) throw Failure{};
  return k;
}

WindingOptions options_from_env() {
  WindingOptions o;
  if (const char* env = std::getenv("GERMSIG_PRECISION")) {
    const long p = std::strtol(env, nullptr, 10);
    if (p > 0) o.initial_samples = static_cast<int>(std::max<long>(o.initial_samples, p));
    if (p > 53) o.extended = true;
  }
  return o;
}

}  // namespace

std::complex<double> section_value(const SectionSpec& spec, std::complex<double> b,
                                   std::complex<double> sqrt_b) {
  spec.validate();
  check_branch(b, sqrt_b);
  return section_value_impl(spec, sqrt_b);
}

std::complex<long double> section_value(const SectionSpec& spec,
                                        std::complex<long double> b,
                                        std::complex<long double> sqrt_b) {
  spec.validate();
  check_branch(b, sqrt_b);
  return section_value_impl(spec, sqrt_b);
}

long winding(const TensorSection& s, const BoundaryLoop& loop, const WindingOptions& opts) {
  loop.validate();
  for (const auto& [spec, p] : s.factors) spec.validate();
  if (!opts.extended) {
    try {
      return continue_phase<double>(s, loop, opts.initial_samples);
    } catch (const Failure&) {
    }
  }
  try {
    return continue_phase<long double>(s, loop, opts.initial_samples);
  } catch (const Failure&) {
    throw Error("NonVanishingViolated",
                "section vanishes or is unresolved on the loop even at extended precision");
  }
}

long winding(const TensorSection& s, const BoundaryLoop& loop) {
  return winding(s, loop, options_from_env());
}

long relative_winding(const TensorSection& a, const TensorSection& b,
                      const BoundaryLoop& loop) {
  return winding(a * b.pow(-1), loop);
}

long intersection_number(const TensorSection& a, const TensorSection& b,
                         const BoundaryLoop& loop) {
  return -relative_winding(a, b, loop);
}

// ------------------------------------------------------------ p1 numbers

namespace {

const BoundaryLoop kSiLoop{Rational(1, 2), 1};
const BoundaryLoop kS12Loop{Rational(1, 2), 2};

}  // namespace

TensorSection si_boundary_section(int m, int i) {
  TensorSection t;
  for (int j = 1; j <= m; ++j)
    for (int k = 1; k <= m; ++k)
      if (j != k && j != i && k != i) t *= TensorSection(SectionSpec{m, i, j, k});
  return t;
}

TensorSection s12_boundary_section(int m) {
  TensorSection t;
  for (int j = 3; j <= m; ++j)
    for (int k = 3; k <= m; ++k)
      if (j != k) t *= TensorSection(SectionSpec{m, 1, j, k});
  for (int j = 3; j <= m; ++j) {
    t *= TensorSection(SectionSpec{m, 1, 2, j});
    t *= TensorSection(SectionSpec{m, 1, j, 2});
  }
  return t;
}

TensorSection si_reference(int m, int i) {
  for (int j = 3; j <= m; ++j)
    for (int k = j + 1; k <= m; ++k)
      if (j != i && k != i) return TensorSection(SectionSpec{m, i, j, k});
  return TensorSection();
}

long boundary_number_si(int m, int i) {
  const TensorSection s = si_boundary_section(m, i);
  const TensorSection ref = si_reference(m, i);
  const int n = (m - 1) * (m - 2);
  // The reference extends over the disk S_i (its coefficient is constant),
  // and d/dw trivializes the tangent bundle there.
  const long n_ref = winding(ref, kSiLoop);
  return -intersection_number(s, ref.pow(n), kSiLoop) + n * n_ref;
}

long boundary_number_s12(int m, const TensorSection& s) {
  (void)m;
  int factors = 0;
  for (const auto& [spec, p] : s.factors) factors += p;
  TensorSection projected = s;
  projected.projection_power = factors;
  return winding(projected, kS12Loop);
}

P1BoundaryNumbers p1_boundary_numbers(int m) {
  if (m < 3) throw Error("BadSpec", "p1 needs m >= 3");
  P1BoundaryNumbers out;
  out.m = m;
  for (int i = 3; i <= m; ++i) out.per_si.push_back(boundary_number_si(m, i));
  for (int j = 3; j <= m; ++j)
    for (int k = 3; k <= m; ++k)
      if (j != k) out.s12_pairs.push_back(boundary_number_s12(m, SectionSpec{m, 1, j, k}));
  for (int j = 3; j <= m; ++j) {
    for (const bool plus : {true, false}) {
      const TensorSection s(plus ? SectionSpec{m, 1, 2, j} : SectionSpec{m, 1, j, 2});
      long n;
      int k = 3;
      while (k <= m && k == j) ++k;
      if (k <= m) {
        // Boundary rule against s12(j,k), which extends with one zero.
        const TensorSection ref(SectionSpec{m, 1, j, k});
        n = -intersection_number(s, ref, kS12Loop) + boundary_number_s12(m, ref);
      } else {
        n = boundary_number_s12(m, s);
      }
      (plus ? out.s12_plus : out.s12_minus).push_back(n);
    }
  }
  out.s12_subtotal = boundary_number_s12(m, s12_boundary_section(m));
  out.total = out.s12_subtotal;
  for (long n : out.per_si) out.total += n;
  return out;
}

Rational chi_loc_p1(int d, int m) {
  if (d < 2 || m < 3 || m % d != 0)
    throw Error("BadSpec", "chi_loc_p1 needs d >= 2, m >= 3 and d | m");
  const P1BoundaryNumbers n = p1_boundary_numbers(m);
  // Normalization by r_S (m-1)(m-2) with r_S = d.
  return make_rational(n.total, Integer(d) * (m - 1) * (m - 2));
}

}  // namespace germsig
