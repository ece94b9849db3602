#include "germsig/localsig.hpp"

#include <mutex>

#include "germsig/error.hpp"

namespace germsig {

void GermData::validate() const {
  if (order < 1) throw Error("BadSpec", "group order must be positive");
  for (const auto& [key, chi] : horizontal) {
    if (key.second.is_zero())
      throw Error("ZeroAngle", "horizontal component with zero rotation angle");
    if (!key.second.at_most_pi())
      throw Error("BadSpec", "horizontal angle " + key.second.to_string() + " exceeds pi");
  }
  for (const auto& [h, pts] : vertical_points)
    FixedPointData{{}, pts}.validate();
  for (const auto& [h, surfs] : vertical_surfaces)
    FixedPointData{surfs, {}}.validate();
}

GroupActionData germ_action(const GermData& germ) {
  germ.validate();
  GroupActionData gd;
  gd.order = germ.order;
  gd.sign_quotient = germ.sign_quotient;
  for (const auto& [key, chi] : germ.horizontal)
    gd.per_element[key.first].surfaces.push_back(FixedSurface{key.second, chi});
  for (const auto& [h, surfs] : germ.vertical_surfaces)
    for (const auto& s : surfs) gd.per_element[h].surfaces.push_back(s);
  for (const auto& [h, pts] : germ.vertical_points)
    for (const auto& p : pts) gd.per_element[h].points.push_back(p);
  // Elements without fixed data still count towards |G| - 1.
  for (int k = 1; static_cast<int>(gd.per_element.size()) < gd.order - 1; ++k)
    gd.per_element.try_emplace("#" + std::to_string(k));
  return gd;
}

Rational sigma_loc(const GermData& germ) {
  germ.validate();
  AlgReal total(Rational(germ.sign_quotient * germ.order));
  for (const auto& [key, chi] : germ.horizontal)
    total = total - AlgReal(chi) * cosec2_half(key.second);
  for (const auto& [h, pts] : germ.vertical_points)
    for (const auto& p : pts) total = total + cot_half(p.phi) * cot_half(p.phi_prime);
  for (const auto& [h, surfs] : germ.vertical_surfaces)
    for (const auto& s : surfs) total = total - AlgReal(s.euler) * cosec2_half(s.psi);
  return as_rational(total.canonical());
}

Rational p1_base(int d, int m) {
  return make_rational(Integer((d - 1) * (d + 1)) * m, Integer(3 * d) * (m - 1));
}

GermData p1_germ(int d, int m) {
  if (d < 2 || m < 3) throw Error("BadSpec", "p1 germ requires d >= 2 and m >= 3");
  if (m % d != 0)
    throw Error("BadSpec", std::to_string(d) + " does not divide " + std::to_string(m));
  GermData g;
  g.order = d;
  g.sign_quotient = 0;
  const Rational chi = make_rational(m, Integer(d) * (m - 1));
  for (int h = 1; h < d; ++h)
    g.horizontal[{std::to_string(h), Angle(h, d).reduced_to_half_turn()}] = chi;
  return g;
}

// ------------------------------------------------------------------ phi

PhiTable::PhiTable(CoverSpec spec, Rational base)
    : spec_(std::move(spec)), base_(std::move(base)), model_(cover_model(spec_)) {
  for (int l : spec_.labels)
    if ((l - spec_.labels[0]) % spec_.d != 0)
      throw Error("BadSpec", "phi base values need all labels equal");
}

GeneratorWord PhiTable::canonical(const GeneratorWord& w) const {
  validate_word(spec_, w);
  GeneratorWord out;
  for (const auto& l : w.letters) {
    if (l.kind == Letter::Kind::kFullTwist) {
      const Letter half{Letter::Kind::kHalfTwist, l.i, l.j, l.exponent};
      out.letters.push_back(half);
      out.letters.push_back(half);
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

PhiTable::Entry PhiTable::evaluate(const std::vector<Letter>& letters, std::size_t lo,
                                   std::size_t hi) const {
  const std::size_t n = hi - lo;
  if (n == 0) return Entry{Rational(0), SpMatrix(model_->genus())};
  std::string key;
  for (std::size_t k = lo; k < hi; ++k) key += letters[k].to_string() + ' ';
  {
    std::shared_lock lock(mu_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  Entry e;
  if (n == 1) {
    const Letter& l = letters[lo];
    e.matrix = model_->letter_matrix(l);
    if (l.exponent > 0) {
      e.value = base_;
    } else {
      // phi(x^-1) = tau(M_x, M_x^-1) - phi(x)
      const SpMatrix mx = e.matrix.inverse();
      e.value = Rational(meyer_tau(mx, e.matrix)) - base_;
    }
  } else {
    const std::size_t mid = lo + n / 2;
    const Entry u = evaluate(letters, lo, mid);
    const Entry v = evaluate(letters, mid, hi);
    e.matrix = u.matrix * v.matrix;
    // phi(w^-1) = tau(M_u, M_v) - phi(u) - phi(v), then invert.
    const Rational inverse_value = Rational(meyer_tau(u.matrix, v.matrix)) - u.value - v.value;
    e.value = Rational(meyer_tau(e.matrix, e.matrix.inverse())) - inverse_value;
  }
  std::unique_lock lock(mu_);
  cache_.emplace(key, e);
  return e;
}

Rational PhiTable::phi(const GeneratorWord& w) const {
  const GeneratorWord c = canonical(w);
  return evaluate(c.letters, 0, c.letters.size()).value;
}

Rational phi_word(const PhiTable& table, const GeneratorWord& w) { return table.phi(w); }

Rational sigma_loc_broad(const Integer& germ_signature, const GeneratorWord& w,
                         const PhiTable& table) {
  return table.phi(w) + Rational(germ_signature);
}

}  // namespace germsig
