#pragma once

#include <map>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "germsig/coverrep.hpp"
#include "germsig/gsign.hpp"

namespace germsig {

// Combinatorial record of a fiber germ with a finite group action.
struct GermData {
  int order = 1;
  Integer sign_quotient = 0;
  // (element label, psi in [0, pi]) -> local Euler number.
  std::map<std::pair<std::string, Angle>, Rational> horizontal;
  std::map<std::string, std::vector<FixedPoint>> vertical_points;
  std::map<std::string, std::vector<FixedSurface>> vertical_surfaces;

  void validate() const;
};

// |G| Sign(E/G) + sum_{h != 1} ( -sum_psi chi cosec^2(psi/2)
//   + sum_P cot(phi/2) cot(phi'/2) - sum_F e_F cosec^2(psi_F/2) ).
Rational sigma_loc(const GermData& germ);

// The same assembly routed through the G-signature bookkeeping: the
// horizontal local Euler numbers become fixed surfaces of the element.
GroupActionData germ_action(const GermData& germ);

// Germ of the Z_d cover p1 with monodromy sigma_12^-1: one horizontal
// entry per h = 1..d-1 at psi = 2 pi h / d reduced into [0, pi], each with
// chi = m / (d (m - 1)). Throws Error("BadSpec") unless d | m.
GermData p1_germ(int d, int m);

// (d - 1)(d + 1) m / (3 d (m - 1)).
Rational p1_base(int d, int m);

// Cobounding function of the pulled-back Meyer cocycle on words.
class PhiTable {
 public:
  PhiTable(CoverSpec spec, Rational base);
  static PhiTable p1(int d, int m) { return PhiTable(CoverSpec::p1(d, m), p1_base(d, m)); }

  const CoverSpec& spec() const { return spec_; }
  const Rational& base() const { return base_; }

  // Full twists are rewritten as squared half twists first.
  GeneratorWord canonical(const GeneratorWord& w) const;
  Rational phi(const GeneratorWord& w) const;

 private:
  struct Entry {
    Rational value;
    SpMatrix matrix;
  };
  Entry evaluate(const std::vector<Letter>& letters, std::size_t lo, std::size_t hi) const;

  CoverSpec spec_;
  Rational base_;
  std::shared_ptr<const CoverModel> model_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<std::string, Entry> cache_;
};

Rational phi_word(const PhiTable& table, const GeneratorWord& w);

// phi(w) + Sign E.
Rational sigma_loc_broad(const Integer& germ_signature, const GeneratorWord& w,
                         const PhiTable& table);

}  // namespace germsig
