#include "germsig/verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "germsig/error.hpp"
#include "germsig/manifest_data.hpp"
#include "germsig/sampling.hpp"
#include "germsig/winding.hpp"

namespace germsig {

bool SuiteResult::pass() const { return !checks.empty() && failures() == 0; }

std::size_t SuiteResult::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 0 : 1;
  return n;
}

const Json& verify_manifest() {
  static const Json manifest = Json::parse(detail::kVerifyManifest);
  return manifest;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : verify_manifest().at("suites")) out.push_back(s.at("name"));
  return out;
}

Json suite_to_json(const SuiteResult& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
  return Json{{"suite", r.name},
              {"criterion", r.criterion},
              {"title", r.title},
              {"pass", r.pass()},
              {"checks", checks}};
}

namespace {

// Counts repeated checks of one kind and keeps the first failure.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void record(bool ok, const std::function<std::string()>& detail) {
    ++total_;
    if (ok) {
      ++passed_;
    } else if (first_failure_.empty()) {
      first_failure_ = detail();
    }
  }
  void record(bool ok, const std::string& detail) {
    record(ok, [&] { return detail; });
  }

  CheckResult result() const {
    std::string details = std::to_string(passed_) + "/" + std::to_string(total_) + " passed";
    if (!first_failure_.empty()) details += "; first failure: " + first_failure_;
    return CheckResult{name_, total_ > 0 && passed_ == total_, details};
  }

 private:
  std::string name_;
  int total_ = 0;
  int passed_ = 0;
  std::string first_failure_;
};

std::string str(const Rational& q) { return to_string(q); }

std::vector<std::pair<int, int>> spec_list(const Json& j) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : j) out.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  return out;
}

std::vector<std::pair<int, int>> p1_specs(const Json& params) {
  std::vector<std::pair<int, int>> out;
  const int m_max = params.at("m_max");
  for (int d : params.at("d_values").get<std::vector<int>>())
    for (int m = 3; m <= m_max; ++m)
      if (m % d == 0) out.emplace_back(d, m);
  return out;
}

std::string spec_tag(int d, int m) {
  return "(d=" + std::to_string(d) + ",m=" + std::to_string(m) + ")";
}

GeneratorWord full_twist(int m) {
  GeneratorWord w;
  for (int r = 0; r < m; ++r)
    for (int i = 1; i < m; ++i) w.letters.push_back(Letter{Letter::Kind::kHalfTwist, i, i + 1, 1});
  return w;
}

GeneratorWord letter_word(int i, int j, int exponent = 1) {
  return GeneratorWord{{Letter{Letter::Kind::kHalfTwist, i, j, exponent}}};
}

// Pairs of words that are equal in the braid group: braid relations of
// adjacent half twists and commutations of half twists on disjoint index
// intervals.
std::vector<std::pair<GeneratorWord, GeneratorWord>> relation_pairs(int m) {
  std::vector<std::pair<GeneratorWord, GeneratorWord>> out;
  for (int i = 1; i + 2 <= m; ++i) {
    const GeneratorWord a = letter_word(i, i + 1), b = letter_word(i + 1, i + 2);
    out.emplace_back(a * b * a, b * a * b);
  }
  for (int i = 1; i < m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int k = j + 1; k < m; ++k)
        for (int l = k + 1; l <= m; ++l) {
          const GeneratorWord a = letter_word(i, j), b = letter_word(k, l);
          out.emplace_back(a * b, b * a);
        }
  return out;
}

// ------------------------------------------------------------- suites

void suite_cosec_sum(const Json& params, SuiteResult& out) {
  Tally t("sum_{h=1}^{d-1} cosec^2(h pi/d) = (d^2-1)/3");
  for (int d = params.at("d_min"); d <= params.at("d_max").get<int>(); ++d) {
    AlgReal sum;
    for (int h = 1; h < d; ++h) sum = sum + cosec2_half(Angle(2 * h, 2 * d));
    const Rational expected = make_rational(d * d - 1, 3);
    bool ok = false;
    std::string got = "irrational";
    try {
      const Rational v = as_rational(sum.canonical());
      got = str(v);
      ok = v == expected;
    } catch (const Error&) {
    }
    t.record(ok, [&] { return "d=" + std::to_string(d) + " got " + got + ", expected " + str(expected); });
  }
  out.checks.push_back(t.result());
}

void suite_prop_closed_forms(const Json& params, SuiteResult& out) {
  Tally sig("sigma_loc(p1_germ(d,m)) = -(d-1)(d+1)m/(3d(m-1))");
  Tally phi("phi(s12) = (d-1)(d+1)m/(3d(m-1))");
  Tally hyper("d=2: phi(s12) = (g+1)/(2g+1)");
  Tally broad("sigma_loc_broad(0, s12^-1) = sigma_loc(p1_germ)");
  for (const auto& [d, m] : p1_specs(params)) {
    const Rational base = p1_base(d, m);
    const Rational s = sigma_loc(p1_germ(d, m));
    sig.record(s == -base, [&] { return spec_tag(d, m) + " got " + str(s); });
    const PhiTable table = PhiTable::p1(d, m);
    const Rational p = phi_word(table, letter_word(1, 2));
    phi.record(p == base, [&] { return spec_tag(d, m) + " got " + str(p); });
    const Rational b = sigma_loc_broad(0, letter_word(1, 2, -1), table);
    broad.record(b == s, [&] { return spec_tag(d, m) + " got " + str(b); });
    if (d == 2) {
      const int g = (m - 2) / 2;
      const Rational e = make_rational(g + 1, 2 * g + 1);
      hyper.record(p == e, [&] { return "g=" + std::to_string(g) + " got " + str(p); });
    }
  }
  Tally rel_matrix("full twist relator acts trivially on homology");
  Tally rel_phi("phi(full twist relator) = 0");
  for (const auto& [d, m] : spec_list(params.at("relator_specs"))) {
    const CoverSpec spec = CoverSpec::p1(d, m);
    const GeneratorWord w = full_twist(m);
    const SpMatrix mw = word_to_matrix(spec, w);
    rel_matrix.record(mw == SpMatrix(static_cast<std::size_t>(genus(spec))), spec_tag(d, m));
    const Rational v = phi_word(PhiTable::p1(d, m), w);
    rel_phi.record(v == 0, [&] { return spec_tag(d, m) + " got " + str(v); });
  }
  for (const Tally* t : {&sig, &phi, &hyper, &broad, &rel_matrix, &rel_phi})
    out.checks.push_back(t->result());
}

void suite_winding(const Json& params, SuiteResult& out) {
  Tally eq3("s_i(j,k) . s_i(j',k') = 0");
  Tally eq4("(s_i(1,k) s_i(2,k)) . ref^2 = (s_i(k,1) s_i(k,2)) . ref^2 = 0");
  Tally eq5("(s_i(1,2) s_i(2,1)) . ref^2 = 1");
  Tally eq5w("relative winding of (s_i(1,2) s_i(2,1)) / ref^2 = -1");
  Tally si("n(s_dS_i) = -1");
  Tally pairs("n(r s12(j,k)) = 1");
  Tally eps_int("s12^eps(j) . s12(j,k) = -1");
  Tally eps("n(r s12^eps(j)) = 2");
  Tally sub("S_12 subtotal = (m+1)(m-2)");
  Tally total("grand total = m(m-2)");
  Tally chi("chi_loc_p1(d,m) = m/(d(m-1)) = p1_germ chi");
  const BoundaryLoop one{Rational(1, 2), 1}, two{Rational(1, 2), 2};
  for (int m = params.at("m_min"); m <= params.at("m_max").get<int>(); ++m) {
    const std::string tag = "m=" + std::to_string(m);
    for (int i = 3; i <= m; ++i) {
      const TensorSection ref = si_reference(m, i);
      for (int j = 3; j <= m; ++j)
        for (int k = 3; k <= m; ++k)
          if (j != k && j != i && k != i) {
            const long v = intersection_number(SectionSpec{m, i, j, k}, ref, one);
            eq3.record(v == 0, [&] { return tag + " i=" + std::to_string(i) + " got " + std::to_string(v); });
          }
      for (int k = 3; k <= m; ++k) {
        if (k == i) continue;
        const long a = intersection_number(
            TensorSection(SectionSpec{m, i, 1, k}) * TensorSection(SectionSpec{m, i, 2, k}), ref.pow(2), one);
        const long b = intersection_number(
            TensorSection(SectionSpec{m, i, k, 1}) * TensorSection(SectionSpec{m, i, k, 2}), ref.pow(2), one);
        eq4.record(a == 0 && b == 0, [&] { return tag + " got " + std::to_string(a) + "," + std::to_string(b); });
      }
      const TensorSection a = TensorSection(SectionSpec{m, i, 1, 2}) * TensorSection(SectionSpec{m, i, 2, 1});
      const long v5 = intersection_number(a, ref.pow(2), one);
      eq5.record(v5 == 1, [&] { return tag + " got " + std::to_string(v5); });
      const long w5 = relative_winding(a, ref.pow(2), one);
      eq5w.record(w5 == -1, [&] { return tag + " got " + std::to_string(w5); });
    }
    for (int j = 3; j <= m; ++j)
      for (int k = 3; k <= m; ++k) {
        if (j == k) continue;
        for (const auto& s : {SectionSpec{m, 1, 2, j}, SectionSpec{m, 1, j, 2}}) {
          const long v = intersection_number(s, SectionSpec{m, 1, j, k}, two);
          eps_int.record(v == -1, [&] { return tag + " got " + std::to_string(v); });
        }
      }
    const P1BoundaryNumbers n = p1_boundary_numbers(m);
    for (long x : n.per_si) si.record(x == -1, tag + " got " + std::to_string(x));
    for (long x : n.s12_pairs) pairs.record(x == 1, tag + " got " + std::to_string(x));
    for (long x : n.s12_plus) eps.record(x == 2, tag + " (+) got " + std::to_string(x));
    for (long x : n.s12_minus) eps.record(x == 2, tag + " (-) got " + std::to_string(x));
    long summed = 0;
    for (long x : n.s12_pairs) summed += x;
    for (long x : n.s12_plus) summed += x;
    for (long x : n.s12_minus) summed += x;
    const long want_sub = static_cast<long>(m + 1) * (m - 2);
    sub.record(n.s12_subtotal == want_sub && summed == want_sub,
               [&] { return tag + " tensor " + std::to_string(n.s12_subtotal) + ", sum " + std::to_string(summed); });
    total.record(n.total == static_cast<long>(m) * (m - 2), tag + " got " + std::to_string(n.total));
    for (int d = 2; d <= m; ++d) {
      if (m % d != 0) continue;
      const Rational c = chi_loc_p1(d, m);
      const Rational want = make_rational(m, d * (m - 1));
      const Rational stored = p1_germ(d, m).horizontal.begin()->second;
      chi.record(c == want && stored == want,
                 [&] { return spec_tag(d, m) + " got " + str(c) + ", stored " + str(stored); });
    }
  }
  for (const Tally* t : {&eq3, &eq4, &eq5, &eq5w, &si, &pairs, &eps_int, &eps, &sub, &total, &chi})
    out.checks.push_back(t->result());
}

void suite_meyer(const Json& params, std::uint64_t seed, SuiteResult& out) {
  const int len = params.at("word_length");
  for (int g : params.at("genera").get<std::vector<int>>()) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(g));
    const std::string tag = " (g=" + std::to_string(g) + ")";
    const auto gg = static_cast<std::size_t>(g);
    Tally cocycle("cocycle identity" + tag);
    for (int n = 0; n < params.at("triples").get<int>(); ++n) {
      const SpMatrix a = random_symplectic(rng, gg, len), b = random_symplectic(rng, gg, len),
                     c = random_symplectic(rng, gg, len);
      const int lhs = meyer_tau(a, b) + meyer_tau(a * b, c);
      const int rhs = meyer_tau(a, b * c) + meyer_tau(b, c);
      cocycle.record(lhs == rhs, [&] { return std::to_string(lhs) + " != " + std::to_string(rhs); });
    }
    Tally conj("conjugation invariance" + tag);
    for (int n = 0; n < params.at("pairs").get<int>(); ++n) {
      const SpMatrix a = random_symplectic(rng, gg, len), b = random_symplectic(rng, gg, len),
                     p = random_symplectic(rng, gg, len);
      const SpMatrix pi = p.inverse();
      const int x = meyer_tau(p * a * pi, p * b * pi), y = meyer_tau(a, b);
      conj.record(x == y, [&] { return std::to_string(x) + " != " + std::to_string(y); });
    }
    Tally left("tau(I,B) = 0" + tag), inv("tau(A,A^-1) = 0" + tag);
    for (int n = 0; n < params.at("singles").get<int>(); ++n) {
      const SpMatrix b = random_symplectic(rng, gg, len);
      const int x = meyer_tau(SpMatrix(gg), b);
      left.record(x == 0, "got " + std::to_string(x));
      const SpMatrix a = random_symplectic(rng, gg, len);
      const int y = meyer_tau(a, a.inverse());
      inv.record(y == 0, "got " + std::to_string(y));
    }
    for (const Tally* t : {&cocycle, &conj, &left, &inv}) out.checks.push_back(t->result());
  }
}

bool is_transvection(const SpMatrix& a) {
  const std::size_t n = a.matrix().rows();
  const IntMatrix e = a.matrix() - IntMatrix::identity(n);
  return e * e == IntMatrix(n, n) && rational_rank(to_rational(e)) == 1;
}

void suite_representation(const Json& params, SuiteResult& out) {
  Tally size("generators symplectic of size 2g = 2-2d+m(d-1)");
  Tally rank("rank H_1 = 2g");
  Tally braid("braid relations");
  Tally comm("commutation of disjoint half twists");
  Tally trans("d=2 half twists are transvections");
  for (const auto& [d, m] : spec_list(params.at("specs"))) {
    const CoverSpec spec = CoverSpec::p1(d, m);
    const auto model = cover_model(spec);
    const std::size_t dim = static_cast<std::size_t>(2 - 2 * d + m * (d - 1));
    rank.record(model->homology_cycles().size() == dim, spec_tag(d, m));
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j)
        for (int e : {1, -1}) {
          const Letter l{Letter::Kind::kHalfTwist, i, j, e};
          const SpMatrix a = homology_rep(spec, l);
          bool ok = a.matrix().rows() == dim;
          try {
            check_symplectic(a.matrix());
          } catch (const Error&) {
            ok = false;
          }
          size.record(ok, spec_tag(d, m) + " " + l.to_string());
          if (d == 2) trans.record(is_transvection(a), spec_tag(d, m) + " " + l.to_string());
        }
    for (const auto& [lhs, rhs] : relation_pairs(m)) {
      const bool ok = word_to_matrix(spec, lhs) == word_to_matrix(spec, rhs);
      (lhs.size() == 3 ? braid : comm).record(ok, spec_tag(d, m) + " " + lhs.to_string());
    }
  }
  for (const Tally* t : {&size, &rank, &braid, &comm, &trans}) out.checks.push_back(t->result());
}

void suite_coboundary(const Json& params, std::uint64_t seed, SuiteResult& out) {
  std::mt19937_64 rng(seed);
  for (const auto& [d, m] : spec_list(params.at("specs"))) {
    Tally t("phi(u) + phi(v) + phi((uv)^-1) = tau(M_u, M_v) " + spec_tag(d, m));
    Tally inv("phi(w^-1) = tau(M_w, M_w^-1) - phi(w) " + spec_tag(d, m));
    const CoverSpec spec = CoverSpec::p1(d, m);
    const PhiTable table = PhiTable::p1(d, m);
    for (int n = 0; n < params.at("pairs").get<int>(); ++n) {
      const GeneratorWord u = random_word(rng, m, params.at("max_length"));
      const GeneratorWord v = random_word(rng, m, params.at("max_length"));
      const Rational lhs = phi_word(table, u) + phi_word(table, v) + phi_word(table, (u * v).inverse());
      const Rational rhs(meyer_tau(word_to_matrix(spec, u), word_to_matrix(spec, v)));
      t.record(lhs == rhs, [&] { return "u='" + u.to_string() + "' v='" + v.to_string() + "': " + str(lhs) + " vs " + str(rhs); });
      const SpMatrix mu = word_to_matrix(spec, u);
      const Rational a = phi_word(table, u.inverse());
      const Rational b = Rational(meyer_tau(mu, mu.inverse())) - phi_word(table, u);
      inv.record(a == b, [&] { return "w='" + u.to_string() + "'"; });
    }
    out.checks.push_back(t.result());
    out.checks.push_back(inv.result());
  }
}

void suite_phi_well_defined(const Json& params, std::uint64_t seed, SuiteResult& out) {
  std::mt19937_64 rng(seed);
  Tally rel("phi agrees across braid and commutation relations");
  Tally conj("phi(x w x^-1) = phi(w)");
  for (const auto& [d, m] : spec_list(params.at("specs"))) {
    const PhiTable table = PhiTable::p1(d, m);
    for (const auto& [lhs, rhs] : relation_pairs(m)) {
      const Rational a = phi_word(table, lhs), b = phi_word(table, rhs);
      rel.record(a == b, [&] { return spec_tag(d, m) + " '" + lhs.to_string() + "': " + str(a) + " vs " + str(b); });
    }
    for (int n = 0; n < params.at("conjugations").get<int>(); ++n) {
      const GeneratorWord x = random_word(rng, m, params.at("max_length"));
      const GeneratorWord w = random_word(rng, m, params.at("max_length"));
      const Rational a = phi_word(table, x * w * x.inverse()), b = phi_word(table, w);
      conj.record(a == b, [&] { return spec_tag(d, m) + " x='" + x.to_string() + "' w='" + w.to_string() + "'"; });
    }
  }
  out.checks.push_back(rel.result());
  out.checks.push_back(conj.result());
}

void suite_gsign(const Json& params, SuiteResult& out) {
  Tally t("total_signature(p1 germ action) = sigma_loc(p1_germ) = -(d-1)(d+1)m/(3d(m-1))");
  for (const auto& [d, m] : p1_specs(params)) {
    bool ok = false;
    std::string got = "error";
    try {
      const Rational v = total_signature(germ_action(p1_germ(d, m)));
      got = str(v);
      ok = v == sigma_loc(p1_germ(d, m)) && v == -p1_base(d, m);
    } catch (const Error& e) {
      got = e.name();
    }
    t.record(ok, [&] { return spec_tag(d, m) + " got " + got; });
  }
  out.checks.push_back(t.result());
}

}  // namespace

SuiteResult run_suite(const std::string& name) {
  const Json& manifest = verify_manifest();
  const std::uint64_t seed = manifest.at("seed").get<std::uint64_t>();
  for (const auto& s : manifest.at("suites")) {
    if (s.at("name") != name) continue;
    SuiteResult r;
    r.name = name;
    r.criterion = s.at("criterion");
    r.title = s.at("title");
    const Json& p = s.at("params");
    const std::uint64_t suite_seed = seed + 1000 * static_cast<std::uint64_t>(r.criterion);
    try {
      if (name == "cosec_sum") suite_cosec_sum(p, r);
      else if (name == "prop_closed_forms") suite_prop_closed_forms(p, r);
      else if (name == "winding_intersections") suite_winding(p, r);
      else if (name == "meyer_cocycle") suite_meyer(p, suite_seed, r);
      else if (name == "representation") suite_representation(p, r);
      else if (name == "coboundary") suite_coboundary(p, suite_seed, r);
      else if (name == "phi_well_defined") suite_phi_well_defined(p, suite_seed, r);
      else if (name == "gsign_bookkeeping") suite_gsign(p, r);
      else throw Error("BadSpec", "suite '" + name + "' has no implementation");
    } catch (const Error& e) {
      r.checks.push_back(CheckResult{"suite aborted", false, e.name() + ": " + e.what()});
    }
    return r;
  }
  throw Error("BadSpec", "unknown verify suite '" + name + "'");
}

}  // namespace germsig
