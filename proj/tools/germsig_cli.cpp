// germsig: JSON front end for the local signature library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "germsig/error.hpp"
#include "germsig/json_io.hpp"
#include "germsig/verify.hpp"
#include "germsig/winding.hpp"

using namespace germsig;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error("ParseError", path + ": " + e.what());
  }
}

Json word_json(const GeneratorWord& w) { return w.to_string(); }

CoverSpec make_spec(int d, int m, const std::string& labels) {
  if (labels.empty()) return CoverSpec::p1(d, m);
  CoverSpec s{d, m, {}};
  std::stringstream ss(labels);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      s.labels.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError("--labels: bad entry '" + tok + "'");
    }
  }
  s.validate();
  return s;
}

// "i:j,k*i:j,k^p/..." with '*' separating tensor factors.
TensorSection parse_tensor(int m, const std::string& text) {
  TensorSection t;
  std::stringstream ss(text);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    int power = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      try {
        power = std::stoi(factor.substr(caret + 1));
      } catch (const std::exception&) {
        throw UsageError("--pair: bad exponent in '" + factor + "'");
      }
      factor = factor.substr(0, caret);
    }
    const auto colon = factor.find(':');
    const auto comma = factor.find(',');
    if (colon == std::string::npos || comma == std::string::npos || comma < colon)
      throw UsageError("--pair: factor '" + factor + "' is not of the form i:j,k");
    try {
      SectionSpec s{m, std::stoi(factor.substr(0, colon)),
                    std::stoi(factor.substr(colon + 1, comma - colon - 1)),
                    std::stoi(factor.substr(comma + 1))};
      t *= TensorSection(s, power);
    } catch (const std::logic_error&) {
      throw UsageError("--pair: bad indices in '" + factor + "'");
    }
  }
  if (t.factors.empty()) throw UsageError("--pair: empty section");
  return t;
}

Json tensor_json(const TensorSection& t) {
  Json out = Json::array();
  for (const auto& [s, p] : t.factors)
    out.push_back(Json{{"i", s.i}, {"j", s.j}, {"k", s.k}, {"power", p}});
  return out;
}

void emit(const Json& report) { std::cout << report.dump(2) << std::endl; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local signatures of fiber germs with cyclic group actions"};
  app.require_subcommand(1);

  std::string file_a, file_b;
  auto* tau = app.add_subcommand("tau", "Meyer cocycle of two symplectic matrices");
  tau->add_option("A", file_a, "matrix JSON {g, rows}")->required();
  tau->add_option("B", file_b, "matrix JSON {g, rows}")->required();

  int d = 0, m = 0;
  std::string word, labels;
  auto* rep = app.add_subcommand("rep", "homology action of a word on the cyclic cover");
  rep->add_option("--d", d, "deck group order")->required();
  rep->add_option("--m", m, "number of branch points")->required();
  rep->add_option("--word", word, "word such as \"s12 s23^-1 t13\"")->required();
  rep->add_option("--labels", labels, "comma-separated branch labels (default all 1)");

  auto* phi = app.add_subcommand("phi", "cobounding function on a word (p1 cover)");
  phi->add_option("--d", d)->required();
  phi->add_option("--m", m)->required();
  phi->add_option("--word", word)->required();

  std::string germ_file;
  auto* sigloc = app.add_subcommand("sigloc", "local signature of germ data");
  sigloc->add_option("germ", germ_file, "germ JSON")->required();

  std::string action_file;
  auto* gsign = app.add_subcommand("gsign", "total signature from G-signature data");
  gsign->add_option("action", action_file, "group action JSON")->required();

  std::string pair;
  int sheets = 0;
  auto* wind = app.add_subcommand("winding", "relative winding of two sections on the boundary loop");
  wind->add_option("--m", m)->required();
  wind->add_option("--pair", pair, "\"3:1,2*3:2,1/3:4,5^2\"")->required();
  wind->add_option("--sheets", sheets, "1 or 2 (default: 2 if a section sits on S_12)");

  auto* chi = app.add_subcommand("chi-loc", "local Euler number of the p1 germ by winding");
  chi->add_option("--d", d)->required();
  chi->add_option("--m", m)->required();

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run acceptance suites from the manifest");
  verify->add_option("suite", suite, "suite name (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    emit(Json{{"error", {{"name", "UsageError"}, {"message", e.what()}}}});
    return 2;
  }

  Json report{{"command", app.get_subcommands().front()->get_name()},
              {"inputs", Json::object()},
              {"checks", Json::array()}};
  Json& inputs = report["inputs"];
  try {
    if (*tau) {
      inputs = Json{{"A", file_a}, {"B", file_b}};
      const SpMatrix a = matrix_from_json(read_json_file(file_a));
      const SpMatrix b = matrix_from_json(read_json_file(file_b));
      if (a.genus() != b.genus()) throw Error("BadSpec", "matrices have different genus");
      report["result"] = meyer_tau(a, b);
    } else if (*rep) {
      const CoverSpec spec = make_spec(d, m, labels);
      const GeneratorWord w = GeneratorWord::parse(word);
      inputs = Json{{"d", d}, {"m", m}, {"labels", spec.labels}, {"word", word_json(w)}};
      report["result"] = matrix_to_json(word_to_matrix(spec, w));
    } else if (*phi) {
      const GeneratorWord w = GeneratorWord::parse(word);
      inputs = Json{{"d", d}, {"m", m}, {"word", word_json(w)}};
      report["result"] = rational_to_json(phi_word(PhiTable::p1(d, m), w));
    } else if (*sigloc) {
      inputs = Json{{"germ", germ_file}};
      report["result"] = rational_to_json(sigma_loc(germ_from_json(read_json_file(germ_file))));
    } else if (*gsign) {
      inputs = Json{{"action", action_file}};
      report["result"] =
          rational_to_json(total_signature(group_action_from_json(read_json_file(action_file))));
    } else if (*wind) {
      const auto slash = pair.find('/');
      if (slash == std::string::npos) throw UsageError("--pair must be of the form A/B");
      const TensorSection a = parse_tensor(m, pair.substr(0, slash));
      const TensorSection b = parse_tensor(m, pair.substr(slash + 1));
      if (sheets == 0) {
        sheets = 1;
        for (const auto* t : {&a, &b})
          for (const auto& [s, p] : t->factors)
            if (s.i <= 2) sheets = 2;
      }
      const BoundaryLoop loop{Rational(1, 2), sheets};
      inputs = Json{{"m", m}, {"a", tensor_json(a)}, {"b", tensor_json(b)}, {"sheets", sheets}};
      const long w = relative_winding(a, b, loop);
      report["result"] = Json{{"relativeWinding", w}, {"intersection", -w}};
    } else if (*chi) {
      inputs = Json{{"d", d}, {"m", m}};
      const P1BoundaryNumbers n = p1_boundary_numbers(m);
      const Rational value = chi_loc_p1(d, m);
      report["result"] = rational_to_json(value);
      report["checks"].push_back(Json{{"name", "grand total m(m-2)"},
                                      {"pass", n.total == static_cast<long>(m) * (m - 2)},
                                      {"details", std::to_string(n.total)}});
    } else if (*verify) {
      const std::vector<std::string> names =
          suite.empty() ? suite_names() : std::vector<std::string>{suite};
      inputs = Json{{"suite", suite.empty() ? "all" : suite}};
      Json suites = Json::array();
      bool all = true;
      for (const auto& name : names) {
        const SuiteResult r = run_suite(name);
        all = all && r.pass();
        for (const auto& c : r.checks)
          report["checks"].push_back(
              Json{{"name", name + ": " + c.name}, {"pass", c.pass}, {"details", c.details}});
        suites.push_back(Json{{"suite", name}, {"criterion", r.criterion}, {"pass", r.pass()}});
      }
      report["result"] = Json{{"pass", all}, {"suites", suites}};
      emit(report);
      return all ? 0 : 1;
    }
  } catch (const UsageError& e) {
    emit(Json{{"error", {{"name", "UsageError"}, {"message", e.what()}}}});
    return 2;
  } catch (const Error& e) {
    report["error"] = Json{{"name", e.name()}, {"message", e.what()}};
    emit(report);
    return 1;
  }
  emit(report);
  return 0;
}
