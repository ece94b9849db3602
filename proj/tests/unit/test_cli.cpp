#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>

#include "germsig/json_io.hpp"

using germsig::Json;

namespace {

struct Run {
  int status = -1;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GERMSIG_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(GERMSIG_FIXTURES) + "/" + name;
}

}  // namespace

TEST_CASE("documented examples") {
  const Run chi = run("chi-loc --d 2 --m 6");
  CHECK(chi.status == 0);
  CHECK(chi.json()["result"] == "3/5");
  CHECK(chi.json()["command"] == "chi-loc");

  const Run phi = run("phi --d 2 --m 6 --word s12");
  CHECK(phi.status == 0);
  CHECK(phi.json()["result"] == "3/5");

  const std::string id = fixture("identity_g1.json");
  const Run tau = run("tau " + id + " " + id);
  CHECK(tau.status == 0);
  CHECK(tau.json()["result"] == 0);
}

TEST_CASE("other subcommands") {
  const std::string s = fixture("rotation_g1.json");
  CHECK(run("tau " + s + " " + s).json()["result"] == -2);

  const Run rep = run("rep --d 2 --m 4 --word \"s12 s12^-1\"");
  CHECK(rep.status == 0);
  CHECK(rep.json()["result"]["rows"] == Json{{1, 0}, {0, 1}});

  const Run sig = run("sigloc " + fixture("p1_germ_d2m6.json"));
  CHECK(sig.status == 0);
  CHECK(sig.json()["result"] == "-3/5");

  const Run gs = run("gsign " + fixture("involution_action.json"));
  CHECK(gs.status == 0);
  CHECK(gs.json()["result"] == "2");

  const Run w = run("winding --m 5 --pair \"3:1,2*3:2,1/3:4,5^2\"");
  CHECK(w.status == 0);
  CHECK(w.json()["result"]["intersection"] == 1);
  CHECK(w.json()["inputs"]["sheets"] == 1);

  const Run v = run("verify cosec_sum");
  CHECK(v.status == 0);
  CHECK(v.json()["result"]["pass"] == true);
  CHECK(!v.json()["checks"].empty());
}

TEST_CASE("error paths emit JSON with an error name") {
  const Run missing = run("chi-loc --d 2");
  CHECK(missing.status == 2);
  CHECK(missing.json()["error"]["name"] == "UsageError");

  const Run unknown = run("frobnicate");
  CHECK(unknown.status == 2);
  CHECK(unknown.json()["error"]["name"] == "UsageError");

  const Run pair = run("winding --m 5 --pair 3:1,2");
  CHECK(pair.status == 2);
  CHECK(pair.json()["error"]["name"] == "UsageError");

  const Run bad = run("chi-loc --d 2 --m 5");
  CHECK(bad.status == 1);
  CHECK(bad.json()["error"]["name"] == "BadSpec");
  CHECK(!bad.json().contains("result"));

  const Run word = run("phi --d 2 --m 4 --word s19");
  CHECK(word.status == 1);
  CHECK(word.json()["error"]["name"] == "InvalidWord");

  const Run file = run("sigloc /nonexistent.json");
  CHECK(file.status == 2);

  const Run suite = run("verify no_such_suite");
  CHECK(suite.status == 1);
  CHECK(suite.json()["error"]["name"] == "BadSpec");
}

TEST_CASE("output is deterministic") {
  for (const std::string args : {"phi --d 3 --m 6 --word \"s12 s23^-1 t14\"",
                                 "rep --d 3 --m 3 --word s12", "chi-loc --d 3 --m 6"}) {
    const Run a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
}
