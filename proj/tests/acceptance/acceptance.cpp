// Runs acceptance suites from the shared manifest and prints one line per
// criterion. Usage: acceptance [suite ...]

#include <iostream>

#include "germsig/error.hpp"
#include "germsig/verify.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> names(argv + 1, argv + argc);
  if (names.empty()) names = germsig::suite_names();
  bool all = true;
  for (const auto& name : names) {
    germsig::SuiteResult r;
    try {
      r = germsig::run_suite(name);
    } catch (const germsig::Error& e) {
      std::cout << "FAIL " << name << ": " << e.name() << ": " << e.what() << "\n";
      all = false;
      continue;
    }
    const bool pass = r.pass();
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << r.criterion << " (" << r.name
              << "): " << r.title << " [" << r.checks.size() - r.failures() << "/"
              << r.checks.size() << " checks]\n";
    for (const auto& c : r.checks)
      if (!c.pass) std::cout << "  failed: " << c.name << ": " << c.details << "\n";
  }
  return all ? 0 : 1;
}
