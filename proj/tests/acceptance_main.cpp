// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit status 0 iff everything passes.

#include <cstdio>
#include <string>

#include "gle/report.hpp"

int main() {
  gle::SuiteConfig cfg;
  gle::Report rep = gle::run_suite(cfg);

  int failed_criteria = 0;
  for (const auto& group : gle::acceptance_criteria()) {
    bool pass = true;
    std::string detail;
    for (const auto& name : group.checks)
      for (const auto& c : rep.checks)
        if (c.name == name) {
          pass = pass && c.pass;
          if (!c.pass) detail += " " + c.name + " (" + c.witness + ")";
        }
    std::printf("%s criterion-%d %s%s\n", pass ? "PASS" : "FAIL", group.id, group.title.c_str(),
                detail.c_str());
    failed_criteria += pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria pass\n", int(gle::acceptance_criteria().size()) - failed_criteria,
              gle::acceptance_criteria().size());
  return failed_criteria == 0 ? 0 : 1;
}
