#include <cstdlib>
#include <iostream>

#include "simal/acceptance.hpp"

// One line per criterion; exit status 1 when any criterion fails.
int main(int argc, char** argv) {
  simal::acceptance::Options opt;
  if (char const* s = std::getenv("SIMAL_SEED")) {
    opt.seed = std::strtoull(s, nullptr, 10);
  }
  for (int i = 1; i < argc; ++i) {
    opt.only.push_back(std::atoi(argv[i]));
  }
  bool ok = true;
  simal::acceptance::run(opt, [&](simal::acceptance::CriterionResult const& r) {
    std::cout << simal::acceptance::summary_line(r) << "  " << r.seconds << "s" << std::endl;
    for (size_t i = 0; i < r.failures.size() && i < 5; ++i) {
      std::cout << "    " << r.failures[i].property << ": " << r.failures[i].witness << "\n";
    }
    ok &= r.passed();
  });
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
