// Acceptance gate: one line per criterion. With no arguments all twelve
// criteria run; a single numeric argument runs just that criterion
// (used to register each as its own ctest case).
#include <cstdio>
#include <cstdlib>
#include <exception>

#include "speclab/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace speclab;
  int lo = 1, hi = kAcceptanceCriteria;
  if (argc > 1) {
    const int k = std::atoi(argv[1]);
    if (k < 1 || k > kAcceptanceCriteria) {
      std::fprintf(stderr, "usage: %s [criterion 1..%d]\n", argv[0],
                   kAcceptanceCriteria);
      return 2;
    }
    lo = hi = k;
  }
  bool all_pass = true;
  for (int i = lo; i <= hi; ++i) {
    try {
      const CheckResult c = run_criterion(i);
      std::printf("%s criterion %2d  %-45s %s\n", c.pass ? "PASS" : "FAIL", i,
                  c.name.c_str(), c.detail.c_str());
      all_pass = all_pass && c.pass;
    } catch (const std::exception& e) {
      std::printf("FAIL criterion %2d  unexpected error: %s\n", i, e.what());
      all_pass = false;
    }
  }
  return all_pass ? 0 : 1;
}
