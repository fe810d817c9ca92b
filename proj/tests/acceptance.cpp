// Acceptance gate: runs the full invariant suite and prints one line per
// criterion.  Exits nonzero if any criterion fails.

#include <iostream>

#include "qsh/selftest.hpp"

int main() {
  bool ok = true;
  for (const auto& r : qsh::selftest::run_all()) {
    std::cout << r.line() << std::endl;
    for (const auto& f : r.failures) std::cout << "    " << f << std::endl;
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
