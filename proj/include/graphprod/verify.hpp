#pragma once

#include <string>
#include <vector>

#include "graphprod/word.hpp"

namespace gp {

// One replayed property. A check that cannot run on the given product (say,
// enumeration over an infinite vertex group) counts as passed with a
// "skipped:" detail rather than as a failure.
struct VerifyCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  int passed = 0;
  int failed = 0;
};

// Replay the library's geometric, coset-complex, and automorphism properties
// on balls of the given radius. Deterministic for a fixed (product, radius,
// seed); the seed only feeds the random-composition checks of the auto suite.
VerifyReport verify_qm(const GraphProduct& p, int radius);
VerifyReport verify_davis(const GraphProduct& p, int radius);
VerifyReport verify_auto(const GraphProduct& p, int radius, unsigned seed);
VerifyReport verify_all(const GraphProduct& p, int radius, unsigned seed);

}  // namespace gp
