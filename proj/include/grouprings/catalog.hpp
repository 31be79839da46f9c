#pragma once

#include <string>
#include <vector>

namespace gring {

/// The battery of groups the batch runner and the invariant suites walk.
/// Everything here is order <= 128 so that the lattice guard stays happy;
/// the big witness groups are exercised separately by the nd machinery.
inline std::vector<std::string> paper_catalog() {
  return {
      "C(1)",  "C(2)",   "C(4)",   "C(6)",     "C(8)",       "C(2)xC(8)", "C(12)",
      "D(8)",  "D(10)",  "D(12)",  "D(16)",    "Q(8)",       "Q(16)",     "Q(32)",
      "S(3)",  "S(4)",   "A(4)",   "A(5)",     "SL2(3)",     "G(2,2,2)",  "G(2,2,3)",
      "G(2,3,2)", "G(2,2,4)", "G(3,2,2)", "MC(7,9,2)", "MC(17,8,16)", "MC(3,2,2)",
      "BJ4",   "BJ5",    "BJ8",    "BJ9",      "SG32_11",    "SG32_12",   "SG64_135",
      "Q8xQ8", "D(10)xC(5)", "D(8)xC(2)",
  };
}

/// Subset used by the SN-equivalence invariant (criterion: >= 25 groups of
/// order <= 64).
inline std::vector<std::string> sn_catalog() {
  return {
      "C(4)",     "C(6)",   "C(8)",     "C(2)xC(8)", "C(12)",   "D(8)",      "D(10)",
      "D(12)",    "D(16)",  "Q(8)",     "Q(16)",     "Q(32)",   "S(3)",      "S(4)",
      "A(4)",     "A(5)",   "SL2(3)",   "G(2,2,2)",  "G(2,2,3)", "G(2,3,2)", "G(2,2,4)",
      "MC(7,9,2)", "MC(3,2,2)", "BJ5",  "BJ8",       "SG32_11", "SG32_12",  "Q8xQ8",
      "D(8)xC(2)",
  };
}

} // namespace gring
