// Prints the Wedderburn data and property verdicts for a few classic groups.
#include "grouprings/grouprings.hpp"

#include <iostream>

using namespace gring;

int main() {
  for (const char* expr : {"Q(8)", "D(8)", "A(4)", "G(2,2,3)"}) {
    auto g = build_group(*parse_expr(expr));
    auto lat = all_subgroups(*g, true);
    auto rec = analyze_group(expr, *g, lat);
    std::cout << analysis_to_json(rec).dump(2) << "\n";
  }
  return 0;
}
