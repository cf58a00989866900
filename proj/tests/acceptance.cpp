#include <cstdio>
#include <map>

#include "forge/cli/battery.hpp"

using namespace forge::cli;

int main() {
  const std::map<int, const char*> titles{
      {1, "group orders"},
      {2, "coset enumeration"},
      {3, "Petrie polygons"},
      {4, "the map of type {8,3}"},
      {5, "the chiral polytope of type {8,3,3}"},
      {6, "the minimal regular cover"},
      {7, "the configuration 8_3"},
      {8, "colourful polytopes"},
      {9, "projection rendering"},
  };
  const auto claims = run_battery(Options{});
  bool all = true;
  for (const auto& [n, title] : titles) {
    int total = 0, failed = 0;
    for (const auto& c : claims) {
      if (c.criterion != n) continue;
      ++total;
      if (!c.pass) {
        ++failed;
        std::printf("  failed claim %s: expected %s, computed %s\n", c.id.c_str(), c.expected.dump().c_str(),
                    c.computed.dump().c_str());
      }
    }
    const bool pass = total > 0 && failed == 0;
    all = all && pass;
    std::printf("criterion %d (%s): %s [%d/%d claims]\n", n, title, pass ? "PASS" : "FAIL", total - failed, total);
  }
  return all ? 0 : 1;
}
