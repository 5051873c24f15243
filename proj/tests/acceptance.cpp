// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>

#include "winshift/reproduce.hpp"

int main() {
  using namespace winshift;
  int failures = 0;
  for (const Claim& c : claims()) {
    auto t0 = std::chrono::steady_clock::now();
    ClaimResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const char* verdict =
        r.pass ? "PASS" : (r.known_discrepancy ? "FAIL (known discrepancy)" : "FAIL");
    std::printf("criterion %2d [%s] %s: %s (%.1fs)\n", c.criterion, c.id.c_str(),
                c.summary.c_str(), verdict, secs);
    for (const std::string& d : r.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    if (!r.pass && !r.known_discrepancy) ++failures;
  }
  std::printf("%zu criteria, %d unexpected failures\n", claims().size(), failures);
  return failures == 0 ? 0 : 1;
}
