// Acceptance harness: runs every verification suite at contract scale and
// prints one pass/fail line per criterion, with wall-clock limits enforced
// where the contract sets one.
#include <cstdio>
#include <string>

#include "pnil/verify.hpp"

using namespace pnil;

namespace {

int failures = 0;

void report(int id, const verify::SuiteResult& r, double time_limit) {
  bool ok = r.ok;
  std::string note = r.detail;
  if (time_limit > 0 && r.seconds >= time_limit) {
    ok = false;
    note += " [time limit " + std::to_string(time_limit) + "s exceeded]";
  }
  if (!ok) ++failures;
  std::printf("%s criterion %2d (%s): (%.1fs) %s\n", ok ? "PASS" : "FAIL", id,
              r.name.c_str(), r.seconds, note.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  report(1, verify::counting_suite(200), 5.0);
  report(2, verify::type_one_parity_suite(200), 0);
  report(3, verify::type_two_display_suite(8, 200), 0);
  report(4, verify::catalog_count_suite({3, 5}), 60.0);
  report(5, verify::membership_suite({2, 3}), 600.0);
  report(6, verify::distinctness_suite({3, 5, 7}, 100'000'000), 1800.0);
  report(7, verify::roundtrip_suite(12), 0);
  report(8, verify::ancestry_suite({2, 3}, 10), 0);
  report(9, verify::center_suite(10), 0);
  report(10, verify::property_suite(), 0);

  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
