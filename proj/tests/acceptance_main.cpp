// Acceptance suite: runs the full verification battery with its default
// parameters and prints one pass/fail line per criterion. Exit status is
// nonzero if any criterion fails.

#include <cstdio>
#include <exception>

#include "slce/verify.hpp"

int main() {
  slce::verify::VerifyOptions opts;
  opts.jobs = 4;
  try {
    auto results = slce::verify::run_all(opts);
    bool all_pass = true;
    for (const auto& r : results) {
      std::printf("%s  criterion %2d  %-22s  %s\n", r.pass ? "PASS" : "FAIL", r.id,
                  r.name.c_str(), r.detail.c_str());
      all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "FAIL  acceptance aborted: %s\n", e.what());
    return 1;
  }
}
