// Prints one PASS/FAIL line per acceptance criterion.
//   acceptance [--seed N] [--strict]
// Exit status is 0 once every criterion has been evaluated; with --strict it is 1
// if any criterion failed.

#include "skewla/checks.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

namespace {

void print(int id, bool pass, const std::string& name, const std::string& detail, double seconds) {
  std::printf("criterion %2d: %s  %s | %s (%.2f s)\n", id, pass ? "PASS" : "FAIL", name.c_str(), detail.c_str(),
              seconds);
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = skewla::kDefaultSeed;
  bool strict = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else if (std::strcmp(argv[i], "--strict") == 0) {
      strict = true;
    } else {
      std::fprintf(stderr, "usage: %s [--seed N] [--strict]\n", argv[0]);
      return 2;
    }
  }

  std::printf("seed %llu\n", static_cast<unsigned long long>(seed));
  const auto start = std::chrono::steady_clock::now();
  const auto results = skewla::run_selftest(seed);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  int failed = 0;
  for (const auto& r : results) {
    print(r.id, r.pass, r.name, r.detail, r.seconds);
    if (!r.pass) ++failed;
  }
  const bool fast = wall < skewla::kSelftestBudgetSeconds;
  print(10, fast, "selftest wall time", "full selftest took " + std::to_string(wall) + " s (limit 120 s)", wall);
  if (!fast) ++failed;

  std::printf("%d of %zu criteria passed\n", static_cast<int>(results.size()) + 1 - failed, results.size() + 1);
  return strict && failed > 0 ? 1 : 0;
}
