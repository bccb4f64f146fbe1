#include <cstdio>
#include <cstdlib>
#include <string>

#include "kummer_app/verify.hpp"

using kummer::app::Criterion;

namespace {

void print(const Criterion& c) {
  std::printf("%s criterion %2d: %s (%.2f s)\n", c.passed() ? "PASS" : "FAIL", c.id, c.title.c_str(), c.seconds);
  for (const auto& k : c.checks) {
    if (!k.passed) std::printf("     %s: expected %s, got %s\n", k.name.c_str(), k.expected.c_str(), k.actual.c_str());
  }
  std::fflush(stdout);
}

}  // namespace

// acceptance [id]: all criteria, or only the given one
int main(int argc, char** argv) {
  if (argc > 2) {
    std::fprintf(stderr, "usage: acceptance [criterion]\n");
    return 2;
  }
  if (argc == 2) {
    int id = std::atoi(argv[1]);
    if (id < 1 || id > kummer::app::criterion_count) {
      std::fprintf(stderr, "criterion must be 1..%d\n", kummer::app::criterion_count);
      return 2;
    }
    Criterion c = kummer::app::run_criterion(id);
    print(c);
    return c.passed() ? 0 : 1;
  }
  int failed = 0;
  kummer::app::run_all([&](const Criterion& c) {
    print(c);
    if (!c.passed()) ++failed;
  });
  std::printf("%d of %d criteria passed\n", kummer::app::criterion_count - failed, kummer::app::criterion_count);
  return failed == 0 ? 0 : 1;
}
