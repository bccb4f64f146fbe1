#pragma once

#include <functional>
#include <string>
#include <vector>

namespace kummer::app {

struct Check {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct Criterion {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;

  bool passed() const;
};

inline constexpr int criterion_count = 13;

// Throws std::out_of_range for an id outside 1..criterion_count. Exceptions inside a check become failures.
Criterion run_criterion(int id);
std::vector<Criterion> run_all(const std::function<void(const Criterion&)>& on_done = {});

}  // namespace kummer::app
