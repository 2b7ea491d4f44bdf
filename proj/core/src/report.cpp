#include "superpres/report.hpp"

#include <algorithm>

namespace superpres {

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

void Report::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks)
    checks.push_back({other.title.empty() ? c.name : other.title + "/" + c.name, c.passed, c.detail});
}

} // namespace superpres
