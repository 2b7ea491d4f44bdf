#pragma once

#include <string>
#include <vector>

namespace superpres {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Structured verification outcome shared by every verify_* operation.
struct Report {
  std::string title;
  std::vector<Check> checks;

  bool passed() const;
  std::size_t failures() const;
  void add(std::string name, bool passed, std::string detail = {});
  /// Appends the checks of `other`, prefixing their names with its title.
  void merge(const Report& other);
};

} // namespace superpres
