#pragma once

#include <compare>
#include <string>
#include <utility>

namespace superpres {

enum class GenKind { e, f, f0, h };

/// Abstract generator e_a, f_a, f_{0a} or h_a.
struct GeneratorSymbol {
  GenKind kind = GenKind::e;
  int index = 0;

  static GeneratorSymbol e(int a) { return {GenKind::e, a}; }
  static GeneratorSymbol f(int a) { return {GenKind::f, a}; }
  static GeneratorSymbol f0(int a) { return {GenKind::f0, a}; }
  static GeneratorSymbol h(int a) { return {GenKind::h, a}; }

  /// Odd iff e_0 or some f_{0a}.
  int parity() const { return (kind == GenKind::f0 || (kind == GenKind::e && index == 0)) ? 1 : 0; }
  /// (number of e_0, number of f_{0a}).
  std::pair<int, int> multidegree() const {
    if (kind == GenKind::e && index == 0) return {1, 0};
    if (kind == GenKind::f0) return {0, 1};
    return {0, 0};
  }
  int level() const {
    auto [i, j] = multidegree();
    return i - j;
  }

  friend auto operator<=>(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

std::string to_string(const GeneratorSymbol& g);

} // namespace superpres
