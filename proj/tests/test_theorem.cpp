#include "doctest.h"

#include "superpres/parallel.hpp"
#include "superpres/theorem.hpp"

#include <iostream>

using namespace superpres;

namespace {
void print_failures(const Report& r) {
  for (const auto& c : r.checks)
    if (!c.passed) std::cerr << c.name << ": " << c.detail << "\n";
}
} // namespace

TEST_CASE("level -2 count at n = 3") {
  const auto c = level_two_count(3);
  CHECK(c.free_dim == 45);
  CHECK(c.ideal_dim == 42);
  CHECK(c.target_dim == 3);
  CHECK(c.ideal_in_kernel);
}

TEST_CASE("main theorem n = 3, 4") {
  for (int n = 3; n <= 4; ++n) {
    const Report r = verify_main_theorem(n);
    print_failures(r);
    CHECK(r.passed());
    CHECK(r.checks.size() > 10);
  }
}

TEST_CASE("relation checks do not depend on the worker count") {
  set_thread_count(4);
  const Report a = verify_relations(4);
  set_thread_count(1);
  const Report b = verify_relations(4);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].detail == b.checks[i].detail);
  }
}

TEST_CASE("ktilde") {
  CHECK(ktilde_element(4, {0, 1, 2}, 3) == WElement::k(4, {0, 1, 2}, 3));
  CHECK_FALSE(ktilde_element(4, {0, 1, 2, 3}, 3).is_zero());
  for (int n = 3; n <= 6; ++n) {
    const Report r = verify_ktilde(n);
    print_failures(r);
    CHECK(r.passed());
  }
  CHECK_THROWS_AS(verify_main_theorem(6), std::invalid_argument);
}

TEST_CASE("report merge") {
  Report a{"a", {}}, b{"b", {}};
  b.add("x", false, "bad");
  a.add("y", true);
  a.merge(b);
  CHECK(a.failures() == 1);
  CHECK(a.checks[1].name == "b/x");
}
