#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>

#include "doctest.h"
#include "support/invariants.hpp"

using invariants::SuiteReport;

static void check_suite(const SuiteReport& r, int min_instances = 20) {
  INFO(r.name);
  std::printf("%-55s instances=%d failures=%d\n", r.name.c_str(), r.instances, r.failures);
  for (auto& n : r.notes) std::printf("    note: %s\n", n.c_str());
  CHECK(r.instances >= min_instances);
  CHECK(r.failures == 0);
}

TEST_CASE("generation identities on exact sequences") {
  check_suite(invariants::generation_identity_suite());
}

TEST_CASE("two-out-of-three for Koszul modules") {
  check_suite(invariants::two_out_of_three_suite());
}

TEST_CASE("Ext-dimension additivity over Koszul exact sequences") {
  check_suite(invariants::ext_additivity_suite());
}

TEST_CASE("syzygy and module projectivity over the degree-zero part") {
  check_suite(invariants::syzygy_projectivity_suite());
}

TEST_CASE("cyclic modules on unfactorizable morphisms") {
  check_suite(invariants::cyclic_module_suite());
}

TEST_CASE("corner dimension identity on the Ext algebra") {
  check_suite(invariants::corner_dimension_suite());
}
