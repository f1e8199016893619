#include <doctest.h>

#include <sstream>

#include "property_suite.hpp"

TEST_SUITE("properties") {
  TEST_CASE("small random sample") {
    testing::PropertyReport r = testing::run_property_suite(8, 7, false);
    std::ostringstream out;
    for (const auto& f : r.failures) out << f.property << " on " << f.polytope << ": " << f.detail << "\n";
    INFO(out.str());
    CHECK(r.failures.empty());
    CHECK(r.polytopes == 16);
    CHECK(r.checked.at("shift equivariance") > 0);
  }
}
