#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ohc/covers.hpp"

using namespace ohc;

TEST_CASE("rep counts") {
    CHECK(rep_counts("ABABAB").rep_a == 0);
    CHECK(rep_counts("ABABAB").rep_b == 0);
    CHECK(rep_counts("ABBA").rep_b == 1);
    CHECK(rep_counts("ABBA").rep_a == 0);
    CHECK(rep_counts("ASBTA").rep_a == 0);
    CHECK(rep_counts("ASBTA").rep_b == 0);
    CHECK(rep_counts("AASBB").rep_a == 1);
    CHECK(rep_counts("AASBB").rep_b == 1);
}
