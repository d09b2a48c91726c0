#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ohc/embedder.hpp"

using namespace ohc;

TEST_CASE("placeholder") { CHECK(true); }
