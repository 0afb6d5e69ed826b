#include "doctest.h"

#include "friezelink/verify.hpp"

using namespace friezelink;

TEST_CASE("placeholder") { CHECK(true); }
