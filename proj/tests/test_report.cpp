#include "doctest.h"
TEST_SUITE_BEGIN("report");
TEST_SUITE_END();
