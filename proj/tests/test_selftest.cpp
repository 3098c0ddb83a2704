#include <gtest/gtest.h>

#include "inlr/selftest.hpp"

using namespace inlr;

TEST(Selftest, SuitesPassOnSmallSamples) {
  for (const char* s : {"iplus", "quantum", "qencode", "cc"}) {
    SuiteReport r = run_suite(s, 40, 3);
    EXPECT_TRUE(r.ok()) << r.text();
    EXPECT_EQ(r.text(), run_suite(s, 40, 3).text());
  }
  EXPECT_THROW(run_suite("lambda", 1, 0), std::invalid_argument);
}

TEST(Selftest, FailureText) {
  CheckResult c;
  c.name = "demo";
  c.samples = 3;
  c.fail("first");
  EXPECT_FALSE(c.ok());
  EXPECT_EQ(c.text(), "demo: 1/3 failed, 3 samples\n  counterexample: first\n");
}

TEST(Selftest, MeasurementFrequencyOutsideBound) {
  CheckResult c = check_measurement_frequency("basis", "inlr(1.0 . star, 0.0 . star)", 200, 1, 0.5, 0.02);
  EXPECT_FALSE(c.ok());
  EXPECT_DOUBLE_EQ(c.max_error, 0.5);
}
