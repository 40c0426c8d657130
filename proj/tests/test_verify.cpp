#include <gtest/gtest.h>

#include "adic/error.hpp"
#include "adic/verify.hpp"

using namespace adic;

namespace {

std::string describe(const SuiteReport& r) {
  std::string s;
  for (const Failure& f : r.failures) {
    s += f.case_id + " input=" + f.input + " expected=" + f.expected + " got=" + f.got + "\n";
    if (s.size() > 2000) break;
  }
  return s;
}

}  // namespace

TEST(Verify, SuitesPass) {
  for (const char* name : {"diagrams", "arithmetic", "solenoid"}) {
    const SuiteReport r = run_suite(name, 150, 9);
    EXPECT_TRUE(r.ok()) << name << "\n" << describe(r);
    EXPECT_GT(r.cases, 0u);
    EXPECT_EQ(r.suite, name);
    EXPECT_EQ(r.seed, 9u);
  }
}

TEST(Verify, DeterministicPerSeed) {
  const SuiteReport a = run_suite("solenoid", 60, 123);
  const SuiteReport b = run_suite("solenoid", 60, 123);
  EXPECT_EQ(a.cases, b.cases);
  ASSERT_EQ(a.excluded.size(), b.excluded.size());
  for (std::size_t i = 0; i < a.excluded.size(); ++i) {
    EXPECT_EQ(a.excluded[i].label, b.excluded[i].label);
    EXPECT_EQ(a.excluded[i].count, b.excluded[i].count);
  }
}

TEST(Verify, UnknownSuite) {
  try {
    (void)run_suite("nope", 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_argument);
  }
}

TEST(Verify, MorseCylinders) {
  for (unsigned m = 2; m <= 12; ++m) {
    const CylinderCheck c = morse_cylinder_check(m);
    EXPECT_TRUE(c.ok()) << m << ": " << c.detail;
    EXPECT_EQ(c.determined + c.undetermined, 1u << m);
    EXPECT_EQ(c.undetermined, 2u);
  }
}

TEST(Verify, MorseHatCylinders) {
  for (unsigned total = 2; total <= 9; ++total) {
    const CylinderCheck c = m_hat_cylinder_check(total);
    EXPECT_TRUE(c.ok()) << total << ": " << c.detail;
  }
}
