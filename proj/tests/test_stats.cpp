#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "netspread/stats.hpp"

using namespace netspread;

TEST_CASE("mann-whitney separates shifted samples") {
  std::vector<double> low, high;
  for (int i = 0; i < 30; ++i) {
    low.push_back(i);
    high.push_back(i + 15);
  }
  const auto r = mann_whitney_less(low, high);
  CHECK(r.p_value < 0.01);
  CHECK(r.z < 0);
  CHECK(mann_whitney_less(high, low).p_value > 0.99);
}

TEST_CASE("mann-whitney statistic by hand") {
  // a = {1, 2}, b = {3, 4}: every a is below every b, so U_a = 0.
  const std::vector<double> a{1, 2}, b{3, 4};
  CHECK(mann_whitney_less(a, b).u == 0.0);
  // Ties count one half: U_a = 0.5 + 0 + 1 + 0.5 = 2.
  const std::vector<double> c{1, 2}, d{1, 2};
  CHECK(mann_whitney_less(c, d).u == 2.0);
}

TEST_CASE("identical constant samples carry no evidence") {
  const std::vector<double> a(10, 4.0), b(10, 4.0);
  CHECK(mann_whitney_less(a, b).p_value == doctest::Approx(0.5).epsilon(0.5));
  CHECK(mann_whitney_less(a, b).p_value >= 0.5);
}

TEST_CASE("mean") {
  const std::vector<double> xs{1, 2, 3, 6};
  CHECK(mean(xs) == 3.0);
}
