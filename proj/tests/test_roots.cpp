#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qwi/roots.hpp"

using namespace qwi;

TEST_SUITE("roots") {

TEST_CASE("window samples are uniform with inset ends") {
  const auto s = window_samples(-1.0, 3.0, 5);
  REQUIRE(s.size() == 5);
  CHECK(s.front() > -1.0);
  CHECK(s.front() - (-1.0) == doctest::Approx(4e-12).epsilon(1e-3));
  CHECK(s.back() < 3.0);
  CHECK(s[1] == doctest::Approx(0.0));
  CHECK(s[2] == doctest::Approx(1.0));
  CHECK(window_samples(0.0, 1.0, 2).size() == 2);
}

TEST_CASE("bisection meets the relative bracket width") {
  const auto f = [](double x) { return x * x - 2.0; };
  const double r = bisect(f, 0.0, 2.0, f(0.0));
  CHECK(std::abs(r - std::sqrt(2.0)) < 2e-12);
  const auto g = [](double x) { return x - 1e6; };
  const double big = bisect(g, 0.0, 2e6, g(0.0));
  CHECK(std::abs(big - 1e6) < 1e-12 * 1e6 * 2);
}

TEST_CASE("bracketing finds every simple root in order") {
  const auto roots = bracket_roots([](double x) { return std::sin(x); }, 0.5, 10.0, 200);
  REQUIRE(roots.size() == 3);
  for (int n = 1; n <= 3; ++n) CHECK(std::abs(roots[n - 1] - n * std::numbers::pi) < 1e-11);
  CHECK(bracket_roots([](double x) { return 1.0 + x * x; }, -3.0, 3.0, 100).empty());
}

}
