#include <doctest.h>

#include <string>

#include "qwi/errors.hpp"
#include "qwi/profile_io.hpp"
#include "support/oracles.hpp"

using namespace qwi;

namespace {

std::string message_of(std::string_view text) {
  try {
    parse_profile(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_SUITE("profile_io") {

TEST_CASE("parse a complete profile") {
  const auto spec = parse_profile(
      R"({"boundaries":[0,2],"potentials":[5,-10,8],"hbar":1.5,"mass":0.5})");
  CHECK(spec.profile == PotentialProfile::three_region(5, -10, 8, 2));
  CHECK(spec.units.hbar == 1.5);
  CHECK(spec.units.mass == 0.5);
}

TEST_CASE("units default to one") {
  const auto spec = parse_profile(R"({"boundaries":[0],"potentials":[1,2]})");
  CHECK(spec.units.hbar == 1.0);
  CHECK(spec.units.mass == 1.0);
}

TEST_CASE("malformed JSON reports line and column") {
  const auto msg = message_of("{\"boundaries\": [0, 2],\n \"potentials\": [5, -10 8]}");
  CHECK(contains(msg, "malformed JSON at line 2"));
  CHECK_THROWS_AS(parse_profile("{"), ParseError);
}

TEST_CASE("structural problems") {
  CHECK(contains(message_of(R"({"potentials":[1,2]})"), "missing key \"boundaries\""));
  CHECK(contains(message_of(R"({"boundaries":0,"potentials":[1,2]})"), "array of numbers"));
  CHECK(contains(message_of(R"({"boundaries":[0],"potentials":[1,"x"]})"), "\"potentials\"[1]"));
  CHECK(contains(message_of(R"({"boundaries":[0],"potentials":[1,2],"hbar":"1"})"), "\"hbar\""));
  CHECK(contains(message_of("[1,2]"), "JSON object"));
}

TEST_CASE("validation errors pass through verbatim") {
  CHECK_THROWS_AS(parse_profile(R"({"boundaries":[1,0],"potentials":[1,2,3]})"), ValidationError);
  CHECK(contains(message_of(R"({"boundaries":[1,0],"potentials":[1,2,3]})"), "non-monotone"));
  CHECK(contains(message_of(R"({"boundaries":[0,1],"potentials":[1,2]})"), "length mismatch"));
  CHECK_THROWS_AS(parse_profile(R"({"boundaries":[0],"potentials":[1,2],"mass":-1})"),
                  ValidationError);
}

TEST_CASE("files") {
  const auto spec = load_profile(QWI_TEST_DATA "/paper_well.json");
  CHECK(spec.profile == PotentialProfile::three_region(5, -10, 8, 2));
  CHECK(load_profile(QWI_TEST_DATA "/double_well.json").profile.region_count() == 5);
  CHECK_THROWS_AS(load_profile(QWI_TEST_DATA "/malformed.json"), ParseError);
  CHECK_THROWS_AS(load_profile(QWI_TEST_DATA "/does_not_exist.json"), ParseError);
}

TEST_CASE("property: dump then parse is exact") {
  testing::Gen g(61);
  for (int i = 0; i < 300; ++i) {
    ProfileSpec spec{testing::random_profile(g), {g.uniform(0.1, 3.0), g.uniform(0.1, 3.0)}};
    const auto back = parse_profile(dump_profile(spec, i % 2 == 0 ? -1 : 2));
    CHECK(back.profile == spec.profile);
    CHECK(back.units.hbar == spec.units.hbar);
    CHECK(back.units.mass == spec.units.mass);
  }
}

}
