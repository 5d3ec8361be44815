#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qwi/errors.hpp"
#include "qwi/potential.hpp"

namespace qwi {

/// Malformed profile text; the message carries the line and column.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A profile together with the units it is expressed in.
struct ProfileSpec {
  PotentialProfile profile;
  UnitSystem units;
};

/// Parses {"boundaries": [...], "potentials": [...], "hbar": 1.0, "mass": 1.0}.
/// hbar and mass are optional. Throws ParseError on malformed JSON or wrong types and
/// ValidationError when the profile violates its invariants.
ProfileSpec parse_profile(std::string_view text);

ProfileSpec load_profile(const std::filesystem::path& path);

/// Serializes with round-trip-exact doubles.
std::string dump_profile(const ProfileSpec& spec, int indent = 2);

}  // namespace qwi
