#include "qwi/profile_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qwi {

namespace {

using nlohmann::json;

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::vector<double> number_array(const json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw ParseError(std::string("missing key \"") + key + "\"");
  }
  const auto& arr = doc.at(key);
  if (!arr.is_array()) {
    throw ParseError(std::string("\"") + key + "\" must be an array of numbers");
  }
  std::vector<double> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) {
      throw ParseError(std::string("\"") + key + "\"[" + std::to_string(i) + "] is not a number");
    }
    out.push_back(arr[i].get<double>());
  }
  return out;
}

double optional_number(const json& doc, const char* key, double fallback) {
  if (!doc.contains(key)) return fallback;
  const auto& v = doc.at(key);
  if (!v.is_number()) {
    throw ParseError(std::string("\"") + key + "\" must be a number");
  }
  return v.get<double>();
}

}  // namespace

ProfileSpec parse_profile(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError("malformed JSON at " + location(text, at) + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("profile must be a JSON object");
  }
  ProfileSpec spec;
  spec.profile.boundaries = number_array(doc, "boundaries");
  spec.profile.values = number_array(doc, "potentials");
  spec.units.hbar = optional_number(doc, "hbar", 1.0);
  spec.units.mass = optional_number(doc, "mass", 1.0);
  validate_profile(spec.profile);
  validate_units(spec.units);
  return spec;
}

ProfileSpec load_profile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open profile file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_profile(buf.str());
}

std::string dump_profile(const ProfileSpec& spec, int indent) {
  json doc;
  doc["boundaries"] = spec.profile.boundaries;
  doc["potentials"] = spec.profile.values;
  doc["hbar"] = spec.units.hbar;
  doc["mass"] = spec.units.mass;
  return doc.dump(indent);
}

}  // namespace qwi
