#pragma once

// File formats for choice functions and hyper-orders. One JSON object per
// file, fields in fixed order, compact, newline-terminated:
//   {"universe":["a","b"],"choice":[0,1,0,1]}
//   {"universe":["a","b"],"ranks":[1,3,0,2]}
// Integers are decimal bitmasks (choice) or ranks; universe order fixes bits.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "outcast/choice_function.hpp"
#include "outcast/hyper_order.hpp"

namespace outcast::io {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline nlohmann::ordered_json parse_object(const std::string& text, const char* payload_key) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top-level value must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "universe" && key != payload_key) throw ParseError("unexpected field '" + key + "'");
  }
  if (!doc.contains("universe") || !doc["universe"].is_array()) throw ParseError("missing array field 'universe'");
  if (!doc.contains(payload_key) || !doc[payload_key].is_array()) {
    throw ParseError(std::string("missing array field '") + payload_key + "'");
  }
  return doc;
}

inline Universe parse_universe(const nlohmann::ordered_json& arr) {
  std::vector<std::string> names;
  for (const auto& v : arr) {
    if (!v.is_string()) throw ParseError("universe entries must be strings");
    names.push_back(v.get<std::string>());
  }
  try {
    return Universe(std::move(names));
  } catch (const UniverseError& e) {
    throw ParseError(e.what());
  }
}

inline std::vector<std::int64_t> parse_integers(const nlohmann::ordered_json& arr, const char* field) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) {
      throw ParseError(std::string(field) + "[" + std::to_string(i) + "] is not an integer");
    }
    out.push_back(v.get<std::int64_t>());
    ++i;
  }
  return out;
}

inline std::string dump(const Universe& u, const char* payload_key, const nlohmann::ordered_json& payload) {
  nlohmann::ordered_json doc;
  doc["universe"] = u.names();
  doc[payload_key] = payload;
  return doc.dump() + "\n";
}

}  // namespace detail

/// Parses a choice-function document. Throws ParseError for malformed JSON
/// and out-of-range entries, LengthMismatch / ChoiceViolation from validation.
inline ChoiceFunction parse_choice_function(const std::string& text) {
  const auto doc = detail::parse_object(text, "choice");
  Universe universe = detail::parse_universe(doc["universe"]);
  const auto raw = detail::parse_integers(doc["choice"], "choice");
  std::vector<SubsetId> table;
  table.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0 || static_cast<std::uint64_t>(raw[i]) >= universe.powerset_size()) {
      throw ParseError("choice[" + std::to_string(i) + "] = " + std::to_string(raw[i]) + " is not a subset bitmask");
    }
    table.emplace_back(static_cast<std::uint32_t>(raw[i]));
  }
  return ChoiceFunction::validate(std::move(universe), std::move(table));
}

inline HyperOrder parse_order(const std::string& text) {
  const auto doc = detail::parse_object(text, "ranks");
  Universe universe = detail::parse_universe(doc["universe"]);
  return HyperOrder::validate(std::move(universe), detail::parse_integers(doc["ranks"], "ranks"));
}

inline std::string serialize(const ChoiceFunction& f) {
  nlohmann::ordered_json choice = nlohmann::ordered_json::array();
  for (const SubsetId s : f.table()) choice.push_back(s.bits);
  return detail::dump(f.universe(), "choice", choice);
}

inline std::string serialize(const HyperOrder& order) {
  return detail::dump(order.universe(), "ranks", order.ranks());
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace outcast::io
