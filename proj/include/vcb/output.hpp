#pragma once
// Flat key/value records rendered as a CSV row, a JSON object, or a short
// text block.  Field order is the insertion order, which keeps CSV columns
// and JSON keys stable across rows of one invocation.

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace vcb {

class OutputRecord {
 public:
  using Value = std::variant<double, std::int64_t, bool, std::string>;

  void add(std::string key, double v) { fields_.emplace_back(std::move(key), v); }
  void add(std::string key, std::int64_t v) {
    fields_.emplace_back(std::move(key), v);
  }
  void add(std::string key, int v) {
    fields_.emplace_back(std::move(key), std::int64_t(v));
  }
  void add(std::string key, bool v) { fields_.emplace_back(std::move(key), v); }
  void add(std::string key, std::string v) {
    fields_.emplace_back(std::move(key), std::move(v));
  }
  void add(std::string key, const char* v) {
    fields_.emplace_back(std::move(key), std::string(v));
  }

  const std::vector<std::pair<std::string, Value>>& fields() const {
    return fields_;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [key, value] : fields_)
      std::visit([&](const auto& v) { j[key] = v; }, value);
    return j;
  }

  std::string csv_header() const {
    std::string out;
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(fields_[i].first);
    }
    return out;
  }

  std::string csv_row() const {
    std::string out;
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(value_string(fields_[i].second));
    }
    return out;
  }

  // key = value lines; doubles at the 4-decimal reading precision.
  std::string text_block() const {
    std::ostringstream os;
    for (const auto& [key, value] : fields_) {
      os << key << " = ";
      if (std::holds_alternative<double>(value)) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.4f", std::get<double>(value));
        os << buf;
      } else {
        os << value_string(value);
      }
      os << '\n';
    }
    return os.str();
  }

  static std::string value_string(const Value& value) {
    if (std::holds_alternative<double>(value)) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", std::get<double>(value));
      return buf;
    }
    if (std::holds_alternative<std::int64_t>(value))
      return std::to_string(std::get<std::int64_t>(value));
    if (std::holds_alternative<bool>(value))
      return std::get<bool>(value) ? "true" : "false";
    return std::get<std::string>(value);
  }

  // RFC 4180: quote fields containing separators, quotes or line breaks;
  // embedded quotes are doubled.
  static std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
    return out;
  }

 private:
  std::vector<std::pair<std::string, Value>> fields_;
};

}  // namespace vcb
