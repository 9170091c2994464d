#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace xcreg {

// Minimal TOML reader covering what the config files use: [section]
// headers, comments, and key = scalar | string | array-of-scalars.
// Values keep their source line so config errors can point at them.

struct TomlValue {
  std::variant<std::int64_t, double, bool, std::string,
               std::vector<double>, std::vector<std::string>>
      data;
  int line = 0;
};

struct TomlDoc {
  // Keys are full dotted paths, e.g. "window.r1".
  std::map<std::string, TomlValue> values;
};

TomlDoc parse_toml(const std::string& text, const std::string& origin);
TomlDoc parse_toml_file(const std::string& path);

/// Typed access with consumed-key tracking: after reading a config, call
/// finish() to reject any key the schema never asked for, by location.
class ConfigReader {
 public:
  ConfigReader(TomlDoc doc, std::string origin)
      : doc_(std::move(doc)), origin_(std::move(origin)) {}

  bool has(const std::string& key) const { return doc_.values.count(key) > 0; }

  double number(const std::string& key, std::optional<double> fallback = std::nullopt);
  std::int64_t integer(const std::string& key, std::optional<std::int64_t> fallback = std::nullopt);
  bool boolean(const std::string& key, std::optional<bool> fallback = std::nullopt);
  std::string text(const std::string& key, std::optional<std::string> fallback = std::nullopt);
  std::vector<double> number_array(const std::string& key,
                                   std::optional<std::vector<double>> fallback = std::nullopt);

  void finish() const;

 private:
  const TomlValue& require(const std::string& key);

  TomlDoc doc_;
  std::string origin_;
  std::set<std::string> consumed_;
};

}  // namespace xcreg
