#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace biq {

// 15 significant digits, round-half-even.
std::string format_real(double v);
std::string format_real(const std::optional<double>& v);

struct CsvDocument {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
  std::string str() const;
};

struct RunManifest {
  std::vector<std::string> argv;
  nlohmann::json parameters = nlohmann::json::object();
  std::optional<std::uint64_t> seed;
  std::string tool_version;
  double wall_seconds = 0.0;
  std::vector<std::string> outputs;
};

nlohmann::json to_json(const RunManifest& m);
RunManifest manifest_from_json(const nlohmann::json& j);

}  // namespace biq
