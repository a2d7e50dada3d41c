#include "biq/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace biq {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string format_real(const std::optional<double>& v) { return v ? format_real(*v) : ""; }

void CsvDocument::add_row(std::vector<std::string> row) {
  if (row.size() != header.size()) throw std::logic_error("csv row width does not match header");
  rows.push_back(std::move(row));
}

namespace {
void put_field(std::string& out, const std::string& f) {
  if (f.find_first_of(",\"\n") == std::string::npos) {
    out += f;
    return;
  }
  out += '"';
  for (char c : f) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

void put_row(std::string& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    put_field(out, row[i]);
  }
  out += '\n';
}
}  // namespace

std::string CsvDocument::str() const {
  std::string out;
  put_row(out, header);
  for (const auto& r : rows) put_row(out, r);
  return out;
}

nlohmann::json to_json(const RunManifest& m) {
  nlohmann::json j;
  j["argv"] = m.argv;
  j["parameters"] = m.parameters;
  j["seed"] = m.seed ? nlohmann::json(*m.seed) : nlohmann::json(nullptr);
  j["tool_version"] = m.tool_version;
  j["wall_seconds"] = m.wall_seconds;
  j["outputs"] = m.outputs;
  return j;
}

RunManifest manifest_from_json(const nlohmann::json& j) {
  RunManifest m;
  m.argv = j.at("argv").get<std::vector<std::string>>();
  m.parameters = j.value("parameters", nlohmann::json::object());
  if (j.contains("seed") && !j["seed"].is_null()) m.seed = j["seed"].get<std::uint64_t>();
  m.tool_version = j.value("tool_version", "");
  m.wall_seconds = j.value("wall_seconds", 0.0);
  m.outputs = j.value("outputs", std::vector<std::string>{});
  return m;
}

}  // namespace biq
