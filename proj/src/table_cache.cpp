#include "biq/table_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace biq {
namespace {

constexpr const char* kMagic = "# biq-table v1";
constexpr const char* kSeparator = "---";

std::unordered_map<std::string, std::string> parse_fields(const std::string& line) {
  std::unordered_map<std::string, std::string> fields;
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw std::runtime_error("table header: bad field '" + token + "'");
    fields[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return fields;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size() || s[0] == '-')
    throw std::runtime_error(std::string("table header: bad ") + what + " '" + s + "'");
  return v;
}

}  // namespace

void write_table(std::ostream& out, const CountTable& table) {
  out << kMagic << '\n'
      << "kind=" << to_string(table.kind()) << " p=" << table.base().p
      << " q=" << table.base().q << " n_max=" << table.n_max()
      << " producer=" << to_string(table.producer()) << '\n'
      << kSeparator << '\n';
  for (const auto& v : table.values()) out << v.get_str(10) << '\n';
}

CountTable read_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kMagic) throw std::runtime_error("table: missing magic line");
  if (!std::getline(in, line)) throw std::runtime_error("table: missing header");
  auto fields = parse_fields(line);
  for (const char* f : {"kind", "p", "q", "n_max", "producer"})
    if (!fields.contains(f)) throw std::runtime_error(std::string("table header: missing ") + f);
  const auto kind = parse_table_kind(fields["kind"]);
  const auto producer = parse_producer(fields["producer"]);
  if (!kind) throw std::runtime_error("table header: unknown kind " + fields["kind"]);
  if (!producer) throw std::runtime_error("table header: unknown producer " + fields["producer"]);
  const TableBase base{parse_u64(fields["p"], "p"), parse_u64(fields["q"], "q")};
  const std::uint64_t n_max = parse_u64(fields["n_max"], "n_max");
  if (!std::getline(in, line) || line != kSeparator) throw std::runtime_error("table: missing separator");

  std::vector<BigCount> values;
  values.reserve(n_max + 1);
  for (std::uint64_t i = 0; i <= n_max; ++i) {
    if (!std::getline(in, line)) throw std::runtime_error("table: truncated body");
    BigCount v;
    if (line.empty() || line[0] == '-' || v.set_str(line, 10) != 0)
      throw std::runtime_error("table: bad value at index " + std::to_string(i));
    values.push_back(std::move(v));
  }
  if (std::getline(in, line) && !line.empty()) throw std::runtime_error("table: trailing data");
  return CountTable(*kind, base, *producer, std::move(values));
}

TableKey key_of(const CountTable& table) {
  return {table.kind(), table.base(), table.n_max(), table.producer()};
}

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path TableCache::default_dir() {
  if (const char* env = std::getenv("BIQ_CACHE_DIR"); env && *env) return env;
  return ".biq-cache";
}

std::filesystem::path TableCache::path_for(const TableKey& key) const {
  std::ostringstream name;
  name << to_string(key.kind) << "_p" << key.base.p << "_q" << key.base.q << "_n" << key.n_max
       << "_" << to_string(key.producer) << ".txt";
  return dir_ / name.str();
}

std::optional<CountTable> TableCache::load(const TableKey& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    CountTable table = read_table(in);
    if (key_of(table) != key) return std::nullopt;
    return table;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void TableCache::store(const CountTable& table) const {
  std::filesystem::create_directories(dir_);
  const auto path = path_for(key_of(table));
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    write_table(out, table);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace biq
