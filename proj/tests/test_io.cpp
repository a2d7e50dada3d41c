#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "biq/recurrence.hpp"
#include "biq/report_io.hpp"
#include "biq/table_cache.hpp"

namespace fs = std::filesystem;

namespace {
fs::path scratch_dir(const char* tag) {
  auto dir = fs::temp_directory_path() / (std::string("biq-test-") + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}
}  // namespace

TEST_CASE("table text format") {
  const auto t = biq::tabulate_f2q(3, 3);
  std::ostringstream out;
  biq::write_table(out, t);
  CHECK(out.str() ==
        "# biq-table v1\nkind=f_pq p=2 q=3 n_max=3 producer=recurrence\n---\n1\n1\n1\n2\n");
}

TEST_CASE("round trip of random tables") {
  std::mt19937_64 rng(3);
  const biq::TableKind kinds[] = {biq::TableKind::f_pq, biq::TableKind::b_m,
                                  biq::TableKind::g_seq, biq::TableKind::d_pq};
  for (int trial = 0; trial < 50; ++trial) {
    const auto kind = kinds[rng() % 4];
    std::vector<mpz_class> vals(1 + rng() % 200);
    for (auto& v : vals) {
      v = static_cast<unsigned long>(rng());
      v *= static_cast<unsigned long>(rng());
    }
    if (kind == biq::TableKind::f_pq || kind == biq::TableKind::b_m) vals[0] = 1;
    const biq::TableBase base{kind == biq::TableKind::b_m ? 0u : 2u, 3 + 2 * (rng() % 10)};
    const biq::CountTable t(kind, base, rng() & 1 ? biq::Producer::oracle_dp
                                                  : biq::Producer::recurrence,
                            vals);
    std::stringstream io;
    biq::write_table(io, t);
    CHECK(biq::read_table(io) == t);
  }
}

TEST_CASE("malformed tables are rejected") {
  for (const char* text :
       {"", "# biq-table v2\nkind=f_pq p=2 q=3 n_max=1 producer=recurrence\n---\n1\n1\n",
        "# biq-table v1\nkind=zzz p=2 q=3 n_max=1 producer=recurrence\n---\n1\n1\n",
        "# biq-table v1\nkind=f_pq p=2 q=3 n_max=2 producer=recurrence\n---\n1\n1\n",
        "# biq-table v1\nkind=f_pq p=2 q=3 n_max=1 producer=recurrence\n---\n1\nx1\n",
        "# biq-table v1\nkind=f_pq p=2 q=3 n_max=1 producer=recurrence\n---\n1\n-1\n",
        "# biq-table v1\nkind=f_pq p=2 q=3 n_max=1 producer=recurrence\n1\n1\n"}) {
    std::istringstream in(text);
    CHECK_THROWS_AS(biq::read_table(in), std::runtime_error);
  }
}

TEST_CASE("cache hit, miss and mismatch") {
  const auto dir = scratch_dir("cache");
  const biq::TableCache cache(dir);
  const auto t = biq::tabulate_f2q(5, 500);
  const auto key = biq::key_of(t);
  CHECK_FALSE(cache.load(key));
  cache.store(t);
  CHECK(fs::exists(cache.path_for(key)));
  CHECK(cache.path_for(key).filename() == "f_pq_p2_q5_n500_recurrence.txt");
  const auto hit = cache.load(key);
  REQUIRE(hit);
  CHECK(*hit == t);
  // a file whose header disagrees with its name is a miss
  auto other = key;
  other.n_max = 400;
  fs::copy_file(cache.path_for(key), cache.path_for(other));
  CHECK_FALSE(cache.load(other));
  std::ofstream(cache.path_for(key)) << "garbage\n";
  CHECK_FALSE(cache.load(key));
  fs::remove_all(dir);
}

TEST_CASE("csv and number formatting") {
  CHECK(biq::format_real(0.1) == "0.1");
  CHECK(biq::format_real(1.0 / 3) == "0.333333333333333");
  CHECK(biq::format_real(std::optional<double>{}) == "");
  biq::CsvDocument csv;
  csv.header = {"n", "value"};
  csv.add_row({"1", "2"});
  CHECK(csv.str() == "n,value\n1,2\n");
  CHECK_THROWS(csv.add_row({"1"}));
}

TEST_CASE("manifest round trip") {
  biq::RunManifest m;
  m.argv = {"biq", "experiment", "parity"};
  m.parameters = {{"q", 3}, {"x", 1000}};
  m.seed = 9;
  m.tool_version = "0.1.0";
  m.wall_seconds = 1.5;
  m.outputs = {"parity.csv"};
  const auto back = biq::manifest_from_json(biq::to_json(m));
  CHECK(back.argv == m.argv);
  CHECK(back.parameters == m.parameters);
  CHECK(back.seed == m.seed);
  CHECK(back.outputs == m.outputs);
  CHECK(biq::to_json(back) == biq::to_json(m));
}
