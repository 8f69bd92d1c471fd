#include "alopc/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "alopc/errors.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace alopc;
using testing::all_groups;
using testing::example_4x4;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name)
      : path(std::filesystem::temp_directory_path() / name) {}
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("entry tokens") {
  CHECK(parse_entry_token("5/2") == 2.5);
  CHECK(parse_entry_token("0.5") == 0.5);
  CHECK(parse_entry_token(" 3 / 4 ") == 0.75);
  CHECK(parse_entry_token("-2") == -2.0);
  CHECK_THROWS_AS(parse_entry_token("abc"), ParseError);
  CHECK_THROWS_AS(parse_entry_token("1/0"), ParseError);
  CHECK_THROWS_AS(parse_entry_token(""), ParseError);
  CHECK_THROWS_AS(parse_entry_token("1/2/3"), ParseError);
}

TEST_CASE("format_double round-trips exactly") {
  Rng rng(71);
  for (int trial = 0; trial < 1000; ++trial) {
    const double x = rng.uniform(-1e3, 1e3) * std::pow(10.0, rng.uniform_int(-9, 9));
    CHECK(parse_entry_token(format_double(x)) == x);
  }
}

TEST_CASE("json matrices with fractions") {
  const PcMatrix m = parse_json_matrix(R"({
    "group": "multiplicative",
    "labels": ["cost", "speed", "care", "size"],
    "entries": [["1", "5/2", "3", "5"],
                ["2/5", "1", "2", "4"],
                ["1/3", "1/2", "1", "3"],
                ["1/5", "1/4", "1/3", "1"]]
  })");
  CHECK(m.size() == 4);
  CHECK(m.at(0, 1) == 2.5);
  CHECK(m.at(3, 2) == doctest::Approx(1.0 / 3.0));
  CHECK(m.labels()[0] == "cost");

  const PcMatrix bare = parse_json_matrix(
      R"({"group": "additive", "entries": [[0, 2], [-2, 0]]})");
  CHECK(bare.labels() == std::vector<std::string>{"a1", "a2"});
}

TEST_CASE("json rejections") {
  CHECK_THROWS_AS(parse_json_matrix("{"), ParseError);
  CHECK_THROWS_AS(parse_json_matrix("[1, 2]"), ParseError);
  CHECK_THROWS_AS(parse_json_matrix(R"({"entries": [[1]]})"), ParseError);
  CHECK_THROWS_AS(parse_json_matrix(R"({"group": "nope", "entries": [[1]]})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_json_matrix(R"({"group": "additive", "entries": [[true, 1], [1, 0]]})"),
      ParseError);
  // Structurally bad matrices surface the underlying validation error.
  CHECK_THROWS_AS(
      parse_json_matrix(R"({"group": "multiplicative", "entries": [[1, 2], [3, 1]]})"),
      ValidationError);
}

TEST_CASE("csv matrices") {
  const PcMatrix m = parse_csv_matrix(
      "group,multiplicative\n1,5/2,3,5\n2/5,1,2,4\n1/3,1/2,1,3\n1/5,1/4,1/3,1\n");
  CHECK(m.size() == 4);
  CHECK(m.at(0, 3) == 5.0);

  CHECK_THROWS_WITH_AS(parse_csv_matrix("group\n1,1\n"),
                       doctest::Contains("line 1"), ParseError);
  CHECK_THROWS_AS(parse_csv_matrix(""), ParseError);
  CHECK_THROWS_AS(parse_csv_matrix("group,multiplicative\n1,2\n0.5\n"),
                  ValidationError);  // ragged rows are not square
  CHECK_THROWS_WITH_AS(parse_csv_matrix("group,multiplicative\n1,x\n0.5,1\n"),
                       doctest::Contains("line 2"), ParseError);
}

TEST_CASE("serialization round-trips entries exactly") {
  for (const AloGroup* g : all_groups()) {
    CAPTURE(g->name());
    Rng rng(72);
    for (int trial = 0; trial < 25; ++trial) {
      const int n = rng.uniform_int(2, 6);
      // Perturbed matrices carry irrational entries from the n-th roots.
      const PcMatrix m = random_perturbed_matrix(*g, n, g->from_param(1.0), rng);

      const PcMatrix via_json = parse_json_matrix(to_json(m));
      const PcMatrix via_csv = parse_csv_matrix(to_csv(m));
      const PcMatrix via_both = parse_json_matrix(to_json(via_csv));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          REQUIRE(via_json.at(i, j) == m.at(i, j));
          REQUIRE(via_csv.at(i, j) == m.at(i, j));
          REQUIRE(via_both.at(i, j) == m.at(i, j));
        }
      }
      REQUIRE(via_json.labels() == m.labels());
    }
  }
}

TEST_CASE("file dispatch by extension") {
  const PcMatrix m = example_4x4();

  TempFile json_file("alopc_io_test.json");
  save_matrix(m, json_file.path);
  const PcMatrix from_json = load_matrix(json_file.path);
  CHECK(from_json.at(0, 1) == m.at(0, 1));

  TempFile csv_file("alopc_io_test.csv");
  save_matrix(m, csv_file.path);
  const PcMatrix from_csv = load_matrix(csv_file.path);
  CHECK(from_csv.at(2, 3) == m.at(2, 3));

  CHECK_THROWS_AS(load_matrix("/nonexistent/missing.json"), ParseError);
  TempFile odd("alopc_io_test.yaml");
  { std::ofstream(odd.path) << "group: x\n"; }
  CHECK_THROWS_AS(load_matrix(odd.path), ParseError);
}

TEST_SUITE_END();
