#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"

#include "support.hpp"

using namespace grouplab;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) { return fs::temp_directory_path() / ("grouplab_cli_" + name); }

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

// Runs the CLI binary with the given arguments; returns the exit status.
int run_cli(const std::string& args) {
  const std::string cmd = std::string(GROUPLAB_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

nlohmann::ordered_json read_json(const fs::path& p) {
  std::ifstream in(p);
  return nlohmann::ordered_json::parse(in);
}

}  // namespace

TEST_CASE("builtin catalog contents") {
  const auto& cat = support::catalog();
  for (const char* name : {"C2", "C7", "C12", "V4", "S3", "D8", "Q8", "D10", "D12", "A4", "S4", "A5", "S5", "F20",
                           "C7:C3", "SL(2,3)", "A4xC2", "S3xC3"}) {
    INFO(name);
    const CatalogEntry* e = find_entry(cat, name);
    REQUIRE(e != nullptr);
    REQUIRE(e->expected_order.has_value());
    CHECK(*e->expected_order == e->group.order());
  }
  CHECK(support::group("F20").order() == 20);
  const auto& q8 = support::group("Q8");
  CHECK(q8.order() == 8);
  CHECK(q8.degree() == 8);
  int involutions = 0;
  for (Elem x = 0; x < q8.order(); ++x) involutions += q8.element_order(x) == 2;
  CHECK(involutions == 1);
  CHECK(support::group("SL(2,3)").degree() == 8);
  CHECK(support::group("C7:C3").degree() == 7);
  CHECK(support::group("F20").degree() == 5);
}

TEST_CASE("group spec parsing") {
  const auto ok = nlohmann::json::parse(R"({"name": "S3", "degree": 3, "generators": [[1,2,0],[1,0,2]], "expected_order": 6})");
  const GroupSpec s = parse_group_spec(ok);
  CHECK(build_entry(s).group.order() == 6);

  CHECK_THROWS_AS(parse_group_spec(nlohmann::json::parse(R"({"name": "x", "degree": 3, "generators": [[0,0,1]]})")),
                  ParseError);
  CHECK_THROWS_AS(parse_group_spec(nlohmann::json::parse(R"({"name": "x", "degree": 3, "generators": [[0,1]]})")),
                  ParseError);
  CHECK_THROWS_AS(parse_group_spec(nlohmann::json::parse(R"({"name": "x", "degree": 0, "generators": []})")),
                  ParseError);
  CHECK_THROWS_AS(parse_group_spec(nlohmann::json::parse(R"({"name": "x", "degree": 2, "generators": [[-1,0]]})")),
                  ParseError);
  CHECK_THROWS_AS(parse_group_spec(nlohmann::json::parse(R"({"degree": 2, "generators": []})")), ParseError);
  CHECK_THROWS_AS(parse_group_spec(nlohmann::json::parse(R"({"name": "x", "degree": 2, "generators": [["a","b"]]})")),
                  ParseError);

  const auto wrong = nlohmann::json::parse(R"({"name": "S3", "degree": 3, "generators": [[1,2,0]], "expected_order": 6})");
  CHECK_THROWS_AS(build_entry(parse_group_spec(wrong)), OrderMismatch);
  const auto big = nlohmann::json::parse(R"({"name": "S5", "degree": 5, "generators": [[1,2,3,4,0],[1,0,2,3,4]]})");
  CHECK_THROWS_AS(build_entry(parse_group_spec(big), GroupLimits{100}), CapExceeded);
}

TEST_CASE("group specs round-trip through JSON") {
  for (const auto& e : support::catalog()) {
    INFO(e.name);
    const auto text = to_json(spec_of(e)).dump();
    const CatalogEntry back = build_entry(parse_group_spec(nlohmann::json::parse(text)));
    CHECK(back.name == e.name);
    CHECK(back.group.elements() == e.group.elements());
  }
}

TEST_CASE("catalog files and the environment override") {
  const auto path = scratch("catalog.json");
  write_file(path, R"({"groups": [{"name": "C5", "degree": 5, "generators": [[1,2,3,4,0]], "expected_order": 5}]})");
  const auto [entries, version] = load_catalog(path.string());
  REQUIRE(entries.size() == 1);
  CHECK(version == "file:" + path.string());

  ::setenv("GROUPLAB_CATALOG", path.string().c_str(), 1);
  CHECK(load_catalog(std::nullopt).first.size() == 1);
  ::unsetenv("GROUPLAB_CATALOG");
  CHECK(load_catalog(std::nullopt).second == kBuiltinCatalogVersion);

  CHECK_THROWS_AS(load_catalog_file(scratch("missing.json").string()), IoError);
  write_file(path, "{not json");
  CHECK_THROWS_AS(load_catalog_file(path.string()), ParseError);
  write_file(path, R"({"other": []})");
  CHECK_THROWS_AS(load_catalog_file(path.string()), ParseError);
  fs::remove(path);
}

TEST_CASE("verify exit code rule") {
  SuiteReport clean, violated, capped;
  clean.tallies.confirmed = 3;
  violated.tallies.violation = 1;
  capped.errors.push_back({{"group", "A5"}});
  CHECK(verify_exit_code({clean}) == 0);
  CHECK(verify_exit_code({clean, violated}) == 1);
  CHECK(verify_exit_code({capped}) == 3);
  CHECK(verify_exit_code({capped, violated}) == 1);
  CHECK(verify_exit_code({}) == 0);
}

TEST_CASE("cli: verify") {
  const auto out = scratch("intro.json");
  CHECK(run_cli("verify --suite example-intro --out " + out.string()) == 0);
  const auto j = read_json(out);
  REQUIRE(j.at("records").size() == 1);
  CHECK(j.at("records")[0].at("group") == "F20");
  CHECK(j.at("records")[0].at("status") == "confirmed");

  CHECK(run_cli("verify --suite prop-4.1 --max-order 60 --out " + out.string()) == 0);
  CHECK(read_json(out).at("config").at("max_order") == 60);

  CHECK(run_cli("verify --suite thm-b,thm-c --jobs 2 --out " + out.string()) == 0);
  CHECK(read_json(out).at("reports").size() == 2);

  CHECK(run_cli("verify --suite thm-a --formation U --out " + out.string()) == 0);
  CHECK(run_cli("verify --suite thm-a --formation X") == 2);
  CHECK(run_cli("verify --suite thm-z") == 2);
  CHECK(run_cli("verify") == 2);
  CHECK(run_cli("verify --suite thm-b --max-lattice-order 30 --out " + out.string()) == 3);
  CHECK(read_json(out).at("errors").size() > 0);
  CHECK(run_cli("--max-group-order 50 verify --suite thm-b") == 3);
  fs::remove(out);
}

TEST_CASE("cli: props") {
  const auto out = scratch("props.json");
  CHECK(run_cli("props --group S4 --subgroup all --properties pi-property --out " + out.string()) == 0);
  CHECK(read_json(out).at("rows").size() == 30);

  CHECK(run_cli("props --group F20 --subgroup '[[0,4,3,2,1]]' --properties pi-supplemented,c-supplemented,"
                "'has-supplement-in({2,5}-closed)' --out " +
                out.string()) == 0);
  const auto rows = read_json(out).at("rows");
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].at("holds") == true);
  CHECK(rows[1].at("holds") == false);

  CHECK(run_cli("props --group S4 --properties nonsense") == 2);
  CHECK(run_cli("props --group Nope --properties cap") == 2);
  CHECK(run_cli("props --group S4 --subgroup '[[0,0,1,2]]' --properties cap") == 2);
  CHECK(run_cli("props --group S4 --properties 'has-supplement-in(6-nilpotent)'") == 2);
  fs::remove(out);
}

TEST_CASE("cli: catalog, structure, distinguish") {
  CHECK(run_cli("catalog list") == 0);
  CHECK(run_cli("structure --group S4") == 0);
  CHECK(run_cli("structure --group A5 --max-lattice-order 10") == 3);

  const auto bad = scratch("bad.json");
  write_file(bad, R"([{"name": "x", "degree": 3, "generators": [[0,0,1]]}])");
  CHECK(run_cli("--catalog " + bad.string() + " catalog list") == 2);
  fs::remove(bad);

  const auto out = scratch("dist.json");
  CHECK(run_cli("distinguish --prop-a pi-supplemented --prop-b c-supplemented --out " + out.string()) == 0);
  bool f20 = false;
  const auto found = read_json(out);
  for (const auto& row : found.at("found")) f20 = f20 || row.at("group") == "F20";
  CHECK(f20);
  CHECK(run_cli("distinguish --prop-a pi-supplemented --prop-b has-supplement-in") == 2);
  fs::remove(out);
}
