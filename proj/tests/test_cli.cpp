#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "permlab/cli.hpp"

using namespace permlab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("permlab_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

} // namespace

TEST_CASE("parse check command", "[cli]") {
  CommandPlan plan = parse_args(
      {"check", "--suite", "thm1_1", "--corpus", "builtin", "--out", "r.json"});
  CHECK(plan.command == "check");
  CHECK(plan.suites == std::vector<std::string>{"thm1_1"});
  CHECK(plan.corpus == "builtin");
  CHECK(plan.out == "r.json");
  CHECK(plan.cap == kDefaultCap);
  CHECK(plan.threads == 1);
}

TEST_CASE("parse inspect command", "[cli]") {
  CommandPlan plan = parse_args({"inspect", "--group", "GL(2,3)"});
  CHECK(plan.command == "inspect");
  CHECK(plan.group == "GL(2,3)");
}

TEST_CASE("usage errors", "[cli]") {
  CHECK_THROWS_AS(parse_args({"check", "--suite", "nope"}), UsageError);
  CHECK_THROWS_AS(parse_args({"frobnicate"}), UsageError);
  CHECK_THROWS_AS(parse_args({"inspect"}), UsageError); // --group required
  CHECK_THROWS_AS(parse_args({"explore", "--suite", "thm1_1"}), UsageError);
  CHECK_THROWS_AS(parse_args({"check", "--threads", "0"}), UsageError);
}

TEST_CASE("check defaults to every assertion suite", "[cli]") {
  CommandPlan plan = parse_args({"check"});
  std::vector<std::string> expected;
  for (const auto& s : suite_registry()) {
    if (s.assertion) expected.push_back(s.id);
  }
  CHECK(plan.suites == expected);
}

TEST_CASE("help is reported as its own command", "[cli]") {
  CommandPlan plan = parse_args({"--help"});
  CHECK(plan.command == "help");
  CHECK_FALSE(plan.help_text.empty());
  CHECK(execute_plan(plan) == 0);
}

TEST_CASE("emit_report writes stable json", "[cli]") {
  TempDir tmp;
  std::string path = tmp.file("empty.json");
  emit_report({}, path);
  CHECK(slurp(path) == "[]\n");

  CheckReport r = search_three_class_products(make_named_group("Q8"));
  r.group_name = "Q8";
  CheckReport r2 = check_equal_order(make_named_group("S4"));
  r2.group_name = "S4";
  std::string two = tmp.file("two.json");
  emit_report({r, r2}, two);
  auto arr = nlohmann::json::parse(slurp(two));
  REQUIRE(arr.size() == 2);
  CHECK(arr[0].at("suite") == "thm1_3");
  CHECK(arr[1].at("suite") == "cor1_6");
  CheckReport back = report_from_json(arr[0]);
  CHECK(back.witnesses == r.witnesses);
}

TEST_CASE("group selector resolves products and spec files", "[cli]") {
  auto [name, G] = permlab::detail::resolve_group("S4xA5", kDefaultCap);
  CHECK(name == "S4xA5");
  CHECK(G.order() == 1440);

  TempDir tmp;
  std::string spec = tmp.file("group.json");
  {
    std::ofstream out(spec);
    out << R"({"name": "V", "degree": 4, "generators": [[[1,2]], [[3,4]]]})";
  }
  auto [name2, H] = permlab::detail::resolve_group(spec, kDefaultCap);
  CHECK(name2 == "V");
  CHECK(H.order() == 4);

  CHECK_THROWS_AS(permlab::detail::resolve_group("NOPE", kDefaultCap),
                  UnknownGroupError);
}

TEST_CASE("check executes a custom corpus deterministically", "[cli]") {
  TempDir tmp;
  std::string manifest = tmp.file("corpus.json");
  {
    std::ofstream out(manifest);
    out << R"([
      {"name":"S3","expected_order":6,"construction":{"builtin":"S3"}},
      {"name":"Q8","expected_order":8,"construction":{"builtin":"Q8"}},
      {"name":"C3:Q8","expected_order":24,"construction":{"builtin":"C3:Q8"}}
    ])";
  }
  CommandPlan plan = parse_args({"check", "--corpus", manifest, "--suite",
                                 "thm1_3", "--suite", "cor1_6", "--out",
                                 tmp.file("r1.json")});
  CHECK(execute_plan(plan) == 0);
  plan.out = tmp.file("r2.json");
  CHECK(execute_plan(plan) == 0);
  auto a = nlohmann::json::parse(slurp(tmp.file("r1.json")));
  auto b = nlohmann::json::parse(slurp(tmp.file("r2.json")));
  for (auto& j : a) j["elapsed_ms"] = 0;
  for (auto& j : b) j["elapsed_ms"] = 0;
  CHECK(a == b);
  REQUIRE(a.size() == 6);
  CHECK(a[0].at("suite") == "thm1_3");
  CHECK(a[0].at("group_name") == "S3");
}

TEST_CASE("cap breaches name the corpus entry", "[cli]") {
  TempDir tmp;
  std::string manifest = tmp.file("corpus.json");
  {
    std::ofstream out(manifest);
    out << R"([{"name":"S5","expected_order":120,"construction":{"builtin":"S5"}}])";
  }
  CommandPlan plan =
      parse_args({"check", "--corpus", manifest, "--suite", "thm1_3",
                  "--cap", "10"});
  try {
    execute_plan(plan);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("S5") != std::string::npos);
  }
}

TEST_CASE("inspect command exports the structural summary", "[cli]") {
  TempDir tmp;
  CommandPlan plan = parse_args(
      {"inspect", "--group", "GL(2,3)", "--out", tmp.file("g.json")});
  CHECK(execute_plan(plan) == 0);
  auto j = nlohmann::json::parse(slurp(tmp.file("g.json")));
  CHECK(j.at("order") == 48);
  CHECK(j.at("degree") == 8);
  CHECK(j.at("num_classes") == 8);
  CHECK(j.at("center_order") == 2);
  CHECK(j.at("derived_order") == 24);
  CHECK(j.at("fitting_order") == 8);
  CHECK(j.at("radical_order") == 48);
  CHECK(j.at("solvable") == true);
  CHECK(j.at("nilpotent") == false);
  CHECK(j.at("simple") == false);
  CHECK(j.at("p_cores").at("O_2") == 8);
  CHECK(j.at("p_cores").at("O_3") == 1);
}

TEST_CASE("chartab command exports the exact table", "[cli]") {
  TempDir tmp;
  CommandPlan plan =
      parse_args({"chartab", "--group", "S3", "--out", tmp.file("t.json")});
  CHECK(execute_plan(plan) == 0);
  auto j = nlohmann::json::parse(slurp(tmp.file("t.json")));
  CHECK(j.at("group_order") == 6);
  CHECK(j.at("conductor") == 6);
  CHECK(j.at("class_sizes") == nlohmann::json::parse("[1,2,3]"));
  CHECK(j.at("degrees") == nlohmann::json::parse("[1,1,2]"));
  REQUIRE(j.at("values").size() == 3);
  REQUIRE(j.at("class_representatives").size() == 3);
  // coefficient vectors of exact integers, phi(6) = 2 entries each
  for (const auto& row : j.at("values")) {
    for (const auto& v : row) CHECK(v.size() == 2);
  }
}

TEST_CASE("remarks command exits cleanly", "[cli]") {
  TempDir tmp;
  CommandPlan plan = parse_args({"remarks", "--out", tmp.file("remarks.json")});
  CHECK(execute_plan(plan) == 0);
  auto arr = nlohmann::json::parse(slurp(tmp.file("remarks.json")));
  REQUIRE(arr.size() == 1);
  CHECK(arr[0].at("suite") == "remarks");
  CHECK(arr[0].at("violations").empty());
  CHECK(arr[0].at("witnesses").size() == 2);
}

TEST_CASE("explore command never fails the exit code", "[cli]") {
  TempDir tmp;
  std::string manifest = tmp.file("corpus.json");
  {
    std::ofstream out(manifest);
    out << R"json([{"name":"GL(2,3)","expected_order":48,"construction":{"builtin":"GL(2,3)"}}])json";
  }
  CommandPlan plan = parse_args(
      {"explore", "--corpus", manifest, "--out", tmp.file("e.json")});
  CHECK(plan.suites == std::vector<std::string>{"question5_1"});
  CHECK(execute_plan(plan) == 0);
  auto arr = nlohmann::json::parse(slurp(tmp.file("e.json")));
  CHECK(arr.size() == 1);
  CHECK(arr[0].at("suite") == "question5_1");
}
