#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

namespace fs = std::filesystem;
using hopfforge::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
  nlohmann::json error() const { return nlohmann::json::parse(err); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "hopfforge_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("build writes a verified instance file") {
  const std::string path = scratch("ex3_2.json").string();
  const Result r = call({"build", "--example", "ex3_2", "--n", "3", "--out", path});
  REQUIRE(r.code == 0);
  const auto j = r.json();
  CHECK(j.at("dim") == 12);
  CHECK(j.at("conductor") == 6);
  CHECK(j.at("verification").at("passed") == true);
  CHECK(j.at("antipode_order") == 2);
  const auto file = nlohmann::json::parse(std::ifstream(path));
  CHECK(file.at("format") == "hopfforge-instance");
  CHECK(file.at("report").at("dim") == 12);

  const Result d = call({"decompose", path});
  REQUIRE(d.code == 0);
  const auto dj = d.json();
  CHECK(dj.at("coalgebra") == nlohmann::json::parse(R"([{"mult":4,"r":1},{"mult":2,"r":2}])"));
  CHECK(dj.at("algebra") == nlohmann::json::parse(R"([{"mult":4,"n":1},{"mult":2,"n":2}])"));
  CHECK(dj.at("verification").at("passed") == true);

  const Result s = call({"subalgebras", path});
  REQUIRE(s.code == 0);
  CHECK(s.json().at("subalgebras").size() >= 5);
  const Result sn = call({"subalgebras", path, "--normal-only"});
  CHECK(sn.json().at("subalgebras").size() == 4);
}

TEST_CASE("ex3_5 builds with dimension 36") {
  const Result r = call({"build", "--example", "ex3_5"});
  REQUIRE(r.code == 0);
  CHECK(r.json().at("dim") == 36);
  const Result d = call({"decompose", "--example", "ex3_5", "--oracle-check", "off"});
  REQUIRE(d.code == 0);
  CHECK(d.json().at("coalgebra") == nlohmann::json::parse(R"([{"mult":9,"r":1},{"mult":3,"r":3}])"));
  CHECK(d.json().at("oracle_check") == false);
}

TEST_CASE("reports are byte-identical across runs") {
  const auto a = call({"decompose", "--example", "ex3_7"});
  const auto b = call({"decompose", "--example", "ex3_7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(call({"subalgebras", "--example", "ex3_7", "--format", "text"}).out ==
        call({"subalgebras", "--example", "ex3_7", "--format", "text"}).out);
}

TEST_CASE("custom spec with pi not commuting with theta") {
  const std::string path = scratch("bad_pi.json").string();
  std::ofstream(path) << R"({"calG": {"kind":"perm_gens","degree":3,"gens":[[1,0,2],[1,2,0]]},
    "theta": {"conjugation_by":[1,0,2]}, "mode":"general",
    "G": {"kind":"product","factors":[{"kind":"cyclic","n":2},{"kind":"cyclic","n":2}]},
    "pi": {"generators":[2,1], "images":["identity", {"conjugation_by":[0,2,1]}]},
    "embed": {"u": 2}})";
  const Result r = call({"build", "--custom", path});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.error().at("error").at("name") == "pi_commutes_with_theta");
}

TEST_CASE("io failures exit with code 3") {
  CHECK(call({"decompose", scratch("missing.json").string()}).code == 3);
  const std::string junk = scratch("junk.json").string();
  std::ofstream(junk) << "{not json";
  CHECK(call({"decompose", junk}).code == 3);

  const std::string good = scratch("tamper.json").string();
  REQUIRE(call({"build", "--example", "ex3_2", "--out", good}).code == 0);
  auto j = nlohmann::json::parse(std::ifstream(good));
  j["spec"]["calG"]["n"] = 5;
  std::ofstream(good) << j.dump();
  const Result r = call({"decompose", good});
  CHECK(r.code == 3);
  CHECK(r.error().at("error").at("kind") == "io");
}

TEST_CASE("usage and precondition failures exit with code 1") {
  CHECK(call({}).code == 1);
  CHECK(call({"build"}).code == 1);
  CHECK(call({"build", "--example", "nope"}).code == 1);
  CHECK(call({"build", "--example", "ex3_2", "--n", "4"}).code == 1);
  CHECK(call({"decompose", "--example", "ex3_2", "--oracle-check", "maybe"}).code == 1);
  CHECK(call({"build", "--example", "ex3_5", "--conductor", "2"}).error().at("error").at("name") == "conductor");
  CHECK(call({"rank2", "--group", "Q8"}).code == 1);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("rank2 reports") {
  const Result z2 = call({"rank2", "--group", "Z2", "--build"});
  REQUIRE(z2.code == 0);
  const auto j = z2.json();
  CHECK(j.at("witness_count") == 1);
  CHECK(j.at("witnesses")[0].at("biproduct").at("antipode_order") == 4);
  CHECK(j.at("witnesses")[0].at("biproduct").at("B_normalized_integral") == false);
  CHECK(j.at("trivial_solution").at("biproduct").at("antipode_order") == 1);
  CHECK(call({"rank2", "--group", "Z3"}).json().at("witness_count") == 0);
  CHECK(call({"rank2", "--group", "Z2xZ2"}).json().at("witness_count") == 6);
  CHECK(call({"rank2", "--group", R"({"kind":"cyclic","n":4})"}).json().at("witness_count") == 4);
}

TEST_CASE("order cap applies to the CLI") {
  ::setenv("HOPFFORGE_ORDER_CAP", "8", 1);
  const Result r = call({"subalgebras", "--example", "ex3_2"});
  ::unsetenv("HOPFFORGE_ORDER_CAP");
  CHECK(r.code == 1);
  CHECK(r.error().at("error").at("name") == "order_cap");
}

TEST_CASE("group shorthand") {
  using hopfforge::cli::parse_group_argument;
  CHECK(parse_group_argument("Z6") == nlohmann::json{{"kind", "cyclic"}, {"n", 6}});
  CHECK(parse_group_argument("Z2xZ3").at("factors").size() == 2);
}
