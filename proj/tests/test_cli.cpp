#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ROOTZETA_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  Run r;
  char buf[4096];
  while (std::size_t k = fread(buf, 1, sizeof buf, p)) r.out.append(buf, k);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("verify G2 as json") {
  const auto r = run("verify --family G --rank 2 --format json");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["weightings"].size() == 4);
  CHECK(j["theorem_holds"] == true);
  int distinguished = 0;
  for (const auto& w : j["weightings"]) distinguished += w["distinguished"].get<bool>();
  CHECK(distinguished == 2);
}

TEST_CASE("classify B5") {
  const auto r = run("classify --family B --rank 5 --format json");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["weightings"].size() == 32);
  CHECK(j["distinguished"] == 2);
  CHECK(j["agree"] == true);
  for (const auto& w : j["weightings"]) CHECK(w["distinguished"] == w["bala_carter"]);
}

TEST_CASE("counterexamples A2") {
  const auto r = run("counterexamples --family A --rank 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("rho=20 word=\"\" gamma=2 zeta=[2,-1]\n") != std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
}

TEST_CASE("single weighting and output file") {
  const auto path = std::filesystem::temp_directory_path() / "rootzeta-test-cli-out.csv";
  std::filesystem::remove(path);
  const auto r = run("verify --family B --rank 2 --rho 20 --format csv --out " + path.string());
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str().find("B,2,20,false,false,counterexample,1,1,\"[0,1]\"") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("other verbs") {
  CHECK(run("crosscheck --family A --rank 3").status == 0);
  CHECK(run("reduction-check --family B --rank 3").status == 0);
  CHECK(run("verify --family C --rank 3 --mode both --jobs 2").status == 0);
  CHECK(run("verify --family D --rank 4 --extended").status == 0);
}

TEST_CASE("jobs give identical reports apart from timing") {
  auto strip = [](const std::string& s) {
    auto j = nlohmann::json::parse(s);
    for (auto& w : j["weightings"]) w.erase("wall_ms");
    j["totals"].erase("wall_ms");
    return j.dump();
  };
  const auto a = run("verify --family F --rank 4 --format json --jobs 1");
  const auto b = run("verify --family F --rank 4 --format json --jobs 8");
  CHECK(a.status == 0);
  CHECK(strip(a.out) == strip(b.out));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").status == 2);
  CHECK(run("verify --family A").status == 2);
  CHECK(run("verify --family Q --rank 2").status == 2);
  CHECK(run("verify --family A --rank 2 --bogus").status == 2);
  CHECK(run("verify --family A --rank 2 --rho 222").status == 2);
  CHECK(run("verify --family A --rank 2 --rho 21").status == 2);
  CHECK(run("verify --family A --rank 2 --jobs 0").status == 2);
  CHECK(run("verify --family G --rank 3").status == 2);
  CHECK(run("verify --family G --rank 2 --mode closedform").status == 2);
  CHECK(run("verify --family A --rank 3 --extended").status == 2);
  CHECK(run("crosscheck --family E --rank 6").status == 2);
  CHECK(run("verify --family E --rank 7").status == 2);
  CHECK(run("verify --family E --rank 8 --rho 22222222").status == 2);
}

TEST_CASE("help exits with 0") { CHECK(run("--help").status == 0); }
