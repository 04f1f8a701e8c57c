#include "doctest.h"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell; `env` is prepended verbatim (e.g. "FOO=1").
Run cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" SEAWEED_CLI_PATH "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("seaweed_cli_" + name);
}

}  // namespace

TEST_CASE("index of a seaweed") {
  const Run r = cli("index --family GL \"2,1|3\"");
  REQUIRE(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["index"] == 1);
  CHECK(cli("index --family GL --top 2,1 --bot 3 --format text").status == 0);
}

TEST_CASE("contact certificate written and verified") {
  const auto path = scratch("contact.json");
  REQUIRE(cli("contact --family GL \"2,1|3\" --out " + path.string()).status == 0);
  const Run ok = cli("verify " + path.string());
  CHECK(ok.status == 0);
  CHECK(ok.out.find("OK: contact") != std::string::npos);

  // Double the Reeb vector.
  nlohmann::ordered_json doc;
  std::ifstream(path) >> doc;
  for (auto& x : doc["reeb"]) {
    std::string s = x.get<std::string>();
    const auto slash = s.find('/');
    x = std::to_string(2 * std::stol(s.substr(0, slash))) + s.substr(slash);
  }
  std::ofstream(path) << doc.dump(2);
  const Run bad = cli("verify " + path.string());
  CHECK(bad.status == 1);
  CHECK(bad.out.find("FAILED") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("stability certificate and contact basis") {
  const auto path = scratch("stable.json");
  REQUIRE(cli("stable --family SL \"2|2\" --out " + path.string()).status == 0);
  CHECK(cli("verify " + path.string()).status == 0);
  std::filesystem::remove(path);
  const Run basis = cli("basis --family GL \"2,1|3\"");
  CHECK(basis.status == 0);
  CHECK(nlohmann::json::parse(basis.out)["basis"].contains("elements"));
}

TEST_CASE("not found exit code") {
  // Odd-dimensional abelian algebra: no contact form exists.
  const auto alg = scratch("abelian.json");
  std::ofstream(alg) << R"json({"dim": 3, "structure": [], "label": "abelian(3)"})json";
  CHECK(cli("contact --algebra " + alg.string() + " --attempts 4").status == 4);
  // gl(2) has even dimension.
  CHECK(cli("contact --family GL \"2|2\"").status == 1);
  std::filesystem::remove(alg);
}

TEST_CASE("classify output, environment and flag precedence") {
  const Run a = cli("classify --family GL --n 3 --seed 5");
  REQUIRE(a.status == 0);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["summary"]["total"] == 16);
  CHECK(doc["records"][3]["seed"] == (5 ^ 3));

  const Run env = cli("classify --family GL --n 3", "SEAWEED_SEED=5");
  CHECK(env.out == a.out);
  const Run flag_wins = cli("classify --family GL --n 3 --seed 5", "SEAWEED_SEED=77");
  CHECK(flag_wins.out == a.out);
  const Run env_family = cli("classify --n 2", "SEAWEED_FAMILY=SL");
  CHECK(nlohmann::json::parse(env_family.out)["records"][0]["family"] == "SL");

  const Run csv = cli("classify --family SL --n 3 --format csv");
  CHECK(csv.status == 0);
  CHECK(csv.out.rfind("family,n,top", 0) == 0);
  CHECK(cli("classify --family SL --n 3 --strict").status == 0);
}

TEST_CASE("input errors") {
  CHECK(cli("classify --family GL --n 8").status == 1);
  CHECK(cli("classify --family E8 --n 3").status == 1);
  CHECK(cli("index --family GL \"2|3\"").status == 1);
  CHECK(cli("verify /nonexistent.json").status == 1);
  CHECK(cli("").status != 0);
}

TEST_CASE("meander") {
  const auto svg = scratch("m.svg");
  const Run r = cli("meander \"2,2|4\" --svg " + svg.string());
  CHECK(r.status == 0);
  CHECK(r.out.find("1 cycles") != std::string::npos);
  std::ifstream in(svg);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(body.str().find("<svg") != std::string::npos);
  std::filesystem::remove(svg);
}
