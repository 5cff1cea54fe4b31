#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "nilary/cli.hpp"

using namespace nilary;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify") {
  const auto text = run({"classify", "Zn:6"});
  CHECK(text.code == kExitOk);
  CHECK(text.out.find("{0,3}") != std::string::npos);

  const auto r = run({"classify", "Zn:6", "--json"});
  REQUIRE(r.code == kExitOk);
  const auto j = json::parse(r.out);
  REQUIRE(j.size() == 4);
  CHECK(j[0]["ideal"] == json::array({0}));
  CHECK(j[0]["verdicts"]["weakly_nilary"]["holds"] == true);
  CHECK(j[0]["verdicts"]["nilary"]["holds"] == false);
  CHECK(j[0]["verdicts"]["nilary"]["witness"]["type"] == "ideal-pair");

  const auto m = json::parse(run({"classify", "M:2:Zn:2", "--ideal", "--json"}).out);
  REQUIRE(m.is_array());
  REQUIRE(m.size() == 1);
  CHECK(m[0]["verdicts"]["completely_nilary"]["holds"] == false);
  CHECK(m[0]["verdicts"]["completely_nilary"]["witness"]["a"] == 1);
  CHECK(m[0]["verdicts"]["completely_nilary"]["witness"]["b"] == 8);

  const auto q = json::parse(run({"classify", "Zn:12", "--ideal", "4", "--json"}).out);
  CHECK(q[0]["ideal"] == json::array({0, 4, 8}));
}

TEST_CASE("ideals") {
  CHECK(json::parse(run({"ideals", "Zn:12", "--json"}).out)["count"] == 6);
  CHECK(json::parse(run({"ideals", "M:2:Zn:2", "--json"}).out)["count"] == 2);
  CHECK(json::parse(run({"ideals", "Zn:7", "--json"}).out)["count"] == 2);
  CHECK(json::parse(run({"ideals", "M:2:Zn:2", "--kind", "right", "--json"}).out)["count"] == 5);
  CHECK(run({"ideals", "Zn:12", "--oracle"}).code == kExitOk);
  CHECK(run({"ideals", "Zn:12", "--kind", "sideways"}).code == kExitUsage);
}

TEST_CASE("verify") {
  const auto one = run({"verify", "--builtin", "--case", "E2.2", "--json"});
  CHECK(one.code == kExitOk);
  const auto j = json::parse(one.out);
  CHECK(j["cases"].size() == 1);
  CHECK(j["pass"] == true);
  CHECK(j["corpus"]["rings"].size() >= 50);

  CHECK(run({"verify", "--builtin"}).code == kExitOk);
  CHECK(run({"verify", "--builtin", "--case", "nope"}).code == kExitUsage);
  CHECK(run({"verify"}).code == kExitUsage);

  const auto bad = std::filesystem::temp_directory_path() / "nilary_cli_bad.json";
  {
    std::ofstream f(bad);
    f << R"(["Zn:6", "Zn:"])";
  }
  const auto r = run({"verify", "--corpus", bad.string()});
  CHECK(r.code == kExitUsage);
  CHECK_FALSE(r.err.empty());
  std::filesystem::remove(bad);
}

TEST_CASE("hunt") {
  const auto hit = run({"hunt", "--builtin", "weakly_nilary and not nilary", "--json"});
  CHECK(hit.code == kExitOk);
  bool saw = false;
  const auto parsed = json::parse(hit.out);
  for (const auto& m : parsed["matches"])
    if (m["ring"] == "Zn:6" && m["ideal"] == json::array({0})) saw = true;
  CHECK(saw);

  CHECK(run({"hunt", "--builtin", "prime and not completely_nilary"}).code == kExitOk);
  CHECK(run({"hunt", "--builtin", "completely_prime and not prime"}).code == kExitFailed);
  CHECK(run({"hunt", "--builtin", "completely_prime and not prime", "--target", "any"}).code == kExitFailed);
  CHECK(run({"hunt", "--builtin", "prime and and"}).code == kExitUsage);
}

TEST_CASE("errors and caps") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
  const auto e = run({"classify", "Zq:3"});
  CHECK(e.code == kExitUsage);
  CHECK(e.err.find("error") != std::string::npos);
  CHECK(run({"classify", "Zn:50", "--max-order", "20"}).code == kExitUsage);

  ::setenv("NILARY_MAX_ORDER", "20", 1);
  CHECK(run({"classify", "Zn:50"}).code == kExitUsage);
  CHECK(run({"classify", "Zn:50", "--max-order", "60"}).code == kExitOk);
  ::unsetenv("NILARY_MAX_ORDER");
  CHECK(run({"classify", "Zn:50"}).code == kExitOk);
}

TEST_CASE("corpus listing") {
  const auto r = run({"corpus", "--builtin", "--json"});
  CHECK(r.code == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j.dump().find("M:2:Zn:2") != std::string::npos);
}
