#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "ksalg/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ksalg");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  int code = ksalg::run_cli(static_cast<int>(argv.size()), argv.data(), o, e);
  return {code, o.str(), e.str()};
}

}  // namespace

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "-n", "1", "-k", "1", "-S", "1", "--cap", "2", "--json"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == "ks-alg/1");
  std::set<std::pair<std::string, std::string>> pairs;
  for (auto& p : j["pieces"]) pairs.insert({p["x"].get<std::string>(), p["y"].get<std::string>()});
  CHECK(pairs.size() == 4);

  auto z = json::parse(run({"enumerate", "-n", "2", "-k", "0", "--json"}).out);
  for (auto& p : z["pieces"]) {
    CHECK(p["x"] == "{}");
    CHECK(p["y"] == "{}");
  }
  CHECK(z["pieces"].size() == 1);
  CHECK(z["total"] == 1);

  auto bp = json::parse(run({"enumerate", "-n", "2", "-k", "1", "--flavor", "bprime", "--json"}).out);
  for (auto& p : bp["pieces"]) {
    CHECK(p["x"] == "{1}");
    CHECK(p["y"] == "{1}");
  }
}

TEST_CASE("multiply and diff") {
  auto r = run({"multiply", "-n", "1", "-k", "1", "f[{0},{1}]", "f[{1},{0}]"});
  CHECK(r.code == 0);
  CHECK(r.out == "U1^1*f[{0},{0}]\n");
  auto z = run({"multiply", "-n", "1", "-k", "1", "f[{0},{1}]", "f[{0},{1}]"});
  CHECK(z.code == 0);
  CHECK(z.out == "0\n");
  auto d = run({"diff", "-n", "1", "-k", "1", "-S", "1", "C1*f[{0},{0}]"});
  CHECK(d.code == 0);
  CHECK(d.out == "U1^1*f[{0},{0}]\n");
  auto bad = run({"multiply", "-n", "1", "-k", "1", "f[{0},{1}", "f[{1},{0}]"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("bad configuration") {
  CHECK(run({"verify", "-n", "2", "-k", "1", "-S", "3"}).code == 2);
  CHECK(run({"verify", "-n", "2", "-k", "5"}).code == 2);
  CHECK(run({"verify", "-n", "0"}).code == 2);
  CHECK(run({"enumerate", "-n", "2", "--flavor", "zz"}).code == 2);
  CHECK(run({"enumerate", "-k", "1"}).code == 2);
  CHECK(run({"nosuch"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify and formality") {
  auto v = run({"verify", "-n", "1", "-k", "1"});
  CHECK(v.code == 0);
  auto f = run({"formality", "-n", "2", "-k", "1", "-S", "1", "--json"});
  REQUIRE(f.code == 0);
  auto j = json::parse(f.out);
  CHECK(j["schema"] == "ks-alg/1");
  auto vj = json::parse(run({"verify", "-n", "2", "-k", "1", "-S", "1", "--json"}).out);
  CHECK(vj["schema"] == "ks-alg/1");
}

TEST_CASE("homology and massey") {
  auto h = run({"homology", "-n", "2", "-k", "1", "-S", "1,2", "--cap", "4"});
  CHECK(h.code == 0);
  auto m = run({"massey", "-n", "2", "-k", "1", "-S", "1", "f[{1},{0}]", "f[{0},{1}]", "f[{1},{2}]"});
  CHECK(m.code == 0);
  CHECK(m.out.find("C1*f[{1},{2}]") != std::string::npos);
  auto dot = run({"export-dot", "-n", "2", "-k", "1"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);
}

TEST_CASE("deterministic output") {
  std::vector<std::vector<std::string>> cmds = {
      {"enumerate", "-n", "2", "-k", "1", "-S", "1", "--json"},
      {"formality", "-n", "2", "--all-k", "--all-S", "--json"},
      {"homology", "-n", "2", "-k", "1", "-S", "2", "--json"},
  };
  for (auto& c : cmds) {
    auto a = run(c), b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
