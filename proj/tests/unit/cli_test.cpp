#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsmon/cli/cli.hpp"
#include "gsmon/core/checks.hpp"
#include "gsmon/core/presentation.hpp"

using namespace gsmon;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(GSMON_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("check commands exit 0 on pass and 1 with a witness on failure") {
  auto gs = cli({"check", "gs", "--model", "finrel", "--sizes", "1,2,4"});
  CHECK(gs.code == 0);
  CHECK(gs.out.find("verdict: pass") != std::string::npos);

  auto rev = cli({"check", "oplax", "--model", "finrel", "--order", "reversed"});
  CHECK(rev.code == 1);
  CHECK(rev.out.find("FAIL dup-lax-natural") != std::string::npos);
  CHECK(rev.out.find("lhs = ") != std::string::npos);

  CHECK(cli({"check", "dom", "--model", "finrel", "--sizes", "1,2", "--aux", "4"}).code == 0);
  CHECK(cli({"check", "weakproduct", "--model", "kleisli", "--monad", "lifting", "--sizes", "1,2", "--aux", "4,16"})
            .code == 0);
  CHECK(cli({"check", "weakproduct", "--model", "finrel", "--sizes", "1,2", "--aux", "4"}).code == 2);
  CHECK(cli({"check", "gs", "--model", "pspan", "--sizes", "1,2"}).code == 0);
  CHECK(cli({"check", "oplax", "--model", "finstoch", "--sizes", "1,2", "--budget", "64"}).code == 0);
}

TEST_CASE("usage and fixture errors exit 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"check"}).code == 2);
  CHECK(cli({"check", "gs", "--model", "nosuch"}).code == 2);
  CHECK(cli({"check", "gs", "--format", "xml"}).code == 2);
  CHECK(cli({"check", "gs", "--sizes", "0"}).code == 2);
  auto missing = cli({"span", "compose", fixture("nosuch.json"), fixture("span_b.json")});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("FixtureError") != std::string::npos);
  CHECK(cli({"monad", "laws", "--monad", "writer-z"}).code == 2);
  CHECK(cli({"check", "gs", "--model", "presentation"}).code == 2);
  CHECK(cli({"termgraph", "eval", fixture("signature.json"), fixture("tg_sharing.json")}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("span compose prints the canonical pullback composite") {
  // apex pairs (i, j) with right_a(i) = left_b(j): (0,0), (1,1), (2,1)
  auto r = cli({"span", "compose", fixture("span_a.json"), fixture("span_b.json")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("2<-3->1{(0,0),(0,0),(1,0)}\n", 0) == 0);
  auto j = nlohmann::json::parse(cli({"span", "compose", fixture("span_a.json"), fixture("span_b.json"), "--format",
                                      "json"})
                                     .out);
  CHECK(j["result"] == nlohmann::json::parse(R"({"src":2,"tgt":1,"left":[0,0,1],"right":[0,0,0]})"));
  CHECK(cli({"span", "compose", fixture("span_b.json"), fixture("span_b.json")}).code == 2);
  auto leq = cli({"span", "leq", fixture("span_a.json"), fixture("span_a.json")});
  CHECK(leq.code == 0);
  CHECK(leq.out.rfind("leq: true\n", 0) == 0);
}

TEST_CASE("stoch and termgraph fixtures") {
  auto s = cli({"stoch", "support", fixture("stoch.json")});
  CHECK(s.code == 0);
  CHECK(s.out.rfind("{(0,0),(0,2),(1,1)}:2->3\n", 0) == 0);

  auto eq = cli({"termgraph", "equal", fixture("signature.json"), fixture("tg_sharing.json"), fixture("tg_copying.json")});
  CHECK(eq.code == 0);
  CHECK(eq.out.rfind("equal: false\n", 0) == 0);
  auto self = cli({"termgraph", "equal", fixture("signature.json"), fixture("tg_copying.json"), fixture("tg_copying.json")});
  CHECK(self.out.rfind("equal: true\n", 0) == 0);

  // f = {(0,0),(0,1)}: sharing gives 0 -> (0,0), (1,1); copying gives every pair
  auto share = cli({"termgraph", "eval", fixture("signature.json"), fixture("tg_sharing.json"), "--assign",
                    fixture("assign_finrel.json")});
  CHECK(share.code == 0);
  CHECK(share.out.rfind("{(0,0),(0,3)}:2->4\n", 0) == 0);
  auto copy = cli({"termgraph", "eval", fixture("signature.json"), fixture("tg_copying.json"), "--assign",
                   fixture("assign_finrel.json")});
  CHECK(copy.out.rfind("{(0,0),(0,1),(0,2),(0,3)}:2->4\n", 0) == 0);
  auto lift = cli({"termgraph", "eval", fixture("signature.json"), fixture("tg_copying.json"), "--assign",
                   fixture("assign_lifting.json")});
  CHECK(lift.code == 0);
  CHECK(lift.out.rfind("2->T4[0,⊥]\n", 0) == 0);
}

TEST_CASE("monad, kleisli, preord and stoch check commands") {
  CHECK(cli({"monad", "laws", "--monad", "powerset", "--max-size", "2"}).code == 0);
  // T(!)(⊥) = ⊥ but η !(⊥) = •
  CHECK(cli({"monad", "gs", "--monad", "lifting"}).code == 1);
  CHECK(cli({"monad", "gs", "--monad", "identity"}).code == 0);
  CHECK(cli({"monad", "gs", "--monad", "writer-z2"}).code == 1);
  auto k = cli({"kleisli", "check", fixture("kleisli_powerset.json"), "--monad", "powerset", "--sizes", "1,2"});
  CHECK(k.code == 0);
  CHECK(k.out.rfind("kleisli_powerset.json", k.out.find('\n')) != std::string::npos);
  CHECK(cli({"preord", "hypograph", "--max-size", "2"}).code == 0);
  CHECK(cli({"preord", "completeness", "--sizes", "1,2", "--homs", "1:2"}).code == 0);
  CHECK(cli({"preord", "completeness", "--homs", "1:3"}).code == 2);
  CHECK(cli({"stoch", "check", "--samples", "20", "--max-size", "2"}).code == 0);
  CHECK(cli({"span", "check", "--sizes", "1,2", "--apex-bound", "2"}).code == 0);
}

TEST_CASE("kleisli build emits a presentation that checks like the model") {
  auto b = cli({"kleisli", "build", "--monad", "lifting", "--sizes", "1,2", "--format", "json"});
  REQUIRE(b.code == 0);
  auto p = TablePresentation::from_json(nlohmann::json::parse(b.out)["result"]);
  CHECK(p.objects().size() == 2);
  CHECK(check_gs_axioms(p).passed());
  CHECK(check_oplax_cartesian(p).passed());
  auto pres = cli({"check", "oplax", "--model", "presentation", "--presentation", fixture("presentation_lifting.json")});
  CHECK(pres.code == 0);
}

TEST_CASE("json reports: envelope, verdict matches exit code, byte-identical reruns") {
  std::vector<std::string> args{"check", "oplax", "--model", "pspan", "--sizes", "1,2", "--format", "json", "--seed", "3"};
  auto a = cli(args), b = cli(args);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["command"] == "check oplax");
  CHECK(j["config"]["seed"] == 3);
  CHECK(j["config"]["sizes"] == nlohmann::json::array({1, 2}));
  bool all = true;
  for (const auto& r : j["reports"]) all = all && r["verdict"] == "pass";
  CHECK(all == (a.code == 0));
  CHECK(j["verdict"] == (all ? "pass" : "fail"));

  auto rev = nlohmann::json::parse(cli({"check", "oplax", "--order", "reversed", "--format", "json"}).out);
  CHECK(rev["verdict"] == "fail");
  CHECK(rev["reports"][0]["witness"]["law"] == "dup-lax-natural");

  auto other = cli({"check", "oplax", "--model", "pspan", "--sizes", "1,2", "--format", "json", "--seed", "4"});
  CHECK(other.out != a.out);
}
