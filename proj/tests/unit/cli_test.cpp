#include "helpers.hpp"

#include "drg/cli.hpp"
#include "drg/corpus.hpp"

using namespace drg;
using namespace drg::cli;

namespace {

RunConfig config(const std::string& sub, const std::string& spec = {}) {
  RunConfig c;
  c.subcommand = sub;
  c.spec = spec;
  return c;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("action spec parsing") {
  ActionSpec s = parse_action_spec(nlohmann::json::parse(
      R"json({"name": "S4", "degree": 4, "generators": ["(0 1)", [1, 2, 3, 0]],
          "action": {"kind": "subsets", "k": 2}})json"));
  CHECK(s.action.group().order() == 24);
  CHECK(s.action.size() == 6);
  CHECK_THROWS_KIND(parse_action_spec(nlohmann::json::parse(R"({"degree": 3, "generators": [], "colour": 1})")),
                    ErrorKind::InvalidInput);
  CHECK_THROWS_KIND(parse_action_spec(nlohmann::json::parse(R"({"degree": 3, "generators": [[0, 1]]})")),
                    ErrorKind::DegreeMismatch);
  CHECK_THROWS_KIND(parse_action_spec(nlohmann::json::parse(R"({"generators": []})")), ErrorKind::InvalidInput);
}

TEST_CASE("fixtures resolve") {
  for (const char* name : {"S5-natural", "A4-natural", "C6-regular", "AGL1-8", "PGL2-7", "PSL27-7", "S4/A4"}) {
    CHECK_NOTHROW(parse_action_spec(load_spec(name)));
  }
  CHECK_THROWS_KIND(load_spec("nonsense"), ErrorKind::InvalidInput);
  CHECK_THROWS_KIND(load_spec("{not json"), ErrorKind::InvalidInput);
}

TEST_CASE("delta report") {
  Report r = run(config("delta", "S4-natural"));
  CHECK(r.exit_code == kExitOk);
  CHECK(r.document["results"]["delta"] == "3/8");
  CHECK(r.document["results"]["derangements"] == "9");
  CHECK(r.document["pass"] == true);
  std::string csv = render(r, Format::Csv);
  CHECK(csv.rfind("key,value\n", 0) == 0);
  CHECK(csv.find("results.delta,3/8") != std::string::npos);
}

TEST_CASE("coset commands") {
  Report c = run(config("coset-delta", "S4/A4"));
  CHECK(c.exit_code == kExitOk);
  CHECK(c.document["results"]["delta"] == "1/2");
  Report e = run(config("exceptional", "S3/A3"));
  CHECK(e.document["results"]["exceptional"] == true);
  Report missing = run(config("coset-delta", "S4-natural"));
  CHECK(missing.exit_code == kExitInvalid);
  Report h = run(config("hall-build", "hall:C7:C3/C7"));
  CHECK(h.exit_code == kExitOk);
  CHECK(h.document["results"]["exceptional"] == true);
}

TEST_CASE("classical commands") {
  RunConfig c = config("class-count");
  c.family = "Sp";
  c.n = 4;
  c.q = 2;
  Report r = run(c);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.document["results"]["k"] == "11");
  c.subcommand = "check-bound";
  CHECK(run(c).exit_code == kExitOk);
  c.family = "GL";
  CHECK(run(c).exit_code == kExitInvalid); // no bound item for GL
  RunConfig rss = config("rss", R"({"family": "GL", "n": 2, "q": 7})");
  CHECK(run(rss).document["results"]["proportion"] == "41/48");
}

TEST_CASE("weyl and limit commands") {
  RunConfig w = config("weyl-delta");
  w.weyl_type = "A";
  w.rank = 3;
  w.young = {2, 2};
  Report r = run(w);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.document["results"]["limiting_delta"] == "7/12");
  w.young.clear();
  CHECK(run(w).exit_code == kExitInvalid);
  RunConfig lim = config("limit");
  lim.family = "GL";
  lim.q = 3;
  CHECK(run(lim).document["results"]["value"] == "1/1");
}

TEST_CASE("exit codes") {
  CHECK(run(config("frobnicate")).exit_code == kExitInvalid);
  RunConfig cap = config("delta", "S9-natural");
  cap.cap = 1000;
  Report r = run(cap);
  CHECK(r.exit_code == kExitCap);
  CHECK(r.document["error"]["kind"] == "CapExceeded");
  CHECK(exit_code_for(ErrorKind::Internal) == kExitInternal);
  CHECK(exit_code_for(ErrorKind::NoComplementFound) == kExitFailed);
  CHECK(exit_code_for(ErrorKind::NotNormal) == kExitInvalid);
  RunConfig zero = config("delta", "S4-natural");
  zero.cap = 0;
  CHECK(run(zero).exit_code == kExitInvalid);
}

TEST_CASE("verify suites") {
  RunConfig v = config("verify");
  v.suite = "hall";
  Report r = run(v);
  CHECK(r.exit_code == kExitOk);
  std::string csv = render(r, Format::Csv);
  CHECK(csv.rfind("instance,check,pass,detail\n", 0) == 0);
  v.suite = "nope";
  CHECK(run(v).exit_code == kExitInvalid);
  CHECK(suite_names().size() == 8);
}

TEST_CASE("output is deterministic") {
  CHECK(render(run(config("delta", "PGL2-7")), Format::Json) == render(run(config("delta", "PGL2-7")), Format::Json));
}

}
