#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "frobctl.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = frobctl::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

const json& property(const json& report, const std::string& name) {
  for (const auto& p : report["properties"])
    if (p["name"] == name) return p;
  FAIL("missing property " << name);
  static const json none;
  return none;
}

}  // namespace

TEST_SUITE("frobctl") {
  TEST_CASE("verify-lemma example") {
    const Run r = run({"verify-lemma", "--p", "3", "--n", "2", "--trials", "1000", "--seed", "7"});
    CHECK(r.code == 0);
    const json rep = r.report();
    CHECK(rep["schema"] == 1);
    CHECK(rep["seed"] == 7);
    CHECK(property(rep, "monomial_lemma")["passed"] == 1000);
    CHECK(property(rep, "monomial_lemma")["failed"] == 0);
    CHECK(rep["all_pass"] == true);
  }

  TEST_CASE("classify example") {
    const Run r = run({"classify", "--json", R"({"class":"K3","p":5})"});
    CHECK(r.code == 0);
    CHECK(r.report()["outcome"] == "NotLiftable");
    CHECK(r.report().contains("citation"));
  }

  TEST_CASE("p1-lift examples") {
    Run r = run({"p1-lift", "--p", "2", "--f", "x^5"});
    CHECK(r.code == 1);
    CHECK(r.report()["diagnosis"]["kind"] == "DegreeTooHigh");
    CHECK(r.report()["all_pass"] == false);
    r = run({"p1-lift", "--p", "2", "--f", "x^4"});
    CHECK(r.code == 0);
    CHECK(r.report()["y_image"] == "y^2 + 2");
  }

  TEST_CASE("ruled-lift reports charts") {
    const Run r = run({"ruled-lift", "--base", "A1", "--n", "0", "--p", "3", "--b", "u"});
    CHECK(r.code == 0);
    const json rep = r.report();
    CHECK(rep["h"] == "v^2*y + v*y^2");
    CHECK(rep["charts"]["Vy"]["y"] == "3*v^2*y + 3*v*y^2 + y^3");
    const Run f1 = run({"ruled-lift", "--base", "P1", "--n", "1", "--p", "2"});
    CHECK(f1.code == 0);
    CHECK(f1.report()["non_minimal"] == true);
  }

  TEST_CASE("hasse") {
    Run r = run({"hasse", "--p", "5", "--a", "1", "--b", "0"});
    CHECK(r.code == 0);
    CHECK(r.report()["ordinary"] == true);
    CHECK(r.report()["invariant"] == 2);
    r = run({"hasse", "--p", "2", "--a3", "1"});
    CHECK(r.code == 0);
    CHECK(r.report()["ordinary"] == false);
    CHECK(r.report()["points"] == 3);
    r = run({"hasse", "--p", "5", "--a", "0", "--b", "0"});
    CHECK(r.code == 2);
    r = run({"hasse", "--census", "--p", "7"});
    CHECK(r.code == 0);
  }

  TEST_CASE("phi-det with a given lift") {
    const Run r = run({"phi-det", "--lift", R"({"p":2,"nvars":2,"corrections":["x2","x1"]})"});
    CHECK(r.code == 0);
    CHECK(r.report()["phi_det"] == "x1*x2 + 1");
  }

  TEST_CASE("reports are deterministic") {
    const std::vector<std::string> args{"phi-det", "--p", "3", "--n", "2", "--trials", "50", "--seed", "11"};
    CHECK(run(args).out == run(args).out);
    const Run a = run({"witt-check", "--p", "5", "--trials", "200", "--seed", "1"});
    const Run b = run({"witt-check", "--p", "5", "--trials", "200", "--seed", "2"});
    CHECK(a.code == 0);
    CHECK(a.out != b.out);
  }

  TEST_CASE("seed from the environment") {
    ::setenv("FROBCTL_SEED", "99", 1);
    CHECK(run({"classify", "--golden"}).report()["seed"] == 99);
    CHECK(run({"classify", "--golden", "--seed", "3"}).report()["seed"] == 3);
    ::setenv("FROBCTL_SEED", "banana", 1);
    CHECK(run({"classify", "--golden"}).code == 2);
    ::unsetenv("FROBCTL_SEED");
    CHECK(run({"classify", "--golden"}).report()["seed"] == 1);
  }

  TEST_CASE("output file and summary") {
    const std::string path = "frobctl_test_report.json";
    const Run r = run({"classify", "--golden", "--output", path, "--summary"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(r.err.find("golden_table") != std::string::npos);
    std::ifstream in(path);
    const json rep = json::parse(in);
    CHECK(property(rep, "golden_table")["failed"] == 0);
    std::remove(path.c_str());
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify-lemma", "--p", "4"}).code == 2);
    CHECK(run({"verify-lemma", "--p", "19"}).code == 2);
    CHECK(run({"verify-lemma", "--p", "3", "--trials", "0"}).code == 2);
    CHECK(run({"verify-lemma", "--p", "3", "--n", "3", "--cols", "2"}).code == 2);
    CHECK(run({"classify", "--json", "{"}).code == 2);
    CHECK(run({"classify", "--json", R"({"class":"K3","p":5,"n":1})"}).code == 2);
    CHECK(run({"p1-lift", "--p", "2", "--f", "x +"}).code == 2);
    CHECK(run({"ruled-lift", "--base", "A2", "--p", "2"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("sweep-all passes") {
    const Run r = run({"sweep-all", "--trials", "20"});
    CHECK(r.code == 0);
    CHECK(r.report()["all_pass"] == true);
  }
}
