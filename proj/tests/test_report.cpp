#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iclstt/corpus.hpp"
#include "iclstt/report.hpp"

using namespace iclstt;

TEST_CASE("engine names") {
  for (Engine e : {Engine::Tableau, Engine::Models, Engine::Both}) CHECK(parse_engine(to_string(e)) == e);
  CHECK_THROWS(parse_engine("smt"));
}

TEST_CASE("single problems under each engine") {
  const Problem& ex1 = corpus_problem("Ex1");
  const Problem& cm = corpus_problem("Ex1^K");
  for (Engine e : {Engine::Tableau, Engine::Both}) {
    CAPTURE(to_string(e));
    RunOptions opts;
    opts.engine = e;
    const RunEntry v = run_problem(ex1, opts);
    CHECK(v.verdict == VerdictKind::Valid);
    CHECK(v.match());
    CHECK(v.verdict_text() == "Valid");
    const RunEntry c = run_problem(cm, opts);
    CHECK(c.verdict == VerdictKind::Countermodel);
    REQUIRE(c.countermodel);
    CHECK(verify_countermodel(*c.countermodel));
    CHECK(c.match());
    CHECK_FALSE(c.alarm);
  }
  RunOptions models;
  models.engine = Engine::Models;
  // The search alone cannot establish validity.
  const RunEntry u = run_problem(ex1, models);
  CHECK(u.verdict == VerdictKind::Unknown);
  CHECK_FALSE(u.match());
  CHECK_FALSE(u.note.empty());
  const RunEntry c = run_problem(cm, models);
  CHECK(c.verdict_text() == "Countermodel(2)");
}

TEST_CASE("modal goals") {
  const RunEntry v = run_modal("box", {}, parse_modal("box true"), Logic::K);
  CHECK(v.verdict == VerdictKind::Valid);
  CHECK_FALSE(v.expected);
  CHECK_FALSE(v.match());
  const RunEntry c = run_modal("t", {}, parse_modal("box p -> p"), Logic::K);
  CHECK(c.verdict_text() == "Countermodel(1)");
}

TEST_CASE("limits give Unknown") {
  RunOptions opts;
  opts.engine = Engine::Tableau;
  opts.tableau.node_limit = 1;
  const RunEntry e = run_problem(corpus_problem("Ex1"), opts);
  CHECK(e.verdict == VerdictKind::Unknown);
  CHECK(e.resource_limit);
}

TEST_CASE("corpus report") {
  const RunReport r = run_problems(corpus());
  REQUIRE(r.entries.size() == 26);
  CHECK_FALSE(r.any_alarm());
  CHECK_FALSE(r.any_resource_limit());
  CHECK_FALSE(r.all_match());
  std::vector<std::string> mismatched;
  for (const auto& e : r.entries)
    if (!e.match()) mismatched.push_back(e.name);
  // Only the third example, which is refutable in S4 as stated.
  CHECK(mismatched == std::vector<std::string>{"Ex3"});

  const std::string table = r.table(false);
  CHECK(table == run_problems(corpus()).table(false));
  CHECK(table.rfind("problem    tptp      dialect  logic  verdict          expected      match\n", 0) == 0);
  CHECK(table.find("26 problems, 25 match; mismatches: Ex3") != std::string::npos);
  CHECK(table.find(" \n") == std::string::npos);
}
