#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "iclstt/corpus.hpp"
#include "iclstt/kripke.hpp"
#include "iclstt/random.hpp"
#include "iclstt/tableau.hpp"

using namespace iclstt;

namespace {

using M = ModalFormula;

bool valid(const char* f, Logic l, const std::vector<M>& premises = {}) {
  return decide(parse_modal(f), premises, l).valid;
}

// The tableau's countermodel must refute the goal at world 0.
void check_model(const Verdict& v, const M& goal, const std::vector<M>& premises, Logic l) {
  REQUIRE_FALSE(v.valid);
  REQUIRE(v.countermodel);
  CountermodelReport r{*v.countermodel, 0, goal, premises, l};
  CHECK(verify_countermodel(r));
}

}  // namespace

TEST_CASE("K theorems and non-theorems") {
  CHECK(valid("box true", Logic::K));
  CHECK(valid("box a -> box a", Logic::K));
  CHECK(valid("box (p -> q) -> box p -> box q", Logic::K));
  CHECK(valid("box (p & q) -> box p & box q", Logic::K));
  CHECK(valid("dia p -> ~box ~p", Logic::K));
  CHECK_FALSE(valid("box p -> p", Logic::K));
  CHECK_FALSE(valid("box p -> dia p", Logic::K));
  CHECK_FALSE(valid("box p -> box box p", Logic::K));
  // Not a K theorem: one reflexive world with a true and b false refutes it.
  const M dia = parse_modal("dia (a -> b) | (box a -> box b)");
  const Verdict v = decide(dia, {}, Logic::K);
  check_model(v, dia, {}, Logic::K);
}

TEST_CASE("S4 theorems and non-theorems") {
  CHECK(valid("box p -> p", Logic::S4));
  CHECK(valid("box p -> box box p", Logic::S4));
  CHECK(valid("p -> dia p", Logic::S4));
  CHECK(valid("dia dia p -> dia p", Logic::S4));
  CHECK_FALSE(valid("dia p -> box dia p", Logic::S4));
  CHECK_FALSE(valid("p -> box dia p", Logic::S4));
  const M g = parse_modal("dia box p -> box dia p");
  check_model(decide(g, {}, Logic::S4), g, {}, Logic::S4);
  CHECK(is_preorder(decide(g, {}, Logic::S4).countermodel->successors));
}

TEST_CASE("global premises") {
  CHECK(valid("box p", Logic::K, {parse_modal("p")}));
  CHECK(valid("box box q", Logic::K, {parse_modal("p -> q"), parse_modal("p")}));
  CHECK_FALSE(valid("q", Logic::K, {parse_modal("p -> q")}));
  CHECK(valid("false", Logic::K, {parse_modal("false")}));
  const std::vector<M> prem = {parse_modal("box p -> q")};
  check_model(decide(parse_modal("q"), prem, Logic::K), parse_modal("q"), prem, Logic::K);
}

TEST_CASE("corpus verdicts") {
  for (const auto& p : corpus()) {
    CAPTURE(p.name);
    const Verdict v = prove_problem(p);
    const bool expected_valid = *p.expected == Expected::Provable;
    if (p.name == "Ex3") {
      // The third example as stated is not S4-valid.
      check_model(v, modal_goal(p), modal_premises(p), Logic::S4);
      continue;
    }
    CHECK(v.valid == expected_valid);
    if (!v.valid) check_model(v, modal_goal(p), modal_premises(p), p.logic());
  }
  CHECK(prove_problem(corpus_problem("Ex2")).valid);
  CHECK_FALSE(prove_problem(corpus_problem("trans^K")).valid);
}

TEST_CASE("trace and limits") {
  std::ostringstream trace;
  TableauOptions opts;
  opts.trace = &trace;
  decide(parse_modal("box p -> p"), {}, Logic::S4, opts);
  CHECK_FALSE(trace.str().empty());
  TableauOptions tiny;
  tiny.node_limit = 1;
  CHECK_THROWS_AS(decide(parse_modal("box (p -> q) -> box p -> box q"), {}, Logic::K, tiny), ResourceLimit);
}

TEST_CASE("property: determinism, S4 extends K, agreement with bounded search") {
  Random rng(kDefaultSeed);
  for (int n = 0; n < 300; ++n) {
    const M f = random_modal(rng, atom_names(3), 4);
    CAPTURE(to_string(f));
    const Verdict k = decide(f, {}, Logic::K);
    const Verdict k2 = decide(f, {}, Logic::K);
    CHECK(k.valid == k2.valid);
    CHECK(k.nodes == k2.nodes);
    CHECK(k.countermodel == k2.countermodel);
    const Verdict s4 = decide(f, {}, Logic::S4);
    if (k.valid) CHECK(s4.valid);
    for (auto [logic, v] : {std::pair{Logic::K, &k}, std::pair{Logic::S4, &s4}}) {
      const auto cm = find_countermodel({}, f, logic, SearchOptions{v->valid ? 4 : 5});
      CHECK(v->valid == !cm);
      if (!v->valid) check_model(*v, f, {}, logic);
    }
  }
}
