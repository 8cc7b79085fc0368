#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "iclstt/corpus.hpp"
#include "iclstt/random.hpp"
#include "iclstt/thf.hpp"

using namespace iclstt;

namespace {

const ThfFormula* find(const ThfReadResult& r, const std::string& name) {
  for (const auto& f : r.formulas)
    if (f.name == name) return &f;
  return nullptr;
}

std::size_t count_role(const ThfDocument& d, const std::string& role) {
  std::size_t n = 0;
  for (const auto& e : d.entries) n += e.role == role;
  return n;
}

}  // namespace

TEST_CASE("axiom bases") {
  const ThfDocument k = render_axiom_base(Logic::K);
  const ThfDocument s4 = render_axiom_base(Logic::S4);
  CHECK(s4.entries.size() == k.entries.size() + 2);
  CHECK(count_role(k, "axiom") == 0);
  CHECK(count_role(s4, "axiom") == 2);
  CHECK(count_role(k, "definition") == thf_defined_symbols().size());
  CHECK(k.entries.front().name == "r_type");
  CHECK(thf_defined_symbols().front() == "mnot");
  CHECK(thf_defined_symbols().back() == "iclval");
}

TEST_CASE("rendering of terms and types") {
  CHECK(to_thf(relation_type()) == "($i>($i>$o))");
  CHECK(to_thf(Term::pi(SimpleType::iota())) == "(^[P:($i>$o)]: (!! @ P))");
  const Term mval_nf = beta_eta_normalize(thf_definition("mval"));
  CHECK(alpha_beta_eta_eq(read_thf("thf(a, axiom, (" + to_thf(mval_nf) + " @ (^[X:$i]: $true))).").formulas[0].term,
                          Term::app(mval_nf, Term::lambda("X", SimpleType::iota(), Term::truth()))));
  CHECK(to_thf(thf_definition("mbox")) == "(^[R:($i>($i>$o)),A:($i>$o),X:$i]: (! [Y:$i]: ((R @ X @ Y) => (A @ Y))))");
  CHECK(to_thf(Term::constant("Bob", world_predicate_type())) == "'Bob'");
  CHECK(to_thf(Term::lambda("x", SimpleType::iota(), Term::truth())) == "(^[Vx:$i]: $true)");
  CHECK_THROWS(thf_definition("nope"));
}

TEST_CASE("rendered problems") {
  const ThfDocument ex1 = render_problem(corpus_problem("Ex1"));
  CHECK(count_role(ex1, "axiom") == 2 + 3);
  CHECK(count_role(ex1, "conjecture") == 1);
  CHECK(ex1.entries.back().name == "goal");
  CHECK(ex1.entries.back().formula == "(iclval @ (icl_atom @ deletefile1))");
  CHECK(ex1.header.front() == "File: SWV428^1.p");

  const ThfDocument unit_k = render_problem(corpus_problem("unit^K"));
  for (const auto& e : unit_k.entries) CHECK(e.name.rfind("axiom_", 0) != 0);
  CHECK(thf_file_name(corpus_problem("unit^K")) == "SWV425^2.p");
  Problem anon = corpus_problem("unit");
  anon.tptp.clear();
  CHECK(thf_file_name(anon) == "unit.p");
}

TEST_CASE("round-trip of every corpus document") {
  for (Logic l : {Logic::K, Logic::S4}) {
    const ThfReadResult base = read_thf(render_axiom_base(l).str());
    for (const auto& s : thf_defined_symbols()) {
      REQUIRE(base.definitions.count(s));
      CHECK(alpha_equal(base.definitions.at(s), beta_eta_normalize(thf_definition(s))));
    }
    if (l == Logic::S4) {
      REQUIRE(find(base, "axiom_r"));
      CHECK(alpha_beta_eta_eq(find(base, "axiom_r")->term, axiom_R()));
      CHECK(alpha_beta_eta_eq(find(base, "axiom_t")->term, axiom_T()));
    }
  }
  for (const auto& p : corpus()) {
    CAPTURE(p.name);
    const std::string text = render_problem(p).str();
    CHECK(text == render_problem(p).str());
    const ThfReadResult r = read_thf(text);
    const ThfFormula* goal = find(r, "goal");
    REQUIRE(goal);
    CHECK(goal->role == "conjecture");
    CHECK(alpha_equal(goal->term, beta_eta_normalize(iclval(embed_icl(*p.conjecture)))));
    for (std::size_t i = 0; i < p.assumptions.size(); ++i) {
      const ThfFormula* a = find(r, "assumption_" + std::to_string(i + 1));
      REQUIRE(a);
      CHECK(alpha_equal(a->term, beta_eta_normalize(iclval(embed_icl(p.assumptions[i])))));
    }
  }
}

TEST_CASE("reader errors") {
  CHECK_THROWS_AS(read_thf("thf(a, axiom, p)."), ThfSyntaxError);  // undeclared
  CHECK_THROWS_AS(read_thf("thf(a, type, (p: $o)).\nthf(b, axiom, (p @ p))."), std::exception);
  CHECK_THROWS_AS(read_thf("thf(a, axiom, $true"), ThfSyntaxError);
  CHECK(read_thf("thf(a, lemma, $true).").formulas.at(0).role == "lemma");
  CHECK_THROWS_AS(read_thf("thf(a, axiom, (^[X:$i]: $true))."), ThfSyntaxError);
  try {
    read_thf("% c\nthf(a, axiom,\n  (~ $true) |).");
    FAIL("expected a syntax error");
  } catch (const ThfSyntaxError& e) {
    CHECK(e.line == 3);
  }
  const ThfReadResult ok = read_thf("thf(t, type, (p: $o)).\nthf(a, axiom, ((~) @ (p & $true))).");
  REQUIRE(ok.formulas.size() == 1);
  CHECK(to_string(ok.formulas[0].term) == "¬(p ∧ ⊤)");
}

TEST_CASE("written files") {
  const auto dir = std::filesystem::temp_directory_path() / "iclstt_thf_test";
  std::filesystem::remove_all(dir);
  const std::vector<Problem> probs = {corpus_problem("Ex1"), corpus_problem("unit^K")};
  const auto paths = write_thf_files(dir.string(), probs);
  REQUIRE(paths.size() == 4);
  CHECK(std::filesystem::path(paths[0]).filename() == "icl_k.ax");
  CHECK(std::filesystem::path(paths[1]).filename() == "icl_s4.ax");
  CHECK(std::filesystem::path(paths[2]).filename() == "SWV428^1.p");
  std::ifstream in(paths[2]);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == render_problem(probs[0]).str());
  std::filesystem::remove_all(dir);
}

TEST_CASE("property: random problems round-trip") {
  Random rng(kDefaultSeed);
  for (int n = 0; n < 150; ++n) {
    const Dialect d = static_cast<Dialect>(n % 3);
    Problem p;
    p.name = "random";
    p.dialect = d;
    p.decl = {{"A", "B"}, {"p", "q"}};
    p.frame_axioms = n % 2 == 1;
    p.assumptions = {random_icl(rng, d, {"p", "q"}, {"A", "B"}, 3)};
    p.conjecture = random_icl(rng, d, {"p", "q"}, {"A", "B"}, 4);
    CAPTURE(to_string(*p.conjecture));
    const ThfReadResult r = read_thf(render_problem(p).str());
    const ThfFormula* goal = find(r, "goal");
    REQUIRE(goal);
    CHECK(alpha_equal(goal->term, beta_eta_normalize(iclval(embed_icl(*p.conjecture)))));
  }
}
