#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iclstt/corpus.hpp"
#include "iclstt/icl.hpp"
#include "iclstt/random.hpp"

using namespace iclstt;

namespace {

using F = IclFormula;
using P = Principal;
using M = ModalFormula;

}  // namespace

TEST_CASE("parse examples") {
  CHECK(parse_icl("(admin says deletefile1) -> deletefile1", Dialect::ICL) ==
        F::implies(F::says(P::atom("admin"), F::atom("deletefile1")), F::atom("deletefile1")));
  CHECK(parse_icl("Bob says Alice => Bob", Dialect::SpeaksFor) ==
        F::says(P::atom("Bob"), F::speaks_for(P::atom("Alice"), P::atom("Bob"))));
  CHECK(parse_icl("admin says ((Bob -> admin) says deletefile1)", Dialect::Boolean) ==
        F::says(P::atom("admin"),
                F::says(P::implies(P::atom("Bob"), P::atom("admin")), F::atom("deletefile1"))));
  // says is right-associative and binds tighter than ->.
  CHECK(parse_icl("A says B says s", Dialect::ICL) == F::says(P::atom("A"), F::says(P::atom("B"), F::atom("s"))));
  CHECK(parse_icl("A says s -> s", Dialect::ICL) == F::implies(F::says(P::atom("A"), F::atom("s")), F::atom("s")));
  CHECK(parse_icl("s -> t -> u", Dialect::ICL) ==
        F::implies(F::atom("s"), F::implies(F::atom("t"), F::atom("u"))));
}

TEST_CASE("dialect and syntax errors") {
  CHECK_THROWS_AS(parse_icl("A => B", Dialect::ICL), DialectError);
  CHECK_THROWS_AS(parse_icl("A => B", Dialect::Boolean), DialectError);
  CHECK_THROWS_AS(parse_icl("(A & B) says s", Dialect::ICL), DialectError);
  CHECK_THROWS_AS(parse_icl("(A & B) says s", Dialect::SpeaksFor), DialectError);
  CHECK_NOTHROW(parse_icl("(A & B) says s", Dialect::Boolean));
  CHECK_THROWS_AS(parse_icl("A says", Dialect::ICL), IclSyntaxError);
  CHECK_THROWS_AS(parse_icl("A says s)", Dialect::ICL), IclSyntaxError);
  CHECK_THROWS_AS(parse_icl("r", Dialect::ICL), IclSyntaxError);
  // A name cannot be both a principal and a proposition.
  CHECK_THROWS_AS(parse_icl("A says A", Dialect::ICL), DialectError);
  try {
    parse_icl("s ->\n  A says", Dialect::ICL);
    FAIL("expected a syntax error");
  } catch (const IclSyntaxError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("declarations segregate names") {
  Declarations decl{{"A"}, {"s"}};
  CHECK(parse_icl("A says s", Dialect::ICL, decl) == F::says(P::atom("A"), F::atom("s")));
  CHECK_THROWS(parse_icl("s says A", Dialect::ICL, decl));
  CHECK_THROWS(parse_icl("A says u", Dialect::ICL, decl));
}

TEST_CASE("translation to modal logic") {
  CHECK(translate_to_modal(F::atom("p")) == M::box(M::atom("p")));
  CHECK(translate_to_modal(F::says(P::atom("admin"), F::bottom())) ==
        M::box(M::disjunction(M::atom("admin"), M::bottom())));
  CHECK(translate_to_modal(F::speaks_for(P::atom("A"), P::atom("B"))) ==
        M::box(M::implies(M::atom("A"), M::atom("B"))));
  CHECK(translate_to_modal(F::top()) == M::top());
  CHECK(translate_to_modal(F::conjunction(F::atom("p"), F::bottom())) ==
        M::conjunction(M::box(M::atom("p")), M::bottom()));
  CHECK(translate_principal(P::implies(P::atom("Bob"), P::atom("admin"))) ==
        M::implies(M::atom("Bob"), M::atom("admin")));
  // Implication is boxed as a whole.
  CHECK(to_string(translate_to_modal(parse_icl("(admin says d) -> d", Dialect::ICL))) ==
        "box (box (admin | box d) -> box d)");
}

TEST_CASE("direct embedding") {
  CHECK(to_string(beta_eta_normalize(embed_icl(F::atom("p")))) == "λX:ι. ∀Y:ι. r X Y ⇒ p Y");
  const F says_false = F::says(P::atom("admin"), F::bottom());
  CHECK(alpha_equal(beta_eta_normalize(embed_icl(says_false)), embed_recursive(translate_to_modal(says_false))));
  CHECK(to_string(beta_eta_normalize(embed_icl(F::implies(F::atom("s"), F::atom("t"))))) ==
        "λX:ι. ∀Y:ι. r X Y ⇒ (∀Y1:ι. r Y Y1 ⇒ s Y1) ⇒ (∀Y1:ι. r Y Y1 ⇒ t Y1)");
  // The lifted constants are closed, so the inner binders may reuse names.
  CHECK(to_string(icl_lifted::says()) == "λA:ι→o. λS:ι→o. (λR:ι→ι→o. λA:ι→o. λX:ι. ∀Y:ι. R X Y ⇒ A Y) r "
                                         "((λA:ι→o. λB:ι→o. λX:ι. A X ∨ B X) A S)");
  CHECK(to_string(beta_eta_normalize(iclval(embed_icl(F::top())))) == "∀W:ι. ⊤");
}

TEST_CASE("corpus") {
  const auto& c = corpus();
  REQUIRE(c.size() == 26);
  int s4 = 0, provable_k = 0, countermodel_k = 0;
  for (const auto& p : c) {
    CAPTURE(p.name);
    REQUIRE(p.conjecture);
    REQUIRE(p.expected);
    CHECK_NOTHROW(validate(*p.conjecture, p.dialect));
    if (p.logic() == Logic::S4) {
      ++s4;
      CHECK(*p.expected == Expected::Provable);
      CHECK(p.tptp.back() == '1');
    } else {
      CHECK(p.tptp.back() == '2');
      (*p.expected == Expected::Provable ? provable_k : countermodel_k)++;
    }
  }
  CHECK(s4 == 13);
  CHECK(provable_k == 2);
  CHECK(countermodel_k == 11);
  CHECK(corpus_problem("refl^K").expected == Expected::Provable);
  CHECK(corpus_problem("untrust^K").expected == Expected::Provable);
  CHECK(corpus_problem("unit").tptp == "SWV425^1");
  CHECK(corpus_problem("Ex3^K").tptp == "SWV437^2");
  CHECK_THROWS_AS(corpus_problem("nope"), std::out_of_range);

  const Problem& ex1 = corpus_problem("Ex1");
  CHECK(ex1.frame_axioms);
  REQUIRE(ex1.assumptions.size() == 3);
  CHECK(ex1.assumptions[0] == parse_icl("(admin says deletefile1) -> deletefile1", Dialect::ICL));
  CHECK(ex1.assumptions[2] == parse_icl("Bob says deletefile1", Dialect::ICL));
  CHECK(*ex1.conjecture == F::atom("deletefile1"));

  const Problem& untrust = corpus_problem("untrust");
  REQUIRE(untrust.assumptions.size() == 1);
  const F a = F::principal_ref(P::atom("A"));
  CHECK(untrust.assumptions[0] == F::conjunction(F::implies(a, F::top()), F::implies(F::top(), a)));

  const Problem& ex3 = corpus_problem("Ex3");
  CHECK(ex3.assumptions[0] == parse_icl("(admin says false) -> deletefile1", Dialect::Boolean));
  CHECK(ex3.assumptions[1] == parse_icl("admin says ((Bob -> admin) says deletefile1)", Dialect::Boolean));
}

TEST_CASE("problem files") {
  for (const auto& p : corpus()) {
    CAPTURE(p.name);
    const std::string text = print_problem(p);
    const Problem q = parse_problem(text);
    CHECK(print_problem(q) == text);
    CHECK(q.assumptions == p.assumptions);
    CHECK(*q.conjecture == *p.conjecture);
    CHECK(q.logic() == p.logic());
    CHECK(q.expected == p.expected);
  }
  CHECK_THROWS_AS(parse_problem("name: x\nbogus: 1\n"), ProblemFormatError);
  CHECK_THROWS_AS(parse_problem("name: x\ndialect: ICL\nconjecture: A => B\n"), ProblemFormatError);
  CHECK_THROWS_AS(parse_problem("name: x\nconjecture: s\n"), ProblemFormatError);
  const Problem inferred = parse_problem("# comment\nname: t\ndialect: ICL\nconjecture: A says s -> s\n");
  CHECK(inferred.logic() == Logic::K);
  CHECK(*inferred.conjecture == F::implies(F::says(P::atom("A"), F::atom("s")), F::atom("s")));
  CHECK(with_logic(inferred, Logic::S4).logic() == Logic::S4);
}

TEST_CASE("property: print/parse round-trip and factorization in every dialect") {
  Random rng(kDefaultSeed);
  for (Dialect d : {Dialect::ICL, Dialect::SpeaksFor, Dialect::Boolean}) {
    for (int n = 0; n < 300; ++n) {
      const F f = random_icl(rng, d, {"p", "q"}, {"A", "B"}, 4);
      CAPTURE(to_string(f));
      CHECK_NOTHROW(validate(f, d));
      CHECK(parse_icl(to_string(f), d, Declarations{{"A", "B"}, {"p", "q"}}) == f);
      CHECK(alpha_equal(beta_eta_normalize(embed_icl(f)), embed_recursive(translate_to_modal(f))));
    }
  }
}

TEST_CASE("property: iclval coincides with mval") {
  Random rng(kDefaultSeed + 1);
  for (int n = 0; n < 100; ++n) {
    const Term x = embed_recursive(random_modal(rng, atom_names(2), 3));
    CHECK(alpha_equal(iclval(x), mval(x)));
    CHECK(alpha_beta_eta_eq(Term::app(icl_lifted::iclval(), x), mval(x)));
  }
}
