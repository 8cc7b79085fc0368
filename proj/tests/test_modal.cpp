#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iclstt/modal.hpp"
#include "iclstt/random.hpp"

using namespace iclstt;

namespace {

using M = ModalFormula;
const M p = M::atom("p");
const M q = M::atom("q");

Term nf(const Term& t) { return beta_eta_normalize(t); }

}  // namespace

TEST_CASE("recursive embedding clauses") {
  CHECK(alpha_equal(embed_recursive(p), Term::constant("p", world_predicate_type())));
  CHECK(to_string(embed_recursive(M::negation(p))) == "λX:ι. ¬p X");
  CHECK(to_string(embed_recursive(M::box(p))) == "λX:ι. ∀Y:ι. r X Y ⇒ p Y");
  CHECK(to_string(embed_recursive(M::disjunction(p, q))) == "λX:ι. p X ∨ q X");
  CHECK(to_string(embed_recursive(M::top())) == "λX:ι. ⊤");
  CHECK(to_string(embed_recursive(M::bottom())) == "λX:ι. ⊥");
  CHECK(is_beta_eta_normal(embed_recursive(parse_modal("box (p -> dia q) & ~p"))));
}

TEST_CASE("local embedding") {
  const M f = M::disjunction(M::box(p), M::box(q));
  CHECK_FALSE(is_beta_eta_normal(embed_local(f)));
  CHECK(alpha_equal(nf(embed_local(f)), embed_recursive(f)));
  CHECK(alpha_equal(embed_local(p), embed_recursive(p)));
  CHECK(to_string(nf(embed_local(M::implies(p, p)))) == "λX:ι. p X ⇒ p X");
}

TEST_CASE("lifted constants") {
  using namespace lifted;
  CHECK(to_string(mval()) == "λA:ι→o. ∀W:ι. A W");
  CHECK(type_of({}, box()) == SimpleType::arrow(relation_type(), SimpleType::arrow(world_predicate_type(),
                                                                                    world_predicate_type())));
  CHECK(type_of({}, top()) == world_predicate_type());
  CHECK(type_of({}, bottom()) == world_predicate_type());
  // The local ⊃, ∧, ◇ agree with their expansions.
  CHECK(alpha_beta_eta_eq(impl(), Term::lambda("A", world_predicate_type(),
                                               Term::lambda("B", world_predicate_type(),
                                                            apply(disj(), {Term::app(neg(), Term::var("A", world_predicate_type())),
                                                                           Term::var("B", world_predicate_type())})))));
  const Term a = Term::var("A", world_predicate_type());
  CHECK(alpha_beta_eta_eq(Term::lambda("A", world_predicate_type(), apply(dia(), {relation(), a})),
                          Term::lambda("A", world_predicate_type(),
                                       Term::app(neg(), apply(box(), {relation(), Term::app(neg(), a)})))));
}

TEST_CASE("mval") {
  CHECK(to_string(mval(embed_recursive(M::box(M::top())))) == "∀W:ι. ∀Y:ι. r W Y ⇒ ⊤");
  CHECK(to_string(mval(embed_recursive(M::top()))) == "∀W:ι. ⊤");
  CHECK(type_of({}, mval(embed_recursive(parse_modal("box p -> box p")))) == SimpleType::o());
  CHECK_THROWS_AS(mval(Term::constant("c", SimpleType::iota())), TypeError);
}

TEST_CASE("axioms R and T") {
  CHECK(type_of({}, axiom_R()) == SimpleType::o());
  CHECK(type_of({}, axiom_T()) == SimpleType::o());
  CHECK(free_vars(axiom_R()).empty());
  CHECK(to_string(axiom_R()) == "∀X:ι→o. ∀W:ι. (∀Y:ι. r W Y ⇒ X Y) ⇒ X W");
  CHECK(to_string(axiom_T()) ==
        "∀X:ι→o. ∀W:ι. (∀Y:ι. r W Y ⇒ X Y) ⇒ (∀Y:ι. r W Y ⇒ (∀Y1:ι. r Y Y1 ⇒ X Y1))");
}

TEST_CASE("derived connectives expand one level") {
  CHECK(M::implies(p, q).expand() == M::disjunction(M::negation(p), q));
  CHECK(M::conjunction(p, q).expand() == M::negation(M::disjunction(M::negation(p), M::negation(q))));
  CHECK(M::bottom().expand() == M::negation(M::top()));
  CHECK(M::diamond(p).expand() == M::negation(M::box(M::negation(p))));
  CHECK(M::box(p).expand() == M::box(p));
}

TEST_CASE("text syntax") {
  for (const char* s : {"p", "~p", "box p -> p", "dia (p -> q) | (box p -> box q)", "p & q | s", "true", "false",
                        "p -> q -> s", "(p -> q) -> s", "~box ~p", "box (p & q)"}) {
    CAPTURE(s);
    CHECK(to_string(parse_modal(s)) == s);
  }
  CHECK(parse_modal("p -> q -> s") == M::implies(p, M::implies(q, M::atom("s"))));
  CHECK(parse_modal("p | q & s") == M::disjunction(p, M::conjunction(q, M::atom("s"))));
  CHECK_THROWS_AS(parse_modal("p ->"), ModalSyntaxError);
  CHECK_THROWS_AS(parse_modal("(p"), ModalSyntaxError);
  CHECK_THROWS_AS(parse_modal("r"), ModalSyntaxError);
}

TEST_CASE("measures") {
  const M f = parse_modal("box (p -> dia q) & ~p");
  CHECK(atoms_of(f) == std::set<std::string>{"p", "q"});
  CHECK(modal_depth(f) == 2);
  CHECK(formula_size(f) == 8);
}

TEST_CASE("property: local and recursive embeddings agree up to depth 6") {
  Random rng(kDefaultSeed);
  for (int n = 0; n < 500; ++n) {
    const M f = random_modal(rng, atom_names(3), 6);
    CAPTURE(to_string(f));
    const Term rec = embed_recursive(f);
    CHECK(type_of({}, rec) == world_predicate_type());
    CHECK(alpha_beta_eta_eq(embed_local(f), rec));
    CHECK(alpha_equal(nf(embed_local(f)), rec));
    CHECK(parse_modal(to_string(f)) == f);
  }
}

TEST_CASE("property: derived connectives embed as their expansions") {
  Random rng(kDefaultSeed + 1);
  for (int n = 0; n < 200; ++n) {
    const M a = random_modal(rng, atom_names(2), 3);
    const M b = random_modal(rng, atom_names(2), 3);
    CHECK(alpha_beta_eta_eq(embed_recursive(M::implies(a, b)), embed_recursive(M::disjunction(M::negation(a), b))));
    CHECK(alpha_beta_eta_eq(embed_recursive(M::diamond(a)), embed_recursive(M::negation(M::box(M::negation(a))))));
    CHECK(alpha_beta_eta_eq(embed_recursive(M::conjunction(a, b)),
                            embed_recursive(M::negation(M::disjunction(M::negation(a), M::negation(b))))));
  }
}
