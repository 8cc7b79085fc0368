#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iclstt/icl.hpp"
#include "iclstt/modal.hpp"
#include "iclstt/random.hpp"
#include "iclstt/stt.hpp"

using namespace iclstt;

namespace {

const SimpleType o = SimpleType::o();
const SimpleType i = SimpleType::iota();
const SimpleType io = world_predicate_type();

// Random well-typed term of type `t` with plenty of redexes: applications are
// often built as (λX. body) arg.
class TermGen {
 public:
  explicit TermGen(std::uint64_t seed) : rng_(seed) {}

  Term make(const SimpleType& t, int depth) {
    std::vector<Term> leaves;
    for (const auto& v : scope_)
      if (v.type == t) leaves.push_back(Term::var(v));
    if (t == o) leaves.push_back(Term::truth());
    if (t == i) leaves.push_back(Term::constant("c", i));
    if (t == io) leaves.push_back(Term::constant("p", io));
    if (t == relation_type()) leaves.push_back(Term::constant("r", relation_type()));
    if (depth <= 0 && !leaves.empty()) return rng_.pick(leaves);
    switch (rng_.below(t.is_arrow() ? 3 : 4)) {
      case 0:
        if (!leaves.empty()) return rng_.pick(leaves);
        [[fallthrough]];
      case 1:
        if (t.is_arrow()) return lambda(t, depth);
        [[fallthrough]];
      case 2: {
        // (λX:β. body) arg
        const SimpleType beta = rng_.coin() ? i : io;
        const Symbol x = fresh(beta);
        scope_.push_back(x);
        Term body = make(t, depth - 1);
        scope_.pop_back();
        return Term::app(Term::lambda(x, body), make(beta, depth - 1));
      }
      default: {
        if (t.is_arrow()) return lambda(t, depth);
        if (t != o) return rng_.pick(leaves);
        switch (rng_.below(3)) {
          case 0: return mk_not(make(o, depth - 1));
          case 1: return mk_or(make(o, depth - 1), make(o, depth - 1));
          default: {
            const Symbol x = fresh(i);
            scope_.push_back(x);
            Term body = make(o, depth - 1);
            scope_.pop_back();
            return mk_forall(x, body);
          }
        }
      }
    }
  }

 private:
  Term lambda(const SimpleType& t, int depth) {
    const Symbol x = fresh(t.domain());
    scope_.push_back(x);
    Term body = make(t.codomain(), depth - 1);
    scope_.pop_back();
    return Term::lambda(x, body);
  }

  Symbol fresh(const SimpleType& t) {
    // Reuse a small pool of names so shadowing and capture situations arise.
    static const std::vector<std::string> names = {"X", "Y", "Z"};
    return {rng_.pick(names), t};
  }

  Random rng_;
  std::vector<Symbol> scope_;
};

const std::map<std::string, SimpleType> kConsts = {{"p", io}, {"q", io}, {"r", relation_type()}, {"c", i},
                                                   {"f", SimpleType::arrow(i, i)}, {"a", o}};

Term parse(std::string_view s) { return parse_term(s, kConsts); }

}  // namespace

TEST_CASE("types print right-associatively and compare structurally") {
  CHECK(relation_type().str() == "ι→ι→o");
  CHECK(SimpleType::arrow(io, o).str() == "(ι→o)→o");
  CHECK(parse_type("(i->o)->o") == SimpleType::arrow(io, o));
  CHECK(parse_type("i->i->o") == relation_type());
  CHECK_FALSE(io == relation_type());
}

TEST_CASE("type_of") {
  CHECK(type_of({}, Term::lambda("X", i, Term::var("X", i))) == SimpleType::arrow(i, i));
  CHECK(type_of({}, Term::app(Term::neg(), Term::constant("p", o))) == o);
  CHECK(type_of({}, embed_recursive(ModalFormula::box(ModalFormula::atom("p")))) == io);
  CHECK_THROWS_AS(type_of({}, Term::app(Term::neg(), Term::constant("c", i))), TypeError);
  CHECK_THROWS_AS(type_of({}, Term::var("X", i)), UnboundVariable);
  CHECK(type_of({{"X", i}}, Term::var("X", i)) == i);
}

TEST_CASE("same name with different types gives distinct symbols") {
  const Term a = Term::constant("p", o);
  const Term b = Term::constant("p", io);
  CHECK_FALSE(alpha_equal(a, b));
  CHECK(constants_of(mk_or(a, Term::app(b, Term::constant("c", i)))).size() == 3);
}

TEST_CASE("substitute") {
  const Symbol x{"X", io};
  const Term p = Term::constant("p", io);
  CHECK(alpha_equal(substitute(Term::var(x), x, p), p));

  SUBCASE("renames a binder that would capture") {
    const Symbol xi{"X", i};
    const Symbol y{"Y", i};
    const Term body = Term::lambda(y, apply(Term::constant("r", relation_type()), {Term::var(xi), Term::var(y)}));
    const Term out = substitute(body, xi, Term::var(y));
    REQUIRE(out.is_lambda());
    CHECK(out.name() == "Y1");
    CHECK(to_string(out) == "λY1:ι. r Y Y1");
  }

  SUBCASE("renames on a name clash even across types") {
    const Symbol xf{"X", io};
    const Symbol y{"Y", i};
    const Term body = Term::lambda(y, Term::app(Term::var(xf), Term::var(y)));
    const Term out = substitute(body, xf, Term::var("Y", io));
    CHECK(to_string(out) == "λY1:ι. Y Y1");
  }

  SUBCASE("leaves bound occurrences alone") {
    const Term id = Term::lambda(x, Term::var(x));
    CHECK(alpha_equal(substitute(id, x, p), id));
  }

  CHECK_THROWS_AS(substitute(Term::var(x), x, Term::constant("c", i)), TypeError);
}

TEST_CASE("beta and eta steps") {
  const Term w = Term::constant("c", i);
  CHECK(alpha_equal(beta_eta_normalize(parse("(λX:ι. p X) c")), Term::app(Term::constant("p", io), w)));
  CHECK(alpha_equal(beta_eta_normalize(parse("λX:ι. p X")), Term::constant("p", io)));
  // λX. f X X is not an η-redex.
  const Term g = parse_term("λX:ι. g X X", {{"g", SimpleType::arrow(i, relation_type().codomain())}});
  CHECK(is_beta_eta_normal(g));
  CHECK(alpha_equal(beta_eta_normalize(g), g));
}

TEST_CASE("local disjunction of boxes normalizes to the recursive embedding") {
  using namespace lifted;
  const Term t = apply(disj(), {apply(box(), {relation(), atom("p")}), apply(box(), {relation(), atom("q")})});
  const ModalFormula f = ModalFormula::disjunction(ModalFormula::box(ModalFormula::atom("p")),
                                                   ModalFormula::box(ModalFormula::atom("q")));
  CHECK(alpha_equal(beta_eta_normalize(t), embed_recursive(f)));
  CHECK(to_string(beta_eta_normalize(t)) == "λX:ι. (∀Y:ι. r X Y ⇒ p Y) ∨ (∀Y:ι. r X Y ⇒ q Y)");
}

TEST_CASE("alpha_beta_eta_eq") {
  CHECK(alpha_beta_eta_eq(parse("λX:ι. X"), parse("λY:ι. Y")));
  CHECK(alpha_beta_eta_eq(parse("λX:ι. p X"), parse("p")));
  CHECK_FALSE(alpha_beta_eta_eq(parse("p"), parse("q")));
  CHECK_THROWS_AS(alpha_beta_eta_eq(parse("p"), parse("c")), TypeError);

  SUBCASE("says false embeds as its modal translation") {
    const IclFormula f = parse_icl("admin says false", Dialect::ICL);
    CHECK(alpha_beta_eta_eq(embed_icl(f), embed_recursive(translate_to_modal(f))));
  }
}

TEST_CASE("printer and parser round-trip") {
  for (const char* s : {"λX:ι. ∀Y:ι. r X Y ⇒ p Y", "∀W:ι. ⊤", "a ∨ ¬a", "λX:ι. p X ∧ q X", "(¬)", "(∨) a",
                        "Π[ι] q", "λX:ι→o. X (f c)"}) {
    CAPTURE(s);
    const Term t = parse(s);
    CHECK(to_string(t) == s);
    CHECK(alpha_equal(parse(to_string(t)), t));
  }
  CHECK(alpha_equal(parse("\\X:i. !Y:i. r X Y => p Y"), parse("λX:ι. ∀Y:ι. r X Y ⇒ p Y")));
  CHECK_THROWS_AS(parse("λX:ι."), TermSyntaxError);
  CHECK_THROWS_AS(parse("zz"), TermSyntaxError);
}

TEST_CASE("fresh names are deterministic") {
  const Term t = beta_eta_normalize(Term::app(embed_local(parse_modal("box box p")), Term::constant("c", i)));
  CHECK(to_string(t) == to_string(beta_eta_normalize(Term::app(embed_local(parse_modal("box box p")),
                                                                   Term::constant("c", i)))));
  CHECK(to_string(t) == "∀Y:ι. r c Y ⇒ (∀Y1:ι. r Y Y1 ⇒ p Y1)");
}

TEST_CASE("property: normalization preserves types, is idempotent, and yields normal forms") {
  TermGen gen(kDefaultSeed);
  const std::vector<SimpleType> targets = {o, io, relation_type(), SimpleType::arrow(io, o)};
  for (int n = 0; n < 400; ++n) {
    const SimpleType& t = targets[static_cast<std::size_t>(n) % targets.size()];
    const Term s = gen.make(t, 5);
    CAPTURE(to_string(s));
    const Term nf = beta_eta_normalize(s);
    CHECK(type_of({}, nf) == t);
    CHECK(is_beta_eta_normal(nf));
    CHECK(alpha_equal(beta_eta_normalize(nf), nf));
    CHECK(alpha_beta_eta_eq(s, nf));
  }
}

TEST_CASE("property: substitution lemma") {
  TermGen gen(kDefaultSeed + 7);
  for (int n = 0; n < 300; ++n) {
    const SimpleType beta = n % 2 ? i : io;
    const Term lam = gen.make(SimpleType::arrow(beta, o), 4);
    const Term arg = gen.make(beta, 3);
    if (!lam.is_lambda()) continue;
    CAPTURE(to_string(lam));
    CAPTURE(to_string(arg));
    const Term left = beta_eta_normalize(Term::app(lam, arg));
    const Term right = beta_eta_normalize(substitute(lam.body(), lam.symbol(), arg));
    CHECK(alpha_equal(left, right));
  }
}
