#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iclstt/corpus.hpp"
#include "iclstt/kripke.hpp"
#include "iclstt/random.hpp"

using namespace iclstt;

namespace {

using M = ModalFormula;

// Reference implementation: a plain recursive evaluator over an adjacency
// matrix and an exhaustive search over every relation and valuation, with no
// rootedness or symmetry reduction.
struct Naive {
  int n;
  std::vector<std::vector<bool>> rel;
  std::map<std::string, std::vector<bool>> val;

  bool holds(int w, const M& f) const {
    switch (f.kind()) {
      case M::Kind::Atom: return val.at(f.name())[static_cast<std::size_t>(w)];
      case M::Kind::Top: return true;
      case M::Kind::Bottom: return false;
      case M::Kind::Not: return !holds(w, f.left());
      case M::Kind::Or: return holds(w, f.left()) || holds(w, f.right());
      case M::Kind::And: return holds(w, f.left()) && holds(w, f.right());
      case M::Kind::Implies: return !holds(w, f.left()) || holds(w, f.right());
      case M::Kind::Box:
        for (int v = 0; v < n; ++v)
          if (rel[w][v] && !holds(v, f.left())) return false;
        return true;
      case M::Kind::Diamond:
        for (int v = 0; v < n; ++v)
          if (rel[w][v] && holds(v, f.left())) return true;
        return false;
    }
    return false;
  }
};

bool naive_countermodel_exists(const std::vector<M>& premises, const M& goal, Logic logic, int n) {
  std::set<std::string> atoms = atoms_of(goal);
  for (const auto& p : premises)
    for (const auto& a : atoms_of(p)) atoms.insert(a);
  const std::vector<std::string> names(atoms.begin(), atoms.end());
  const int cells = n * n;
  const int vbits = n * static_cast<int>(names.size());
  for (std::uint64_t r = 0; r < (1ull << cells); ++r) {
    Naive m{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n)), {}};
    for (int k = 0; k < cells; ++k) m.rel[k / n][k % n] = (r >> k) & 1u;
    if (logic == Logic::S4) {
      bool ok = true;
      for (int a = 0; a < n; ++a) {
        ok = ok && m.rel[a][a];
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) ok = ok && (!m.rel[a][b] || !m.rel[b][c] || m.rel[a][c]);
      }
      if (!ok) continue;
    }
    for (std::uint64_t v = 0; v < (1ull << vbits); ++v) {
      for (std::size_t i = 0; i < names.size(); ++i) {
        std::vector<bool> bits(n);
        for (int w = 0; w < n; ++w) bits[w] = (v >> (static_cast<int>(i) * n + w)) & 1u;
        m.val[names[i]] = bits;
      }
      bool premises_ok = true;
      for (int w = 0; w < n && premises_ok; ++w)
        for (const auto& p : premises) premises_ok = premises_ok && m.holds(w, p);
      if (!premises_ok) continue;
      for (int w = 0; w < n; ++w)
        if (!m.holds(w, goal)) return true;
    }
  }
  return false;
}

// Least world count with a countermodel, or 0 if none up to `bound`.
int naive_min_size(const std::vector<M>& premises, const M& goal, Logic logic, int bound) {
  for (int n = 1; n <= bound; ++n)
    if (naive_countermodel_exists(premises, goal, logic, n)) return n;
  return 0;
}

const M p = M::atom("p");
const M q = M::atom("q");

}  // namespace

TEST_CASE("satisfaction") {
  KripkeModel m(3);
  m.relate(0, 1);
  m.relate(0, 2);
  m.relate(1, 1);
  m.valuation["p"] = 0b110;
  m.valuation["q"] = 0b010;
  CHECK(satisfies(m, 0, M::box(p)));
  CHECK_FALSE(satisfies(m, 0, M::box(q)));
  CHECK(satisfies(m, 0, M::diamond(q)));
  CHECK(satisfies(m, 2, M::box(M::bottom())));
  CHECK_FALSE(satisfies(m, 2, M::diamond(M::top())));
  CHECK(truth_set(m, M::implies(M::box(p), p)) == 0b110);
  CHECK(truth_set(m, M::conjunction(p, M::negation(q))) == 0b100);
  CHECK_FALSE(valid_in_model(m, p));
  CHECK(valid_in_model(m, M::box(p)));
  CHECK_THROWS_AS(satisfies(m, 0, M::atom("s")), UnknownAtom);
  CHECK(m.pairs() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 1}});
}

TEST_CASE("frame properties") {
  const std::vector<WorldSet> chain = {0b010, 0b100, 0b000};
  CHECK_FALSE(is_reflexive(chain));
  CHECK_FALSE(is_transitive(chain));
  const auto closed = reflexive_transitive_closure(chain);
  CHECK(closed == std::vector<WorldSet>{0b111, 0b110, 0b100});
  CHECK(is_preorder(closed));
  CHECK(reflexive_transitive_closure(closed) == closed);
}

TEST_CASE("small validities and countermodels") {
  CHECK_FALSE(find_countermodel({}, M::box(M::top()), Logic::K));
  CHECK_FALSE(find_countermodel({}, M::implies(M::box(p), M::box(p)), Logic::K));
  CHECK_FALSE(find_countermodel({}, M::implies(M::box(p), p), Logic::S4));

  const auto t = find_countermodel({}, M::implies(M::box(p), p), Logic::K);
  REQUIRE(t);
  CHECK(t->model.size() == 1);
  CHECK(t->model.pairs().empty());
  CHECK(verify_countermodel(*t));

  const auto four = find_countermodel({}, M::implies(M::box(p), M::box(M::box(p))), Logic::K);
  REQUIRE(four);
  // 0 and 1 see each other with p only at 1.
  CHECK(four->model.size() == 2);
  CHECK(naive_min_size({}, M::implies(M::box(p), M::box(M::box(p))), Logic::K, 2) == 2);
  CHECK(verify_countermodel(*four));

  // The disjunction below is not K-valid: one reflexive world with a true
  // and b false refutes both disjuncts.
  const M dia = parse_modal("dia (a -> b) | (box a -> box b)");
  const auto cm = find_countermodel({}, dia, Logic::K);
  REQUIRE(cm);
  CHECK(cm->model.size() == 1);
  CHECK(cm->model.pairs() == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(naive_min_size({}, dia, Logic::K, 2) == 1);
}

TEST_CASE("premises must hold everywhere") {
  // With p valid as a premise, box p is forced.
  CHECK_FALSE(find_countermodel({p}, M::box(p), Logic::K));
  CHECK(find_countermodel({M::implies(p, q)}, q, Logic::K));
}

TEST_CASE("S4 search only returns preorders") {
  const auto cm = find_countermodel({}, M::implies(M::diamond(M::box(p)), M::box(M::diamond(p))), Logic::S4);
  REQUIRE(cm);
  CHECK(is_preorder(cm->model.successors));
  CHECK(verify_countermodel(*cm));
  CountermodelReport bad = *cm;
  bad.model.successors[0] = 0;  // no longer reflexive
  bad.logic = Logic::S4;
  CHECK_FALSE(verify_countermodel(bad));
}

TEST_CASE("budget is enforced") {
  SearchOptions opts;
  opts.max_worlds = 4;
  opts.budget = 10;
  CHECK_THROWS_AS(find_countermodel({}, parse_modal("box box box p -> p"), Logic::S4, opts), ResourceLimit);
  SearchStats stats;
  find_countermodel({}, M::box(M::top()), Logic::K, {}, &stats);
  CHECK(stats.frames > 0);
  CHECK(stats.pairs >= stats.frames);
}

TEST_CASE("corpus: minimum countermodel sizes") {
  // Frozen from the naive search above: every K problem expected to have a
  // countermodel has one with 2 worlds and none with 1; the rest have none
  // with up to 2 worlds.
  for (const auto& prob : corpus()) {
    CAPTURE(prob.name);
    const auto premises = modal_premises(prob);
    const M goal = modal_goal(prob);
    const bool expect_cm = *prob.expected == Expected::Countermodel;
    const auto found = find_countermodel(premises, goal, prob.logic(), SearchOptions{expect_cm ? 5 : 3});
    if (prob.logic() == Logic::K) {
      if (expect_cm) {
        REQUIRE(found);
        CHECK(found->model.size() == 2);
        CHECK(verify_countermodel(*found));
        CHECK(naive_min_size(premises, goal, Logic::K, 2) == 2);
      } else {
        CHECK_FALSE(found);
        CHECK(naive_min_size(premises, goal, Logic::K, 2) == 0);
      }
    } else if (prob.name == "Ex3") {
      // As stated, the third example is refutable in S4 with 2 worlds.
      REQUIRE(found);
      CHECK(found->model.size() == 2);
      CHECK(verify_countermodel(*found));
      CHECK(naive_min_size(premises, goal, Logic::S4, 2) == 2);
    } else {
      CHECK_FALSE(found);
      CHECK(naive_min_size(premises, goal, Logic::S4, 2) == 0);
    }
  }
}

TEST_CASE("property: search agrees with the naive enumeration up to 3 worlds") {
  Random rng(kDefaultSeed);
  for (int n = 0; n < 120; ++n) {
    const Logic logic = n % 2 ? Logic::S4 : Logic::K;
    const M f = random_modal(rng, atom_names(2), 3);
    CAPTURE(to_string(f));
    const int naive = naive_min_size({}, f, logic, 3);
    const auto found = find_countermodel({}, f, logic, SearchOptions{3});
    CHECK(static_cast<bool>(found) == (naive != 0));
    if (found) {
      CHECK(found->model.size() == naive);
      CHECK(verify_countermodel(*found));
      CHECK(found->witness == 0);
    }
  }
}

TEST_CASE("property: truth sets respect the connectives") {
  Random rng(kDefaultSeed + 3);
  for (int n = 0; n < 300; ++n) {
    const KripkeModel m = random_kripke(rng, 4, atom_names(2), n % 2 == 1);
    const M a = random_modal(rng, atom_names(2), 3);
    const M b = random_modal(rng, atom_names(2), 3);
    const WorldSet all = m.all_worlds();
    CHECK(truth_set(m, M::negation(a)) == (all & ~truth_set(m, a)));
    CHECK(truth_set(m, M::conjunction(a, b)) == (truth_set(m, a) & truth_set(m, b)));
    CHECK(truth_set(m, M::diamond(a)) == truth_set(m, M::negation(M::box(M::negation(a)))));
    if (n % 2 == 1) {
      CHECK(is_preorder(m.successors));
      CHECK(valid_in_model(m, M::implies(M::box(a), a)));
      CHECK(valid_in_model(m, M::implies(M::box(a), M::box(M::box(a)))));
    }
  }
}
