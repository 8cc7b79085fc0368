#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iclstt/properties.hpp"
#include "iclstt/random.hpp"

using namespace iclstt;

TEST_CASE("random generators are deterministic") {
  Random a(7), b(7);
  for (int n = 0; n < 50; ++n) CHECK(random_modal(a, atom_names(3), 4) == random_modal(b, atom_names(3), 4));
  CHECK(atom_names(3) == std::vector<std::string>{"p", "q", "s"});
}

TEST_CASE("random formulas stay within their bounds") {
  Random rng(kDefaultSeed);
  int valid_k = 0;
  for (int n = 0; n < 300; ++n) {
    const ModalFormula f = random_modal(rng, atom_names(3), 4);
    CHECK(modal_depth(f) <= 4);
    CHECK(atoms_of(f).size() <= 3);
    for (Dialect d : {Dialect::ICL, Dialect::SpeaksFor, Dialect::Boolean})
      CHECK(formula_depth(random_icl(rng, d, {"p"}, {"A"}, 4)) <= 4);
    const KripkeModel m = random_kripke(rng, 4, atom_names(2), true);
    CHECK(m.size() <= 4);
    CHECK(is_preorder(m.successors));
    valid_k += !find_countermodel({}, f, Logic::K, SearchOptions{3});
  }
  // Neither trivially valid nor trivially invalid.
  CHECK(valid_k > 20);
  CHECK(valid_k < 280);
}

TEST_CASE("property suites pass on small runs") {
  for (const auto& r : {check_icl_factorization(1, 100), check_modal_factorization(2, 100),
                        check_lemma_correspondence(3, 100), check_frame_correspondence_upto(2),
                        check_prover_agreement(4, 60), check_beta_eta_stability(5, 50),
                        check_validity_transfer(6, 5, 2)}) {
    CAPTURE(r.summary());
    CHECK(r.ok());
    CHECK(r.trials > 0);
  }
}

TEST_CASE("fast selfcheck") {
  const auto results = run_selfcheck(CheckLevel::Fast, kDefaultSeed);
  CHECK(results.size() == 7);
  for (const auto& r : results) {
    CAPTURE(r.summary());
    CHECK(r.ok());
  }
}
