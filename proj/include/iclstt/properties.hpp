// Randomized and exhaustive property suites shared by the selfcheck command,
// the acceptance binary and the unit tests.

#ifndef ICLSTT_PROPERTIES_HPP
#define ICLSTT_PROPERTIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "iclstt/random.hpp"

namespace iclstt {

struct PropertyResult {
  std::string name;
  std::uint64_t trials = 0;
  std::vector<std::string> failures;  // one description per failing trial
  double seconds = 0;

  bool ok() const { return failures.empty(); }
  // "name: N trials, F failures (S s)".
  std::string summary() const;
};

// The direct embedding of f normalizes to the recursive embedding of the modal translation of f,
// over random formulas cycling through the three dialects.
PropertyResult check_icl_factorization(std::uint64_t seed, int trials, int max_depth = 4);

// The local embedding of g normalizes to its recursive embedding.
PropertyResult check_modal_factorization(std::uint64_t seed, int trials, int max_depth = 4);

// For random models and formulas, at every world w: w satisfies f, the
// recursive embedding of f holds at w in the induced standard model, and the
// normalized local embedding holds at w, all agree.
PropertyResult check_lemma_correspondence(std::uint64_t seed, int trials, int max_worlds = 4,
                                          int max_atoms = 3, int max_depth = 4);

// Axioms R and T hold exactly for the preorders, for iota sizes 1..max_iota.
PropertyResult check_frame_correspondence_upto(int max_iota);

// Tableau Valid implies no countermodel up to valid_bound worlds; tableau
// Invalid implies the bounded search finds one up to invalid_bound worlds.
// Alternates K and S4. Also checks that each tableau countermodel verifies.
PropertyResult check_prover_agreement(std::uint64_t seed, int trials, int valid_bound = 4,
                                      int invalid_bound = 5, int max_atoms = 3, int max_depth = 4);

// Evaluating a term and its βη-normal form gives the same value.
PropertyResult check_beta_eta_stability(std::uint64_t seed, int trials);

// For random f: no K countermodel up to n worlds iff mval of its embedding is
// true in every standard model with at most n individuals.
PropertyResult check_validity_transfer(std::uint64_t seed, int trials, int max_iota = 3);

enum class CheckLevel { Fast, Full };

// The selfcheck suites at the given level.
std::vector<PropertyResult> run_selfcheck(CheckLevel level, std::uint64_t seed);

}  // namespace iclstt

#endif  // ICLSTT_PROPERTIES_HPP
