// Tableau decision procedure for K and S4 with global premises.

#ifndef ICLSTT_TABLEAU_HPP
#define ICLSTT_TABLEAU_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "iclstt/icl.hpp"
#include "iclstt/kripke.hpp"
#include "iclstt/modal.hpp"

namespace iclstt {

struct TableauOptions {
  // Receives one line per rule application when set.
  std::ostream* trace = nullptr;
  // Tableau nodes created before giving up with ResourceLimit.
  std::uint64_t node_limit = 5'000'000;
};

struct Verdict {
  bool valid = false;
  // For invalid input: a model built from the open tableau, with the goal
  // false at world 0 and every premise true everywhere (S4: a preorder).
  // Absent when the open tableau has more worlds than a KripkeModel holds.
  std::optional<KripkeModel> countermodel;
  std::uint64_t nodes = 0;
};

// Decides whether `goal` holds at every world of every K (or S4) model in
// which every premise holds at every world.
Verdict decide(const ModalFormula& goal, const std::vector<ModalFormula>& premises, Logic logic,
               const TableauOptions& options = {});

// Translates the problem's assumptions and conjecture and decides them in the
// problem's logic.
Verdict prove_problem(const Problem& p, const TableauOptions& options = {});

}  // namespace iclstt

#endif  // ICLSTT_TABLEAU_HPP
