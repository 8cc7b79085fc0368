// Finite Kripke models with one accessibility relation, satisfaction, and
// exhaustive bounded countermodel search for K and S4.

#ifndef ICLSTT_KRIPKE_HPP
#define ICLSTT_KRIPKE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "iclstt/icl.hpp"
#include "iclstt/modal.hpp"

namespace iclstt {

// A set of worlds as a bitmask; models have at most 64 worlds.
using WorldSet = std::uint64_t;
inline constexpr int kMaxWorlds = 64;

struct KripkeModel {
  explicit KripkeModel(int worlds = 1);

  int size() const { return static_cast<int>(successors.size()); }
  bool related(int from, int to) const { return (successors.at(from) >> to) & 1u; }
  void relate(int from, int to);
  // Sorted (from, to) pairs.
  std::vector<std::pair<int, int>> pairs() const;
  WorldSet all_worlds() const;

  std::vector<WorldSet> successors;  // successors[w]: worlds reachable in one step
  std::map<std::string, WorldSet> valuation;

  friend bool operator==(const KripkeModel&, const KripkeModel&) = default;
};

struct UnknownAtom : std::runtime_error {
  explicit UnknownAtom(const std::string& atom) : std::runtime_error("atom '" + atom + "' has no valuation"), atom(atom) {}
  std::string atom;
};

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Worlds of m where f holds. Atoms missing from the valuation throw
// UnknownAtom.
WorldSet truth_set(const KripkeModel& m, const ModalFormula& f);
bool satisfies(const KripkeModel& m, int world, const ModalFormula& f);
bool valid_in_model(const KripkeModel& m, const ModalFormula& f);

bool is_reflexive(const std::vector<WorldSet>& rel);
bool is_transitive(const std::vector<WorldSet>& rel);
bool is_preorder(const std::vector<WorldSet>& rel);
std::vector<WorldSet> reflexive_transitive_closure(std::vector<WorldSet> rel);

struct CountermodelReport {
  KripkeModel model;
  int witness = 0;
  ModalFormula goal = ModalFormula::top();
  std::vector<ModalFormula> premises;
  Logic logic = Logic::K;
};

// worlds/relation/valuation/witness as indented plain text.
std::string to_string(const CountermodelReport& r);

struct SearchOptions {
  int max_worlds = 4;
  // Frame/valuation pairs examined before giving up with ResourceLimit.
  std::uint64_t budget = 100'000'000;
};

struct SearchStats {
  std::uint64_t frames = 0;
  std::uint64_t pairs = 0;
};

// Searches for a model in which every premise holds at every world and the
// goal fails at world 0, with world counts ascending from 1. Only frames in
// which world 0 reaches every world are tried, one or more per isomorphism
// class; for S4 only preorders. The first model found is the least by
// (worlds, relation encoding, valuation index). Returning nullopt means there
// is no countermodel with at most max_worlds worlds.
std::optional<CountermodelReport> find_countermodel(const std::vector<ModalFormula>& premises,
                                                    const ModalFormula& goal, Logic logic,
                                                    const SearchOptions& options = {},
                                                    SearchStats* stats = nullptr);

// True iff the report's model is a countermodel: premises valid, goal false
// at the witness, and a preorder for S4. Evaluated with satisfies.
bool verify_countermodel(const CountermodelReport& r);

// Translated premises and goal of a problem.
std::vector<ModalFormula> modal_premises(const Problem& p);
ModalFormula modal_goal(const Problem& p);

}  // namespace iclstt

#endif  // ICLSTT_KRIPKE_HPP
