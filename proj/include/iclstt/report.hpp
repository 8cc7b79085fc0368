// Running problems through the decision procedures and collecting verdicts.

#ifndef ICLSTT_REPORT_HPP
#define ICLSTT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "iclstt/icl.hpp"
#include "iclstt/kripke.hpp"
#include "iclstt/tableau.hpp"

namespace iclstt {

enum class Engine { Tableau, Models, Both };

// "tableau", "models", "both".
std::string to_string(Engine e);
Engine parse_engine(std::string_view text);

enum class VerdictKind { Valid, Countermodel, Unknown };

struct RunEntry {
  std::string name;
  std::string tptp;
  Dialect dialect = Dialect::ICL;
  Logic logic = Logic::K;
  VerdictKind verdict = VerdictKind::Unknown;
  // Set for Countermodel; re-verified with satisfies before it is stored.
  std::optional<CountermodelReport> countermodel;
  // Why the verdict is Unknown, or what the engines disagreed on.
  std::string note;
  // Set when two engines contradict each other.
  bool alarm = false;
  // Set when an engine gave up on its node or model budget.
  bool resource_limit = false;
  double seconds = 0;
  std::optional<Expected> expected;
  std::optional<double> reference_seconds;

  // False when there is no expectation.
  bool match() const;
  // "Valid", "Countermodel(2)" or "Unknown".
  std::string verdict_text() const;
};

struct RunOptions {
  Engine engine = Engine::Both;
  SearchOptions search;
  TableauOptions tableau;
};

// Decides the problem's conjecture from its assumptions in its own logic.
// With Tableau the countermodel is the one read off the open tableau; with
// Models and Both it is the least one found by the bounded search (Both
// falls back to the tableau model when it is larger than the bound). Models
// alone reports Unknown when the search finds nothing. Both sets `alarm` when
// the tableau says Valid and the search finds a countermodel.
RunEntry run_problem(const Problem& p, const RunOptions& options = {});

// The same for modal premises and goal; dialect and expectation stay unset.
RunEntry run_modal(const std::string& name, const std::vector<ModalFormula>& premises, const ModalFormula& goal,
                   Logic logic, const RunOptions& options = {});

struct RunReport {
  std::vector<RunEntry> entries;
  double seconds = 0;

  bool all_match() const;
  bool any_alarm() const;
  bool any_resource_limit() const;
  // Aligned text table, one row per entry plus a summary line. Without
  // times the text depends only on the problems and options.
  std::string table(bool with_times = true) const;
};

RunReport run_problems(const std::vector<Problem>& problems, const RunOptions& options = {});

}  // namespace iclstt

#endif  // ICLSTT_REPORT_HPP
