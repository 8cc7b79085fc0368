#include "iclstt/report.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

namespace iclstt {

std::string to_string(Engine e) {
  switch (e) {
    case Engine::Tableau: return "tableau";
    case Engine::Models: return "models";
    case Engine::Both: return "both";
  }
  return "?";
}

Engine parse_engine(std::string_view text) {
  if (text == "tableau") return Engine::Tableau;
  if (text == "models") return Engine::Models;
  if (text == "both") return Engine::Both;
  throw std::invalid_argument("unknown engine '" + std::string(text) + "' (tableau, models or both)");
}

bool RunEntry::match() const {
  if (!expected) return false;
  return (*expected == Expected::Provable && verdict == VerdictKind::Valid) ||
         (*expected == Expected::Countermodel && verdict == VerdictKind::Countermodel);
}

std::string RunEntry::verdict_text() const {
  switch (verdict) {
    case VerdictKind::Valid: return "Valid";
    case VerdictKind::Countermodel:
      return "Countermodel(" + std::to_string(countermodel ? countermodel->model.size() : 0) + ")";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

void set_countermodel(RunEntry& e, CountermodelReport r) {
  if (!verify_countermodel(r)) {
    e.alarm = true;
    e.note = "countermodel failed re-verification";
    e.verdict = VerdictKind::Unknown;
    return;
  }
  e.verdict = VerdictKind::Countermodel;
  e.countermodel = std::move(r);
}

}  // namespace

RunEntry run_problem(const Problem& p, const RunOptions& options) {
  if (!p.conjecture) throw std::invalid_argument("problem " + p.name + " has no conjecture");
  RunEntry e = run_modal(p.name, modal_premises(p), modal_goal(p), p.logic(), options);
  e.tptp = p.tptp;
  e.dialect = p.dialect;
  e.expected = p.expected;
  e.reference_seconds = p.reference_seconds;
  return e;
}

RunEntry run_modal(const std::string& name, const std::vector<ModalFormula>& premises, const ModalFormula& goal,
                   Logic logic, const RunOptions& options) {
  RunEntry e;
  e.name = name;
  e.logic = logic;
  const auto start = Clock::now();
  try {
    std::optional<Verdict> v;
    if (options.engine != Engine::Models) v = decide(goal, premises, e.logic, options.tableau);
    if (options.engine == Engine::Tableau) {
      if (v->valid) {
        e.verdict = VerdictKind::Valid;
      } else if (v->countermodel) {
        set_countermodel(e, {*v->countermodel, 0, goal, premises, e.logic});
      } else {
        e.note = "invalid, but the open tableau has too many worlds to print";
      }
    } else {
      auto found = find_countermodel(premises, goal, e.logic, options.search);
      if (options.engine == Engine::Models) {
        if (found) {
          set_countermodel(e, std::move(*found));
        } else {
          e.note = "no countermodel with at most " + std::to_string(options.search.max_worlds) + " worlds";
        }
      } else if (v->valid) {
        if (found) {
          e.alarm = true;
          e.note = "tableau says Valid but the search found a countermodel";
          set_countermodel(e, std::move(*found));
        } else {
          e.verdict = VerdictKind::Valid;
        }
      } else if (found) {
        set_countermodel(e, std::move(*found));
      } else if (v->countermodel) {
        e.note = "countermodel from the tableau; none with at most " + std::to_string(options.search.max_worlds) +
                 " worlds";
        set_countermodel(e, {*v->countermodel, 0, goal, premises, e.logic});
      } else {
        e.note = "tableau says invalid; its model is too large and the search found none";
      }
    }
  } catch (const ResourceLimit& ex) {
    e.verdict = VerdictKind::Unknown;
    e.countermodel.reset();
    e.resource_limit = true;
    e.note = ex.what();
  }
  e.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return e;
}

bool RunReport::all_match() const {
  return std::all_of(entries.begin(), entries.end(), [](const RunEntry& e) { return e.match() && !e.alarm; });
}

bool RunReport::any_alarm() const {
  return std::any_of(entries.begin(), entries.end(), [](const RunEntry& e) { return e.alarm; });
}

bool RunReport::any_resource_limit() const {
  return std::any_of(entries.begin(), entries.end(), [](const RunEntry& e) { return e.resource_limit; });
}

std::string RunReport::table(bool with_times) const {
  std::vector<std::string> head = {"problem", "tptp", "dialect", "logic", "verdict", "expected", "match"};
  if (with_times) {
    head.push_back("time(s)");
    head.push_back("ref(s)");
  }
  std::vector<std::vector<std::string>> rows;
  auto fixed = [](double x, int digits) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(digits) << x;
    return out.str();
  };
  for (const auto& e : entries) {
    rows.push_back({e.name, e.tptp, to_string(e.dialect), to_string(e.logic), e.verdict_text(),
                    e.expected ? to_string(*e.expected) : "-", e.expected ? (e.match() ? "yes" : "NO") : "-"});
    if (with_times) {
      rows.back().push_back(fixed(e.seconds, 3));
      rows.back().push_back(e.reference_seconds ? fixed(*e.reference_seconds, 3) : "--");
    }
  }
  std::vector<std::size_t> width(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) {
    width[c] = head[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c + 1 == cells.size()) {
        out << cells[c] << "\n";
      } else {
        out << std::left << std::setw(static_cast<int>(width[c])) << cells[c] << "  ";
      }
    }
  };
  line(head);
  for (const auto& r : rows) line(r);
  std::size_t matched = 0;
  std::vector<std::string> mismatched;
  for (const auto& e : entries) {
    if (e.match() && !e.alarm)
      ++matched;
    else
      mismatched.push_back(e.name);
  }
  out << entries.size() << " problems, " << matched << " match";
  if (!mismatched.empty()) {
    out << "; mismatches:";
    for (const auto& n : mismatched) out << " " << n;
  }
  if (with_times) out << " (" << fixed(seconds, 2) << " s)";
  out << "\n";
  for (const auto& e : entries)
    if (!e.note.empty()) out << e.name << ": " << e.note << "\n";
  return out.str();
}

RunReport run_problems(const std::vector<Problem>& problems, const RunOptions& options) {
  RunReport r;
  const auto start = Clock::now();
  for (const auto& p : problems) r.entries.push_back(run_problem(p, options));
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

}  // namespace iclstt
