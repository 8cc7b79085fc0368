// Command-line driver: translate, prove, countermodel, emit-thf,
// check-tables and selfcheck.
//
// Exit codes: 0 success, 1 usage or parse error, 2 mismatch or property
// failure, 3 resource limit.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "iclstt/corpus.hpp"
#include "iclstt/henkin.hpp"
#include "iclstt/properties.hpp"
#include "iclstt/report.hpp"
#include "iclstt/thf.hpp"

namespace {

using namespace iclstt;
using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kMismatch = 2;
constexpr int kResource = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Where the input comes from: a problem file, a corpus problem, a single ICL
// formula or a single modal formula.
struct Input {
  std::string file;
  std::string corpus_name;
  std::string formula;
  std::string modal;
  std::string dialect = "ICL";
  std::string logic;  // k, s4, or empty for the problem's own

  void add_to(CLI::App* cmd) {
    cmd->add_option("file", file, "Problem file ('-' reads standard input)");
    cmd->add_option("--corpus", corpus_name, "Corpus problem name, e.g. Ex1 or refl^K");
    cmd->add_option("--formula", formula, "A single ICL formula");
    cmd->add_option("--modal", modal, "A single modal formula");
    cmd->add_option("--dialect", dialect, "Dialect of --formula: ICL, ICL=> or ICLB");
    cmd->add_option("--logic", logic, "k or s4; overrides the problem's frame axioms")
        ->check(CLI::IsMember({"k", "s4", "K", "S4"}));
  }

  bool is_modal() const { return !modal.empty(); }

  std::optional<Logic> logic_override() const {
    if (logic.empty()) return std::nullopt;
    return logic == "s4" || logic == "S4" ? Logic::S4 : Logic::K;
  }

  void check_single_source() const {
    const int sources = !file.empty() + !corpus_name.empty() + !formula.empty() + !modal.empty();
    if (sources != 1) throw UsageError("give exactly one of: a file, --corpus, --formula, --modal");
  }

  Problem problem() const {
    check_single_source();
    Problem p;
    if (!file.empty()) {
      std::string text;
      if (file == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        std::ifstream in(file, std::ios::binary);
        if (!in) throw UsageError("cannot read " + file);
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      p = parse_problem(text);
    } else if (!corpus_name.empty()) {
      try {
        p = corpus_problem(corpus_name);
      } catch (const std::out_of_range&) {
        throw UsageError("no corpus problem named '" + corpus_name + "'");
      }
    } else if (!formula.empty()) {
      p.name = "formula";
      p.dialect = parse_dialect(dialect);
      p.conjecture = parse_icl(formula, p.dialect);
    } else {
      throw UsageError("a modal formula is not an access control problem");
    }
    // The expectation belongs to the problem's own logic.
    if (auto l = logic_override(); l && *l != p.logic()) {
      p = with_logic(p, *l);
      p.expected.reset();
      p.reference_seconds.reset();
    }
    return p;
  }
};

struct Globals {
  int max_worlds = 4;
  std::uint64_t budget = SearchOptions{}.budget;
  std::uint64_t seed = kDefaultSeed;

  SearchOptions search() const {
    SearchOptions o;
    o.max_worlds = max_worlds;
    o.budget = budget;
    return o;
  }
};

// ---------------------------------------------------------------------------

json countermodel_json(const CountermodelReport& r) {
  json relation = json::array();
  for (auto [a, b] : r.model.pairs()) relation.push_back({a, b});
  json valuation = json::object();
  for (const auto& [atom, set] : r.model.valuation) {
    json worlds = json::array();
    for (int w = 0; w < r.model.size(); ++w)
      if ((set >> w) & 1u) worlds.push_back(w);
    valuation[atom] = worlds;
  }
  return {{"worlds", r.model.size()},
          {"relation", relation},
          {"valuation", valuation},
          {"witness", r.witness},
          {"verified", verify_countermodel(r)}};
}

json entry_json(const RunEntry& e, bool with_times) {
  json j = {{"name", e.name},
            {"tptp", e.tptp},
            {"dialect", to_string(e.dialect)},
            {"logic", to_string(e.logic)},
            {"verdict", e.verdict == VerdictKind::Valid          ? "Valid"
                        : e.verdict == VerdictKind::Countermodel ? "Countermodel"
                                                                 : "Unknown"},
            {"expected", e.expected ? json(to_string(*e.expected)) : json(nullptr)},
            {"match", e.match()},
            {"alarm", e.alarm}};
  if (e.countermodel) j["countermodel"] = countermodel_json(*e.countermodel);
  if (!e.note.empty()) j["note"] = e.note;
  if (with_times) {
    j["seconds"] = e.seconds;
    j["reference_seconds"] = e.reference_seconds ? json(*e.reference_seconds) : json(nullptr);
  }
  return j;
}

int exit_for(const RunEntry& e) {
  if (e.resource_limit) return kResource;
  if (e.alarm || (e.expected && !e.match())) return kMismatch;
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_translate(const Input& in, const std::string& to, bool wrap_mval) {
  in.check_single_source();
  if (in.is_modal()) {
    const ModalFormula f = parse_modal(in.modal);
    if (to == "s4") {
      std::cout << to_string(f) << "\n";
    } else if (to == "stt") {
      const Term t = embed_recursive(f);
      std::cout << to_string(wrap_mval ? beta_eta_normalize(mval(t)) : t) << "\n";
    } else {
      throw UsageError("--to thf needs an access control problem or formula");
    }
    return kOk;
  }
  const Problem p = in.problem();
  if (to == "thf") {
    std::cout << render_problem(p).str();
    return kOk;
  }
  auto show = [&](const IclFormula& f) {
    if (to == "s4") return to_string(translate_to_modal(f));
    const Term t = embed_icl(f);
    return to_string(beta_eta_normalize(wrap_mval ? iclval(t) : t));
  };
  std::cout << "logic: " << to_string(p.logic()) << "\n";
  for (const auto& a : p.assumptions) std::cout << "assume: " << show(a) << "\n";
  if (p.conjecture) std::cout << "conjecture: " << show(*p.conjecture) << "\n";
  return kOk;
}

int cmd_prove(const Input& in, const Globals& g, const std::string& engine, bool trace, bool as_json) {
  in.check_single_source();
  RunOptions opts;
  opts.engine = parse_engine(engine);
  opts.search = g.search();
  if (trace) opts.tableau.trace = &std::cerr;
  RunEntry e;
  if (in.is_modal()) {
    e = run_modal("formula", {}, parse_modal(in.modal), in.logic_override().value_or(Logic::K), opts);
  } else {
    e = run_problem(in.problem(), opts);
  }
  if (as_json) {
    std::cout << entry_json(e, false).dump(2) << "\n";
    return exit_for(e);
  }
  std::cout << "problem: " << e.name << "\n";
  std::cout << "logic: " << to_string(e.logic) << "\n";
  std::cout << "engine: " << to_string(opts.engine) << "\n";
  std::cout << "verdict: " << e.verdict_text() << "\n";
  if (e.expected) std::cout << "expected: " << to_string(*e.expected) << (e.match() ? " (match)" : " (MISMATCH)") << "\n";
  if (!e.note.empty()) std::cout << "note: " << e.note << "\n";
  if (e.countermodel) std::cout << to_string(*e.countermodel);
  return exit_for(e);
}

int cmd_countermodel(const Input& in, const Globals& g) {
  in.check_single_source();
  std::vector<ModalFormula> premises;
  ModalFormula goal = ModalFormula::top();
  Logic logic = Logic::K;
  if (in.is_modal()) {
    goal = parse_modal(in.modal);
    logic = in.logic_override().value_or(Logic::K);
  } else {
    const Problem p = in.problem();
    if (!p.conjecture) throw UsageError("problem has no conjecture");
    premises = modal_premises(p);
    goal = modal_goal(p);
    logic = p.logic();
  }
  SearchStats stats;
  const auto found = find_countermodel(premises, goal, logic, g.search(), &stats);
  if (!found) {
    std::cout << "no countermodel with at most " << g.max_worlds << " worlds (" << stats.frames << " frames)\n";
    return kOk;
  }
  std::cout << to_string(*found);
  std::cout << "verified: " << (verify_countermodel(*found) ? "yes" : "NO") << "\n";
  return verify_countermodel(*found) ? kOk : kMismatch;
}

int cmd_emit_thf(const std::string& dir, const std::vector<std::string>& names) {
  std::vector<Problem> problems;
  if (names.empty()) {
    problems = corpus();
  } else {
    for (const auto& n : names) {
      try {
        problems.push_back(corpus_problem(n));
      } catch (const std::out_of_range&) {
        throw UsageError("no corpus problem named '" + n + "'");
      }
    }
  }
  for (const auto& path : write_thf_files(dir, problems)) std::cout << path << "\n";
  return kOk;
}

int cmd_check_tables(const Globals& g, const std::string& engine, bool as_json, bool with_times) {
  RunOptions opts;
  opts.engine = parse_engine(engine);
  opts.search = g.search();
  const RunReport report = run_problems(corpus(), opts);
  if (as_json) {
    json j;
    j["problems"] = json::array();
    for (const auto& e : report.entries) j["problems"].push_back(entry_json(e, with_times));
    j["all_match"] = report.all_match();
    if (with_times) j["seconds"] = report.seconds;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << report.table(with_times);
  }
  if (report.any_resource_limit()) return kResource;
  return report.all_match() ? kOk : kMismatch;
}

int cmd_selfcheck(const std::string& level, const Globals& g) {
  const auto results = run_selfcheck(level == "full" ? CheckLevel::Full : CheckLevel::Fast, g.seed);
  bool ok = true;
  for (const auto& r : results) {
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.summary() << "\n";
    for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i) std::cout << "  " << r.failures[i] << "\n";
    ok = ok && r.ok();
  }
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Access control logics embedded in modal logic and simple type theory"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--max-worlds", g.max_worlds, "Largest model tried by the countermodel search")
      ->check(CLI::Range(1, 8));
  app.add_option("--budget", g.budget, "Frame/valuation pairs the search may examine");
  app.add_option("--seed", g.seed, "Seed for the property suites");

  Input input;
  std::string to = "s4";
  bool wrap_mval = false;
  auto* translate = app.add_subcommand("translate", "Print the modal translation, the STT term or the THF document");
  input.add_to(translate);
  translate->add_option("--to", to, "s4, stt or thf")->check(CLI::IsMember({"s4", "stt", "thf"}));
  translate->add_flag("--mval", wrap_mval, "Wrap STT terms in the validity predicate");

  std::string engine = "both";
  bool trace = false, as_json = false;
  auto* prove = app.add_subcommand("prove", "Decide a problem or formula");
  input.add_to(prove);
  prove->add_option("--engine", engine, "tableau, models or both")
      ->check(CLI::IsMember({"tableau", "models", "both"}));
  prove->add_flag("--trace", trace, "Print tableau rule applications to standard error");
  prove->add_flag("--json", as_json, "Print the result as JSON");

  auto* countermodel = app.add_subcommand("countermodel", "Search for the smallest countermodel");
  input.add_to(countermodel);

  std::string out_dir;
  std::vector<std::string> names;
  auto* emit = app.add_subcommand("emit-thf", "Write THF files for the corpus");
  emit->add_option("--out", out_dir, "Output directory")->required();
  emit->add_option("problems", names, "Corpus problem names (default: all)");

  bool with_times = false;
  auto* tables = app.add_subcommand("check-tables", "Run all corpus problems against their expected status");
  tables->add_flag("--json", as_json, "Print the report as JSON");
  tables->add_flag("--times", with_times, "Include run times and reference times");
  tables->add_option("--engine", engine, "tableau, models or both")
      ->check(CLI::IsMember({"tableau", "models", "both"}));

  std::string level = "fast";
  auto* selfcheck = app.add_subcommand("selfcheck", "Run the property suites");
  selfcheck->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*translate) return cmd_translate(input, to, wrap_mval);
    if (*prove) return cmd_prove(input, g, engine, trace, as_json);
    if (*countermodel) return cmd_countermodel(input, g);
    if (*emit) return cmd_emit_thf(out_dir, names);
    if (*tables) return cmd_check_tables(g, engine, as_json, with_times);
    if (*selfcheck) return cmd_selfcheck(level, g);
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IclSyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DialectError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ModalSyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ProblemFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
