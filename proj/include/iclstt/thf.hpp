// TPTP THF output for the embedded problems, and a reader for the THF subset
// the writer produces (plus a few common extras).

#ifndef ICLSTT_THF_HPP
#define ICLSTT_THF_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "iclstt/icl.hpp"
#include "iclstt/stt.hpp"

namespace iclstt {

struct ThfEntry {
  std::string name;
  std::string role;     // type, definition, axiom, conjecture
  std::string formula;  // rendered THF text
};

struct ThfDocument {
  std::vector<std::string> header;  // comment lines, without the leading '%'
  std::vector<ThfEntry> entries;

  std::string str() const;
};

// The connective and ICL definitions over the relation r; the S4 version adds
// the axioms R and T.
ThfDocument render_axiom_base(Logic logic);

// The problem's axiom base inlined, type declarations for its atoms, one
// axiom per assumption and the conjecture, each wrapped in iclval.
ThfDocument render_problem(const Problem& p);

// Names of the defined constants in definition order.
const std::vector<std::string>& thf_defined_symbols();

// The closed term a defined constant stands for, fully unfolded.
Term thf_definition(const std::string& symbol);

// The problem formula in terms of the defined constants (icl_says, ...), as
// it appears in a rendered problem.
Term symbolic_icl(const IclFormula& f);

// THF text of a term: fully parenthesized, `^`, `!`, `@`, `~`, `|`, `&`,
// `=>`, `$true`, `$false`; lower-case constant names are bare, others quoted;
// variables not starting with an upper-case letter get a `V` prefix.
std::string to_thf(const Term& t);
std::string to_thf(const SimpleType& t);

struct ThfSyntaxError : std::runtime_error {
  ThfSyntaxError(int line, int col, const std::string& message);
  int line, col;
};

struct ThfFormula {
  std::string name;
  std::string role;
  Term term;  // definitions expanded, βη-normal
};

struct ThfReadResult {
  std::map<std::string, SimpleType> types;
  std::map<std::string, Term> definitions;  // expanded, βη-normal
  std::vector<ThfFormula> formulas;         // non-type, non-definition entries
};

// Parses thf(name, role, formula). entries. Every constant must be declared
// by an earlier type entry; definitions are unfolded into later formulas.
ThfReadResult read_thf(std::string_view text);

// File name of a rendered problem: `<tptp name>.p`, or `<name>.p` when the
// problem has no TPTP name.
std::string thf_file_name(const Problem& p);

// Writes icl_k.ax, icl_s4.ax and one file per problem into `dir` (created if
// needed). Returns the written paths in order.
std::vector<std::string> write_thf_files(const std::string& dir, const std::vector<Problem>& problems);

}  // namespace iclstt

#endif  // ICLSTT_THF_HPP
