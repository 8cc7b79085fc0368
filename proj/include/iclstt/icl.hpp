// Access control formulas (plain, with speaks-for, and with Boolean
// principals), their translation into modal S4, and their direct embedding
// into simple type theory.

#ifndef ICLSTT_ICL_HPP
#define ICLSTT_ICL_HPP

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "iclstt/modal.hpp"
#include "iclstt/stt.hpp"

namespace iclstt {

enum class Dialect { ICL, SpeaksFor, Boolean };

// "ICL", "ICL=>", "ICLB".
std::string to_string(Dialect d);
Dialect parse_dialect(std::string_view text);

class Principal {
 public:
  enum class Kind { Atom, And, Or, Implies, Top, Bottom };

  static Principal atom(std::string name);
  static Principal conjunction(Principal a, Principal b);
  static Principal disjunction(Principal a, Principal b);
  static Principal implies(Principal a, Principal b);
  static Principal top();
  static Principal bottom();

  Kind kind() const { return node_->kind; }
  bool is_atomic() const { return kind() == Kind::Atom; }
  const std::string& name() const { return node_->name; }
  const Principal& left() const;
  const Principal& right() const;

  friend bool operator==(const Principal& a, const Principal& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Principal> a, b;
  };
  explicit Principal(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class IclFormula {
 public:
  // PrincipalRef is an atomic principal used as a formula (the A in A ⊃ ⊤);
  // only the Boolean dialect admits it. Compound principals in formula
  // position are spelled with the formula connectives instead.
  enum class Kind { Atom, And, Or, Implies, Top, Bottom, Says, SpeaksFor, PrincipalRef };

  static IclFormula atom(std::string name);
  static IclFormula conjunction(IclFormula a, IclFormula b);
  static IclFormula disjunction(IclFormula a, IclFormula b);
  static IclFormula implies(IclFormula a, IclFormula b);
  static IclFormula top();
  static IclFormula bottom();
  static IclFormula says(Principal who, IclFormula what);
  static IclFormula speaks_for(Principal a, Principal b);
  static IclFormula principal_ref(Principal p);  // p must be atomic

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  // And/Or/Implies: operands. Says: left() is the body.
  const IclFormula& left() const;
  const IclFormula& right() const;
  // Says, PrincipalRef: the principal. SpeaksFor: the delegating side.
  const Principal& principal() const;
  // SpeaksFor: the principal spoken for.
  const Principal& second_principal() const;

  friend bool operator==(const IclFormula& a, const IclFormula& b);

  std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const IclFormula> a, b;
    std::shared_ptr<const Principal> p, q;
  };
  explicit IclFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct IclSyntaxError : std::runtime_error {
  IclSyntaxError(int line, int col, const std::string& message);
  int line, col;
};

struct DialectError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Names declared as principals and propositions. Empty sets mean "infer":
// every identifier in a principal position (left of `says`, either side of
// `=>`, inside a compound principal) is a principal, the rest are
// propositions.
struct Declarations {
  std::set<std::string> principals;
  std::set<std::string> props;
};

// Grammar, loosest first: `->` (right-assoc), `|`, `&`, `says` (right-assoc),
// `=>`, then identifiers, `true`, `false` and parentheses. `r` is reserved.
IclFormula parse_icl(std::string_view text, Dialect d, const Declarations& decl = {});

// Throws DialectError if f uses a construct not available in d, or a name
// as both principal and proposition.
void validate(const IclFormula& f, Dialect d);

std::string to_string(const IclFormula& f);
std::string to_string(const Principal& p);

std::set<std::string> principal_names(const IclFormula& f);
std::set<std::string> proposition_names(const IclFormula& f);
int formula_depth(const IclFormula& f);

// Principals map to Boolean combinations of modal atoms; propositions p to
// □p; A says s to □(A ∨ s); s ⊃ t to □(s ⊃ t); A ⇒ B to □(A ⊃ B).
ModalFormula translate_to_modal(const IclFormula& f);
ModalFormula translate_principal(const Principal& p);

// The ICL-level constants as λ-terms over the lifted connectives.
namespace icl_lifted {
Term impl();        // λS λT. box r (impl S T), lifted
Term says();        // λA λS. box r (or A S), lifted
Term speaks_for();  // λA λB. box r (impl A B), lifted
Term iclval();      // λA. mval A
}  // namespace icl_lifted

// Direct embedding built from the ICL-level constants; not normalized.
// beta_eta_normalize(embed_icl(f)) is α-equal to
// embed_recursive(translate_to_modal(f)).
Term embed_icl(const IclFormula& f);
Term embed_principal(const Principal& p);

// Same as mval(t).
Term iclval(const Term& t);

// ---------------------------------------------------------------------------
// Problems

enum class Logic { K, S4 };
enum class Expected { Provable, Countermodel };

std::string to_string(Logic l);
std::string to_string(Expected e);

struct Problem {
  std::string name;
  std::string tptp;  // may be empty
  Dialect dialect = Dialect::ICL;
  Declarations decl;
  bool frame_axioms = false;  // R and T assumed; selects S4
  std::vector<IclFormula> assumptions;
  std::optional<IclFormula> conjecture;
  std::optional<Expected> expected;
  std::optional<double> reference_seconds;  // informational only

  Logic logic() const { return frame_axioms ? Logic::S4 : Logic::K; }
};

struct ProblemFormatError : std::runtime_error {
  ProblemFormatError(int line, const std::string& message);
  int line;
};

// Line-oriented format; `#` starts a comment:
//   name: Ex1
//   tptp: SWV428^1
//   dialect: ICL | ICL=> | ICLB
//   principal: admin Bob
//   prop: deletefile1
//   axiom: R T
//   assume: (admin says deletefile1) -> deletefile1
//   conjecture: deletefile1
//   expect: provable | countermodel
//   reference: 3.494
// `principal:` and `prop:` may repeat; when both are absent the principals
// are inferred from the whole problem. Formulas are parsed after all header
// lines have been read, so their order does not matter.
Problem parse_problem(std::string_view text);
std::string print_problem(const Problem& p);

// The problem with its frame axioms set to the given logic.
Problem with_logic(const Problem& p, Logic l);

}  // namespace iclstt

#endif  // ICLSTT_ICL_HPP
