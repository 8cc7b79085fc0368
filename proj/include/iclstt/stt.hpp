// Simply typed lambda calculus kernel: types, terms, type checking,
// capture-avoiding substitution and beta-eta normalization.
//
// Terms are immutable and shared; every operation returns a new term.

#ifndef ICLSTT_STT_HPP
#define ICLSTT_STT_HPP

#include <compare>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace iclstt {

class SimpleType {
 public:
  enum class Kind { Bool, Individual, Arrow };

  static SimpleType o();
  static SimpleType iota();
  static SimpleType arrow(SimpleType domain, SimpleType codomain);

  Kind kind() const { return node_->kind; }
  bool is_bool() const { return kind() == Kind::Bool; }
  bool is_individual() const { return kind() == Kind::Individual; }
  bool is_arrow() const { return kind() == Kind::Arrow; }

  // Only valid for arrows.
  const SimpleType& domain() const;
  const SimpleType& codomain() const;

  friend bool operator==(const SimpleType& a, const SimpleType& b);
  friend std::strong_ordering operator<=>(const SimpleType& a, const SimpleType& b);

  // `o`, `ι`, right-associative `→`.
  std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::shared_ptr<const SimpleType> domain, codomain;
  };
  explicit SimpleType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// ι → o, the type of lifted modal propositions.
SimpleType world_predicate_type();
// ι → ι → o, the type of the accessibility relation.
SimpleType relation_type();
// Builds a1 → a2 → ... → result.
SimpleType arrows(const std::vector<SimpleType>& args, SimpleType result);

// A variable or constant: the name together with its type. Same name with a
// different type is a different symbol.
struct Symbol {
  std::string name;
  SimpleType type;

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
    if (auto c = a.name <=> b.name; c != 0) return c;
    return a.type <=> b.type;
  }
};

enum class TermKind { Const, Var, Lambda, App };

// Logical constants with fixed denotation. Pi carries its quantified type.
enum class Builtin { None, Neg, Or, Pi, True };

class Term {
 public:
  static Term constant(std::string name, SimpleType type);
  static Term var(std::string name, SimpleType type);
  static Term var(const Symbol& s) { return var(s.name, s.type); }
  static Term lambda(std::string bound, SimpleType bound_type, Term body);
  static Term lambda(const Symbol& s, Term body) { return lambda(s.name, s.type, std::move(body)); }
  static Term app(Term fn, Term arg);

  static Term neg();                    // ¬ : o→o
  static Term disj();                   // ∨ : o→o→o
  static Term pi(SimpleType quantified);  // Π_α : (α→o)→o
  static Term truth();                  // ⊤ : o

  TermKind kind() const { return node_->kind; }
  bool is_const() const { return kind() == TermKind::Const; }
  bool is_var() const { return kind() == TermKind::Var; }
  bool is_lambda() const { return kind() == TermKind::Lambda; }
  bool is_app() const { return kind() == TermKind::App; }
  Builtin builtin() const { return node_->builtin; }

  // Const/Var: the symbol name. Lambda: the bound variable's name.
  const std::string& name() const { return node_->name; }
  // Const/Var: declared type. Lambda: bound variable's type.
  const SimpleType& symbol_type() const;
  Symbol symbol() const { return {name(), symbol_type()}; }

  const Term& fn() const;    // App
  const Term& arg() const;   // App
  const Term& body() const;  // Lambda

  // Bottom-up inferred type, or nullptr when some application is ill-typed.
  const SimpleType* cached_type() const { return node_->type.get(); }
  // Inferred type; throws TypeError when ill-typed. Does not check free
  // variables against a context.
  SimpleType type() const;

  bool same_node(const Term& other) const { return node_ == other.node_; }

  // Printed with the plain-text term syntax (see to_string).
  std::string str() const;

 private:
  struct Node {
    TermKind kind;
    Builtin builtin = Builtin::None;
    std::string name;
    std::shared_ptr<const SimpleType> symbol_type;
    std::shared_ptr<const Term> left, right;  // App: fn, arg; Lambda: body in left
    std::shared_ptr<const SimpleType> type;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct TypeError : std::runtime_error {
  TypeError(std::string position, std::string expected, std::string found);
  std::string position, expected, found;
};

struct UnboundVariable : std::runtime_error {
  explicit UnboundVariable(const std::string& name)
      : std::runtime_error("unbound variable " + name), name(name) {}
  std::string name;
};

struct TermSyntaxError : std::runtime_error {
  TermSyntaxError(std::size_t offset, const std::string& message);
  std::size_t offset;
};

using TypeContext = std::map<std::string, SimpleType>;

// Checks `t` against `context` for its free variables and returns its type.
SimpleType type_of(const TypeContext& context, const Term& t);

// Connective builders; ⇒, ∧ and ⊥ are abbreviations over ¬, ∨ and ⊤.
Term mk_not(Term a);
Term mk_or(Term a, Term b);
Term mk_and(Term a, Term b);
Term mk_implies(Term a, Term b);
Term mk_false();
Term mk_forall(const Symbol& var, Term body);
Term apply(Term fn, std::initializer_list<Term> args);

std::set<Symbol> free_vars(const Term& t);
bool occurs_free(const Symbol& var, const Term& t);
// Non-logical constants occurring in t.
std::set<Symbol> constants_of(const Term& t);

// [replacement/var]body, renaming binders deterministically (Y → Y1, Y2, ...)
// so that free variables of the replacement are never captured.
Term substitute(const Term& body, const Symbol& var, const Term& replacement);

// Normal-order beta-eta normalization.
Term beta_eta_normalize(const Term& t);
bool is_beta_eta_normal(const Term& t);

bool alpha_equal(const Term& a, const Term& b);
// Throws TypeError when the two terms have different types.
bool alpha_beta_eta_eq(const Term& a, const Term& b);

// Plain-text term syntax:
//   λX:ι. t   ∀X:ι. t   ¬t   t ∨ u   t ∧ u   t ⇒ u   ⊤   ⊥   f a b
//   (¬)  (∨)  Π[α]   for unapplied logical constants
// ⇒ and ∨ and ∧ associate to the right; application binds tightest.
std::string to_string(const Term& t);

// Parses the syntax produced by to_string. ASCII alternatives: `\` for λ,
// `!` for ∀, `~`, `|`, `&`, `=>`, `$true`, `$false`, `i` for ι, `->` for →.
// Identifiers resolve to the innermost binder, then `free`, then `constants`.
Term parse_term(std::string_view text, const std::map<std::string, SimpleType>& constants,
                const std::map<std::string, SimpleType>& free = {});
SimpleType parse_type(std::string_view text);

}  // namespace iclstt

#endif  // ICLSTT_STT_HPP
