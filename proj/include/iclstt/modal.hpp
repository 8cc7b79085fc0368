// Monomodal propositional formulas over a single accessibility relation `r`
// and their embeddings into simple type theory.

#ifndef ICLSTT_MODAL_HPP
#define ICLSTT_MODAL_HPP

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "iclstt/stt.hpp"

namespace iclstt {

// Name of the one accessibility relation; never usable as an atom.
inline constexpr std::string_view kRelationName = "r";

class ModalFormula {
 public:
  // Implies, And, Top, Bottom and Diamond are derived: see expand().
  enum class Kind { Atom, Not, Or, Box, Implies, And, Top, Bottom, Diamond };

  static ModalFormula atom(std::string name);
  static ModalFormula negation(ModalFormula f);
  static ModalFormula disjunction(ModalFormula a, ModalFormula b);
  static ModalFormula box(ModalFormula f);
  static ModalFormula implies(ModalFormula a, ModalFormula b);
  static ModalFormula conjunction(ModalFormula a, ModalFormula b);
  static ModalFormula top();
  static ModalFormula bottom();
  static ModalFormula diamond(ModalFormula f);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  // Unary operand, or left operand of a binary connective.
  const ModalFormula& left() const;
  const ModalFormula& right() const;
  bool is_unary() const;
  bool is_binary() const;

  // Rewrites a derived constructor one level into {Atom, Not, Or, Box, Top}:
  //   a ⊃ b = ¬a ∨ b,  a ∧ b = ¬(¬a ∨ ¬b),  ⊥ = ¬⊤,  ◇a = ¬□¬a.
  // Core constructors are returned unchanged.
  ModalFormula expand() const;

  friend bool operator==(const ModalFormula& a, const ModalFormula& b);

  std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const ModalFormula> a, b;
  };
  explicit ModalFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct ModalSyntaxError : std::runtime_error {
  ModalSyntaxError(std::size_t offset, const std::string& message);
  std::size_t offset;
};

std::set<std::string> atoms_of(const ModalFormula& f);
int modal_depth(const ModalFormula& f);
int formula_size(const ModalFormula& f);

// Text syntax: identifiers, `~`, `|`, `&`, `->`, `box`, `dia`, `true`,
// `false`, parentheses. `->` is right-associative and binds loosest, then
// `|`, then `&`; prefix operators bind tightest.
ModalFormula parse_modal(std::string_view text);
std::string to_string(const ModalFormula& f);

// The lifted connectives, each a closed λ-term.
namespace lifted {
Term relation();                 // r : ι→ι→o
Term atom(const std::string& name);  // p : ι→o
Term neg();                      // λA λX. ¬(A X)
Term disj();                     // λA λB λX. A X ∨ B X
Term conj();                     // λA λB λX. A X ∧ B X
Term impl();                     // λA λB λX. A X ⇒ B X
Term top();                      // λX. ⊤
Term bottom();                   // λX. ⊥
Term box();                      // λR λA λX. ∀Y. R X Y ⇒ A Y
Term dia();                      // λR λA λX. ¬∀Y. R X Y ⇒ ¬(A Y)
Term mval();                     // λA. ∀W. A W
}  // namespace lifted

// Recursive embedding; the result is βη-normal and of type ι→o.
Term embed_recursive(const ModalFormula& f);

// Local embedding: replaces each connective by its lifted definition without
// unfolding anything. βη-normalizes to embed_recursive(f).
Term embed_local(const ModalFormula& f);

// ∀W:ι. t W, normalized. Throws TypeError unless t : ι→o.
Term mval(const Term& t);

// ∀X:ι→o. Mval(□X ⊃ X) (reflexivity) and ∀X:ι→o. Mval(□X ⊃ □□X)
// (transitivity), normalized.
Term axiom_R();
Term axiom_T();

}  // namespace iclstt

#endif  // ICLSTT_MODAL_HPP
