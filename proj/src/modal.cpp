#include "iclstt/modal.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace iclstt {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

bool is_keyword(std::string_view s) {
  return s == "box" || s == "dia" || s == "true" || s == "false";
}

}  // namespace

ModalFormula ModalFormula::atom(std::string name) {
  if (!is_identifier(name) || is_keyword(name))
    throw std::invalid_argument("invalid modal atom name '" + name + "'");
  if (name == kRelationName)
    throw std::invalid_argument("atom name 'r' is reserved for the accessibility relation");
  return ModalFormula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), nullptr, nullptr}));
}

namespace {

std::shared_ptr<const ModalFormula> share(ModalFormula f) {
  return std::make_shared<const ModalFormula>(std::move(f));
}

}  // namespace

ModalFormula ModalFormula::negation(ModalFormula f) {
  return ModalFormula(std::make_shared<const Node>(Node{Kind::Not, {}, share(std::move(f)), nullptr}));
}

ModalFormula ModalFormula::disjunction(ModalFormula a, ModalFormula b) {
  return ModalFormula(std::make_shared<const Node>(
      Node{Kind::Or, {}, share(std::move(a)), share(std::move(b))}));
}

ModalFormula ModalFormula::box(ModalFormula f) {
  return ModalFormula(std::make_shared<const Node>(Node{Kind::Box, {}, share(std::move(f)), nullptr}));
}

ModalFormula ModalFormula::implies(ModalFormula a, ModalFormula b) {
  return ModalFormula(std::make_shared<const Node>(
      Node{Kind::Implies, {}, share(std::move(a)), share(std::move(b))}));
}

ModalFormula ModalFormula::conjunction(ModalFormula a, ModalFormula b) {
  return ModalFormula(std::make_shared<const Node>(
      Node{Kind::And, {}, share(std::move(a)), share(std::move(b))}));
}

ModalFormula ModalFormula::top() {
  static const ModalFormula f(std::make_shared<const Node>(Node{Kind::Top, {}, nullptr, nullptr}));
  return f;
}

ModalFormula ModalFormula::bottom() {
  static const ModalFormula f(std::make_shared<const Node>(Node{Kind::Bottom, {}, nullptr, nullptr}));
  return f;
}

ModalFormula ModalFormula::diamond(ModalFormula f) {
  return ModalFormula(
      std::make_shared<const Node>(Node{Kind::Diamond, {}, share(std::move(f)), nullptr}));
}

bool ModalFormula::is_unary() const {
  return kind() == Kind::Not || kind() == Kind::Box || kind() == Kind::Diamond;
}

bool ModalFormula::is_binary() const {
  return kind() == Kind::Or || kind() == Kind::Implies || kind() == Kind::And;
}

const ModalFormula& ModalFormula::left() const {
  if (!node_->a) throw std::logic_error("left() of a nullary modal formula");
  return *node_->a;
}

const ModalFormula& ModalFormula::right() const {
  if (!node_->b) throw std::logic_error("right() of a non-binary modal formula");
  return *node_->b;
}

ModalFormula ModalFormula::expand() const {
  switch (kind()) {
    case Kind::Implies: return disjunction(negation(left()), right());
    case Kind::And: return negation(disjunction(negation(left()), negation(right())));
    case Kind::Bottom: return negation(top());
    case Kind::Diamond: return negation(box(negation(left())));
    default: return *this;
  }
}

bool operator==(const ModalFormula& a, const ModalFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == ModalFormula::Kind::Atom) return a.name() == b.name();
  if (a.is_unary()) return a.left() == b.left();
  if (a.is_binary()) return a.left() == b.left() && a.right() == b.right();
  return true;
}

std::string ModalFormula::str() const { return to_string(*this); }

ModalSyntaxError::ModalSyntaxError(std::size_t off, const std::string& message)
    : std::runtime_error("modal syntax error at offset " + std::to_string(off) + ": " + message),
      offset(off) {}

namespace {

void collect_atoms(const ModalFormula& f, std::set<std::string>& out) {
  if (f.kind() == ModalFormula::Kind::Atom) {
    out.insert(f.name());
  } else if (f.is_unary()) {
    collect_atoms(f.left(), out);
  } else if (f.is_binary()) {
    collect_atoms(f.left(), out);
    collect_atoms(f.right(), out);
  }
}

}  // namespace

std::set<std::string> atoms_of(const ModalFormula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

int modal_depth(const ModalFormula& f) {
  using K = ModalFormula::Kind;
  if (f.kind() == K::Box || f.kind() == K::Diamond) return 1 + modal_depth(f.left());
  if (f.is_unary()) return modal_depth(f.left());
  if (f.is_binary()) return std::max(modal_depth(f.left()), modal_depth(f.right()));
  return 0;
}

int formula_size(const ModalFormula& f) {
  if (f.is_unary()) return 1 + formula_size(f.left());
  if (f.is_binary()) return 1 + formula_size(f.left()) + formula_size(f.right());
  return 1;
}

// ---------------------------------------------------------------------------
// Text syntax

namespace {

enum Prec { kImpl = 1, kOr = 2, kAnd = 3, kUnary = 4 };

std::string show(const ModalFormula& f, int ctx) {
  using K = ModalFormula::Kind;
  int level = kUnary;
  std::string s;
  switch (f.kind()) {
    case K::Atom: return f.name();
    case K::Top: return "true";
    case K::Bottom: return "false";
    case K::Not: s = "~" + show(f.left(), kUnary); break;
    case K::Box: s = "box " + show(f.left(), kUnary); break;
    case K::Diamond: s = "dia " + show(f.left(), kUnary); break;
    case K::Or:
      level = kOr;
      s = show(f.left(), kAnd) + " | " + show(f.right(), kOr);
      break;
    case K::And:
      level = kAnd;
      s = show(f.left(), kUnary) + " & " + show(f.right(), kAnd);
      break;
    case K::Implies:
      level = kImpl;
      s = show(f.left(), kOr) + " -> " + show(f.right(), kImpl);
      break;
  }
  return level < ctx ? "(" + s + ")" : s;
}

class ModalParser {
 public:
  explicit ModalParser(std::string_view text) : text_(text) {}

  ModalFormula parse() {
    ModalFormula f = implication();
    skip_space();
    if (pos_ != text_.size()) throw ModalSyntaxError(pos_, "unexpected trailing input");
    return f;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip_space();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  std::string_view peek_word() {
    skip_space();
    std::size_t j = pos_;
    while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
      ++j;
    return text_.substr(pos_, j - pos_);
  }

  ModalFormula implication() {
    ModalFormula lhs = disjunction();
    if (eat("->")) return ModalFormula::implies(lhs, implication());
    return lhs;
  }

  ModalFormula disjunction() {
    ModalFormula lhs = conjunction();
    if (eat("|")) return ModalFormula::disjunction(lhs, disjunction());
    return lhs;
  }

  ModalFormula conjunction() {
    ModalFormula lhs = unary();
    if (eat("&")) return ModalFormula::conjunction(lhs, conjunction());
    return lhs;
  }

  ModalFormula unary() {
    if (eat("~")) return ModalFormula::negation(unary());
    if (eat("(")) {
      ModalFormula f = implication();
      if (!eat(")")) throw ModalSyntaxError(pos_, "expected ')'");
      return f;
    }
    std::size_t start = pos_;
    std::string_view w = peek_word();
    if (w.empty()) throw ModalSyntaxError(pos_, "expected a formula");
    if (std::isdigit(static_cast<unsigned char>(w[0])))
      throw ModalSyntaxError(start, "identifier cannot start with a digit");
    pos_ += w.size();
    if (w == "box") return ModalFormula::box(unary());
    if (w == "dia") return ModalFormula::diamond(unary());
    if (w == "true") return ModalFormula::top();
    if (w == "false") return ModalFormula::bottom();
    if (w == kRelationName) throw ModalSyntaxError(start, "'r' is reserved for the accessibility relation");
    return ModalFormula::atom(std::string(w));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ModalFormula parse_modal(std::string_view text) { return ModalParser(text).parse(); }

std::string to_string(const ModalFormula& f) { return show(f, kImpl); }

// ---------------------------------------------------------------------------
// Lifted connectives

namespace lifted {

namespace {

const SimpleType& pred() {
  static const SimpleType t = world_predicate_type();
  return t;
}

Term var_x() { return Term::var("X", SimpleType::iota()); }
Term var_y() { return Term::var("Y", SimpleType::iota()); }
Term var_a() { return Term::var("A", pred()); }
Term var_b() { return Term::var("B", pred()); }
Term var_r() { return Term::var("R", relation_type()); }

Term lam_x(Term body) { return Term::lambda("X", SimpleType::iota(), std::move(body)); }
Term lam_a(Term body) { return Term::lambda("A", pred(), std::move(body)); }
Term lam_b(Term body) { return Term::lambda("B", pred(), std::move(body)); }
Term lam_r(Term body) { return Term::lambda("R", relation_type(), std::move(body)); }

Term at(const Term& p, const Term& w) { return Term::app(p, w); }

}  // namespace

Term relation() { return Term::constant(std::string(kRelationName), relation_type()); }

Term atom(const std::string& name) { return Term::constant(name, pred()); }

Term neg() { return lam_a(lam_x(mk_not(at(var_a(), var_x())))); }

Term disj() { return lam_a(lam_b(lam_x(mk_or(at(var_a(), var_x()), at(var_b(), var_x()))))); }

Term conj() { return lam_a(lam_b(lam_x(mk_and(at(var_a(), var_x()), at(var_b(), var_x()))))); }

Term impl() {
  return lam_a(lam_b(lam_x(mk_implies(at(var_a(), var_x()), at(var_b(), var_x())))));
}

Term top() { return lam_x(Term::truth()); }

Term bottom() { return lam_x(mk_false()); }

Term box() {
  Term body = mk_forall({"Y", SimpleType::iota()},
                        mk_implies(apply(var_r(), {var_x(), var_y()}), at(var_a(), var_y())));
  return lam_r(lam_a(lam_x(body)));
}

Term dia() {
  Term body = mk_forall({"Y", SimpleType::iota()},
                        mk_implies(apply(var_r(), {var_x(), var_y()}), mk_not(at(var_a(), var_y()))));
  return lam_r(lam_a(lam_x(mk_not(body))));
}

Term mval() {
  Term w = Term::var("W", SimpleType::iota());
  return lam_a(mk_forall({"W", SimpleType::iota()}, at(var_a(), w)));
}

}  // namespace lifted

// ---------------------------------------------------------------------------
// Embeddings

namespace {

// A world predicate applied to a world variable, instantiating the outer λ directly so the
// result stays normal.
Term at_world(const Term& pred, const Term& world) {
  if (pred.is_lambda()) return substitute(pred.body(), pred.symbol(), world);
  return Term::app(pred, world);
}

}  // namespace

Term embed_recursive(const ModalFormula& f) {
  using K = ModalFormula::Kind;
  const Term x = Term::var("X", SimpleType::iota());
  switch (f.kind()) {
    case K::Atom: return lifted::atom(f.name());
    case K::Top: return Term::lambda("X", SimpleType::iota(), Term::truth());
    case K::Not:
      return Term::lambda("X", SimpleType::iota(), mk_not(at_world(embed_recursive(f.left()), x)));
    case K::Or:
      return Term::lambda("X", SimpleType::iota(),
                          mk_or(at_world(embed_recursive(f.left()), x),
                                at_world(embed_recursive(f.right()), x)));
    case K::Box: {
      const Term y = Term::var("Y", SimpleType::iota());
      Term body = mk_implies(apply(lifted::relation(), {x, y}), at_world(embed_recursive(f.left()), y));
      return Term::lambda("X", SimpleType::iota(), mk_forall({"Y", SimpleType::iota()}, body));
    }
    default: return embed_recursive(f.expand());
  }
}

Term embed_local(const ModalFormula& f) {
  using K = ModalFormula::Kind;
  switch (f.kind()) {
    case K::Atom: return lifted::atom(f.name());
    case K::Top: return lifted::top();
    case K::Bottom: return lifted::bottom();
    case K::Not: return Term::app(lifted::neg(), embed_local(f.left()));
    case K::Or: return apply(lifted::disj(), {embed_local(f.left()), embed_local(f.right())});
    case K::And: return apply(lifted::conj(), {embed_local(f.left()), embed_local(f.right())});
    case K::Implies: return apply(lifted::impl(), {embed_local(f.left()), embed_local(f.right())});
    case K::Box: return apply(lifted::box(), {lifted::relation(), embed_local(f.left())});
    case K::Diamond: return apply(lifted::dia(), {lifted::relation(), embed_local(f.left())});
  }
  throw std::logic_error("unreachable");
}

Term mval(const Term& t) {
  const SimpleType* ty = t.cached_type();
  if (!ty || *ty != world_predicate_type())
    throw TypeError("Mval argument", world_predicate_type().str(), ty ? ty->str() : "ill-typed term");
  return beta_eta_normalize(Term::app(lifted::mval(), t));
}

namespace {

Term frame_axiom(bool transitivity) {
  Term x = Term::var("X", world_predicate_type());
  Term box_x = apply(lifted::box(), {lifted::relation(), x});
  Term consequent = transitivity ? apply(lifted::box(), {lifted::relation(), box_x}) : x;
  Term body = Term::app(lifted::mval(), apply(lifted::impl(), {box_x, consequent}));
  return beta_eta_normalize(mk_forall({"X", world_predicate_type()}, body));
}

}  // namespace

Term axiom_R() { return frame_axiom(false); }
Term axiom_T() { return frame_axiom(true); }

}  // namespace iclstt
