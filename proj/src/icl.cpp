#include "iclstt/icl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace iclstt {

std::string to_string(Dialect d) {
  switch (d) {
    case Dialect::ICL: return "ICL";
    case Dialect::SpeaksFor: return "ICL=>";
    case Dialect::Boolean: return "ICLB";
  }
  return "?";
}

Dialect parse_dialect(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (s == "ICL") return Dialect::ICL;
  if (s == "ICL=>" || s == "ICL⇒") return Dialect::SpeaksFor;
  if (s == "ICLB" || s == "ICL^B") return Dialect::Boolean;
  throw std::invalid_argument("unknown dialect '" + std::string(text) + "' (expected ICL, ICL=> or ICLB)");
}

// ---------------------------------------------------------------------------
// Principal

namespace {

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  if (s == "says" || s == "true" || s == "false" || s == kRelationName) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

void check_name(const std::string& name) {
  if (!valid_name(name)) throw std::invalid_argument("invalid or reserved name '" + name + "'");
}

template <class T>
std::shared_ptr<const T> share(T x) {
  return std::make_shared<const T>(std::move(x));
}

}  // namespace

Principal Principal::atom(std::string name) {
  check_name(name);
  return Principal(share(Node{Kind::Atom, std::move(name), nullptr, nullptr}));
}
Principal Principal::conjunction(Principal a, Principal b) {
  return Principal(share(Node{Kind::And, {}, share(std::move(a)), share(std::move(b))}));
}
Principal Principal::disjunction(Principal a, Principal b) {
  return Principal(share(Node{Kind::Or, {}, share(std::move(a)), share(std::move(b))}));
}
Principal Principal::implies(Principal a, Principal b) {
  return Principal(share(Node{Kind::Implies, {}, share(std::move(a)), share(std::move(b))}));
}
Principal Principal::top() { return Principal(share(Node{Kind::Top, {}, nullptr, nullptr})); }
Principal Principal::bottom() { return Principal(share(Node{Kind::Bottom, {}, nullptr, nullptr})); }

const Principal& Principal::left() const {
  if (!node_->a) throw std::logic_error("left() of a non-binary principal");
  return *node_->a;
}
const Principal& Principal::right() const {
  if (!node_->b) throw std::logic_error("right() of a non-binary principal");
  return *node_->b;
}

bool operator==(const Principal& a, const Principal& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Principal::Kind::Atom: return a.name() == b.name();
    case Principal::Kind::Top:
    case Principal::Kind::Bottom: return true;
    default: return a.left() == b.left() && a.right() == b.right();
  }
}

// ---------------------------------------------------------------------------
// IclFormula

IclFormula IclFormula::atom(std::string name) {
  check_name(name);
  return IclFormula(share(Node{Kind::Atom, std::move(name), nullptr, nullptr, nullptr, nullptr}));
}
IclFormula IclFormula::conjunction(IclFormula a, IclFormula b) {
  return IclFormula(share(Node{Kind::And, {}, share(std::move(a)), share(std::move(b)), nullptr, nullptr}));
}
IclFormula IclFormula::disjunction(IclFormula a, IclFormula b) {
  return IclFormula(share(Node{Kind::Or, {}, share(std::move(a)), share(std::move(b)), nullptr, nullptr}));
}
IclFormula IclFormula::implies(IclFormula a, IclFormula b) {
  return IclFormula(
      share(Node{Kind::Implies, {}, share(std::move(a)), share(std::move(b)), nullptr, nullptr}));
}
IclFormula IclFormula::top() { return IclFormula(share(Node{Kind::Top, {}, nullptr, nullptr, nullptr, nullptr})); }
IclFormula IclFormula::bottom() {
  return IclFormula(share(Node{Kind::Bottom, {}, nullptr, nullptr, nullptr, nullptr}));
}
IclFormula IclFormula::says(Principal who, IclFormula what) {
  return IclFormula(share(Node{Kind::Says, {}, share(std::move(what)), nullptr, share(std::move(who)), nullptr}));
}
IclFormula IclFormula::speaks_for(Principal a, Principal b) {
  return IclFormula(
      share(Node{Kind::SpeaksFor, {}, nullptr, nullptr, share(std::move(a)), share(std::move(b))}));
}
IclFormula IclFormula::principal_ref(Principal p) {
  if (!p.is_atomic()) throw std::invalid_argument("principal_ref needs an atomic principal");
  return IclFormula(share(Node{Kind::PrincipalRef, {}, nullptr, nullptr, share(std::move(p)), nullptr}));
}

const IclFormula& IclFormula::left() const {
  if (!node_->a) throw std::logic_error("left() of a formula without subformulas");
  return *node_->a;
}
const IclFormula& IclFormula::right() const {
  if (!node_->b) throw std::logic_error("right() of a non-binary formula");
  return *node_->b;
}
const Principal& IclFormula::principal() const {
  if (!node_->p) throw std::logic_error("principal() of a formula without principal");
  return *node_->p;
}
const Principal& IclFormula::second_principal() const {
  if (!node_->q) throw std::logic_error("second_principal() of a non speaks-for formula");
  return *node_->q;
}

bool operator==(const IclFormula& a, const IclFormula& b) {
  using K = IclFormula::Kind;
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case K::Atom: return a.name() == b.name();
    case K::Top:
    case K::Bottom: return true;
    case K::And:
    case K::Or:
    case K::Implies: return a.left() == b.left() && a.right() == b.right();
    case K::Says: return a.principal() == b.principal() && a.left() == b.left();
    case K::SpeaksFor: return a.principal() == b.principal() && a.second_principal() == b.second_principal();
    case K::PrincipalRef: return a.principal() == b.principal();
  }
  return false;
}

std::string IclFormula::str() const { return to_string(*this); }

IclSyntaxError::IclSyntaxError(int l, int c, const std::string& message)
    : std::runtime_error("syntax error at " + std::to_string(l) + ":" + std::to_string(c) + ": " + message),
      line(l),
      col(c) {}

// ---------------------------------------------------------------------------
// Names, depth, validation

namespace {

void principal_atoms(const Principal& p, std::set<std::string>& out) {
  if (p.is_atomic()) {
    out.insert(p.name());
  } else if (p.kind() != Principal::Kind::Top && p.kind() != Principal::Kind::Bottom) {
    principal_atoms(p.left(), out);
    principal_atoms(p.right(), out);
  }
}

void collect_names(const IclFormula& f, std::set<std::string>* principals, std::set<std::string>* props) {
  using K = IclFormula::Kind;
  switch (f.kind()) {
    case K::Atom:
      if (props) props->insert(f.name());
      break;
    case K::Top:
    case K::Bottom: break;
    case K::And:
    case K::Or:
    case K::Implies:
      collect_names(f.left(), principals, props);
      collect_names(f.right(), principals, props);
      break;
    case K::Says:
      if (principals) principal_atoms(f.principal(), *principals);
      collect_names(f.left(), principals, props);
      break;
    case K::SpeaksFor:
      if (principals) {
        principal_atoms(f.principal(), *principals);
        principal_atoms(f.second_principal(), *principals);
      }
      break;
    case K::PrincipalRef:
      if (principals) principal_atoms(f.principal(), *principals);
      break;
  }
}

int principal_depth(const Principal& p) {
  if (p.is_atomic() || p.kind() == Principal::Kind::Top || p.kind() == Principal::Kind::Bottom) return 0;
  return 1 + std::max(principal_depth(p.left()), principal_depth(p.right()));
}

}  // namespace

std::set<std::string> principal_names(const IclFormula& f) {
  std::set<std::string> out;
  collect_names(f, &out, nullptr);
  return out;
}

std::set<std::string> proposition_names(const IclFormula& f) {
  std::set<std::string> out;
  collect_names(f, nullptr, &out);
  return out;
}

int formula_depth(const IclFormula& f) {
  using K = IclFormula::Kind;
  switch (f.kind()) {
    case K::Atom:
    case K::Top:
    case K::Bottom: return 0;
    case K::PrincipalRef: return principal_depth(f.principal());
    case K::And:
    case K::Or:
    case K::Implies: return 1 + std::max(formula_depth(f.left()), formula_depth(f.right()));
    case K::Says: return 1 + std::max(principal_depth(f.principal()), formula_depth(f.left()));
    case K::SpeaksFor:
      return 1 + std::max(principal_depth(f.principal()), principal_depth(f.second_principal()));
  }
  return 0;
}

namespace {

void validate_rec(const IclFormula& f, Dialect d) {
  using K = IclFormula::Kind;
  auto check_principal = [d](const Principal& p) {
    if (d != Dialect::Boolean && !p.is_atomic())
      throw DialectError("compound principal " + to_string(p) + " requires dialect ICLB");
  };
  switch (f.kind()) {
    case K::Atom:
    case K::Top:
    case K::Bottom: return;
    case K::And:
    case K::Or:
    case K::Implies:
      validate_rec(f.left(), d);
      validate_rec(f.right(), d);
      return;
    case K::Says:
      check_principal(f.principal());
      validate_rec(f.left(), d);
      return;
    case K::SpeaksFor:
      if (d != Dialect::SpeaksFor) throw DialectError("speaks-for requires dialect ICL=>");
      check_principal(f.principal());
      check_principal(f.second_principal());
      return;
    case K::PrincipalRef:
      if (d != Dialect::Boolean)
        throw DialectError("principal " + f.principal().name() + " used as a formula requires dialect ICLB");
      return;
  }
}

}  // namespace

void validate(const IclFormula& f, Dialect d) {
  validate_rec(f, d);
  std::set<std::string> principals, props;
  collect_names(f, &principals, &props);
  for (const auto& n : principals)
    if (props.count(n)) throw DialectError("'" + n + "' is used both as principal and as proposition");
}

// ---------------------------------------------------------------------------
// Printing

namespace {

enum Prec { kImpl = 1, kOr = 2, kAnd = 3, kSays = 4, kSpeaks = 5, kAtom = 6 };

std::string wrap(int level, int ctx, std::string s) { return level < ctx ? "(" + s + ")" : s; }

std::string show(const Principal& p, int ctx) {
  using K = Principal::Kind;
  switch (p.kind()) {
    case K::Atom: return p.name();
    case K::Top: return "true";
    case K::Bottom: return "false";
    case K::Implies: return wrap(kImpl, ctx, show(p.left(), kOr) + " -> " + show(p.right(), kImpl));
    case K::Or: return wrap(kOr, ctx, show(p.left(), kAnd) + " | " + show(p.right(), kOr));
    case K::And: return wrap(kAnd, ctx, show(p.left(), kAtom) + " & " + show(p.right(), kAnd));
  }
  return "?";
}

std::string show(const IclFormula& f, int ctx) {
  using K = IclFormula::Kind;
  switch (f.kind()) {
    case K::Atom: return f.name();
    case K::Top: return "true";
    case K::Bottom: return "false";
    case K::PrincipalRef: return f.principal().name();
    case K::Implies: return wrap(kImpl, ctx, show(f.left(), kOr) + " -> " + show(f.right(), kImpl));
    case K::Or: return wrap(kOr, ctx, show(f.left(), kAnd) + " | " + show(f.right(), kOr));
    case K::And: return wrap(kAnd, ctx, show(f.left(), kSays) + " & " + show(f.right(), kAnd));
    case K::Says: return wrap(kSays, ctx, show(f.principal(), kAtom) + " says " + show(f.left(), kSays));
    case K::SpeaksFor:
      return wrap(kSpeaks, ctx, show(f.principal(), kAtom) + " => " + show(f.second_principal(), kAtom));
  }
  return "?";
}

}  // namespace

std::string to_string(const IclFormula& f) { return show(f, kImpl); }
std::string to_string(const Principal& p) { return show(p, kImpl); }

// ---------------------------------------------------------------------------
// Parsing: text -> untyped expression tree -> formula/principal

namespace {

struct Expr {
  enum class Op { Ident, True, False, And, Or, Impl, Says, SpeaksFor } op;
  std::string name;
  std::shared_ptr<const Expr> a, b;
  std::size_t offset = 0;
};
using ExprPtr = std::shared_ptr<const Expr>;

std::pair<int, int> line_col(std::string_view text, std::size_t offset) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = implication();
    skip_space();
    if (pos_ != text_.size()) fail(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

  std::string_view text() const { return text_; }

  [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
    auto [l, c] = line_col(text_, at);
    throw IclSyntaxError(l, c, msg);
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

  std::string_view word() {
    skip_space();
    std::size_t j = pos_;
    while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) ++j;
    return text_.substr(pos_, j - pos_);
  }

  ExprPtr node(Expr::Op op, ExprPtr a, ExprPtr b, std::size_t at) {
    return std::make_shared<const Expr>(Expr{op, {}, std::move(a), std::move(b), at});
  }

  ExprPtr implication() {
    skip_space();
    std::size_t at = pos_;
    ExprPtr lhs = disjunction();
    if (eat("->")) return node(Expr::Op::Impl, lhs, implication(), at);
    return lhs;
  }

  ExprPtr disjunction() {
    skip_space();
    std::size_t at = pos_;
    ExprPtr lhs = conjunction();
    if (eat("|")) return node(Expr::Op::Or, lhs, disjunction(), at);
    return lhs;
  }

  ExprPtr conjunction() {
    skip_space();
    std::size_t at = pos_;
    ExprPtr lhs = says();
    if (eat("&")) return node(Expr::Op::And, lhs, conjunction(), at);
    return lhs;
  }

  ExprPtr says() {
    skip_space();
    std::size_t at = pos_;
    ExprPtr lhs = speaks();
    if (word() == "says") {
      pos_ += 4;
      return node(Expr::Op::Says, lhs, says(), at);
    }
    return lhs;
  }

  ExprPtr speaks() {
    skip_space();
    std::size_t at = pos_;
    ExprPtr lhs = primary();
    if (eat("=>")) return node(Expr::Op::SpeaksFor, lhs, primary(), at);
    return lhs;
  }

  ExprPtr primary() {
    skip_space();
    std::size_t at = pos_;
    if (eat("(")) {
      ExprPtr e = implication();
      if (!eat(")")) fail(pos_, "expected ')'");
      return e;
    }
    std::string_view w = word();
    if (w.empty()) fail(at, pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                                                : "unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(w[0]))) fail(at, "identifier cannot start with a digit");
    if (w == "says") fail(at, "'says' needs a principal on its left");
    pos_ += w.size();
    if (w == "true") return node(Expr::Op::True, nullptr, nullptr, at);
    if (w == "false") return node(Expr::Op::False, nullptr, nullptr, at);
    if (w == kRelationName) fail(at, "'r' is a reserved name");
    return std::make_shared<const Expr>(Expr{Expr::Op::Ident, std::string(w), nullptr, nullptr, at});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Identifiers that occur in a principal position.
void principal_positions(const Expr& e, bool as_principal, std::set<std::string>& out) {
  switch (e.op) {
    case Expr::Op::Ident:
      if (as_principal) out.insert(e.name);
      return;
    case Expr::Op::True:
    case Expr::Op::False: return;
    case Expr::Op::And:
    case Expr::Op::Or:
    case Expr::Op::Impl:
      principal_positions(*e.a, as_principal, out);
      principal_positions(*e.b, as_principal, out);
      return;
    case Expr::Op::Says:
      principal_positions(*e.a, true, out);
      principal_positions(*e.b, false, out);
      return;
    case Expr::Op::SpeaksFor:
      principal_positions(*e.a, true, out);
      principal_positions(*e.b, true, out);
      return;
  }
}

class Classifier {
 public:
  Classifier(const ExprParser& parser, Dialect d, std::set<std::string> principals, std::set<std::string> props,
             bool declared)
      : parser_(parser), d_(d), principals_(std::move(principals)), props_(std::move(props)), declared_(declared) {}

  IclFormula formula(const Expr& e) const {
    switch (e.op) {
      case Expr::Op::Ident:
        if (principals_.count(e.name)) {
          if (d_ != Dialect::Boolean)
            dialect_fail(e, "principal '" + e.name + "' used as a formula requires dialect ICLB");
          return IclFormula::principal_ref(Principal::atom(e.name));
        }
        if (declared_ && !props_.count(e.name)) fail(e, "undeclared identifier '" + e.name + "'");
        return IclFormula::atom(e.name);
      case Expr::Op::True: return IclFormula::top();
      case Expr::Op::False: return IclFormula::bottom();
      case Expr::Op::And: return IclFormula::conjunction(formula(*e.a), formula(*e.b));
      case Expr::Op::Or: return IclFormula::disjunction(formula(*e.a), formula(*e.b));
      case Expr::Op::Impl: return IclFormula::implies(formula(*e.a), formula(*e.b));
      case Expr::Op::Says: return IclFormula::says(principal(*e.a), formula(*e.b));
      case Expr::Op::SpeaksFor:
        if (d_ != Dialect::SpeaksFor) dialect_fail(e, "speaks-for requires dialect ICL=>");
        return IclFormula::speaks_for(principal(*e.a), principal(*e.b));
    }
    fail(e, "unreachable");
  }

  Principal principal(const Expr& e) const {
    auto compound = [&] {
      if (d_ != Dialect::Boolean) dialect_fail(e, "compound principals require dialect ICLB");
    };
    switch (e.op) {
      case Expr::Op::Ident:
        if (props_.count(e.name)) fail(e, "proposition '" + e.name + "' used as a principal");
        if (declared_ && !principals_.count(e.name)) fail(e, "undeclared identifier '" + e.name + "'");
        return Principal::atom(e.name);
      case Expr::Op::True: compound(); return Principal::top();
      case Expr::Op::False: compound(); return Principal::bottom();
      case Expr::Op::And: compound(); return Principal::conjunction(principal(*e.a), principal(*e.b));
      case Expr::Op::Or: compound(); return Principal::disjunction(principal(*e.a), principal(*e.b));
      case Expr::Op::Impl: compound(); return Principal::implies(principal(*e.a), principal(*e.b));
      case Expr::Op::Says:
      case Expr::Op::SpeaksFor: fail(e, "a formula cannot be used as a principal");
    }
    fail(e, "unreachable");
  }

 private:
  [[noreturn]] void fail(const Expr& e, const std::string& msg) const { parser_.fail(e.offset, msg); }

  [[noreturn]] void dialect_fail(const Expr& e, const std::string& msg) const {
    auto [l, c] = line_col(parser_.text(), e.offset);
    throw DialectError(std::to_string(l) + ":" + std::to_string(c) + ": " + msg);
  }

  const ExprParser& parser_;
  Dialect d_;
  std::set<std::string> principals_, props_;
  bool declared_;
};

}  // namespace

IclFormula parse_icl(std::string_view text, Dialect d, const Declarations& decl) {
  ExprParser parser(text);
  ExprPtr e = parser.parse();
  bool declared = !decl.principals.empty() || !decl.props.empty();
  std::set<std::string> principals = decl.principals;
  if (!declared) principal_positions(*e, false, principals);
  for (const auto& n : decl.principals)
    if (decl.props.count(n)) throw DialectError("'" + n + "' is declared both as principal and as proposition");
  IclFormula f = Classifier(parser, d, principals, decl.props, declared).formula(*e);
  validate(f, d);
  return f;
}

// ---------------------------------------------------------------------------
// Translation to S4

ModalFormula translate_principal(const Principal& p) {
  using K = Principal::Kind;
  switch (p.kind()) {
    case K::Atom: return ModalFormula::atom(p.name());
    case K::Top: return ModalFormula::top();
    case K::Bottom: return ModalFormula::bottom();
    case K::And: return ModalFormula::conjunction(translate_principal(p.left()), translate_principal(p.right()));
    case K::Or: return ModalFormula::disjunction(translate_principal(p.left()), translate_principal(p.right()));
    case K::Implies: return ModalFormula::implies(translate_principal(p.left()), translate_principal(p.right()));
  }
  throw std::logic_error("unreachable");
}

ModalFormula translate_to_modal(const IclFormula& f) {
  using K = IclFormula::Kind;
  using M = ModalFormula;
  switch (f.kind()) {
    case K::Atom: return M::box(M::atom(f.name()));
    case K::Top: return M::top();
    case K::Bottom: return M::bottom();
    case K::PrincipalRef: return translate_principal(f.principal());
    case K::And: return M::conjunction(translate_to_modal(f.left()), translate_to_modal(f.right()));
    case K::Or: return M::disjunction(translate_to_modal(f.left()), translate_to_modal(f.right()));
    case K::Implies: return M::box(M::implies(translate_to_modal(f.left()), translate_to_modal(f.right())));
    case K::Says: return M::box(M::disjunction(translate_principal(f.principal()), translate_to_modal(f.left())));
    case K::SpeaksFor:
      return M::box(M::implies(translate_principal(f.principal()), translate_principal(f.second_principal())));
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Direct embedding

namespace icl_lifted {

namespace {

Term boxed(const Term& inner) { return apply(lifted::box(), {lifted::relation(), inner}); }

Term binary_boxed(const char* a, const char* b, const Term& connective) {
  const SimpleType p = world_predicate_type();
  Term va = Term::var(a, p), vb = Term::var(b, p);
  return Term::lambda(a, p, Term::lambda(b, p, boxed(apply(connective, {va, vb}))));
}

}  // namespace

Term impl() { return binary_boxed("S", "T", lifted::impl()); }
Term says() { return binary_boxed("A", "S", lifted::disj()); }
Term speaks_for() { return binary_boxed("A", "B", lifted::impl()); }

Term iclval() {
  const SimpleType p = world_predicate_type();
  return Term::lambda("A", p, Term::app(lifted::mval(), Term::var("A", p)));
}

}  // namespace icl_lifted

Term embed_principal(const Principal& p) {
  using K = Principal::Kind;
  switch (p.kind()) {
    case K::Atom: return lifted::atom(p.name());
    case K::Top: return lifted::top();
    case K::Bottom: return lifted::bottom();
    case K::And: return apply(lifted::conj(), {embed_principal(p.left()), embed_principal(p.right())});
    case K::Or: return apply(lifted::disj(), {embed_principal(p.left()), embed_principal(p.right())});
    case K::Implies: return apply(lifted::impl(), {embed_principal(p.left()), embed_principal(p.right())});
  }
  throw std::logic_error("unreachable");
}

Term embed_icl(const IclFormula& f) {
  using K = IclFormula::Kind;
  switch (f.kind()) {
    case K::Atom: return apply(lifted::box(), {lifted::relation(), lifted::atom(f.name())});
    case K::Top: return lifted::top();
    case K::Bottom: return lifted::bottom();
    case K::PrincipalRef: return embed_principal(f.principal());
    case K::And: return apply(lifted::conj(), {embed_icl(f.left()), embed_icl(f.right())});
    case K::Or: return apply(lifted::disj(), {embed_icl(f.left()), embed_icl(f.right())});
    case K::Implies: return apply(icl_lifted::impl(), {embed_icl(f.left()), embed_icl(f.right())});
    case K::Says: return apply(icl_lifted::says(), {embed_principal(f.principal()), embed_icl(f.left())});
    case K::SpeaksFor:
      return apply(icl_lifted::speaks_for(), {embed_principal(f.principal()), embed_principal(f.second_principal())});
  }
  throw std::logic_error("unreachable");
}

Term iclval(const Term& t) { return mval(t); }

// ---------------------------------------------------------------------------
// Problems

std::string to_string(Logic l) { return l == Logic::K ? "K" : "S4"; }
std::string to_string(Expected e) { return e == Expected::Provable ? "provable" : "countermodel"; }

ProblemFormatError::ProblemFormatError(int l, const std::string& message)
    : std::runtime_error("problem line " + std::to_string(l) + ": " + message), line(l) {}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

Problem parse_problem(std::string_view text) {
  Problem p;
  struct Pending {
    int line;
    bool conjecture;
    std::string text;
  };
  std::vector<Pending> pending;
  bool have_dialect = false;

  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ProblemFormatError(lineno, "expected 'key: value'");
    std::string key = trim(std::string_view(line).substr(0, colon));
    std::string value = trim(std::string_view(line).substr(colon + 1));

    if (key == "name") {
      p.name = value;
    } else if (key == "tptp") {
      p.tptp = value;
    } else if (key == "dialect") {
      try {
        p.dialect = parse_dialect(value);
      } catch (const std::invalid_argument& e) {
        throw ProblemFormatError(lineno, e.what());
      }
      have_dialect = true;
    } else if (key == "principal" || key == "prop") {
      auto& target = key == "principal" ? p.decl.principals : p.decl.props;
      for (auto& w : words(value)) {
        if (!valid_name(w)) throw ProblemFormatError(lineno, "invalid or reserved name '" + w + "'");
        target.insert(w);
      }
    } else if (key == "axiom") {
      auto ws = words(value);
      std::sort(ws.begin(), ws.end());
      if (ws == std::vector<std::string>{"R", "T"}) {
        p.frame_axioms = true;
      } else if (ws.empty()) {
        p.frame_axioms = false;
      } else {
        throw ProblemFormatError(lineno, "axiom line must list both R and T");
      }
    } else if (key == "assume" || key == "conjecture") {
      if (key == "conjecture" && std::any_of(pending.begin(), pending.end(), [](auto& x) { return x.conjecture; }))
        throw ProblemFormatError(lineno, "more than one conjecture");
      pending.push_back({lineno, key == "conjecture", value});
    } else if (key == "expect") {
      if (value == "provable" || value == "valid") {
        p.expected = Expected::Provable;
      } else if (value == "countermodel" || value == "invalid") {
        p.expected = Expected::Countermodel;
      } else {
        throw ProblemFormatError(lineno, "expect must be 'provable' or 'countermodel'");
      }
    } else if (key == "reference") {
      double v = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc() || ptr != value.data() + value.size())
        throw ProblemFormatError(lineno, "reference must be a number of seconds");
      p.reference_seconds = v;
    } else {
      throw ProblemFormatError(lineno, "unknown key '" + key + "'");
    }
  }
  if (!have_dialect) throw ProblemFormatError(lineno, "missing 'dialect:' line");
  for (const auto& n : p.decl.principals)
    if (p.decl.props.count(n)) throw ProblemFormatError(0, "'" + n + "' declared both as principal and as proposition");

  // Without declarations, infer principals across all formulas so that a
  // name is classified the same way everywhere.
  Declarations decl = p.decl;
  if (decl.principals.empty() && decl.props.empty()) {
    std::set<std::string> principals;
    for (const auto& item : pending) {
      try {
        principal_positions(*ExprParser(item.text).parse(), false, principals);
      } catch (const IclSyntaxError& e) {
        throw ProblemFormatError(item.line, e.what());
      }
    }
    std::set<std::string> all;
    for (const auto& item : pending) {
      std::set<std::string> names;
      principal_positions(*ExprParser(item.text).parse(), true, names);
      all.insert(names.begin(), names.end());
    }
    decl.principals = principals;
    for (const auto& n : all)
      if (!principals.count(n)) decl.props.insert(n);
  }
  for (const auto& item : pending) {
    try {
      IclFormula f = parse_icl(item.text, p.dialect, decl);
      if (item.conjecture) {
        p.conjecture = f;
      } else {
        p.assumptions.push_back(f);
      }
    } catch (const IclSyntaxError& e) {
      throw ProblemFormatError(item.line, e.what());
    } catch (const DialectError& e) {
      throw ProblemFormatError(item.line, e.what());
    }
  }
  if (!p.conjecture) throw ProblemFormatError(lineno, "missing 'conjecture:' line");
  return p;
}

std::string print_problem(const Problem& p) {
  std::ostringstream out;
  auto join = [](const std::set<std::string>& s) {
    std::string r;
    for (const auto& x : s) r += (r.empty() ? "" : " ") + x;
    return r;
  };
  if (!p.name.empty()) out << "name: " << p.name << "\n";
  if (!p.tptp.empty()) out << "tptp: " << p.tptp << "\n";
  out << "dialect: " << to_string(p.dialect) << "\n";
  if (!p.decl.principals.empty()) out << "principal: " << join(p.decl.principals) << "\n";
  if (!p.decl.props.empty()) out << "prop: " << join(p.decl.props) << "\n";
  if (p.frame_axioms) out << "axiom: R T\n";
  for (const auto& a : p.assumptions) out << "assume: " << to_string(a) << "\n";
  if (p.conjecture) out << "conjecture: " << to_string(*p.conjecture) << "\n";
  if (p.expected) out << "expect: " << to_string(*p.expected) << "\n";
  if (p.reference_seconds) {
    std::ostringstream num;
    num << *p.reference_seconds;
    out << "reference: " << num.str() << "\n";
  }
  return out.str();
}

Problem with_logic(const Problem& p, Logic l) {
  Problem q = p;
  q.frame_axioms = l == Logic::S4;
  return q;
}

}  // namespace iclstt
