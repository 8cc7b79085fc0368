#include "iclstt/stt.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>

namespace iclstt {

// ---------------------------------------------------------------------------
// Types

SimpleType SimpleType::o() {
  static const SimpleType t(std::make_shared<const Node>(Node{Kind::Bool, nullptr, nullptr}));
  return t;
}

SimpleType SimpleType::iota() {
  static const SimpleType t(std::make_shared<const Node>(Node{Kind::Individual, nullptr, nullptr}));
  return t;
}

SimpleType SimpleType::arrow(SimpleType domain, SimpleType codomain) {
  return SimpleType(std::make_shared<const Node>(
      Node{Kind::Arrow, std::make_shared<const SimpleType>(std::move(domain)),
           std::make_shared<const SimpleType>(std::move(codomain))}));
}

const SimpleType& SimpleType::domain() const {
  if (!is_arrow()) throw std::logic_error("domain() of non-arrow type " + str());
  return *node_->domain;
}

const SimpleType& SimpleType::codomain() const {
  if (!is_arrow()) throw std::logic_error("codomain() of non-arrow type " + str());
  return *node_->codomain;
}

bool operator==(const SimpleType& a, const SimpleType& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const SimpleType& a, const SimpleType& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = static_cast<int>(a.kind()) <=> static_cast<int>(b.kind()); c != 0) return c;
  if (!a.is_arrow()) return std::strong_ordering::equal;
  if (auto c = a.domain() <=> b.domain(); c != 0) return c;
  return a.codomain() <=> b.codomain();
}

std::string SimpleType::str() const {
  switch (kind()) {
    case Kind::Bool: return "o";
    case Kind::Individual: return "ι";
    case Kind::Arrow: {
      std::string d = domain().str();
      if (domain().is_arrow()) d = "(" + d + ")";
      return d + "→" + codomain().str();
    }
  }
  return {};
}

SimpleType world_predicate_type() {
  static const SimpleType t = SimpleType::arrow(SimpleType::iota(), SimpleType::o());
  return t;
}

SimpleType relation_type() {
  static const SimpleType t = SimpleType::arrow(SimpleType::iota(), world_predicate_type());
  return t;
}

SimpleType arrows(const std::vector<SimpleType>& args, SimpleType result) {
  for (auto it = args.rbegin(); it != args.rend(); ++it) result = SimpleType::arrow(*it, result);
  return result;
}

// ---------------------------------------------------------------------------
// Terms

namespace {

std::shared_ptr<const SimpleType> share(const SimpleType& t) {
  return std::make_shared<const SimpleType>(t);
}

}  // namespace

Term Term::constant(std::string name, SimpleType type) {
  auto t = share(type);
  return Term(std::make_shared<const Node>(
      Node{TermKind::Const, Builtin::None, std::move(name), t, nullptr, nullptr, t}));
}

Term Term::var(std::string name, SimpleType type) {
  auto t = share(type);
  return Term(std::make_shared<const Node>(
      Node{TermKind::Var, Builtin::None, std::move(name), t, nullptr, nullptr, t}));
}

Term Term::lambda(std::string bound, SimpleType bound_type, Term body) {
  std::shared_ptr<const SimpleType> type;
  if (const SimpleType* bt = body.cached_type()) type = share(SimpleType::arrow(bound_type, *bt));
  return Term(std::make_shared<const Node>(Node{TermKind::Lambda, Builtin::None, std::move(bound),
                                                share(bound_type),
                                                std::make_shared<const Term>(std::move(body)),
                                                nullptr, std::move(type)}));
}

Term Term::app(Term fn, Term arg) {
  std::shared_ptr<const SimpleType> type;
  const SimpleType* ft = fn.cached_type();
  const SimpleType* at = arg.cached_type();
  if (ft && at && ft->is_arrow() && ft->domain() == *at) type = share(ft->codomain());
  return Term(std::make_shared<const Node>(Node{TermKind::App, Builtin::None, {}, nullptr,
                                                std::make_shared<const Term>(std::move(fn)),
                                                std::make_shared<const Term>(std::move(arg)),
                                                std::move(type)}));
}

// Builtins are constructed through a private path so user constants can
// never alias them.
#define ICLSTT_BUILTIN(tag, nm, ty)                                                            \
  Term(std::make_shared<const Node>(Node{TermKind::Const, tag, nm, share(ty), nullptr, nullptr, \
                                         share(ty)}))

Term Term::neg() {
  static const Term t = ICLSTT_BUILTIN(Builtin::Neg, "$not",
                                       SimpleType::arrow(SimpleType::o(), SimpleType::o()));
  return t;
}

Term Term::disj() {
  static const Term t = ICLSTT_BUILTIN(
      Builtin::Or, "$or",
      SimpleType::arrow(SimpleType::o(), SimpleType::arrow(SimpleType::o(), SimpleType::o())));
  return t;
}

Term Term::pi(SimpleType quantified) {
  SimpleType ty = SimpleType::arrow(SimpleType::arrow(quantified, SimpleType::o()), SimpleType::o());
  return ICLSTT_BUILTIN(Builtin::Pi, "$pi", ty);
}

Term Term::truth() {
  static const Term t = ICLSTT_BUILTIN(Builtin::True, "$true", SimpleType::o());
  return t;
}

#undef ICLSTT_BUILTIN

const SimpleType& Term::symbol_type() const {
  if (!node_->symbol_type) throw std::logic_error("symbol_type() of an application");
  return *node_->symbol_type;
}

const Term& Term::fn() const {
  if (!is_app()) throw std::logic_error("fn() of non-application");
  return *node_->left;
}

const Term& Term::arg() const {
  if (!is_app()) throw std::logic_error("arg() of non-application");
  return *node_->right;
}

const Term& Term::body() const {
  if (!is_lambda()) throw std::logic_error("body() of non-lambda");
  return *node_->left;
}

std::string Term::str() const { return to_string(*this); }

TypeError::TypeError(std::string pos, std::string exp, std::string fnd)
    : std::runtime_error("type error at `" + pos + "`: expected " + exp + ", found " + fnd),
      position(std::move(pos)),
      expected(std::move(exp)),
      found(std::move(fnd)) {}

TermSyntaxError::TermSyntaxError(std::size_t off, const std::string& message)
    : std::runtime_error("term syntax error at offset " + std::to_string(off) + ": " + message),
      offset(off) {}

namespace {

SimpleType check(TypeContext& ctx, const Term& t, bool strict_vars) {
  switch (t.kind()) {
    case TermKind::Const: return t.symbol_type();
    case TermKind::Var: {
      auto it = ctx.find(t.name());
      if (it == ctx.end()) {
        if (strict_vars) throw UnboundVariable(t.name());
        return t.symbol_type();
      }
      if (it->second != t.symbol_type() && strict_vars)
        throw TypeError(t.name(), it->second.str(), t.symbol_type().str());
      return t.symbol_type();
    }
    case TermKind::Lambda: {
      std::optional<SimpleType> saved;
      if (auto it = ctx.find(t.name()); it != ctx.end()) saved = it->second;
      ctx.insert_or_assign(t.name(), t.symbol_type());
      SimpleType body = check(ctx, t.body(), strict_vars);
      if (saved) ctx.insert_or_assign(t.name(), *saved);
      else ctx.erase(t.name());
      return SimpleType::arrow(t.symbol_type(), body);
    }
    case TermKind::App: {
      SimpleType f = check(ctx, t.fn(), strict_vars);
      SimpleType a = check(ctx, t.arg(), strict_vars);
      if (!f.is_arrow()) throw TypeError(to_string(t), "function type", f.str());
      if (f.domain() != a) throw TypeError(to_string(t), f.domain().str(), a.str());
      return f.codomain();
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

SimpleType Term::type() const {
  if (const SimpleType* t = cached_type()) return *t;
  TypeContext ctx;
  check(ctx, *this, false);  // throws with a located message
  throw TypeError(str(), "well-typed term", "ill-typed term");
}

SimpleType type_of(const TypeContext& context, const Term& t) {
  TypeContext ctx = context;
  return check(ctx, t, true);
}

// ---------------------------------------------------------------------------
// Builders

Term mk_not(Term a) { return Term::app(Term::neg(), std::move(a)); }
Term mk_or(Term a, Term b) { return Term::app(Term::app(Term::disj(), std::move(a)), std::move(b)); }
Term mk_implies(Term a, Term b) { return mk_or(mk_not(std::move(a)), std::move(b)); }
Term mk_and(Term a, Term b) { return mk_not(mk_or(mk_not(std::move(a)), mk_not(std::move(b)))); }
Term mk_false() { return mk_not(Term::truth()); }

Term mk_forall(const Symbol& var, Term body) {
  return Term::app(Term::pi(var.type), Term::lambda(var, std::move(body)));
}

Term apply(Term fn, std::initializer_list<Term> args) {
  for (const Term& a : args) fn = Term::app(std::move(fn), a);
  return fn;
}

// ---------------------------------------------------------------------------
// Free variables and substitution

namespace {

void collect_free(const Term& t, std::vector<Symbol>& bound, std::set<Symbol>& out) {
  switch (t.kind()) {
    case TermKind::Const: return;
    case TermKind::Var: {
      Symbol s = t.symbol();
      if (std::find(bound.begin(), bound.end(), s) == bound.end()) out.insert(std::move(s));
      return;
    }
    case TermKind::Lambda:
      bound.push_back(t.symbol());
      collect_free(t.body(), bound, out);
      bound.pop_back();
      return;
    case TermKind::App:
      collect_free(t.fn(), bound, out);
      collect_free(t.arg(), bound, out);
      return;
  }
}

void collect_consts(const Term& t, std::set<Symbol>& out) {
  switch (t.kind()) {
    case TermKind::Const:
      if (t.builtin() == Builtin::None) out.insert(t.symbol());
      return;
    case TermKind::Var: return;
    case TermKind::Lambda: collect_consts(t.body(), out); return;
    case TermKind::App:
      collect_consts(t.fn(), out);
      collect_consts(t.arg(), out);
      return;
  }
}

}  // namespace

std::set<Symbol> free_vars(const Term& t) {
  std::vector<Symbol> bound;
  std::set<Symbol> out;
  collect_free(t, bound, out);
  return out;
}

bool occurs_free(const Symbol& var, const Term& t) {
  switch (t.kind()) {
    case TermKind::Const: return false;
    case TermKind::Var: return t.name() == var.name && t.symbol_type() == var.type;
    case TermKind::Lambda:
      if (t.name() == var.name && t.symbol_type() == var.type) return false;
      return occurs_free(var, t.body());
    case TermKind::App: return occurs_free(var, t.fn()) || occurs_free(var, t.arg());
  }
  return false;
}

std::set<Symbol> constants_of(const Term& t) {
  std::set<Symbol> out;
  collect_consts(t, out);
  return out;
}

namespace {

std::string fresh_name(const std::string& base_name, const std::set<std::string>& taken) {
  std::string base = base_name;
  while (base.size() > 1 && std::isdigit(static_cast<unsigned char>(base.back()))) base.pop_back();
  for (unsigned k = 1;; ++k) {
    std::string candidate = base + std::to_string(k);
    if (!taken.contains(candidate)) return candidate;
  }
}

Term subst(const Term& t, const Symbol& x, const Term& r, const std::set<Symbol>& fv_r) {
  switch (t.kind()) {
    case TermKind::Const: return t;
    case TermKind::Var:
      return (t.name() == x.name && t.symbol_type() == x.type) ? r : t;
    case TermKind::App: {
      Term f = subst(t.fn(), x, r, fv_r);
      Term a = subst(t.arg(), x, r, fv_r);
      if (f.same_node(t.fn()) && a.same_node(t.arg())) return t;
      return Term::app(std::move(f), std::move(a));
    }
    case TermKind::Lambda: {
      Symbol y = t.symbol();
      if (y == x || !occurs_free(x, t.body())) return t;
      Term body = t.body();
      // Renaming on a name clash of any type keeps printed terms unambiguous.
      const bool clash =
          std::any_of(fv_r.begin(), fv_r.end(), [&](const Symbol& s) { return s.name == y.name; });
      if (clash) {
        std::set<std::string> taken;
        for (const Symbol& s : fv_r) taken.insert(s.name);
        for (const Symbol& s : free_vars(body)) taken.insert(s.name);
        for (const Symbol& s : constants_of(body)) taken.insert(s.name);
        for (const Symbol& s : constants_of(r)) taken.insert(s.name);
        taken.insert(x.name);
        taken.insert(y.name);
        Symbol fresh{fresh_name(y.name, taken), y.type};
        Term fresh_var = Term::var(fresh);
        body = subst(body, y, fresh_var, {fresh});
        y = fresh;
      }
      return Term::lambda(y, subst(body, x, r, fv_r));
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Term substitute(const Term& body, const Symbol& var, const Term& replacement) {
  const SimpleType* rt = replacement.cached_type();
  if (!rt || *rt != var.type)
    throw TypeError("[" + to_string(replacement) + "/" + var.name + "]", var.type.str(),
                    rt ? rt->str() : std::string("ill-typed term"));
  return subst(body, var, replacement, free_vars(replacement));
}

// ---------------------------------------------------------------------------
// Normalization

Term beta_eta_normalize(const Term& t) {
  switch (t.kind()) {
    case TermKind::Const:
    case TermKind::Var: return t;
    case TermKind::Lambda: {
      Term body = beta_eta_normalize(t.body());
      Symbol x = t.symbol();
      if (body.is_app() && body.arg().is_var() && body.arg().symbol() == x &&
          !occurs_free(x, body.fn()))
        return body.fn();
      if (body.same_node(t.body())) return t;
      return Term::lambda(x, std::move(body));
    }
    case TermKind::App: {
      // Leftmost-outermost: contract the head redex before touching arguments.
      std::vector<Term> args;
      Term head = t;
      while (head.is_app()) {
        args.push_back(head.arg());
        head = head.fn();
      }
      std::reverse(args.begin(), args.end());
      std::size_t next = 0;
      while (head.is_lambda() && next < args.size()) {
        head = substitute(head.body(), head.symbol(), args[next++]);
        std::vector<Term> inner;
        while (head.is_app()) {
          inner.push_back(head.arg());
          head = head.fn();
        }
        args.insert(args.begin() + static_cast<std::ptrdiff_t>(next), inner.rbegin(), inner.rend());
      }
      if (head.is_lambda()) return beta_eta_normalize(head);
      Term out = head;
      for (; next < args.size(); ++next) out = Term::app(out, beta_eta_normalize(args[next]));
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

bool is_beta_eta_normal(const Term& t) {
  switch (t.kind()) {
    case TermKind::Const:
    case TermKind::Var: return true;
    case TermKind::Lambda: {
      const Term& b = t.body();
      if (b.is_app() && b.arg().is_var() && b.arg().symbol() == t.symbol() &&
          !occurs_free(t.symbol(), b.fn()))
        return false;
      return is_beta_eta_normal(b);
    }
    case TermKind::App:
      if (t.fn().is_lambda()) return false;
      return is_beta_eta_normal(t.fn()) && is_beta_eta_normal(t.arg());
  }
  return false;
}

// ---------------------------------------------------------------------------
// Alpha equivalence

namespace {

std::ptrdiff_t binder_index(const std::vector<Symbol>& stack, const Symbol& s) {
  for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(stack.size()) - 1; i >= 0; --i)
    if (stack[static_cast<std::size_t>(i)] == s) return i;
  return -1;
}

bool aeq(const Term& a, const Term& b, std::vector<Symbol>& sa, std::vector<Symbol>& sb) {
  if (a.same_node(b) && sa == sb) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Const:
      return a.builtin() == b.builtin() && a.name() == b.name() && a.symbol_type() == b.symbol_type();
    case TermKind::Var: {
      Symbol x = a.symbol(), y = b.symbol();
      auto ia = binder_index(sa, x), ib = binder_index(sb, y);
      if (ia != ib) return false;
      return ia >= 0 || x == y;
    }
    case TermKind::Lambda: {
      if (a.symbol_type() != b.symbol_type()) return false;
      sa.push_back(a.symbol());
      sb.push_back(b.symbol());
      bool r = aeq(a.body(), b.body(), sa, sb);
      sa.pop_back();
      sb.pop_back();
      return r;
    }
    case TermKind::App: return aeq(a.fn(), b.fn(), sa, sb) && aeq(a.arg(), b.arg(), sa, sb);
  }
  return false;
}

}  // namespace

bool alpha_equal(const Term& a, const Term& b) {
  std::vector<Symbol> sa, sb;
  return aeq(a, b, sa, sb);
}

bool alpha_beta_eta_eq(const Term& a, const Term& b) {
  SimpleType ta = a.type(), tb = b.type();
  if (ta != tb) throw TypeError("βη-comparison", ta.str(), tb.str());
  return alpha_equal(beta_eta_normalize(a), beta_eta_normalize(b));
}

// ---------------------------------------------------------------------------
// Printing

namespace {

enum Level { kBinder = 0, kImpl = 1, kOr = 2, kAnd = 3, kNot = 4, kApp = 5, kAtom = 6 };

bool is_builtin(const Term& t, Builtin b) { return t.is_const() && t.builtin() == b; }

const Term* as_neg(const Term& t) {
  if (t.is_app() && is_builtin(t.fn(), Builtin::Neg)) return &t.arg();
  return nullptr;
}

bool as_or(const Term& t, const Term*& a, const Term*& b) {
  if (t.is_app() && t.fn().is_app() && is_builtin(t.fn().fn(), Builtin::Or)) {
    a = &t.fn().arg();
    b = &t.arg();
    return true;
  }
  return false;
}

void print(const Term& t, int ctx, std::string& out);

void wrap(int level, int ctx, std::string& out, const std::string& text) {
  if (level < ctx) {
    out += '(';
    out += text;
    out += ')';
  } else {
    out += text;
  }
}

std::string show(const Term& t, int ctx) {
  std::string s;
  print(t, ctx, s);
  return s;
}

void print(const Term& t, int ctx, std::string& out) {
  switch (t.kind()) {
    case TermKind::Var: out += t.name(); return;
    case TermKind::Const:
      switch (t.builtin()) {
        case Builtin::None: out += t.name(); return;
        case Builtin::True: out += "⊤"; return;
        case Builtin::Neg: out += "(¬)"; return;
        case Builtin::Or: out += "(∨)"; return;
        case Builtin::Pi:
          out += "Π[" + t.symbol_type().domain().domain().str() + "]";
          return;
      }
      return;
    case TermKind::Lambda:
      wrap(kBinder, ctx, out,
           "λ" + t.name() + ":" + t.symbol_type().str() + ". " + show(t.body(), kBinder));
      return;
    case TermKind::App: break;
  }
  if (const Term* a = as_neg(t)) {
    if (is_builtin(*a, Builtin::True)) {
      out += "⊥";
      return;
    }
    const Term *x, *y;
    if (as_or(*a, x, y)) {
      const Term* nx = as_neg(*x);
      const Term* ny = as_neg(*y);
      if (nx && ny) {
        wrap(kAnd, ctx, out, show(*nx, kNot) + " ∧ " + show(*ny, kAnd));
        return;
      }
    }
    wrap(kNot, ctx, out, "¬" + show(*a, kNot));
    return;
  }
  const Term *x, *y;
  if (as_or(t, x, y)) {
    if (const Term* nx = as_neg(*x); nx && !is_builtin(*nx, Builtin::True)) {
      wrap(kImpl, ctx, out, show(*nx, kOr) + " ⇒ " + show(*y, kImpl));
      return;
    }
    wrap(kOr, ctx, out, show(*x, kAnd) + " ∨ " + show(*y, kOr));
    return;
  }
  if (is_builtin(t.fn(), Builtin::Pi) && t.arg().is_lambda()) {
    const Term& l = t.arg();
    wrap(kBinder, ctx, out,
         "∀" + l.name() + ":" + l.symbol_type().str() + ". " + show(l.body(), kBinder));
    return;
  }
  wrap(kApp, ctx, out, show(t.fn(), kApp) + " " + show(t.arg(), kAtom));
}

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  print(t, kBinder, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok {
  Ident, Lambda, Forall, Colon, Dot, LParen, RParen, LBracket, RBracket,
  Not, Or, And, Impl, Top, Bot, Pi, Arrow, Iota, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> lex(std::string_view s) {
  static const std::pair<std::string_view, Tok> symbols[] = {
      {"λ", Tok::Lambda}, {"\\", Tok::Lambda}, {"∀", Tok::Forall}, {"!", Tok::Forall},
      {"¬", Tok::Not},    {"~", Tok::Not},     {"∨", Tok::Or},     {"|", Tok::Or},
      {"∧", Tok::And},    {"&", Tok::And},     {"⇒", Tok::Impl},   {"=>", Tok::Impl},
      {"⊤", Tok::Top},    {"$true", Tok::Top}, {"⊥", Tok::Bot},    {"$false", Tok::Bot},
      {"Π", Tok::Pi},     {"→", Tok::Arrow},   {"->", Tok::Arrow}, {"ι", Tok::Iota},
      {":", Tok::Colon},  {".", Tok::Dot},     {"(", Tok::LParen}, {")", Tok::RParen},
      {"[", Tok::LBracket}, {"]", Tok::RBracket},
  };
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    bool matched = false;
    for (const auto& [text, kind] : symbols) {
      if (s.substr(i, text.size()) == text) {
        out.push_back({kind, std::string(text), i});
        i += text.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw TermSyntaxError(i, "unexpected character");
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class TermParser {
 public:
  TermParser(std::string_view text, const std::map<std::string, SimpleType>& constants,
             const std::map<std::string, SimpleType>& free)
      : toks_(lex(text)), constants_(constants), free_(free) {}

  Term parse_all() {
    Term t = expr();
    expect(Tok::End, "end of input");
    if (!t.cached_type()) type_of(free_, t);
    return t;
  }

  SimpleType parse_type_all() {
    SimpleType t = type();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  Token take() { return toks_[pos_++]; }
  void expect(Tok k, const char* what) {
    if (!at(k)) throw TermSyntaxError(peek().offset, std::string("expected ") + what);
    ++pos_;
  }

  SimpleType type() {
    SimpleType base = type_atom();
    if (at(Tok::Arrow)) {
      take();
      return SimpleType::arrow(base, type());
    }
    return base;
  }

  SimpleType type_atom() {
    if (at(Tok::Iota)) {
      take();
      return SimpleType::iota();
    }
    if (at(Tok::Ident) && (peek().text == "o" || peek().text == "i")) {
      bool bool_type = take().text == "o";
      return bool_type ? SimpleType::o() : SimpleType::iota();
    }
    if (at(Tok::LParen)) {
      take();
      SimpleType t = type();
      expect(Tok::RParen, "')'");
      return t;
    }
    throw TermSyntaxError(peek().offset, "expected a type");
  }

  bool at_binder() const { return at(Tok::Lambda) || at(Tok::Forall); }

  Term binder() {
    bool is_lambda = take().kind == Tok::Lambda;
    if (!at(Tok::Ident)) throw TermSyntaxError(peek().offset, "expected bound variable");
    std::string name = take().text;
    expect(Tok::Colon, "':'");
    SimpleType ty = type();
    expect(Tok::Dot, "'.'");
    scope_.push_back({name, ty});
    Term body = expr();
    scope_.pop_back();
    return is_lambda ? Term::lambda(name, ty, body) : mk_forall({name, ty}, body);
  }

  Term expr() {
    if (at_binder()) return binder();
    Term lhs = disjunction();
    if (at(Tok::Impl)) {
      take();
      return mk_implies(lhs, expr());
    }
    return lhs;
  }

  Term disjunction() {
    Term lhs = conjunction();
    if (at(Tok::Or)) {
      take();
      return mk_or(lhs, at_binder() ? binder() : disjunction());
    }
    return lhs;
  }

  Term conjunction() {
    Term lhs = negation();
    if (at(Tok::And)) {
      take();
      return mk_and(lhs, at_binder() ? binder() : conjunction());
    }
    return lhs;
  }

  Term negation() {
    if (at(Tok::Not)) {
      take();
      return mk_not(at_binder() ? binder() : negation());
    }
    return application();
  }

  bool at_atom() const {
    return at(Tok::Ident) || at(Tok::LParen) || at(Tok::Top) || at(Tok::Bot) || at(Tok::Pi);
  }

  Term application() {
    Term t = atom();
    while (at_atom()) t = Term::app(t, atom());
    return t;
  }

  Term atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Ident: {
        std::string name = take().text;
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
          if (it->name == name) return Term::var(*it);
        if (auto it = free_.find(name); it != free_.end()) return Term::var(name, it->second);
        if (auto it = constants_.find(name); it != constants_.end())
          return Term::constant(name, it->second);
        throw TermSyntaxError(tok.offset, "unknown symbol '" + name + "'");
      }
      case Tok::Top: take(); return Term::truth();
      case Tok::Bot: take(); return mk_false();
      case Tok::Pi: {
        take();
        expect(Tok::LBracket, "'['");
        SimpleType ty = type();
        expect(Tok::RBracket, "']'");
        return Term::pi(ty);
      }
      case Tok::LParen: {
        take();
        if (at(Tok::Not) && toks_[pos_ + 1].kind == Tok::RParen) {
          pos_ += 2;
          return Term::neg();
        }
        if (at(Tok::Or) && toks_[pos_ + 1].kind == Tok::RParen) {
          pos_ += 2;
          return Term::disj();
        }
        Term t = expr();
        expect(Tok::RParen, "')'");
        return t;
      }
      default: throw TermSyntaxError(tok.offset, "expected a term");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const std::map<std::string, SimpleType>& constants_;
  const std::map<std::string, SimpleType>& free_;
  std::vector<Symbol> scope_;
};

}  // namespace

Term parse_term(std::string_view text, const std::map<std::string, SimpleType>& constants,
                const std::map<std::string, SimpleType>& free) {
  return TermParser(text, constants, free).parse_all();
}

SimpleType parse_type(std::string_view text) { return TermParser(text, {}, {}).parse_type_all(); }

}  // namespace iclstt
