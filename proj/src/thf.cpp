#include "iclstt/thf.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "iclstt/modal.hpp"

namespace iclstt {

// ---------------------------------------------------------------------------
// Definitions

namespace {

struct Definition {
  std::string symbol;
  Term term;  // may mention earlier defined symbols as constants
};

Term sym(const std::string& name);

SimpleType pred() { return world_predicate_type(); }

Term lam(const char* v, const SimpleType& t, Term body) { return Term::lambda(v, t, std::move(body)); }
Term var(const char* v, const SimpleType& t) { return Term::var(v, t); }

std::vector<Definition> build_definitions() {
  std::vector<Definition> d;
  d.push_back({"mnot", lifted::neg()});
  d.push_back({"mor", lifted::disj()});
  d.push_back({"mand", lifted::conj()});
  d.push_back({"mimplies", lifted::impl()});
  d.push_back({"mtrue", lifted::top()});
  d.push_back({"mfalse", lifted::bottom()});
  d.push_back({"mbox", lifted::box()});
  d.push_back({"mdia", lifted::dia()});
  d.push_back({"mval", lifted::mval()});
  auto boxed = [](Term inner) { return apply(Term::constant("mbox", type_of({}, lifted::box())), {lifted::relation(), inner}); };
  const Term mor = Term::constant("mor", lifted::disj().type());
  const Term mand = Term::constant("mand", lifted::conj().type());
  const Term mimplies = Term::constant("mimplies", lifted::impl().type());
  const Term mval = Term::constant("mval", lifted::mval().type());
  d.push_back({"icl_atom", lam("P", pred(), boxed(var("P", pred())))});
  d.push_back({"icl_and", lam("S", pred(), lam("T", pred(), apply(mand, {var("S", pred()), var("T", pred())})))});
  d.push_back({"icl_or", lam("S", pred(), lam("T", pred(), apply(mor, {var("S", pred()), var("T", pred())})))});
  d.push_back({"icl_impl",
               lam("S", pred(), lam("T", pred(), boxed(apply(mimplies, {var("S", pred()), var("T", pred())}))))});
  d.push_back({"icl_true", Term::constant("mtrue", pred())});
  d.push_back({"icl_false", Term::constant("mfalse", pred())});
  d.push_back({"icl_says", lam("A", pred(), lam("S", pred(), boxed(apply(mor, {var("A", pred()), var("S", pred())}))))});
  d.push_back({"icl_sf",
               lam("A", pred(), lam("B", pred(), boxed(apply(mimplies, {var("A", pred()), var("B", pred())}))))});
  d.push_back({"iclval", lam("A", pred(), Term::app(mval, var("A", pred())))});
  return d;
}

const std::vector<Definition>& definitions() {
  static const std::vector<Definition> d = build_definitions();
  return d;
}

// Replaces defined constants by their (closed) definitions.
Term unfold(const Term& t, const std::map<std::string, Term>& defs) {
  switch (t.kind()) {
    case TermKind::Const: {
      if (t.builtin() != Builtin::None) return t;
      auto it = defs.find(t.name());
      return it == defs.end() ? t : it->second;
    }
    case TermKind::Var: return t;
    case TermKind::Lambda: return Term::lambda(t.symbol(), unfold(t.body(), defs));
    case TermKind::App: return Term::app(unfold(t.fn(), defs), unfold(t.arg(), defs));
  }
  throw std::logic_error("unreachable");
}

const std::map<std::string, Term>& unfolded_definitions() {
  static const std::map<std::string, Term> m = [] {
    std::map<std::string, Term> out;
    for (const auto& d : definitions()) out.emplace(d.symbol, beta_eta_normalize(unfold(d.term, out)));
    return out;
  }();
  return m;
}

Term sym(const std::string& name) { return Term::constant(name, unfolded_definitions().at(name).type()); }

}  // namespace

const std::vector<std::string>& thf_defined_symbols() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& d : definitions()) out.push_back(d.symbol);
    return out;
  }();
  return names;
}

Term thf_definition(const std::string& symbol) {
  auto it = unfolded_definitions().find(symbol);
  if (it == unfolded_definitions().end()) throw std::out_of_range("no THF definition named '" + symbol + "'");
  return it->second;
}

namespace {

Term symbolic_principal(const Principal& p) {
  using K = Principal::Kind;
  switch (p.kind()) {
    case K::Atom: return lifted::atom(p.name());
    case K::Top: return sym("mtrue");
    case K::Bottom: return sym("mfalse");
    case K::And: return apply(sym("mand"), {symbolic_principal(p.left()), symbolic_principal(p.right())});
    case K::Or: return apply(sym("mor"), {symbolic_principal(p.left()), symbolic_principal(p.right())});
    case K::Implies: return apply(sym("mimplies"), {symbolic_principal(p.left()), symbolic_principal(p.right())});
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Term symbolic_icl(const IclFormula& f) {
  using K = IclFormula::Kind;
  switch (f.kind()) {
    case K::Atom: return Term::app(sym("icl_atom"), lifted::atom(f.name()));
    case K::Top: return sym("icl_true");
    case K::Bottom: return sym("icl_false");
    case K::PrincipalRef: return symbolic_principal(f.principal());
    case K::And: return apply(sym("icl_and"), {symbolic_icl(f.left()), symbolic_icl(f.right())});
    case K::Or: return apply(sym("icl_or"), {symbolic_icl(f.left()), symbolic_icl(f.right())});
    case K::Implies: return apply(sym("icl_impl"), {symbolic_icl(f.left()), symbolic_icl(f.right())});
    case K::Says: return apply(sym("icl_says"), {symbolic_principal(f.principal()), symbolic_icl(f.left())});
    case K::SpeaksFor:
      return apply(sym("icl_sf"), {symbolic_principal(f.principal()), symbolic_principal(f.second_principal())});
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Printing

namespace {

bool is_lower_word(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string constant_name(const std::string& s) {
  if (is_lower_word(s)) return s;
  std::string q = "'";
  for (char c : s) {
    if (c == '\'' || c == '\\') q += '\\';
    q += c;
  }
  return q + "'";
}

std::string variable_name(const std::string& s) {
  if (!s.empty() && std::isupper(static_cast<unsigned char>(s[0]))) return s;
  return "V" + s;
}

bool is_builtin(const Term& t, Builtin b) { return t.is_const() && t.builtin() == b; }

// t = ¬a
const Term* negated(const Term& t) {
  if (t.is_app() && is_builtin(t.fn(), Builtin::Neg)) return &t.arg();
  return nullptr;
}

// t = a ∨ b
bool disjunction(const Term& t, const Term*& a, const Term*& b) {
  if (t.is_app() && t.fn().is_app() && is_builtin(t.fn().fn(), Builtin::Or)) {
    a = &t.fn().arg();
    b = &t.arg();
    return true;
  }
  return false;
}

std::string show(const Term& t);

std::string show_app_spine(const Term& t) {
  std::vector<const Term*> args;
  const Term* head = &t;
  while (head->is_app()) {
    args.push_back(&head->arg());
    head = &head->fn();
  }
  std::string s = "(" + show(*head);
  for (auto it = args.rbegin(); it != args.rend(); ++it) s += " @ " + show(**it);
  return s + ")";
}

std::string show(const Term& t) {
  switch (t.kind()) {
    case TermKind::Const:
      switch (t.builtin()) {
        case Builtin::True: return "$true";
        case Builtin::Neg: return "(~)";
        case Builtin::Or: return "(|)";
        // A bare Π is written η-expanded, since `!!` alone carries no type.
        case Builtin::Pi: return "(^[P:" + to_thf(t.symbol_type().domain()) + "]: (!! @ P))";
        case Builtin::None: return constant_name(t.name());
      }
      break;
    case TermKind::Var: return variable_name(t.name());
    case TermKind::Lambda: {
      std::string s = "(^[";
      const Term* cur = &t;
      bool first = true;
      while (cur->is_lambda()) {
        s += (first ? "" : ",") + variable_name(cur->name()) + ":" + to_thf(cur->symbol_type());
        first = false;
        cur = &cur->body();
      }
      return s + "]: " + show(*cur) + ")";
    }
    case TermKind::App: {
      if (const Term* a = negated(t)) {
        if (is_builtin(*a, Builtin::True)) return "$false";
        const Term *x, *y;
        if (disjunction(*a, x, y)) {
          const Term* nx = negated(*x);
          const Term* ny = negated(*y);
          if (nx && ny) return "(" + show(*nx) + " & " + show(*ny) + ")";
        }
        return "(~ " + show(*a) + ")";
      }
      const Term *x, *y;
      if (disjunction(t, x, y)) {
        if (const Term* nx = negated(*x)) return "(" + show(*nx) + " => " + show(*y) + ")";
        return "(" + show(*x) + " | " + show(*y) + ")";
      }
      if (is_builtin(t.fn(), Builtin::Pi)) {
        if (t.arg().is_lambda())
          return "(! [" + variable_name(t.arg().name()) + ":" + to_thf(t.arg().symbol_type()) +
                 "]: " + show(t.arg().body()) + ")";
        return "(!! @ " + show(t.arg()) + ")";
      }
      return show_app_spine(t);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::string to_thf(const SimpleType& t) {
  switch (t.kind()) {
    case SimpleType::Kind::Bool: return "$o";
    case SimpleType::Kind::Individual: return "$i";
    case SimpleType::Kind::Arrow: return "(" + to_thf(t.domain()) + ">" + to_thf(t.codomain()) + ")";
  }
  return "?";
}

std::string to_thf(const Term& t) { return show(t); }

std::string ThfDocument::str() const {
  std::ostringstream out;
  for (const auto& h : header) out << "%" << (h.empty() ? "" : " " + h) << "\n";
  if (!header.empty()) out << "\n";
  for (const auto& e : entries) out << "thf(" << e.name << ", " << e.role << ",\n    " << e.formula << ").\n\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Documents

namespace {

std::string entry_name(const std::string& base, const std::string& suffix) {
  std::string n = base + suffix;
  return is_lower_word(n) ? n : constant_name(n);
}

ThfEntry type_entry(const std::string& symbol, const SimpleType& type) {
  return {entry_name(symbol, "_type"), "type", "(" + constant_name(symbol) + ": " + to_thf(type) + ")"};
}

void append_base(ThfDocument& doc, Logic logic) {
  doc.entries.push_back(type_entry(std::string(kRelationName), relation_type()));
  for (const auto& d : definitions()) {
    doc.entries.push_back(type_entry(d.symbol, d.term.type()));
    doc.entries.push_back(
        {entry_name(d.symbol, "_def"), "definition", "(" + constant_name(d.symbol) + " = " + to_thf(d.term) + ")"});
  }
  if (logic == Logic::S4) {
    const Term x = Term::var("X", pred());
    auto axiom = [&](const Term& consequent) {
      Term body = Term::app(sym("mval"), apply(sym("mimplies"), {apply(sym("mbox"), {lifted::relation(), x}), consequent}));
      return to_thf(mk_forall({"X", pred()}, body));
    };
    doc.entries.push_back({"axiom_r", "axiom", axiom(x)});
    doc.entries.push_back(
        {"axiom_t", "axiom", axiom(apply(sym("mbox"), {lifted::relation(), apply(sym("mbox"), {lifted::relation(), x})}))});
  }
}

}  // namespace

ThfDocument render_axiom_base(Logic logic) {
  ThfDocument doc;
  doc.header = {logic == Logic::S4 ? "File: icl_s4.ax" : "File: icl_k.ax",
                "Lifted modal connectives and access control operators over the relation r."};
  if (logic == Logic::S4) doc.header.push_back("Adds axioms R and T, which make r reflexive and transitive.");
  append_base(doc, logic);
  return doc;
}

ThfDocument render_problem(const Problem& p) {
  if (!p.conjecture) throw std::invalid_argument("problem has no conjecture");
  std::set<std::string> atoms;
  auto note = [&](const IclFormula& f) {
    auto a = principal_names(f);
    auto b = proposition_names(f);
    atoms.insert(a.begin(), a.end());
    atoms.insert(b.begin(), b.end());
  };
  for (const auto& a : p.assumptions) note(a);
  note(*p.conjecture);
  for (const auto& a : atoms)
    if (unfolded_definitions().count(a))
      throw std::invalid_argument("atom '" + a + "' clashes with a defined THF constant");

  ThfDocument doc;
  doc.header.push_back("File: " + thf_file_name(p));
  doc.header.push_back("Problem: " + p.name);
  doc.header.push_back("Dialect: " + to_string(p.dialect));
  doc.header.push_back("Logic: " + to_string(p.logic()));
  if (p.expected) doc.header.push_back("Expected: " + to_string(*p.expected));
  for (const auto& a : p.assumptions) doc.header.push_back("Assume: " + to_string(a));
  doc.header.push_back("Conjecture: " + to_string(*p.conjecture));
  doc.header.push_back(std::string("Axiom base ") + (p.logic() == Logic::S4 ? "icl_s4.ax" : "icl_k.ax") + " inlined.");
  append_base(doc, p.logic());
  for (const auto& a : atoms) doc.entries.push_back(type_entry(a, pred()));
  int i = 0;
  for (const auto& a : p.assumptions)
    doc.entries.push_back({"assumption_" + std::to_string(++i), "axiom", to_thf(Term::app(sym("iclval"), symbolic_icl(a)))});
  doc.entries.push_back({"goal", "conjecture", to_thf(Term::app(sym("iclval"), symbolic_icl(*p.conjecture)))});
  return doc;
}

std::string thf_file_name(const Problem& p) { return (p.tptp.empty() ? p.name : p.tptp) + ".p"; }

std::vector<std::string> write_thf_files(const std::string& dir, const std::vector<Problem>& problems) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::vector<std::string> written;
  auto put = [&](const std::string& name, const std::string& text) {
    const fs::path path = fs::path(dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    written.push_back(path.string());
  };
  put("icl_k.ax", render_axiom_base(Logic::K).str());
  put("icl_s4.ax", render_axiom_base(Logic::S4).str());
  for (const auto& p : problems) put(thf_file_name(p), render_problem(p).str());
  return written;
}

// ---------------------------------------------------------------------------
// Reading

ThfSyntaxError::ThfSyntaxError(int l, int c, const std::string& message)
    : std::runtime_error("THF error at " + std::to_string(l) + ":" + std::to_string(c) + ": " + message),
      line(l),
      col(c) {}

namespace {

struct Token {
  enum class Kind { Word, Upper, Quoted, Dollar, Punct, End } kind;
  std::string text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {
    static const char* const puncts[] = {"<=>", "=>", "!!", "??", "(", ")", "[", "]", ",", ":", ".", "@",
                                         "^",   "!",  "?",  "~",  "|", "&", "=", ">"};
    std::size_t i = 0;
    while (true) {
      while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
        } else if (text[i] == '%') {
          while (i < text.size() && text[i] != '\n') ++i;
        } else if (text.substr(i, 2) == "/*") {
          auto end = text.find("*/", i + 2);
          if (end == std::string_view::npos) fail(i, "unterminated comment");
          i = end + 2;
        } else {
          break;
        }
      }
      if (i >= text.size()) break;
      const std::size_t start = i;
      const char c = text[i];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '$' || std::isdigit(static_cast<unsigned char>(c))) {
        ++i;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
        Token::Kind k = c == '$'                                            ? Token::Kind::Dollar
                        : std::isupper(static_cast<unsigned char>(c)) ? Token::Kind::Upper
                                                                            : Token::Kind::Word;
        tokens_.push_back({k, std::string(text.substr(start, i - start)), start});
      } else if (c == '\'') {
        std::string s;
        ++i;
        while (i < text.size() && text[i] != '\'') {
          if (text[i] == '\\' && i + 1 < text.size()) ++i;
          s += text[i++];
        }
        if (i >= text.size()) fail(start, "unterminated quoted name");
        ++i;
        tokens_.push_back({Token::Kind::Quoted, s, start});
      } else {
        bool matched = false;
        for (const char* p : puncts) {
          std::string_view ps(p);
          if (text.substr(i, ps.size()) == ps) {
            tokens_.push_back({Token::Kind::Punct, std::string(ps), start});
            i += ps.size();
            matched = true;
            break;
          }
        }
        if (!matched) fail(i, std::string("unexpected character '") + c + "'");
      }
    }
    tokens_.push_back({Token::Kind::End, "", text.size()});
  }

  const Token& peek(std::size_t k = 0) const { return tokens_[std::min(pos_ + k, tokens_.size() - 1)]; }
  const Token& next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
  bool at(std::string_view punct, std::size_t k = 0) const {
    return peek(k).kind == Token::Kind::Punct && peek(k).text == punct;
  }
  void expect(std::string_view punct) {
    if (!at(punct)) fail(peek().offset, "expected '" + std::string(punct) + "'");
    ++pos_;
  }

  [[noreturn]] void fail(std::size_t offset, const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ThfSyntaxError(line, col, msg);
  }

 private:
  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : lex_(text) {}

  ThfReadResult run() {
    while (lex_.peek().kind != Token::Kind::End) entry();
    return std::move(result_);
  }

 private:
  // A parsed unit: a term, or a bare quantifier constant awaiting its argument.
  struct Unit {
    std::optional<Term> term;
    std::string quantifier;  // "!!" or "??"
    std::size_t offset = 0;
  };

  void entry() {
    const Token& kw = lex_.next();
    if (kw.kind != Token::Kind::Word || kw.text != "thf") lex_.fail(kw.offset, "expected 'thf('");
    lex_.expect("(");
    const Token& name = lex_.next();
    if (name.kind != Token::Kind::Word && name.kind != Token::Kind::Quoted && name.kind != Token::Kind::Upper)
      lex_.fail(name.offset, "expected an entry name");
    lex_.expect(",");
    const Token& role = lex_.next();
    if (role.kind != Token::Kind::Word) lex_.fail(role.offset, "expected a role");
    lex_.expect(",");
    if (role.text == "type") {
      type_decl();
    } else if (role.text == "definition") {
      definition(name.text);
    } else {
      Term t = formula();
      if (!t.cached_type() || !t.cached_type()->is_bool()) lex_.fail(name.offset, "formula is not of type $o");
      result_.formulas.push_back({name.text, role.text, beta_eta_normalize(unfold(t, result_.definitions))});
    }
    lex_.expect(")");
    lex_.expect(".");
  }

  void type_decl() {
    int parens = 0;
    while (lex_.at("(")) {
      lex_.next();
      ++parens;
    }
    const Token& s = lex_.next();
    if (s.kind != Token::Kind::Word && s.kind != Token::Kind::Quoted) lex_.fail(s.offset, "expected a constant");
    lex_.expect(":");
    SimpleType t = type();
    for (int i = 0; i < parens; ++i) lex_.expect(")");
    if (result_.types.count(s.text)) lex_.fail(s.offset, "constant '" + s.text + "' declared twice");
    result_.types.emplace(s.text, t);
  }

  void definition(const std::string& entry) {
    bool paren = lex_.at("(");
    if (paren) lex_.next();
    const Token& s = lex_.next();
    if (s.kind != Token::Kind::Word && s.kind != Token::Kind::Quoted) lex_.fail(s.offset, "expected a constant");
    auto it = result_.types.find(s.text);
    if (it == result_.types.end()) lex_.fail(s.offset, "definition of undeclared constant '" + s.text + "'");
    lex_.expect("=");
    Term t = formula();
    if (paren) lex_.expect(")");
    if (!t.cached_type() || *t.cached_type() != it->second)
      lex_.fail(s.offset, "definition " + entry + " does not match the declared type " + it->second.str());
    if (!free_vars(t).empty()) lex_.fail(s.offset, "definition " + entry + " is not closed");
    if (result_.definitions.count(s.text)) lex_.fail(s.offset, "constant '" + s.text + "' defined twice");
    result_.definitions.emplace(s.text, beta_eta_normalize(unfold(t, result_.definitions)));
  }

  SimpleType type() {
    SimpleType dom = atomic_type();
    if (lex_.at(">")) {
      lex_.next();
      return SimpleType::arrow(dom, type());
    }
    return dom;
  }

  SimpleType atomic_type() {
    if (lex_.at("(")) {
      lex_.next();
      SimpleType t = type();
      lex_.expect(")");
      return t;
    }
    const Token& t = lex_.next();
    if (t.kind == Token::Kind::Dollar && t.text == "$i") return SimpleType::iota();
    if (t.kind == Token::Kind::Dollar && t.text == "$o") return SimpleType::o();
    lex_.fail(t.offset, "expected a type");
  }

  // Binary formula: units joined by one kind of connective.
  Term formula() {
    Unit first = unit();
    if (!lex_.at("@") && !lex_.at("|") && !lex_.at("&") && !lex_.at("=>")) return resolve(first);
    const std::string op = lex_.peek().text;
    if (op == "@") {
      Unit head = first;
      std::vector<Term> args;
      while (lex_.at("@")) {
        lex_.next();
        args.push_back(resolve(unit()));
      }
      Term t = head.term ? *head.term : quantifier(head, args.front());
      for (std::size_t i = head.term ? 0 : 1; i < args.size(); ++i) t = checked_app(t, args[i], head.offset);
      return t;
    }
    Term acc = boolean(resolve(first), first.offset);
    if (op == "=>") {
      lex_.next();
      Unit rhs = unit();
      return mk_implies(acc, boolean(resolve(rhs), rhs.offset));
    }
    while (lex_.at(op)) {
      lex_.next();
      Unit rhs = unit();
      Term r = boolean(resolve(rhs), rhs.offset);
      acc = op == "|" ? mk_or(acc, r) : mk_and(acc, r);
    }
    if (lex_.at("@") || lex_.at("|") || lex_.at("&") || lex_.at("=>"))
      lex_.fail(lex_.peek().offset, "mixed connectives need parentheses");
    return acc;
  }

  Unit unit() {
    const Token& t = lex_.peek();
    const std::size_t off = t.offset;
    if (lex_.at("(")) {
      // Parenthesized connective constants.
      if ((lex_.at("~", 1) || lex_.at("|", 1) || lex_.at("&", 1) || lex_.at("=>", 1)) && lex_.at(")", 2)) {
        lex_.next();
        const std::string op = lex_.next().text;
        lex_.next();
        return {connective(op), {}, off};
      }
      lex_.next();
      Term inner = formula();
      lex_.expect(")");
      return {inner, {}, off};
    }
    if (lex_.at("~")) {
      lex_.next();
      Unit u = unit();
      return {mk_not(boolean(resolve(u), u.offset)), {}, off};
    }
    if (lex_.at("^") || lex_.at("!") || lex_.at("?")) {
      const std::string binder = lex_.next().text;
      lex_.expect("[");
      std::vector<Symbol> vars;
      do {
        const Token& v = lex_.next();
        if (v.kind != Token::Kind::Upper) lex_.fail(v.offset, "expected an upper-case variable");
        lex_.expect(":");
        vars.push_back({v.text, type()});
      } while (lex_.at(",") && (lex_.next(), true));
      lex_.expect("]");
      lex_.expect(":");
      for (const auto& v : vars) scope_.push_back(v);
      Unit body_unit = unit();
      Term body = resolve(body_unit);
      scope_.erase(scope_.end() - static_cast<std::ptrdiff_t>(vars.size()), scope_.end());
      for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        if (binder == "^") {
          body = Term::lambda(*it, body);
        } else if (binder == "!") {
          body = mk_forall(*it, boolean(body, body_unit.offset));
        } else {
          body = mk_not(mk_forall(*it, mk_not(boolean(body, body_unit.offset))));
        }
      }
      return {body, {}, off};
    }
    if (lex_.at("!!") || lex_.at("??")) return {std::nullopt, lex_.next().text, off};
    lex_.next();
    switch (t.kind) {
      case Token::Kind::Dollar:
        if (t.text == "$true") return {Term::truth(), {}, off};
        if (t.text == "$false") return {mk_false(), {}, off};
        lex_.fail(off, "unknown constant " + t.text);
      case Token::Kind::Upper: {
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
          if (it->name == t.text) return {Term::var(*it), {}, off};
        lex_.fail(off, "unbound variable " + t.text);
      }
      case Token::Kind::Word:
      case Token::Kind::Quoted: {
        auto it = result_.types.find(t.text);
        if (it == result_.types.end()) lex_.fail(off, "undeclared constant '" + t.text + "'");
        return {Term::constant(t.text, it->second), {}, off};
      }
      default: lex_.fail(off, "expected a term");
    }
  }

  Term connective(const std::string& op) {
    if (op == "~") return Term::neg();
    if (op == "|") return Term::disj();
    const SimpleType o = SimpleType::o();
    Term a = Term::var("A", o), b = Term::var("B", o);
    Term body = op == "&" ? mk_and(a, b) : mk_implies(a, b);
    return Term::lambda("A", o, Term::lambda("B", o, body));
  }

  Term resolve(const Unit& u) {
    if (!u.term) lex_.fail(u.offset, "quantifier constant " + u.quantifier + " needs an argument");
    return *u.term;
  }

  Term quantifier(const Unit& head, const Term& arg) {
    const SimpleType* t = arg.cached_type();
    if (!t || !t->is_arrow() || !t->codomain().is_bool())
      lex_.fail(head.offset, head.quantifier + " needs a predicate argument");
    const SimpleType alpha = t->domain();
    if (head.quantifier == "!!") return Term::app(Term::pi(alpha), arg);
    // ?? P = ¬Π(λX. ¬(P X))
    Term x = Term::var("X", alpha);
    return mk_not(Term::app(Term::pi(alpha), Term::lambda("X", alpha, mk_not(Term::app(arg, x)))));
  }

  Term checked_app(const Term& f, const Term& a, std::size_t off) {
    Term t = Term::app(f, a);
    if (!t.cached_type()) lex_.fail(off, "ill-typed application");
    return t;
  }

  Term boolean(const Term& t, std::size_t off) {
    if (!t.cached_type() || !t.cached_type()->is_bool()) lex_.fail(off, "expected a formula of type $o");
    return t;
  }

  Lexer lex_;
  ThfReadResult result_;
  std::vector<Symbol> scope_;
};

}  // namespace

ThfReadResult read_thf(std::string_view text) { return Reader(text).run(); }

}  // namespace iclstt
