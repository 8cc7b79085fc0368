#include "iclstt/henkin.hpp"

#include <optional>

#include "iclstt/modal.hpp"

namespace iclstt {

bool Value::as_bool() const {
  if (!type.is_bool()) throw TypeError("Value::as_bool", "o", type.str());
  return index != 0;
}

DomainTooLarge::DomainTooLarge(const SimpleType& t, std::uint64_t cap)
    : std::runtime_error("domain of " + t.str() + " exceeds " + std::to_string(cap) + " elements") {}

FiniteInterpretation::FiniteInterpretation(int n) : iota_size(n) {
  if (n < 1) throw std::invalid_argument("the individual domain must be nonempty");
}

namespace {

// base^exp, or nullopt past `cap`.
std::optional<std::uint64_t> bounded_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return std::nullopt;
    r *= base;
  }
  return r;
}

}  // namespace

std::uint64_t FiniteInterpretation::domain_size(const SimpleType& t) const {
  switch (t.kind()) {
    case SimpleType::Kind::Bool: return 2;
    case SimpleType::Kind::Individual: return static_cast<std::uint64_t>(iota_size);
    case SimpleType::Kind::Arrow: {
      auto r = bounded_pow(domain_size(t.codomain()), domain_size(t.domain()), domain_cap);
      if (!r) throw DomainTooLarge(t, domain_cap);
      return *r;
    }
  }
  throw std::logic_error("unreachable");
}

Value FiniteInterpretation::apply(const Value& fn, const Value& arg) const {
  if (!fn.type.is_arrow() || fn.type.domain() != arg.type)
    throw TypeError("Value application", fn.type.str(), arg.type.str());
  const SimpleType& cod = fn.type.codomain();
  const std::uint64_t c = domain_size(cod);
  auto place = bounded_pow(c, arg.index, ~std::uint64_t{0});
  if (!place) throw DomainTooLarge(fn.type, domain_cap);
  return {cod, (fn.index / *place) % c};
}

Value FiniteInterpretation::table(const SimpleType& fn_type, const std::vector<Value>& results) const {
  if (!fn_type.is_arrow()) throw TypeError("Value table", "function type", fn_type.str());
  const std::uint64_t d = domain_size(fn_type.domain());
  const std::uint64_t c = domain_size(fn_type.codomain());
  if (results.size() != d) throw std::invalid_argument("function table must list one result per argument");
  std::uint64_t index = 0, place = 1;
  for (const auto& r : results) {
    if (r.type != fn_type.codomain()) throw TypeError("Value table", fn_type.codomain().str(), r.type.str());
    index += r.index * place;
    place *= c;
  }
  return {fn_type, index};
}

// ---------------------------------------------------------------------------

namespace {

struct Sem;
using SemPtr = std::shared_ptr<const Sem>;

struct Env {
  Symbol symbol;
  SemPtr value;
  std::shared_ptr<const Env> next;
};
using EnvPtr = std::shared_ptr<const Env>;

// Runtime value: a tabulated element, a closure, or a partially applied
// logical constant. Closures are only tabulated when a table is required.
struct Sem {
  enum class Kind { Table, Closure, Builtin } kind;
  Value value;
  std::optional<Term> lambda;
  EnvPtr env;
  Builtin builtin = Builtin::None;
  std::optional<SimpleType> quantified;  // Pi
  std::vector<SemPtr> args;
};

class Evaluator {
 public:
  Evaluator(const FiniteInterpretation& m, const Assignment& a) : m_(m), assignment_(a) {}

  SemPtr eval(const Term& t, const EnvPtr& env) {
    switch (t.kind()) {
      case TermKind::Const: return constant(t);
      case TermKind::Var: {
        const Symbol s = t.symbol();
        for (const Env* e = env.get(); e; e = e->next.get())
          if (e->symbol == s) return e->value;
        auto it = assignment_.find(s);
        if (it == assignment_.end()) throw UnboundVariable(s.name);
        return table(it->second);
      }
      case TermKind::Lambda: {
        auto s = std::make_shared<Sem>();
        s->kind = Sem::Kind::Closure;
        s->lambda = t;
        s->env = env;
        return s;
      }
      case TermKind::App: return apply(eval(t.fn(), env), eval(t.arg(), env));
    }
    throw std::logic_error("unreachable");
  }

  Value materialize(const SemPtr& s, const SimpleType& type) {
    if (s->kind == Sem::Kind::Table) return s->value;
    const std::uint64_t d = m_.domain_size(type.domain());
    m_.domain_size(type);
    std::vector<Value> results;
    results.reserve(d);
    for (std::uint64_t z = 0; z < d; ++z)
      results.push_back(materialize(apply(s, table({type.domain(), z})), type.codomain()));
    return m_.table(type, results);
  }

 private:
  static SemPtr table(Value v) {
    auto s = std::make_shared<Sem>();
    s->kind = Sem::Kind::Table;
    s->value = std::move(v);
    return s;
  }

  static SemPtr boolean(bool b) {
    static const SemPtr t = table(Value::boolean(true));
    static const SemPtr f = table(Value::boolean(false));
    return b ? t : f;
  }

  static bool truth(const SemPtr& s) { return s->value.as_bool(); }

  SemPtr constant(const Term& t) {
    switch (t.builtin()) {
      case Builtin::True: return boolean(true);
      case Builtin::Neg:
      case Builtin::Or:
      case Builtin::Pi: {
        auto s = std::make_shared<Sem>();
        s->kind = Sem::Kind::Builtin;
        s->builtin = t.builtin();
        if (t.builtin() == Builtin::Pi) s->quantified = t.symbol_type().domain().domain();
        return s;
      }
      case Builtin::None: break;
    }
    auto it = m_.constants.find(t.symbol());
    if (it == m_.constants.end()) throw MissingInterpretation(t.symbol());
    return table(it->second);
  }

  SemPtr apply(const SemPtr& f, const SemPtr& a) {
    switch (f->kind) {
      case Sem::Kind::Table: {
        const SimpleType& dom = f->value.type.domain();
        return table(m_.apply(f->value, materialize(a, dom)));
      }
      case Sem::Kind::Closure: {
        const Term& lam = *f->lambda;
        auto env = std::make_shared<const Env>(Env{lam.symbol(), a, f->env});
        return eval(lam.body(), env);
      }
      case Sem::Kind::Builtin: {
        switch (f->builtin) {
          case Builtin::Neg: return boolean(!truth(a));
          case Builtin::Or: {
            if (f->args.empty()) {
              auto s = std::make_shared<Sem>(*f);
              s->args.push_back(a);
              return s;
            }
            return boolean(truth(f->args[0]) || truth(a));
          }
          case Builtin::Pi: {
            const std::uint64_t d = m_.domain_size(*f->quantified);
            for (std::uint64_t z = 0; z < d; ++z)
              if (!truth(apply(a, table({*f->quantified, z})))) return boolean(false);
            return boolean(true);
          }
          default: break;
        }
        break;
      }
    }
    throw std::logic_error("application of a non-function value");
  }

  const FiniteInterpretation& m_;
  const Assignment& assignment_;
};

}  // namespace

Value evaluate(const FiniteInterpretation& m, const Assignment& assignment, const Term& t) {
  for (const auto& [sym, val] : assignment)
    if (sym.type != val.type) throw TypeError("assignment of " + sym.name, sym.type.str(), val.type.str());
  const SimpleType type = t.type();
  Evaluator ev(m, assignment);
  return ev.materialize(ev.eval(t, nullptr), type);
}

bool holds(const FiniteInterpretation& m, const Assignment& assignment, const Term& t) {
  return evaluate(m, assignment, t).as_bool();
}

FiniteInterpretation model_from_kripke(const KripkeModel& k) {
  const int n = k.size();
  if (n > 7) throw DomainTooLarge(relation_type(), std::uint64_t{1} << 49);
  FiniteInterpretation m(n);
  std::uint64_t r = 0;
  for (int w = 0; w < n; ++w) r |= static_cast<std::uint64_t>(k.successors[static_cast<std::size_t>(w)]) << (w * n);
  m.constants[{std::string(kRelationName), relation_type()}] = {relation_type(), r};
  for (const auto& [atom, set] : k.valuation)
    m.constants[{atom, world_predicate_type()}] = {world_predicate_type(), set & k.all_worlds()};
  return m;
}

KripkeModel kripke_from_model(const FiniteInterpretation& m, const std::vector<std::string>& atoms) {
  const int n = m.iota_size;
  if (n > 7) throw DomainTooLarge(relation_type(), std::uint64_t{1} << 49);
  KripkeModel k(n);
  const Symbol r{std::string(kRelationName), relation_type()};
  auto it = m.constants.find(r);
  if (it == m.constants.end()) throw MissingInterpretation(r);
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  for (int w = 0; w < n; ++w) k.successors[static_cast<std::size_t>(w)] = (it->second.index >> (w * n)) & mask;
  for (const auto& a : atoms) {
    const Symbol s{a, world_predicate_type()};
    auto at = m.constants.find(s);
    if (at == m.constants.end()) throw MissingInterpretation(s);
    k.valuation[a] = at->second.index & mask;
  }
  return k;
}

FrameCorrespondenceReport check_frame_correspondence(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("frame correspondence is checked for 1 to 4 individuals");
  FrameCorrespondenceReport report;
  report.iota_size = n;
  const Term axioms = mk_and(axiom_R(), axiom_T());
  const std::uint64_t count = std::uint64_t{1} << (n * n);
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  FiniteInterpretation m(n);
  const Symbol r{std::string(kRelationName), relation_type()};
  for (std::uint64_t enc = 0; enc < count; ++enc) {
    m.constants[r] = {relation_type(), enc};
    std::vector<WorldSet> succ(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) succ[static_cast<std::size_t>(w)] = (enc >> (w * n)) & mask;
    const bool semantic = holds(m, {}, axioms);
    const bool frame = is_preorder(succ);
    ++report.relations;
    if (semantic && frame) ++report.both_hold;
    if (semantic != frame) report.exceptions.push_back(enc);
  }
  return report;
}

}  // namespace iclstt
