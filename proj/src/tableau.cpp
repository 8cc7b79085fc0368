#include "iclstt/tableau.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <tuple>

namespace iclstt {

namespace {

// Negation normal form, hash-consed. Literal nodes carry an atom index and a
// sign; everything else has operands a, b.
struct Nnf {
  enum class Op { Lit, True, False, And, Or, Box, Dia };
  Op op;
  int a = -1, b = -1;
  bool positive = true;
};

class Prover {
 public:
  Prover(Logic logic, const TableauOptions& opts) : s4_(logic == Logic::S4), opts_(opts) {}

  Verdict run(const ModalFormula& goal, const std::vector<ModalFormula>& premises) {
    for (const auto& p : premises) collect_atoms(p);
    collect_atoms(goal);
    for (const auto& p : premises) global_.push_back(nnf(p, true));
    std::sort(global_.begin(), global_.end());
    global_.erase(std::unique(global_.begin(), global_.end()), global_.end());

    Label root;
    insert(root, nnf(goal, false));
    for (int g : global_) insert(root, g);
    trace("goal: refute " + show(nnf(goal, false)));

    Verdict v;
    const int w = satisfiable(root);
    v.nodes = created_;
    v.valid = w < 0;
    if (!v.valid && worlds_.size() <= static_cast<std::size_t>(kMaxWorlds)) v.countermodel = build_model();
    return v;
  }

 private:
  using Label = std::vector<int>;  // sorted NNF ids

  struct World {
    Label saturated;
    std::vector<int> successors;
  };

  static void insert(Label& l, int f) {
    auto it = std::lower_bound(l.begin(), l.end(), f);
    if (it == l.end() || *it != f) l.insert(it, f);
  }

  static bool contains(const Label& l, int f) { return std::binary_search(l.begin(), l.end(), f); }

  // Already satisfied by the label: in it, or the constant true.
  bool present(const Label& l, int f) const {
    return nodes_[static_cast<std::size_t>(f)].op == Nnf::Op::True || contains(l, f);
  }

  void collect_atoms(const ModalFormula& f) {
    for (const auto& a : atoms_of(f))
      if (std::find(atoms_.begin(), atoms_.end(), a) == atoms_.end()) atoms_.push_back(a);
  }

  int intern(Nnf n) {
    auto key = std::make_tuple(static_cast<int>(n.op), n.a, n.b, n.positive);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    nodes_.push_back(n);
    return memo_[key] = static_cast<int>(nodes_.size()) - 1;
  }

  int nnf(const ModalFormula& f, bool pos) {
    using K = ModalFormula::Kind;
    using Op = Nnf::Op;
    switch (f.kind()) {
      case K::Atom: {
        const int idx = static_cast<int>(std::find(atoms_.begin(), atoms_.end(), f.name()) - atoms_.begin());
        return intern({Op::Lit, idx, -1, pos});
      }
      case K::Top: return intern({pos ? Op::True : Op::False});
      case K::Bottom: return intern({pos ? Op::False : Op::True});
      case K::Not: return nnf(f.left(), !pos);
      case K::Or: return intern({pos ? Op::Or : Op::And, nnf(f.left(), pos), nnf(f.right(), pos)});
      case K::And: return intern({pos ? Op::And : Op::Or, nnf(f.left(), pos), nnf(f.right(), pos)});
      case K::Implies: return intern({pos ? Op::Or : Op::And, nnf(f.left(), !pos), nnf(f.right(), pos)});
      case K::Box: return intern({pos ? Op::Box : Op::Dia, nnf(f.left(), pos), -1});
      case K::Diamond: return intern({pos ? Op::Dia : Op::Box, nnf(f.left(), pos), -1});
    }
    throw std::logic_error("unreachable");
  }

  int complement_literal(int f) {
    Nnf n = nodes_[static_cast<std::size_t>(f)];
    n.positive = !n.positive;
    return intern(n);
  }

  std::string show(int f) const {
    const Nnf& n = nodes_[static_cast<std::size_t>(f)];
    switch (n.op) {
      case Nnf::Op::Lit: return (n.positive ? "" : "~") + atoms_[static_cast<std::size_t>(n.a)];
      case Nnf::Op::True: return "true";
      case Nnf::Op::False: return "false";
      case Nnf::Op::And: return "(" + show(n.a) + " & " + show(n.b) + ")";
      case Nnf::Op::Or: return "(" + show(n.a) + " | " + show(n.b) + ")";
      case Nnf::Op::Box: return "box " + show(n.a);
      case Nnf::Op::Dia: return "dia " + show(n.a);
    }
    return "?";
  }

  std::string show(const Label& l) const {
    std::string s = "{";
    for (std::size_t i = 0; i < l.size(); ++i) s += (i ? ", " : "") + show(l[i]);
    return s + "}";
  }

  void trace(const std::string& line) {
    if (opts_.trace) *opts_.trace << std::string(2 * path_.size(), ' ') << line << "\n";
  }

  // Adds f with the conjunction rule (and the T rule in S4) applied
  // exhaustively. Returns false on a clash.
  bool add(Label& l, int f) {
    if (contains(l, f)) return true;
    const Nnf n = nodes_[static_cast<std::size_t>(f)];
    switch (n.op) {
      case Nnf::Op::True: return true;
      case Nnf::Op::False: return false;
      case Nnf::Op::Lit:
        if (contains(l, complement_literal(f))) return false;
        insert(l, f);
        return true;
      case Nnf::Op::And:
        insert(l, f);
        return add(l, n.a) && add(l, n.b);
      case Nnf::Op::Box:
        insert(l, f);
        return !s4_ || add(l, n.a);
      case Nnf::Op::Or:
      case Nnf::Op::Dia: insert(l, f); return true;
    }
    return true;
  }

  // Returns the id of a world satisfying the label, or -1.
  int satisfiable(const Label& label) {
    if (unsat_cache_.count(label)) {
      trace("known unsatisfiable " + show(label));
      return -1;
    }
    if (++created_ > opts_.node_limit)
      throw ResourceLimit("tableau exceeded its limit of " + std::to_string(opts_.node_limit) + " nodes");
    const int id = static_cast<int>(worlds_.size());
    worlds_.push_back({});
    trace("node " + std::to_string(id) + ": " + show(label));

    Label start;
    bool open = true;
    for (int f : label) open = open && add(start, f);
    int result = -1;
    if (open) {
      path_.push_back(id);
      result = expand(start, id) ? id : -1;
      path_.pop_back();
    } else {
      trace("clash");
    }
    if (result < 0) {
      worlds_.resize(static_cast<std::size_t>(id));
      unsat_cache_.insert(label);
    }
    return result;
  }

  // Branches on the first unresolved disjunction, then applies the modal rule.
  bool expand(const Label& l, int id) {
    for (int f : l) {
      const Nnf& n = nodes_[static_cast<std::size_t>(f)];
      if (n.op != Nnf::Op::Or || present(l, n.a) || present(l, n.b)) continue;
      for (int side : {n.a, n.b}) {
        trace("branch " + show(side));
        Label next = l;
        if (!add(next, side)) {
          trace("clash");
          continue;
        }
        const std::size_t mark = worlds_.size();
        if (expand(next, id)) return true;
        worlds_.resize(mark);
      }
      return false;
    }
    return modal_step(l, id);
  }

  bool modal_step(const Label& h, int id) {
    worlds_[static_cast<std::size_t>(id)].saturated = h;
    worlds_[static_cast<std::size_t>(id)].successors.clear();
    Label carried;
    for (int f : h) {
      const Nnf& n = nodes_[static_cast<std::size_t>(f)];
      if (n.op == Nnf::Op::Box) insert(carried, s4_ ? f : n.a);
    }
    for (int g : global_) insert(carried, g);

    for (int f : h) {
      const Nnf& n = nodes_[static_cast<std::size_t>(f)];
      if (n.op != Nnf::Op::Dia) continue;
      if (s4_ && present(h, n.a)) {
        trace(show(f) + " holds by reflexivity");
        continue;
      }
      Label succ = carried;
      insert(succ, n.a);
      int target = -1;
      for (int anc : path_) {
        const Label& ha = worlds_[static_cast<std::size_t>(anc)].saturated;
        if (std::all_of(succ.begin(), succ.end(), [&](int g) { return present(ha, g); })) {
          target = anc;
          trace(show(f) + ": blocked by node " + std::to_string(anc));
          break;
        }
      }
      if (target < 0) {
        trace(show(f) + ": new successor");
        target = satisfiable(succ);
        if (target < 0) return false;
      }
      worlds_[static_cast<std::size_t>(id)].successors.push_back(target);
    }
    return true;
  }

  KripkeModel build_model() const {
    KripkeModel m(static_cast<int>(worlds_.size()));
    for (std::size_t w = 0; w < worlds_.size(); ++w)
      for (int s : worlds_[w].successors) m.relate(static_cast<int>(w), s);
    if (s4_) m.successors = reflexive_transitive_closure(m.successors);
    for (const auto& a : atoms_) m.valuation[a] = 0;
    for (std::size_t w = 0; w < worlds_.size(); ++w)
      for (int f : worlds_[w].saturated) {
        const Nnf& n = nodes_[static_cast<std::size_t>(f)];
        if (n.op == Nnf::Op::Lit && n.positive) m.valuation[atoms_[static_cast<std::size_t>(n.a)]] |= WorldSet{1} << w;
      }
    return m;
  }

  bool s4_;
  const TableauOptions& opts_;
  std::vector<std::string> atoms_;
  std::deque<Nnf> nodes_;  // stable references while interning
  std::map<std::tuple<int, int, int, bool>, int> memo_;
  std::vector<int> global_;
  std::vector<World> worlds_;
  std::vector<int> path_;
  std::set<Label> unsat_cache_;
  std::uint64_t created_ = 0;
};

}  // namespace

Verdict decide(const ModalFormula& goal, const std::vector<ModalFormula>& premises, Logic logic,
               const TableauOptions& options) {
  return Prover(logic, options).run(goal, premises);
}

Verdict prove_problem(const Problem& p, const TableauOptions& options) {
  return decide(modal_goal(p), modal_premises(p), p.logic(), options);
}

}  // namespace iclstt
