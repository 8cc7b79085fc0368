#include "iclstt/kripke.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <tuple>

namespace iclstt {

KripkeModel::KripkeModel(int worlds) {
  if (worlds < 1 || worlds > kMaxWorlds)
    throw std::invalid_argument("a Kripke model needs between 1 and 64 worlds");
  successors.assign(static_cast<std::size_t>(worlds), 0);
}

void KripkeModel::relate(int from, int to) {
  if (to < 0 || to >= size()) throw std::out_of_range("world index out of range");
  successors.at(from) |= WorldSet{1} << to;
}

std::vector<std::pair<int, int>> KripkeModel::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (related(a, b)) out.emplace_back(a, b);
  return out;
}

WorldSet KripkeModel::all_worlds() const { return size() == 64 ? ~WorldSet{0} : (WorldSet{1} << size()) - 1; }

WorldSet truth_set(const KripkeModel& m, const ModalFormula& f) {
  using K = ModalFormula::Kind;
  const WorldSet all = m.all_worlds();
  switch (f.kind()) {
    case K::Atom: {
      auto it = m.valuation.find(f.name());
      if (it == m.valuation.end()) throw UnknownAtom(f.name());
      return it->second & all;
    }
    case K::Top: return all;
    case K::Bottom: return 0;
    case K::Not: return ~truth_set(m, f.left()) & all;
    case K::Or: return truth_set(m, f.left()) | truth_set(m, f.right());
    case K::And: return truth_set(m, f.left()) & truth_set(m, f.right());
    case K::Implies: return (~truth_set(m, f.left()) & all) | truth_set(m, f.right());
    case K::Box:
    case K::Diamond: {
      const WorldSet s = truth_set(m, f.left());
      WorldSet out = 0;
      for (int w = 0; w < m.size(); ++w) {
        const WorldSet succ = m.successors[static_cast<std::size_t>(w)];
        const bool holds = f.kind() == K::Box ? (succ & ~s) == 0 : (succ & s) != 0;
        if (holds) out |= WorldSet{1} << w;
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

bool satisfies(const KripkeModel& m, int world, const ModalFormula& f) {
  if (world < 0 || world >= m.size()) throw std::out_of_range("world index out of range");
  return (truth_set(m, f) >> world) & 1u;
}

bool valid_in_model(const KripkeModel& m, const ModalFormula& f) { return truth_set(m, f) == m.all_worlds(); }

bool is_reflexive(const std::vector<WorldSet>& rel) {
  for (std::size_t w = 0; w < rel.size(); ++w)
    if (!((rel[w] >> w) & 1u)) return false;
  return true;
}

bool is_transitive(const std::vector<WorldSet>& rel) {
  for (std::size_t a = 0; a < rel.size(); ++a) {
    WorldSet two_steps = 0;
    for (std::size_t b = 0; b < rel.size(); ++b)
      if ((rel[a] >> b) & 1u) two_steps |= rel[b];
    if (two_steps & ~rel[a]) return false;
  }
  return true;
}

bool is_preorder(const std::vector<WorldSet>& rel) { return is_reflexive(rel) && is_transitive(rel); }

std::vector<WorldSet> reflexive_transitive_closure(std::vector<WorldSet> rel) {
  const std::size_t n = rel.size();
  for (std::size_t w = 0; w < n; ++w) rel[w] |= WorldSet{1} << w;
  // Warshall
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if ((rel[a] >> k) & 1u) rel[a] |= rel[k];
  return rel;
}

std::string to_string(const CountermodelReport& r) {
  std::ostringstream out;
  auto set_str = [&](WorldSet s) {
    std::string t = "{";
    bool first = true;
    for (int w = 0; w < r.model.size(); ++w)
      if ((s >> w) & 1u) {
        t += (first ? "" : ", ") + std::to_string(w);
        first = false;
      }
    return t + "}";
  };
  out << "logic: " << to_string(r.logic) << "\n";
  out << "worlds: " << r.model.size() << "\n";
  out << "relation:";
  for (auto [a, b] : r.model.pairs()) out << " (" << a << "," << b << ")";
  out << "\nvaluation:\n";
  for (const auto& [atom, set] : r.model.valuation) out << "  " << atom << ": " << set_str(set) << "\n";
  out << "witness: " << r.witness << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Search

namespace {

// Formula DAG over {Atom, Top, Not, Or, And, Box}, shared subterms merged.
struct Program {
  enum class Op { Atom, Top, Not, Or, And, Box };
  struct Node {
    Op op;
    int a = -1, b = -1;
  };
  std::vector<Node> nodes;
  std::vector<std::string> atoms;
  std::map<std::tuple<int, int, int>, int> memo;

  int intern(Op op, int a, int b) {
    auto key = std::make_tuple(static_cast<int>(op), a, b);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    nodes.push_back({op, a, b});
    return memo[key] = static_cast<int>(nodes.size()) - 1;
  }

  int compile(const ModalFormula& f) {
    using K = ModalFormula::Kind;
    switch (f.kind()) {
      case K::Atom: {
        auto it = std::find(atoms.begin(), atoms.end(), f.name());
        return intern(Op::Atom, static_cast<int>(it - atoms.begin()), -1);
      }
      case K::Top: return intern(Op::Top, -1, -1);
      case K::Bottom: return intern(Op::Not, intern(Op::Top, -1, -1), -1);
      case K::Not: return intern(Op::Not, compile(f.left()), -1);
      case K::Or: return intern(Op::Or, compile(f.left()), compile(f.right()));
      case K::And: return intern(Op::And, compile(f.left()), compile(f.right()));
      case K::Implies: return intern(Op::Or, intern(Op::Not, compile(f.left()), -1), compile(f.right()));
      case K::Box: return intern(Op::Box, compile(f.left()), -1);
      case K::Diamond:
        return intern(Op::Not, intern(Op::Box, intern(Op::Not, compile(f.left()), -1), -1), -1);
    }
    throw std::logic_error("unreachable");
  }
};

constexpr std::uint64_t kPeriodic[6] = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
                                        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

// Truth of every program node at every world of one frame, bit-parallel over
// all valuations. Valuation v makes atom a true at world w iff bit a*n+w of v
// is set.
class FrameEvaluator {
 public:
  FrameEvaluator(const Program& prog, int n)
      : prog_(prog), n_(n), bits_(static_cast<int>(prog.atoms.size()) * n) {
    valuations_ = std::uint64_t{1} << bits_;
    words_ = std::max<std::size_t>(1, static_cast<std::size_t>(valuations_ / 64));
    valid_ = valuations_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << valuations_) - 1;
    table_.assign(prog.nodes.size() * static_cast<std::size_t>(n) * words_, 0);
  }

  std::uint64_t valuations() const { return valuations_; }

  void run(const std::vector<WorldSet>& succ) {
    for (std::size_t i = 0; i < prog_.nodes.size(); ++i) {
      const auto& node = prog_.nodes[i];
      for (int w = 0; w < n_; ++w) {
        std::uint64_t* out = row(i, w);
        switch (node.op) {
          case Program::Op::Atom: {
            const int b = node.a * n_ + w;
            for (std::size_t j = 0; j < words_; ++j)
              out[j] = (b < 6 ? kPeriodic[b] : (((j >> (b - 6)) & 1u) ? ~std::uint64_t{0} : 0)) & valid_;
            break;
          }
          case Program::Op::Top:
            for (std::size_t j = 0; j < words_; ++j) out[j] = valid_;
            break;
          case Program::Op::Not: {
            const std::uint64_t* x = row(static_cast<std::size_t>(node.a), w);
            for (std::size_t j = 0; j < words_; ++j) out[j] = ~x[j] & valid_;
            break;
          }
          case Program::Op::Or:
          case Program::Op::And: {
            const std::uint64_t* x = row(static_cast<std::size_t>(node.a), w);
            const std::uint64_t* y = row(static_cast<std::size_t>(node.b), w);
            if (node.op == Program::Op::Or) {
              for (std::size_t j = 0; j < words_; ++j) out[j] = x[j] | y[j];
            } else {
              for (std::size_t j = 0; j < words_; ++j) out[j] = x[j] & y[j];
            }
            break;
          }
          case Program::Op::Box: {
            for (std::size_t j = 0; j < words_; ++j) out[j] = valid_;
            for (int u = 0; u < n_; ++u) {
              if (!((succ[static_cast<std::size_t>(w)] >> u) & 1u)) continue;
              const std::uint64_t* x = row(static_cast<std::size_t>(node.a), u);
              for (std::size_t j = 0; j < words_; ++j) out[j] &= x[j];
            }
            break;
          }
        }
      }
    }
  }

  // Lowest valuation where every premise holds everywhere and the goal fails
  // at world 0.
  std::optional<std::uint64_t> first_countermodel(const std::vector<int>& premises, int goal) {
    for (std::size_t j = 0; j < words_; ++j) {
      std::uint64_t ok = ~row(static_cast<std::size_t>(goal), 0)[j] & valid_;
      for (int p : premises)
        for (int w = 0; w < n_ && ok; ++w) ok &= row(static_cast<std::size_t>(p), w)[j];
      if (ok) return j * 64 + static_cast<std::uint64_t>(std::countr_zero(ok));
    }
    return std::nullopt;
  }

 private:
  std::uint64_t* row(std::size_t node, int w) {
    return table_.data() + (node * static_cast<std::size_t>(n_) + static_cast<std::size_t>(w)) * words_;
  }

  const Program& prog_;
  int n_;
  int bits_;
  std::uint64_t valuations_;
  std::size_t words_;
  std::uint64_t valid_;
  std::vector<std::uint64_t> table_;
};

bool rooted(const std::vector<WorldSet>& succ) {
  const WorldSet all = (WorldSet{1} << succ.size()) - 1;
  WorldSet seen = 1, frontier = 1;
  while (frontier) {
    WorldSet next = 0;
    for (std::size_t w = 0; w < succ.size(); ++w)
      if ((frontier >> w) & 1u) next |= succ[w];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

// Worlds 1..n-1 sorted by (out-degree, in-degree, loop). Every frame is
// isomorphic to one passing this test, via a permutation fixing world 0.
bool ordered(const std::vector<WorldSet>& succ) {
  const int n = static_cast<int>(succ.size());
  auto key = [&](int w) {
    int in = 0;
    for (int a = 0; a < n; ++a) in += static_cast<int>((succ[static_cast<std::size_t>(a)] >> w) & 1u);
    const WorldSet s = succ[static_cast<std::size_t>(w)];
    return std::make_tuple(std::popcount(s), in, static_cast<int>((s >> w) & 1u));
  };
  for (int w = 1; w + 1 < n; ++w)
    if (key(w) > key(w + 1)) return false;
  return true;
}

std::vector<WorldSet> decode(std::uint64_t enc, int n, bool reflexive) {
  std::vector<WorldSet> succ(static_cast<std::size_t>(n), 0);
  int bit = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (reflexive && a == b) {
        succ[static_cast<std::size_t>(a)] |= WorldSet{1} << b;
        continue;
      }
      if ((enc >> bit) & 1u) succ[static_cast<std::size_t>(a)] |= WorldSet{1} << b;
      ++bit;
    }
  return succ;
}

}  // namespace

std::optional<CountermodelReport> find_countermodel(const std::vector<ModalFormula>& premises,
                                                    const ModalFormula& goal, Logic logic,
                                                    const SearchOptions& options, SearchStats* stats) {
  if (options.max_worlds < 1) throw std::invalid_argument("max_worlds must be at least 1");
  Program prog;
  {
    std::set<std::string> names = atoms_of(goal);
    for (const auto& p : premises) {
      auto more = atoms_of(p);
      names.insert(more.begin(), more.end());
    }
    prog.atoms.assign(names.begin(), names.end());
  }
  std::vector<int> premise_nodes;
  for (const auto& p : premises) premise_nodes.push_back(prog.compile(p));
  const int goal_node = prog.compile(goal);

  const bool s4 = logic == Logic::S4;
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  std::uint64_t spent = 0;
  auto charge = [&](std::uint64_t units) {
    spent += units;
    if (spent > options.budget)
      throw ResourceLimit("countermodel search exceeded its budget of " + std::to_string(options.budget) +
                          " frame/valuation pairs");
  };

  const int k = static_cast<int>(prog.atoms.size());
  for (int n = 1; n <= options.max_worlds; ++n) {
    if (n * k > 40 || n * n - (s4 ? n : 0) > 62)
      throw ResourceLimit("countermodel search space at " + std::to_string(n) + " worlds is too large");
    const std::uint64_t per_frame = std::uint64_t{1} << (n * k);
    if (per_frame > options.budget)
      throw ResourceLimit("a single frame with " + std::to_string(n) + " worlds exceeds the search budget");
    FrameEvaluator eval(prog, n);
    const int free_bits = n * n - (s4 ? n : 0);
    const std::uint64_t encodings = std::uint64_t{1} << free_bits;
    for (std::uint64_t enc = 0; enc < encodings; ++enc) {
      std::vector<WorldSet> succ = decode(enc, n, s4);
      if (s4 && !is_transitive(succ)) continue;
      if (!rooted(succ) || !ordered(succ)) continue;
      charge(per_frame);
      ++st.frames;
      st.pairs += per_frame;
      eval.run(succ);
      if (auto v = eval.first_countermodel(premise_nodes, goal_node)) {
        CountermodelReport report;
        report.model = KripkeModel(n);
        report.model.successors = succ;
        for (int a = 0; a < k; ++a) {
          WorldSet set = 0;
          for (int w = 0; w < n; ++w)
            if ((*v >> (a * n + w)) & 1u) set |= WorldSet{1} << w;
          report.model.valuation[prog.atoms[static_cast<std::size_t>(a)]] = set;
        }
        report.witness = 0;
        report.goal = goal;
        report.premises = premises;
        report.logic = logic;
        return report;
      }
    }
  }
  return std::nullopt;
}

bool verify_countermodel(const CountermodelReport& r) {
  if (r.logic == Logic::S4 && !is_preorder(r.model.successors)) return false;
  for (const auto& p : r.premises)
    if (!valid_in_model(r.model, p)) return false;
  return !satisfies(r.model, r.witness, r.goal);
}

std::vector<ModalFormula> modal_premises(const Problem& p) {
  std::vector<ModalFormula> out;
  for (const auto& a : p.assumptions) out.push_back(translate_to_modal(a));
  return out;
}

ModalFormula modal_goal(const Problem& p) {
  if (!p.conjecture) throw std::invalid_argument("problem has no conjecture");
  return translate_to_modal(*p.conjecture);
}

}  // namespace iclstt
