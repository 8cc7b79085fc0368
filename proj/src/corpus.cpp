#include "iclstt/corpus.hpp"

#include <stdexcept>
#include <string>

namespace iclstt {

namespace {

struct Entry {
  const char* name;
  int tptp_number;
  const char* body;  // dialect, declarations, assumptions, conjecture
  double s4_seconds;
  bool k_provable;
  double k_seconds;  // < 0: no reference time
};

// Groups follow the three tables: plain ICL, speaks-for, Boolean principals.
const Entry kEntries[] = {
    {"unit", 425,
     "dialect: ICL\nprincipal: A\nprop: s\n"
     "conjecture: s -> (A says s)\n",
     0.031, false, -1},
    {"cuc", 426,
     "dialect: ICL\nprincipal: A\nprop: s t\n"
     "conjecture: (A says (s -> t)) -> ((A says s) -> (A says t))\n",
     0.083, false, -1},
    {"idem", 427,
     "dialect: ICL\nprincipal: A\nprop: s\n"
     "conjecture: (A says A says s) -> (A says s)\n",
     0.037, false, -1},
    {"Ex1", 428,
     "dialect: ICL\nprincipal: admin Bob\nprop: deletefile1\n"
     "assume: (admin says deletefile1) -> deletefile1\n"
     "assume: admin says ((Bob says deletefile1) -> deletefile1)\n"
     "assume: Bob says deletefile1\n"
     "conjecture: deletefile1\n",
     3.494, false, -1},
    {"refl", 429,
     "dialect: ICL=>\nprincipal: A\n"
     "conjecture: A => A\n",
     0.052, true, 0.031},
    {"trans", 430,
     "dialect: ICL=>\nprincipal: A B C\n"
     "conjecture: (A => B) -> ((B => C) -> (A => C))\n",
     0.105, false, -1},
    {"sp.-for", 431,
     "dialect: ICL=>\nprincipal: A B\nprop: s\n"
     "conjecture: (A => B) -> ((A says s) -> (B says s))\n",
     0.062, false, -1},
    {"handoff", 432,
     "dialect: ICL=>\nprincipal: A B\n"
     "conjecture: (B says (A => B)) -> (A => B)\n",
     0.036, false, -1},
    {"Ex2", 433,
     "dialect: ICL=>\nprincipal: admin Bob Alice\nprop: deletefile1\n"
     "assume: (admin says deletefile1) -> deletefile1\n"
     "assume: admin says ((Bob says deletefile1) -> deletefile1)\n"
     "assume: Bob says (Alice => Bob)\n"
     "assume: Alice says deletefile1\n"
     "conjecture: deletefile1\n",
     0.698, false, -1},
    {"trust", 434,
     "dialect: ICLB\nprop: s\n"
     "conjecture: (false says s) -> s\n",
     0.049, false, -1},
    {"untrust", 435,
     "dialect: ICLB\nprincipal: A\n"
     "assume: (A -> true) & (true -> A)\n"
     "conjecture: A says false\n",
     0.053, true, 0.041},
    {"cuc'", 436,
     "dialect: ICLB\nprincipal: A B\nprop: s\n"
     "conjecture: ((A -> B) says s) -> ((A says s) -> (B says s))\n",
     0.131, false, -1},
    {"Ex3", 437,
     "dialect: ICLB\nprincipal: admin Bob\nprop: deletefile1\n"
     "assume: (admin says false) -> deletefile1\n"
     "assume: admin says ((Bob -> admin) says deletefile1)\n"
     "assume: Bob says deletefile1\n"
     "conjecture: deletefile1\n",
     0.076, false, -1},
};

Problem make(const Entry& e, bool s4) {
  std::string text = std::string("name: ") + e.name + (s4 ? "" : "^K") + "\n";
  text += "tptp: SWV" + std::to_string(e.tptp_number) + (s4 ? "^1" : "^2") + "\n";
  text += e.body;
  if (s4) text += "axiom: R T\n";
  text += std::string("expect: ") + (s4 || e.k_provable ? "provable" : "countermodel") + "\n";
  Problem p = parse_problem(text);
  double secs = s4 ? e.s4_seconds : e.k_seconds;
  if (secs >= 0) p.reference_seconds = secs;
  return p;
}

std::vector<Problem> build() {
  std::vector<Problem> out;
  // Table order: each group's S4 problems, then the same group in K.
  const std::size_t groups[][2] = {{0, 4}, {4, 9}, {9, 13}};
  for (auto [from, to] : groups) {
    for (std::size_t i = from; i < to; ++i) out.push_back(make(kEntries[i], true));
    for (std::size_t i = from; i < to; ++i) out.push_back(make(kEntries[i], false));
  }
  return out;
}

}  // namespace

const std::vector<Problem>& corpus() {
  static const std::vector<Problem> problems = build();
  return problems;
}

const Problem& corpus_problem(std::string_view name) {
  for (const auto& p : corpus())
    if (p.name == name) return p;
  throw std::out_of_range("no corpus problem named '" + std::string(name) + "'");
}

}  // namespace iclstt
