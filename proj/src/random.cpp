#include "iclstt/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace iclstt {

std::vector<std::string> atom_names(int n) {
  static const std::vector<std::string> all = {"p", "q", "s", "t", "u"};
  if (n < 0 || n > static_cast<int>(all.size())) throw std::invalid_argument("between 0 and 5 atoms");
  return {all.begin(), all.begin() + n};
}

ModalFormula random_modal(Random& rng, const std::vector<std::string>& atoms, int max_depth) {
  if (atoms.empty()) throw std::invalid_argument("random_modal needs at least one atom");
  // A quarter of the inner draws are leaves, so most formulas use the depth.
  const std::uint64_t choice = max_depth <= 0 ? rng.below(6) : rng.below(24);
  if (choice < 4) return ModalFormula::atom(rng.pick(atoms));
  if (choice == 4) return ModalFormula::top();
  if (choice == 5) return ModalFormula::bottom();
  auto sub = [&] { return random_modal(rng, atoms, max_depth - 1); };
  switch ((choice - 6) / 3) {
    case 0: return ModalFormula::negation(sub());
    case 1: return ModalFormula::box(sub());
    case 2: return ModalFormula::diamond(sub());
    case 3: {
      auto a = sub();
      return ModalFormula::implies(a, sub());
    }
    case 4: {
      auto a = sub();
      return ModalFormula::disjunction(a, sub());
    }
    default: {
      auto a = sub();
      return ModalFormula::conjunction(a, sub());
    }
  }
}

namespace {

Principal random_principal(Random& rng, bool compound, const std::vector<std::string>& names, int depth) {
  if (!compound || depth <= 0 || rng.below(3) != 0) {
    if (compound && rng.below(10) == 0) return rng.coin() ? Principal::top() : Principal::bottom();
    return Principal::atom(rng.pick(names));
  }
  auto a = random_principal(rng, compound, names, depth - 1);
  auto b = random_principal(rng, compound, names, depth - 1);
  switch (rng.below(3)) {
    case 0: return Principal::conjunction(a, b);
    case 1: return Principal::disjunction(a, b);
    default: return Principal::implies(a, b);
  }
}

}  // namespace

IclFormula random_icl(Random& rng, Dialect d, const std::vector<std::string>& props,
                      const std::vector<std::string>& principals, int max_depth) {
  if (props.empty() || principals.empty()) throw std::invalid_argument("random_icl needs names");
  const bool compound = d == Dialect::Boolean;
  const std::uint64_t choice = max_depth <= 0 ? rng.below(5) : rng.below(20);
  if (choice < 3) return IclFormula::atom(rng.pick(props));
  if (choice == 3) return rng.coin() ? IclFormula::top() : IclFormula::bottom();
  if (choice == 4) {
    if (d == Dialect::Boolean) return IclFormula::principal_ref(Principal::atom(rng.pick(principals)));
    return IclFormula::atom(rng.pick(props));
  }
  auto sub = [&] { return random_icl(rng, d, props, principals, max_depth - 1); };
  if (choice == 10 && d == Dialect::SpeaksFor)
    return IclFormula::speaks_for(Principal::atom(rng.pick(principals)), Principal::atom(rng.pick(principals)));
  if (choice <= 10) return IclFormula::says(random_principal(rng, compound, principals, std::min(2, max_depth - 1)), sub());
  auto a = sub();
  auto b = sub();
  if (choice <= 13) return IclFormula::implies(a, b);
  if (choice <= 16) return IclFormula::conjunction(a, b);
  return IclFormula::disjunction(a, b);
}

KripkeModel random_kripke(Random& rng, int max_worlds, const std::vector<std::string>& atoms, bool preorder) {
  if (max_worlds < 1 || max_worlds > 16) throw std::invalid_argument("random models have 1 to 16 worlds");
  const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_worlds)));
  KripkeModel m(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (rng.coin()) m.relate(a, b);
  if (preorder) m.successors = reflexive_transitive_closure(m.successors);
  for (const auto& atom : atoms) m.valuation[atom] = rng.below(std::uint64_t{1} << n);
  return m;
}

}  // namespace iclstt
