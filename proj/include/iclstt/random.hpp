// Seeded generators for property tests. Draws use mt19937_64 and plain
// modulo reduction so sequences are identical across standard libraries.

#ifndef ICLSTT_RANDOM_HPP
#define ICLSTT_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "iclstt/icl.hpp"
#include "iclstt/kripke.hpp"
#include "iclstt/modal.hpp"

namespace iclstt {

inline constexpr std::uint64_t kDefaultSeed = 20080701;

class Random {
 public:
  explicit Random(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  bool coin() { return below(2) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v.at(below(v.size())); }

 private:
  std::mt19937_64 engine_;
};

// The first n of p, q, s, t, u.
std::vector<std::string> atom_names(int n);

// A formula of depth at most max_depth over the given atoms, using every
// connective including the derived ones.
ModalFormula random_modal(Random& rng, const std::vector<std::string>& atoms, int max_depth);

// A formula valid in dialect d. Propositions come from `props`, principals
// from `principals`; compound principals only in ICLB. formula_depth of
// the result is at most max_depth.
IclFormula random_icl(Random& rng, Dialect d, const std::vector<std::string>& props,
                      const std::vector<std::string>& principals, int max_depth);

// A model with 1..max_worlds worlds, each edge present with probability 1/2
// and a random valuation of `atoms`. With preorder set, the relation is
// replaced by its reflexive-transitive closure.
KripkeModel random_kripke(Random& rng, int max_worlds, const std::vector<std::string>& atoms,
                          bool preorder = false);

}  // namespace iclstt

#endif  // ICLSTT_RANDOM_HPP
