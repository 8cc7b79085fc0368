#include "iclstt/properties.hpp"

#include <chrono>
#include <sstream>

#include "iclstt/henkin.hpp"
#include "iclstt/tableau.hpp"

namespace iclstt {

std::string PropertyResult::summary() const {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << name << ": " << trials << " trials, " << failures.size() << " failures (" << seconds << " s)";
  return out.str();
}

namespace {

using Clock = std::chrono::steady_clock;

// Runs body and fills in the elapsed time.
template <class F>
PropertyResult timed(std::string name, F&& body) {
  PropertyResult r;
  r.name = std::move(name);
  const auto start = Clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

const std::vector<std::string> kPrincipals = {"A", "B", "C"};

}  // namespace

PropertyResult check_icl_factorization(std::uint64_t seed, int trials, int max_depth) {
  return timed("icl factorization", [&](PropertyResult& r) {
    Random rng(seed);
    const Dialect dialects[] = {Dialect::ICL, Dialect::SpeaksFor, Dialect::Boolean};
    for (int i = 0; i < trials; ++i) {
      const Dialect d = dialects[i % 3];
      const IclFormula f = random_icl(rng, d, atom_names(3), kPrincipals, max_depth);
      ++r.trials;
      const Term direct = beta_eta_normalize(embed_icl(f));
      const Term composed = embed_recursive(translate_to_modal(f));
      if (!alpha_equal(direct, composed))
        r.failures.push_back(to_string(d) + " " + to_string(f) + ": " + to_string(direct) + " vs " + to_string(composed));
    }
  });
}

PropertyResult check_modal_factorization(std::uint64_t seed, int trials, int max_depth) {
  return timed("modal factorization", [&](PropertyResult& r) {
    Random rng(seed);
    for (int i = 0; i < trials; ++i) {
      const ModalFormula g = random_modal(rng, atom_names(3), max_depth);
      ++r.trials;
      const Term local = beta_eta_normalize(embed_local(g));
      const Term rec = embed_recursive(g);
      if (!alpha_equal(local, rec)) r.failures.push_back(to_string(g) + ": " + to_string(local) + " vs " + to_string(rec));
    }
  });
}

PropertyResult check_lemma_correspondence(std::uint64_t seed, int trials, int max_worlds, int max_atoms,
                                          int max_depth) {
  return timed("lemma correspondence", [&](PropertyResult& r) {
    Random rng(seed);
    const Symbol w{"W", SimpleType::iota()};
    for (int i = 0; i < trials; ++i) {
      const auto atoms = atom_names(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_atoms))));
      const KripkeModel k = random_kripke(rng, max_worlds, atoms);
      const ModalFormula f = random_modal(rng, atoms, max_depth);
      const FiniteInterpretation m = model_from_kripke(k);
      const Term recursive = Term::app(embed_recursive(f), Term::var(w));
      const Term local = beta_eta_normalize(Term::app(embed_local(f), Term::var(w)));
      ++r.trials;
      for (int world = 0; world < k.size(); ++world) {
        const Assignment at = {{w, Value::individual(static_cast<std::uint64_t>(world))}};
        const bool i1 = satisfies(k, world, f);
        const bool i2 = holds(m, at, recursive);
        const bool i3 = holds(m, at, local);
        if (i1 != i2 || i2 != i3) {
          std::ostringstream out;
          out << to_string(f) << " at world " << world << ": " << i1 << i2 << i3;
          r.failures.push_back(out.str());
        }
      }
    }
  });
}

PropertyResult check_frame_correspondence_upto(int max_iota) {
  return timed("frame correspondence", [&](PropertyResult& r) {
    for (int n = 1; n <= max_iota; ++n) {
      const FrameCorrespondenceReport rep = check_frame_correspondence(n);
      r.trials += rep.relations;
      for (std::uint64_t enc : rep.exceptions)
        r.failures.push_back("iota size " + std::to_string(n) + ", relation " + std::to_string(enc));
    }
  });
}

PropertyResult check_prover_agreement(std::uint64_t seed, int trials, int valid_bound, int invalid_bound,
                                      int max_atoms, int max_depth) {
  return timed("prover agreement", [&](PropertyResult& r) {
    Random rng(seed);
    for (int i = 0; i < trials; ++i) {
      const Logic logic = i % 2 == 0 ? Logic::K : Logic::S4;
      const auto atoms = atom_names(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_atoms))));
      const ModalFormula goal = random_modal(rng, atoms, max_depth);
      std::vector<ModalFormula> premises;
      if (rng.below(4) == 0) premises.push_back(random_modal(rng, atoms, 2));
      ++r.trials;
      const std::string what = to_string(logic) + " " + to_string(goal) +
                               (premises.empty() ? "" : " from " + to_string(premises.front()));
      try {
        const Verdict v = decide(goal, premises, logic);
        if (v.countermodel && !verify_countermodel({*v.countermodel, 0, goal, premises, logic}))
          r.failures.push_back(what + ": tableau countermodel does not verify");
        SearchOptions opts;
        opts.max_worlds = v.valid ? valid_bound : invalid_bound;
        const auto found = find_countermodel(premises, goal, logic, opts);
        if (v.valid && found) r.failures.push_back(what + ": tableau Valid but a countermodel exists");
        if (!v.valid && !found)
          r.failures.push_back(what + ": tableau Invalid but no countermodel up to " + std::to_string(invalid_bound));
        if (found && !verify_countermodel(*found)) r.failures.push_back(what + ": search countermodel does not verify");
      } catch (const ResourceLimit& e) {
        r.failures.push_back(what + ": " + e.what());
      }
    }
  });
}

PropertyResult check_beta_eta_stability(std::uint64_t seed, int trials) {
  return timed("beta-eta stability", [&](PropertyResult& r) {
    Random rng(seed);
    const Symbol w{"W", SimpleType::iota()};
    for (int i = 0; i < trials; ++i) {
      const auto atoms = atom_names(2);
      const KripkeModel k = random_kripke(rng, 3, atoms);
      const ModalFormula f = random_modal(rng, atoms, 3);
      const FiniteInterpretation m = model_from_kripke(k);
      // The local embedding is full of redexes; wrap it in an η-expansion and
      // a β-redex as well.
      const Term s = embed_local(f);
      const Term expanded = Term::lambda(w, Term::app(s, Term::var(w)));
      const Term redex = Term::app(Term::lambda("Q", world_predicate_type(), mval(Term::var("Q", world_predicate_type()))),
                                   expanded);
      ++r.trials;
      const Value before = evaluate(m, {}, s);
      const Value after = evaluate(m, {}, beta_eta_normalize(s));
      const bool b1 = holds(m, {}, redex);
      const bool b2 = holds(m, {}, beta_eta_normalize(redex));
      if (before.index != after.index || b1 != b2) r.failures.push_back(to_string(f));
    }
  });
}

PropertyResult check_validity_transfer(std::uint64_t seed, int trials, int max_iota) {
  return timed("validity transfer", [&](PropertyResult& r) {
    Random rng(seed);
    const Symbol rel{std::string(kRelationName), relation_type()};
    for (int i = 0; i < trials; ++i) {
      const auto atoms = atom_names(1 + static_cast<int>(rng.below(2)));
      const ModalFormula f = random_modal(rng, atoms, 3);
      const Term claim = mval(embed_recursive(f));
      SearchOptions opts;
      opts.max_worlds = max_iota;
      const bool kripke_valid = !find_countermodel({}, f, Logic::K, opts);
      bool henkin_valid = true;
      for (int n = 1; n <= max_iota && henkin_valid; ++n) {
        FiniteInterpretation m(n);
        const std::uint64_t relations = std::uint64_t{1} << (n * n);
        const std::uint64_t per_atom = std::uint64_t{1} << n;
        std::uint64_t valuations = 1;
        for (std::size_t a = 0; a < atoms.size(); ++a) valuations *= per_atom;
        for (std::uint64_t enc = 0; enc < relations && henkin_valid; ++enc) {
          m.constants[rel] = {relation_type(), enc};
          for (std::uint64_t v = 0; v < valuations && henkin_valid; ++v) {
            std::uint64_t rest = v;
            for (const auto& a : atoms) {
              m.constants[{a, world_predicate_type()}] = {world_predicate_type(), rest % per_atom};
              rest /= per_atom;
            }
            henkin_valid = holds(m, {}, claim);
          }
        }
      }
      ++r.trials;
      if (kripke_valid != henkin_valid)
        r.failures.push_back(to_string(f) + ": Kripke " + (kripke_valid ? "valid" : "invalid") + ", standard models " +
                             (henkin_valid ? "valid" : "invalid"));
    }
  });
}

std::vector<PropertyResult> run_selfcheck(CheckLevel level, std::uint64_t seed) {
  const bool full = level == CheckLevel::Full;
  std::vector<PropertyResult> out;
  out.push_back(check_icl_factorization(seed, 500));
  out.push_back(check_modal_factorization(seed + 1, 500));
  out.push_back(check_lemma_correspondence(seed + 2, full ? 1000 : 200));
  out.push_back(check_frame_correspondence_upto(full ? 3 : 2));
  out.push_back(check_prover_agreement(seed + 3, full ? 500 : 100, 4, full ? 5 : 4));
  out.push_back(check_beta_eta_stability(seed + 4, full ? 300 : 100));
  out.push_back(check_validity_transfer(seed + 5, full ? 30 : 10, full ? 3 : 2));
  return out;
}

}  // namespace iclstt
