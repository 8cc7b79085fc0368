// Evaluation of simply typed terms in finite standard models: D_o = {F, T},
// D_ι = {0, ..., n-1}, and D_{α→β} the full function space.

#ifndef ICLSTT_HENKIN_HPP
#define ICLSTT_HENKIN_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "iclstt/kripke.hpp"
#include "iclstt/stt.hpp"

namespace iclstt {

// An element of a finite domain, identified by its position in the canonical
// enumeration of D_type: F = 0 and T = 1; individuals are 0..n-1; a function
// f : α→β has index Σ_z index(f z)·|D_β|^z over z = 0..|D_α|-1.
struct Value {
  SimpleType type = SimpleType::o();
  std::uint64_t index = 0;

  static Value boolean(bool b) { return {SimpleType::o(), b ? 1u : 0u}; }
  static Value individual(std::uint64_t i) { return {SimpleType::iota(), i}; }
  bool as_bool() const;

  friend bool operator==(const Value&, const Value&) = default;
};

struct DomainTooLarge : std::runtime_error {
  DomainTooLarge(const SimpleType& t, std::uint64_t cap);
};

struct MissingInterpretation : std::runtime_error {
  explicit MissingInterpretation(const Symbol& s)
      : std::runtime_error("no interpretation for " + s.name + " : " + s.type.str()) {}
};

struct FiniteInterpretation {
  explicit FiniteInterpretation(int iota_size = 1);

  int iota_size;
  std::map<Symbol, Value> constants;
  // Domains larger than this are never enumerated or tabulated.
  std::uint64_t domain_cap = std::uint64_t{1} << 16;

  // |D_t|; throws DomainTooLarge above domain_cap.
  std::uint64_t domain_size(const SimpleType& t) const;
  // Element `index` of D_t with `arg` applied (t must be an arrow).
  Value apply(const Value& fn, const Value& arg) const;
  // The function table for f : dom→cod, given as its values in domain order.
  Value table(const SimpleType& fn_type, const std::vector<Value>& results) const;
};

using Assignment = std::map<Symbol, Value>;

// The value of t under the assignment. Free variables must be assigned and
// constants interpreted (MissingInterpretation otherwise). Logical constants
// have their intended meaning; Π_α quantifies over all of D_α.
Value evaluate(const FiniteInterpretation& m, const Assignment& assignment, const Term& t);
bool holds(const FiniteInterpretation& m, const Assignment& assignment, const Term& t);

// D_ι = worlds, atoms as their truth sets, r as the accessibility relation.
FiniteInterpretation model_from_kripke(const KripkeModel& k);

// Worlds from D_ι, the relation from r, and the listed atoms from their
// interpretations.
KripkeModel kripke_from_model(const FiniteInterpretation& m, const std::vector<std::string>& atoms);

struct FrameCorrespondenceReport {
  int iota_size = 0;
  std::uint64_t relations = 0;
  std::uint64_t both_hold = 0;  // relations satisfying R ∧ T and being preorders
  std::vector<std::uint64_t> exceptions;  // relation encodings where the two sides differ

  bool ok() const { return exceptions.empty(); }
};

// For every relation on an n-element D_ι, compares the truth of the frame
// axioms R ∧ T against the relation being reflexive and transitive. Bit
// a*n+b of a relation encoding is the pair (a, b).
FrameCorrespondenceReport check_frame_correspondence(int iota_size);

}  // namespace iclstt

#endif  // ICLSTT_HENKIN_HPP
