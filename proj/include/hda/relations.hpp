#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hda/carrier.hpp"
#include "hda/hda.hpp"
#include "hda/weakmor.hpp"

namespace hda {

// The functor induced between trace categories by a weak morphism:
// apply_vertex on objects, the class of the mapped representative on
// morphisms.  Law checks are recorded rather than assumed.
struct TraceFunctor {
  FiniteCategory source_category;
  FiniteCategory target_category;
  std::map<Cube, Cube> object_map;
  std::map<ClassId, ClassId> hom_map;
  bool identities_preserved = false;
  bool composition_preserved = false;
};

// Builds the functor.  Throws Precondition ("not a trace functor")
// when some object's image is not an object of the target trace
// category, and CyclicInput when either complex is cyclic.
TraceFunctor trace_functor(const CellularWeakMorphism& f, const Hda& a,
                           const Hda& b);

// a is abstracted by b up to trace equivalence: f is a weak HDA
// morphism preserving I, F and the extremal vertex sets onto their
// counterparts, and the induced trace functor is an isomorphism of
// categories.
bool check_trace_equivalence(const Hda& a, const Hda& b,
                             const CellularWeakMorphism& f,
                             ValidationReport* why = nullptr);

// a is abstracted by b homeomorphically: a weak HDA morphism that is
// a homeomorphism and maps I onto I' and F onto F'.
bool check_homeomorphic_abstraction(const Hda& a, const Hda& b,
                                    const CellularWeakMorphism& f,
                                    ValidationReport* why = nullptr);

// Verifies the witness then L(a) <= L(b).  In bounded mode the
// target language is enumerated up to max_len times the witness's
// maximum edge stretch, so a bounded verdict is sound.
bool check_language_inclusion(const Hda& a, const Hda& b,
                              const CellularWeakMorphism& f,
                              std::optional<int> max_len = {},
                              ValidationReport* why = nullptr);

struct TraceBijection {
  enum class Status { Holds, HypothesisFailure, Failure };
  Status status = Status::Failure;
  // representative of each source trace class and of its image
  std::vector<std::pair<Word, Word>> pairs;
  std::vector<std::string> notes;
};

// Replays the consequence of trace equivalence for a stable source
// and a stable deterministic target: l -> l induces a bijection
// between the trace languages.
TraceBijection check_trace_language_bijection(const Hda& a, const Hda& b,
                                              const CellularWeakMorphism& f);

struct TheoremOutcome {
  bool hypotheses_hold = false;
  // false when the conclusion cannot be evaluated (cyclic complexes
  // have no finite trace category)
  bool applicable = false;
  bool conclusion_holds = false;
  std::vector<std::string> notes;
};

// Replays: a weakly regular automaton abstracted homeomorphically is
// abstracted up to trace equivalence.  hypotheses_hold and
// applicable both true with conclusion_holds false signals an
// internal inconsistency (the caller should treat it as a defect).
TheoremOutcome theorem_homeo_implies_trace(const Hda& a, const Hda& b,
                                           const CellularWeakMorphism& f);

// Witness checker for a pair of mutually inverse weak morphisms
// between accessible deterministic automata: inverse vertex maps,
// inverse path maps (bounded enumeration when max_len is given) and
// matching extremal sets.
ValidationReport check_mutually_inverse(const Hda& a, const Hda& b,
                                        const CellularWeakMorphism& f,
                                        const CellularWeakMorphism& g,
                                        std::optional<int> max_len = {});

}  // namespace hda
