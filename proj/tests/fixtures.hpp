#pragma once

#include <random>
#include <string>
#include <vector>

#include "hda/format.hpp"
#include "hda/hda.hpp"
#include "hda/weakmor.hpp"

// Programmatic counterparts of the fixture documents plus generated
// grid refinements.  Built by hand (not parsed) so the text format
// can be checked against them.
namespace fixtures {

hda::Hda fig1_a();
hda::Hda fig1_b();
hda::Hda ex29_a();
hda::Hda ex29_b();
hda::Hda circle();

// fig1_a -> fig1_b, the subdivision splitting the a.b edges.
hda::CellularWeakMorphism wm_f();
// The raw subdivision table behind wm_f, for corruption tests.
hda::SubdivisionData wm_f_data();
// ex29_b -> ex29_a, the identity-on-names realization.
hda::CellularWeakMorphism ex29_incl();
// ex29_a -> ex29_b, spreading z over x.y; weak but not a
// homeomorphism.
hda::CellularWeakMorphism ex29_sub();

std::string fixture_path(const std::string& name);
std::string read_fixture(const std::string& name);
hda::HdaDocument load_hda(const std::string& name);

// A grid automaton refined axis segment by axis segment.  The source
// is the grid over src_ks whose axis-i edges carry the label l_{i+1}
// repeated by the segment's factor; the target is the subdivided
// cube over the factor sums.
struct GridRefinement {
  std::vector<int> source_ks;
  std::vector<int> target_ks;
  std::vector<std::vector<int>> factors;  // factors[i].size() == source_ks[i]
  hda::Hda source;
  hda::Hda target;
  hda::CellularWeakMorphism morphism;
};

GridRefinement refine_grid(const std::vector<int>& src_ks,
                           const std::vector<std::vector<int>>& factors);

// Random refinement with 1..3 axes, source edge counts 1..2 and
// target edge counts at most 3.  Deterministic for a fixed rng state.
GridRefinement random_refinement(std::mt19937& rng);

}  // namespace fixtures
