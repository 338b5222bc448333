#pragma once

#include <map>
#include <memory>
#include <vector>

#include "hda/hda.hpp"
#include "hda/paths.hpp"
#include "hda/precubical.hpp"

namespace hda {

// Data of a cellular weak morphism of subdivision kind: every source
// vertex maps to a target vertex and every higher cube x subdivides
// into a grid whose cells map to target cubes by a precubical
// morphism, compatibly with the faces and corners of x.
struct SubdivisionData {
  struct CubeData {
    std::vector<int> ks;                // per-axis edge counts
    PrecubicalSet cell_grid;            // grid(ks)
    std::vector<Cube> cell_to_target;   // indexed by cell_grid cube
  };

  std::map<Cube, Cube> vertex_map;      // source vertex -> target vertex
  std::map<Cube, CubeData> cubes;       // source cube of degree >= 1

  // Prepares an empty CubeData for the given subdivision vector;
  // entries of cell_to_target start as kNoCube.
  static CubeData make_cube_data(std::vector<int> ks);
};

// Checks totality, that each cell map is a precubical morphism into
// the target, corner compatibility with vertex_map, and face
// compatibility between the grids of neighbouring cubes.
ValidationReport validate_subdivision(const PrecubicalSet& source,
                                      const PrecubicalSet& target,
                                      const SubdivisionData& data);

// A cellular weak morphism: a realization of a precubical morphism,
// a subdivision, or a composite chain of such stages.  Values are
// immutable and only constructed through the factories, which
// validate, so an existing value is always structurally sound.
class CellularWeakMorphism {
 public:
  enum class Kind { Realization, Subdivision, Composite };

  struct Stage {
    enum class Kind { Realization, Subdivision } kind;
    std::shared_ptr<const PrecubicalSet> source;
    std::shared_ptr<const PrecubicalSet> target;
    std::vector<Cube> realization;  // Realization: source cube -> target cube
    SubdivisionData subdivision;    // Subdivision
  };

  // Throws InvalidArgument with the validation report on bad input.
  static CellularWeakMorphism from_morphism(const PrecubicalMorphism& f);
  static CellularWeakMorphism make_subdivision(const PrecubicalSet& source,
                                               const PrecubicalSet& target,
                                               SubdivisionData data);
  // Throws InvalidArgument when f's target differs from g's source.
  static CellularWeakMorphism compose(const CellularWeakMorphism& f,
                                      const CellularWeakMorphism& g);

  Kind kind() const;
  const std::vector<Stage>& stages() const { return stages_; }
  const PrecubicalSet& source() const { return *stages_.front().source; }
  const PrecubicalSet& target() const { return *stages_.back().target; }

  Cube apply_vertex(Cube v) const;

  // Image of an edge as a path in the stage target.
  Path map_edge(const Stage& stage, Cube e) const;

  // f^I: maps a 1-skeleton path of the source to one of the target;
  // a length-0 path maps through apply_vertex.
  Path map_path(const Path& path) const;

 private:
  CellularWeakMorphism() = default;
  std::vector<Stage> stages_;
};

// Every stage source is weakly regular (the hypothesis under which
// stagewise retraction preserves dihomotopy).
bool weakly_regular_chain(const CellularWeakMorphism& f);

// f is a weak morphism of HDAs from a to b: endpoints match the
// carriers of a and b, initial and final vertices are preserved, and
// every edge label equals the extended label of the edge's image.
bool is_weak_hda_morphism(const CellularWeakMorphism& f, const Hda& a,
                          const Hda& b, ValidationReport* why = nullptr);

// Subdivision of HDAs: subdivision-kind stages only, a weak HDA
// morphism, I and F preserved onto, and a homeomorphism.
bool is_subdivision_hda(const CellularWeakMorphism& f, const Hda& a,
                        const Hda& b, ValidationReport* why = nullptr);

}  // namespace hda
