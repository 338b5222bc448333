#pragma once

#include <vector>

#include "hda/paths.hpp"
#include "hda/precubical.hpp"
#include "hda/weakmor.hpp"

namespace hda {

// A cube path: consecutive entries are equal, or step down along an
// upper face (c[i+1] = d(r,1) c[i]), or step up along a lower face
// (c[i] = d(r,0) c[i+1]).
struct CubePath {
  std::vector<Cube> cubes;
};

ValidationReport validate_cube_path(const PrecubicalSet& p, const CubePath& c);

// The edge d(1,0)...d(r-1,0) d(r+1,0)...d(n,0) b (b itself when b is
// an edge): the unique edge of b's boundary in direction r starting
// at b's least vertex.  Requires 1 <= r <= degree(b) >= 1.
Cube hat_d(const PrecubicalSet& p, Cube b, int r);

// The retraction of a cube path to a 1-skeleton path:
//   one cube, or two with nondecreasing degree -> the empty path at
//   the least vertex of the first cube;
//   a descending pair -> the edge hat_d(r) for the least r with
//   c2 = d(r,1) c1;
//   longer paths -> the concatenation over adjacent pairs.
// With require_unique_r the least-r choice must be unique (true in
// weakly regular complexes); ambiguity throws Precondition.
Path gamma(const PrecubicalSet& p, const CubePath& c,
           bool require_unique_r = false);

// Whether every stage of f is bijective in the appropriate sense:
// subdivision stages biject source vertices plus interior cells onto
// the target cubes, realization stages are isomorphisms.
bool is_homeomorphism(const CellularWeakMorphism& f);

// Precomputed carrier tables, one per stage, for a homeomorphism.
// The carrier of a target cube is the unique source cube whose open
// image contains it.
class Carrier {
 public:
  // Throws Precondition when f is not a homeomorphism.
  explicit Carrier(const CellularWeakMorphism& f);

  // Composite carrier: target cube of the last stage down to a
  // source cube of the first.
  Cube operator()(Cube b) const;

  std::size_t stage_count() const { return tables_.size(); }
  // Carrier table of one stage: target cube -> source cube.
  const std::vector<Cube>& table(std::size_t i) const { return tables_.at(i); }

 private:
  std::vector<std::vector<Cube>> tables_;
};

Cube carrier(const CellularWeakMorphism& f, Cube b);

// The carrier sequence of a target path: carriers of the start
// vertex, then of each edge and its end vertex.  The result is a
// valid cube path in f's source.
CubePath carrier_sequence(const CellularWeakMorphism& f, const Path& nu);

// gamma of the carrier sequence; for composites the retraction is
// applied stagewise from the last stage backwards.
Path retract_path(const CellularWeakMorphism& f, const Path& nu);

}  // namespace hda
