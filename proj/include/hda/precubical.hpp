#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hda/common.hpp"

namespace hda {

// Index of a cube within one PrecubicalSet.  Indices are only
// meaningful relative to the set that issued them.
using Cube = std::uint32_t;
inline constexpr Cube kNoCube = 0xffffffffu;

// A finite precubical set: graded cubes with boundary maps
// d(i,k) for direction i in 1..degree and side k in {0,1}.
// Construction is incremental (add_cube / set_face); afterwards the
// value is treated as immutable and all analysis functions take it
// by const reference.  Boundary slots start unset (kNoCube) so that
// validate_precubical can report missing entries instead of the
// constructor guessing.
class PrecubicalSet {
 public:
  // Throws InvalidArgument on duplicate or empty name, or degree < 0.
  Cube add_cube(std::string name, int degree);

  // dir in 1..degree(x), side in {0,1}.  Degree consistency of the
  // face is deliberately not enforced here; validate_precubical
  // reports it so that parsed input fails with a located message.
  void set_face(Cube x, int dir, int side, Cube face);

  int degree(Cube x) const { return entry(x).degree; }
  const std::string& name(Cube x) const { return entry(x).name; }

  // Returns kNoCube when the slot was never set.
  Cube face(Cube x, int dir, int side) const;

  std::optional<Cube> find(std::string_view name) const;
  // Throws InvalidArgument when absent.
  Cube require(std::string_view name) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  // Largest degree carrying a cube, -1 when empty.
  int dimension() const;

  // Cubes of one degree, sorted by name.
  const std::vector<Cube>& cubes(int degree) const;
  // All cubes sorted by (degree, name).
  std::vector<Cube> all_cubes() const;

  // Iterated d(1,0) / d(1,1) down to a vertex.  Throws Precondition
  // when a needed boundary is unset.
  Cube min_vertex(Cube x) const;
  Cube max_vertex(Cube x) const;

  // Structural equality: same names, degrees and boundary tables
  // (compared through names, so cube numbering does not matter).
  bool operator==(const PrecubicalSet& other) const;
  bool operator!=(const PrecubicalSet& other) const { return !(*this == other); }

 private:
  struct Entry {
    std::string name;
    int degree = 0;
    std::vector<Cube> faces;  // 2*degree slots, ordered d(1,0), d(1,1), d(2,0), ...
  };

  const Entry& entry(Cube x) const;
  Entry& entry(Cube x);

  std::vector<Entry> entries_;
  std::map<std::string, Cube, std::less<>> index_;
  std::vector<std::vector<Cube>> by_degree_;  // each sorted by name
};

// Checks that every boundary slot is set, faces drop exactly one
// degree, and the precubical identities
//   d(i,k) d(j,l) = d(j-1,l) d(i,k)   for i < j
// hold.  Violations are reported as (cube, i, j, k, l) tuples.
ValidationReport validate_precubical(const PrecubicalSet& p);

// The precubical interval: vertices k..l named "k".."l", edges
// named "<j-1>e<j>" with d(1,0) = j-1 and d(1,1) = j.
// Throws InvalidArgument when k > l.
PrecubicalSet interval(int k, int l);

// Tensor product; cube (x,y) is named "<x>|<y>" and
//   d(i,k)(x,y) = (d(i,k)x, y)            for i <= deg x,
//   d(i,k)(x,y) = (x, d(i-deg x, k)y)     otherwise.
PrecubicalSet tensor(const PrecubicalSet& p, const PrecubicalSet& q);

// One component of a grid cell: the vertex {lo} or the edge [lo,lo+1].
struct GridComponent {
  int lo = 0;
  bool edge = false;

  bool operator==(const GridComponent& o) const {
    return lo == o.lo && edge == o.edge;
  }
};

// A cell of a grid [0,k1] x ... x [0,kn]; degree = number of edge
// components.  Two renderings are used: token_name ("0e1_0") is the
// cube name inside generated grid complexes and address ("0:1;0") is
// the exchange syntax in morphism documents.
struct GridCell {
  std::vector<GridComponent> comps;

  int degree() const;
  std::string token_name() const;
  std::string address() const;

  bool operator==(const GridCell& o) const { return comps == o.comps; }
};

// Parses the ";"-separated address form; components are "j" or
// "j:j+1".  Throws Error(Parse) on malformed text.
GridCell parse_grid_address(std::string_view text);

// All cells of the grid with the given edge counts, in canonical
// order (componentwise, vertex j before edge [j,j+1] before vertex
// j+1).  ks may be empty (one degenerate cell).
std::vector<GridCell> grid_cells(const std::vector<int>& ks);

// Face of a grid cell: collapses the dir-th edge component (1-based
// among edge components) to its side-k endpoint.
GridCell grid_cell_face(const GridCell& cell, int dir, int side);

bool grid_cell_in_bounds(const GridCell& cell, const std::vector<int>& ks);
// Interior: every vertex component strictly between 0 and k_i.
bool grid_cell_interior(const GridCell& cell, const std::vector<int>& ks);

// The grid [0,k1] x ... x [0,kn] as a precubical set with token
// names.  Isomorphic to the tensor of intervals but named without
// the '|' separator so the result stays serializable.  ks empty
// yields the one-point set (the degenerate tensor factor).
// Throws InvalidArgument when some k < 1.
PrecubicalSet grid(const std::vector<int>& ks);

// The precubical n-cube: grid(1,...,1).
PrecubicalSet unit_cube(int n);

// A precubical morphism given by a total map on cubes.  source and
// target are owned copies, so the value is self-contained.
struct PrecubicalMorphism {
  PrecubicalSet source;
  PrecubicalSet target;
  std::vector<Cube> map;  // indexed by source cube

  Cube apply(Cube x) const { return map.at(x); }
};

// Degree preservation and boundary commutation for every cube.
ValidationReport validate_morphism(const PrecubicalMorphism& f);

// The characteristic morphism of x: unit_cube(deg x) -> p sending
// the top cell to x and every face to the corresponding iterated
// boundary of x.  Requires p to be valid around x (set boundaries);
// throws Precondition otherwise.
PrecubicalMorphism cube_morphism(const PrecubicalSet& p, Cube x);

// Regularity: the characteristic morphism of x is injective.
bool is_regular_cube(const PrecubicalSet& p, Cube x);
// Weak regularity: injective on the cells avoiding vertex 0 in every
// component, and on the cells avoiding vertex 1.
bool is_weakly_regular_cube(const PrecubicalSet& p, Cube x);

bool is_regular(const PrecubicalSet& p);
bool is_weakly_regular(const PrecubicalSet& p);
// Experimental shortcut: checks degree-2 cubes only.
bool is_weakly_regular_dim2_only(const PrecubicalSet& p);

// (minimal, maximal) vertices: no edge ends at / starts at them.
std::pair<std::vector<Cube>, std::vector<Cube>> extremal_vertices(
    const PrecubicalSet& p);

}  // namespace hda
