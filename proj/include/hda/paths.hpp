#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hda/precubical.hpp"

namespace hda {

// A directed path in the 1-skeleton: a start vertex and a sequence
// of edges with d(1,0) of each edge equal to d(1,1) of the previous
// one.  For nonempty paths the base is redundant (it is the source
// of the first edge); make_path normalizes it.
struct Path {
  Cube base = kNoCube;
  std::vector<Cube> edges;

  std::size_t length() const { return edges.size(); }
  Cube source() const { return base; }
  Cube target(const PrecubicalSet& p) const;

  bool operator==(const Path& o) const {
    return base == o.base && edges == o.edges;
  }
  bool operator!=(const Path& o) const { return !(*this == o); }
  bool operator<(const Path& o) const {
    return base != o.base ? base < o.base : edges < o.edges;
  }
};

// Validates the chain condition; throws InvalidArgument on a broken
// chain, a non-vertex base, or a base mismatch.
Path make_path(const PrecubicalSet& p, Cube base, std::vector<Cube> edges);

// Throws InvalidArgument when target(lhs) != source(rhs).
Path concat(const PrecubicalSet& p, const Path& lhs, const Path& rhs);

// Name-sequence order used for canonical representatives.
bool path_name_less(const PrecubicalSet& p, const Path& a, const Path& b);

// Acyclicity of the 1-skeleton (self-loops included).
bool is_acyclic(const PrecubicalSet& p);

// All paths starting at `from`, optionally ending at `to`, optionally
// length-bounded.  Unbounded enumeration requires acyclicity and
// throws CyclicInput otherwise.  Deterministic order: by length-free
// lexicographic edge-name sequence (DFS over name-sorted edges).
std::vector<Path> enumerate_paths(const PrecubicalSet& p, Cube from,
                                  std::optional<Cube> to,
                                  std::optional<int> max_len);

// Paths from every vertex, vertices in name order.
std::vector<Path> enumerate_all_paths(const PrecubicalSet& p,
                                      std::optional<int> max_len);

// Index of elementary dihomotopy moves: for every 2-cube z the two
// edge pairs (d(1,0)z, d(2,1)z) and (d(2,0)z, d(1,1)z) are
// interchangeable inside a path.  Built once per set and shared.
class ElementaryMoves {
 public:
  explicit ElementaryMoves(const PrecubicalSet& p);

  // Paths one elementary move away, in deterministic order.
  std::vector<Path> neighbors(const Path& path) const;

 private:
  const PrecubicalSet* set_;
  // (first edge, second edge) -> replacement pairs
  std::map<std::pair<Cube, Cube>, std::vector<std::pair<Cube, Cube>>> swaps_;
};

// Equivalence classes under elementary moves.  Members are sorted;
// the representative is the name-lexicographic least member.
struct DihomotopyClass {
  Path representative;
  std::vector<Path> members;

  bool contains(const Path& p) const;
};

bool dihomotopic(const PrecubicalSet& p, const Path& a, const Path& b);
bool dihomotopic(const PrecubicalSet& p, const ElementaryMoves& moves,
                 const Path& a, const Path& b);

DihomotopyClass dihomotopy_class(const PrecubicalSet& p, const Path& path);
DihomotopyClass dihomotopy_class(const PrecubicalSet& p,
                                 const ElementaryMoves& moves,
                                 const Path& path);

using ClassId = std::uint32_t;
inline constexpr ClassId kNoClass = 0xffffffffu;

// A finite category presented by objects (vertices), hom-sets of
// dihomotopy classes, identities and a full composition table.
struct FiniteCategory {
  struct ClassEntry {
    Cube src = kNoCube;
    Cube dst = kNoCube;
    DihomotopyClass cls;
  };

  std::vector<Cube> objects;  // sorted by name
  std::vector<ClassEntry> classes;
  std::map<std::pair<Cube, Cube>, std::vector<ClassId>> hom;
  std::map<Cube, ClassId> identity;
  std::map<std::pair<ClassId, ClassId>, ClassId> composition;

  bool is_object(Cube v) const;
  const std::vector<ClassId>& hom_set(Cube src, Cube dst) const;
  // Class containing the given path, kNoClass when absent.
  ClassId classify(const Path& path) const;
  ClassId compose(ClassId a, ClassId b) const;
};

// Full subcategory of the fundamental category on the given objects.
// Requires acyclicity (hom-sets must be finite); throws CyclicInput.
FiniteCategory fundamental_category(const PrecubicalSet& p,
                                    const std::vector<Cube>& objects);

// Bounded approximation for cyclic inputs: only paths of length at
// most max_len are considered, so hom-sets may be truncated and the
// composition table is partial (kNoClass for out-of-bound results).
FiniteCategory fundamental_category_bounded(const PrecubicalSet& p,
                                            const std::vector<Cube>& objects,
                                            int max_len);

}  // namespace hda
