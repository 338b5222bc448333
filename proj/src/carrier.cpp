#include "hda/carrier.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace hda {

ValidationReport validate_cube_path(const PrecubicalSet& p, const CubePath& c) {
  ValidationReport report;
  if (c.cubes.empty()) {
    report.add("cube path must be nonempty");
    return report;
  }
  for (Cube x : c.cubes) {
    if (x >= p.size()) {
      report.add("cube path entry out of range");
      return report;
    }
  }
  for (std::size_t i = 0; i + 1 < c.cubes.size(); ++i) {
    Cube a = c.cubes[i];
    Cube b = c.cubes[i + 1];
    if (a == b) continue;
    bool ok = false;
    for (int r = 1; r <= p.degree(a) && !ok; ++r)
      if (p.face(a, r, 1) == b) ok = true;
    for (int r = 1; r <= p.degree(b) && !ok; ++r)
      if (p.face(b, r, 0) == a) ok = true;
    if (!ok) {
      std::ostringstream os;
      os << "cube path condition fails at index " << i + 1 << ": "
         << p.name(a) << " -> " << p.name(b);
      report.add(os.str());
    }
  }
  return report;
}

Cube hat_d(const PrecubicalSet& p, Cube b, int r) {
  int n = p.degree(b);
  if (n < 1 || r < 1 || r > n)
    throw Error(ErrorKind::InvalidArgument, "hat_d needs 1 <= r <= degree");
  if (n == 1) return b;
  Cube cur = b;
  for (int j = n; j > r; --j) cur = p.face(cur, j, 0);
  for (int j = r - 1; j >= 1; --j) cur = p.face(cur, j, 0);
  return cur;
}

namespace {

Path gamma_pair(const PrecubicalSet& p, Cube c1, Cube c2,
                bool require_unique_r) {
  if (p.degree(c1) <= p.degree(c2)) {
    Path out;
    out.base = p.min_vertex(c1);
    return out;
  }
  std::vector<int> rs;
  for (int r = 1; r <= p.degree(c1); ++r)
    if (p.face(c1, r, 1) == c2) rs.push_back(r);
  if (rs.empty())
    throw Error(ErrorKind::Precondition,
                "gamma: descending step is not an upper face");
  if (require_unique_r && rs.size() > 1)
    throw Error(ErrorKind::Precondition,
                "gamma: the upper-face direction is not unique at " +
                    p.name(c1));
  return make_path(p, kNoCube, {hat_d(p, c1, rs.front())});
}

}  // namespace

Path gamma(const PrecubicalSet& p, const CubePath& c, bool require_unique_r) {
  ValidationReport report = validate_cube_path(p, c);
  if (!report.ok())
    throw Error(ErrorKind::Precondition,
                "gamma: not a cube path:\n" + report.to_string());
  if (c.cubes.size() == 1) {
    Path out;
    out.base = p.min_vertex(c.cubes.front());
    return out;
  }
  Path out = gamma_pair(p, c.cubes[0], c.cubes[1], require_unique_r);
  for (std::size_t i = 1; i + 1 < c.cubes.size(); ++i)
    out = concat(p, out,
                 gamma_pair(p, c.cubes[i], c.cubes[i + 1], require_unique_r));
  return out;
}

namespace {

using Stage = CellularWeakMorphism::Stage;

// carrier table of one stage: target cube -> source cube, or
// nullopt when the stage is not bijective in the required sense
std::optional<std::vector<Cube>> stage_carrier(const Stage& s) {
  const PrecubicalSet& src = *s.source;
  const PrecubicalSet& tgt = *s.target;
  std::vector<Cube> table(tgt.size(), kNoCube);

  if (s.kind == Stage::Kind::Realization) {
    // isomorphism realization: the map must be degreewise bijective
    if (src.size() != tgt.size()) return std::nullopt;
    for (Cube x = 0; x < src.size(); ++x) {
      Cube y = s.realization[x];
      if (table[y] != kNoCube) return std::nullopt;
      table[y] = x;
    }
    return table;
  }

  for (const auto& [v, w] : s.subdivision.vertex_map) {
    if (table[w] != kNoCube) return std::nullopt;
    table[w] = v;
  }
  for (const auto& [x, cd] : s.subdivision.cubes) {
    for (const GridCell& cell : grid_cells(cd.ks)) {
      if (!grid_cell_interior(cell, cd.ks)) continue;
      Cube t = cd.cell_to_target[cd.cell_grid.require(cell.token_name())];
      if (table[t] != kNoCube) return std::nullopt;
      table[t] = x;
    }
  }
  for (Cube b = 0; b < tgt.size(); ++b)
    if (table[b] == kNoCube) return std::nullopt;
  return table;
}

}  // namespace

bool is_homeomorphism(const CellularWeakMorphism& f) {
  for (const auto& s : f.stages())
    if (!stage_carrier(s)) return false;
  return true;
}

Carrier::Carrier(const CellularWeakMorphism& f) {
  for (const auto& s : f.stages()) {
    auto table = stage_carrier(s);
    if (!table)
      throw Error(ErrorKind::Precondition,
                  "carrier needs a homeomorphism witness");
    tables_.push_back(std::move(*table));
  }
}

Cube Carrier::operator()(Cube b) const {
  Cube cur = b;
  for (std::size_t i = tables_.size(); i > 0; --i) cur = tables_[i - 1].at(cur);
  return cur;
}

Cube carrier(const CellularWeakMorphism& f, Cube b) {
  return Carrier(f)(b);
}

namespace {

CubePath carrier_sequence_with(const PrecubicalSet& tgt, const Path& nu,
                               const std::vector<Cube>& table) {
  CubePath seq;
  if (nu.edges.empty()) {
    seq.cubes.push_back(table.at(nu.base));
    return seq;
  }
  seq.cubes.push_back(table.at(tgt.face(nu.edges.front(), 1, 0)));
  for (Cube e : nu.edges) {
    seq.cubes.push_back(table.at(e));
    seq.cubes.push_back(table.at(tgt.face(e, 1, 1)));
  }
  return seq;
}

}  // namespace

CubePath carrier_sequence(const CellularWeakMorphism& f, const Path& nu) {
  Carrier c(f);
  // fold the stage tables into one composite table over the final target
  std::vector<Cube> table(f.target().size(), kNoCube);
  for (Cube b = 0; b < f.target().size(); ++b) table[b] = c(b);
  CubePath seq = carrier_sequence_with(f.target(), nu, table);
  ValidationReport report = validate_cube_path(f.source(), seq);
  if (!report.ok())
    throw Error(ErrorKind::Precondition,
                "carrier sequence is not a cube path:\n" + report.to_string());
  return seq;
}

Path retract_path(const CellularWeakMorphism& f, const Path& nu) {
  Carrier c(f);
  Path cur = nu;
  for (std::size_t i = f.stages().size(); i > 0; --i) {
    const Stage& s = f.stages()[i - 1];
    CubePath seq = carrier_sequence_with(*s.target, cur, c.table(i - 1));
    ValidationReport report = validate_cube_path(*s.source, seq);
    if (!report.ok())
      throw Error(ErrorKind::Precondition,
                  "carrier sequence is not a cube path:\n" +
                      report.to_string());
    cur = gamma(*s.source, seq);
  }
  return cur;
}

}  // namespace hda
