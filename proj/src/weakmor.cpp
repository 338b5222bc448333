#include "hda/weakmor.hpp"

#include <algorithm>
#include <sstream>

#include "hda/carrier.hpp"

namespace hda {

SubdivisionData::CubeData SubdivisionData::make_cube_data(std::vector<int> ks) {
  CubeData cd;
  cd.cell_grid = grid(ks);
  cd.ks = std::move(ks);
  cd.cell_to_target.assign(cd.cell_grid.size(), kNoCube);
  return cd;
}

namespace {

// lifts a cell of the face grid (axis removed) back into the cube
// grid with the removed axis pinned to a vertex
GridCell lift_cell(const GridCell& cell, int axis, int vertex) {
  GridCell out = cell;
  out.comps.insert(out.comps.begin() + (axis - 1), {vertex, false});
  return out;
}

}  // namespace

ValidationReport validate_subdivision(const PrecubicalSet& source,
                                      const PrecubicalSet& target,
                                      const SubdivisionData& data) {
  ValidationReport report;

  for (Cube v : source.cubes(0)) {
    auto it = data.vertex_map.find(v);
    if (it == data.vertex_map.end()) {
      report.add("no vertex image for " + source.name(v));
      continue;
    }
    if (it->second >= target.size() || target.degree(it->second) != 0)
      report.add("vertex image of " + source.name(v) + " is not a vertex");
  }
  for (const auto& [v, w] : data.vertex_map)
    if (v >= source.size() || source.degree(v) != 0)
      report.add("vertex map entry on a non-vertex cube");

  for (const auto& [x, cd] : data.cubes) {
    if (x >= source.size() || source.degree(x) < 1) {
      report.add("subdivision entry on a non-positive-degree cube");
      continue;
    }
    const std::string& xname = source.name(x);
    int n = source.degree(x);
    if (static_cast<int>(cd.ks.size()) != n) {
      std::ostringstream os;
      os << "subdivision vector of " << xname << " has " << cd.ks.size()
         << " axes, cube has degree " << n;
      report.add(os.str());
      continue;
    }
    bool ks_ok = true;
    for (int k : cd.ks)
      if (k < 1) {
        report.add("subdivision count below 1 at " + xname);
        ks_ok = false;
      }
    if (!ks_ok) continue;
    if (cd.cell_grid != grid(cd.ks)) {
      report.add("cell grid of " + xname + " does not match its subdivision");
      continue;
    }

    // the cell map must be a precubical morphism into the target
    bool total = true;
    for (Cube c : cd.cell_grid.all_cubes()) {
      Cube img = cd.cell_to_target.size() > c ? cd.cell_to_target[c] : kNoCube;
      if (img == kNoCube || img >= target.size()) {
        report.add("no cell image at " + xname + " cell " +
                   cd.cell_grid.name(c));
        total = false;
        continue;
      }
      if (target.degree(img) != cd.cell_grid.degree(c)) {
        report.add("cell image degree mismatch at " + xname + " cell " +
                   cd.cell_grid.name(c));
        total = false;
      }
    }
    if (!total) continue;
    for (Cube c : cd.cell_grid.all_cubes()) {
      int d = cd.cell_grid.degree(c);
      for (int dir = 1; dir <= d; ++dir) {
        for (int side = 0; side <= 1; ++side) {
          Cube fs = cd.cell_grid.face(c, dir, side);
          Cube expect = target.face(cd.cell_to_target[c], dir, side);
          if (cd.cell_to_target[fs] != expect) {
            std::ostringstream os;
            os << "cell map of " << xname << " is not a morphism at cell "
               << cd.cell_grid.name(c) << ", d(" << dir << "," << side
               << "): cell " << cd.cell_grid.name(fs) << " maps to "
               << (cd.cell_to_target[fs] == kNoCube
                       ? std::string("<unset>")
                       : target.name(cd.cell_to_target[fs]))
               << ", expected "
               << (expect == kNoCube ? std::string("<unset>")
                                     : target.name(expect));
            report.add(os.str());
          }
        }
      }
    }

    // corner compatibility with the vertex map
    GridCell lo, hi;
    for (int k : cd.ks) {
      lo.comps.push_back({0, false});
      hi.comps.push_back({k, false});
    }
    Cube xmin = source.min_vertex(x);
    Cube xmax = source.max_vertex(x);
    auto vm_lo = data.vertex_map.find(xmin);
    auto vm_hi = data.vertex_map.find(xmax);
    Cube cell_lo = cd.cell_to_target[cd.cell_grid.require(lo.token_name())];
    Cube cell_hi = cd.cell_to_target[cd.cell_grid.require(hi.token_name())];
    if (vm_lo != data.vertex_map.end() && cell_lo != vm_lo->second)
      report.add("corner mismatch at " + xname +
                 ": least cell disagrees with the vertex map");
    if (vm_hi != data.vertex_map.end() && cell_hi != vm_hi->second)
      report.add("corner mismatch at " + xname +
                 ": greatest cell disagrees with the vertex map");

    // face compatibility along every boundary of x
    for (int dir = 1; dir <= n; ++dir) {
      for (int side = 0; side <= 1; ++side) {
        Cube y = source.face(x, dir, side);
        if (y == kNoCube) {
          report.add("boundary unset below " + xname);
          continue;
        }
        int pinned = side == 0 ? 0 : cd.ks[dir - 1];
        if (n == 1) {
          // faces are vertices: the pinned endpoint must match
          auto vm = data.vertex_map.find(y);
          GridCell end;
          end.comps.push_back({pinned, false});
          Cube got = cd.cell_to_target[cd.cell_grid.require(end.token_name())];
          if (vm != data.vertex_map.end() && got != vm->second) {
            std::ostringstream os;
            os << "face incompatibility at " << xname << ", d(" << dir << ","
               << side << "): endpoint maps to " << target.name(got)
               << " but vertex " << source.name(y) << " maps to "
               << target.name(vm->second);
            report.add(os.str());
          }
          continue;
        }
        auto yit = data.cubes.find(y);
        if (yit == data.cubes.end()) {
          report.add("no subdivision entry for face " + source.name(y) +
                     " of " + xname);
          continue;
        }
        const SubdivisionData::CubeData& fd = yit->second;
        std::vector<int> expect_ks = cd.ks;
        expect_ks.erase(expect_ks.begin() + (dir - 1));
        if (fd.ks != expect_ks) {
          std::ostringstream os;
          os << "face incompatibility at " << xname << ", d(" << dir << ","
             << side << "): subdivision of " << source.name(y)
             << " does not equal the restricted subdivision";
          report.add(os.str());
          continue;
        }
        for (const GridCell& w : grid_cells(fd.ks)) {
          Cube through_face =
              fd.cell_to_target[fd.cell_grid.require(w.token_name())];
          GridCell lifted = lift_cell(w, dir, pinned);
          Cube through_cube =
              cd.cell_to_target[cd.cell_grid.require(lifted.token_name())];
          if (through_face != through_cube) {
            std::ostringstream os;
            os << "face incompatibility at " << xname << ", d(" << dir << ","
               << side << "), cell " << w.address() << ": face cube "
               << source.name(y) << " maps it to "
               << target.name(through_face) << " but the restriction gives "
               << target.name(through_cube);
            report.add(os.str());
          }
        }
      }
    }
  }

  for (Cube x : source.all_cubes())
    if (source.degree(x) >= 1 && !data.cubes.count(x))
      report.add("no subdivision entry for " + source.name(x));

  return report;
}

CellularWeakMorphism CellularWeakMorphism::from_morphism(
    const PrecubicalMorphism& f) {
  ValidationReport report = validate_morphism(f);
  if (!report.ok())
    throw Error(ErrorKind::InvalidArgument,
                "invalid precubical morphism:\n" + report.to_string());
  CellularWeakMorphism out;
  Stage s;
  s.kind = Stage::Kind::Realization;
  s.source = std::make_shared<const PrecubicalSet>(f.source);
  s.target = std::make_shared<const PrecubicalSet>(f.target);
  s.realization = f.map;
  out.stages_.push_back(std::move(s));
  return out;
}

CellularWeakMorphism CellularWeakMorphism::make_subdivision(
    const PrecubicalSet& source, const PrecubicalSet& target,
    SubdivisionData data) {
  ValidationReport report = validate_subdivision(source, target, data);
  if (!report.ok())
    throw Error(ErrorKind::InvalidArgument,
                "invalid subdivision:\n" + report.to_string());
  CellularWeakMorphism out;
  Stage s;
  s.kind = Stage::Kind::Subdivision;
  s.source = std::make_shared<const PrecubicalSet>(source);
  s.target = std::make_shared<const PrecubicalSet>(target);
  s.subdivision = std::move(data);
  out.stages_.push_back(std::move(s));
  return out;
}

CellularWeakMorphism CellularWeakMorphism::compose(
    const CellularWeakMorphism& f, const CellularWeakMorphism& g) {
  if (f.target() != g.source())
    throw Error(ErrorKind::InvalidArgument,
                "compose: target of the first factor differs from the source "
                "of the second");
  CellularWeakMorphism out;
  out.stages_ = f.stages_;
  out.stages_.insert(out.stages_.end(), g.stages_.begin(), g.stages_.end());
  return out;
}

CellularWeakMorphism::Kind CellularWeakMorphism::kind() const {
  if (stages_.size() > 1) return Kind::Composite;
  return stages_.front().kind == Stage::Kind::Realization
             ? Kind::Realization
             : Kind::Subdivision;
}

Cube CellularWeakMorphism::apply_vertex(Cube v) const {
  Cube cur = v;
  for (const Stage& s : stages_) {
    if (cur >= s.source->size() || s.source->degree(cur) != 0)
      throw Error(ErrorKind::InvalidArgument,
                  "apply_vertex needs a source vertex");
    if (s.kind == Stage::Kind::Realization) {
      cur = s.realization[cur];
    } else {
      cur = s.subdivision.vertex_map.at(cur);
    }
  }
  return cur;
}

Path CellularWeakMorphism::map_edge(const Stage& s, Cube e) const {
  if (s.kind == Stage::Kind::Realization)
    return make_path(*s.target, kNoCube, {s.realization[e]});
  const SubdivisionData::CubeData& cd = s.subdivision.cubes.at(e);
  std::vector<Cube> edges;
  for (int j = 0; j < cd.ks[0]; ++j) {
    GridCell cell;
    cell.comps.push_back({j, true});
    edges.push_back(cd.cell_to_target[cd.cell_grid.require(cell.token_name())]);
  }
  return make_path(*s.target, kNoCube, std::move(edges));
}

Path CellularWeakMorphism::map_path(const Path& path) const {
  Path cur = path;
  for (const Stage& s : stages_) {
    Path next;
    if (cur.edges.empty()) {
      next.base = s.kind == Stage::Kind::Realization
                      ? s.realization[cur.base]
                      : s.subdivision.vertex_map.at(cur.base);
    } else {
      next = map_edge(s, cur.edges.front());
      for (std::size_t i = 1; i < cur.edges.size(); ++i)
        next = concat(*s.target, next, map_edge(s, cur.edges[i]));
    }
    cur = std::move(next);
  }
  return cur;
}

bool weakly_regular_chain(const CellularWeakMorphism& f) {
  for (const auto& s : f.stages())
    if (!is_weakly_regular(*s.source)) return false;
  return true;
}

namespace {

void note(ValidationReport* why, std::string msg) {
  if (why) why->add(std::move(msg));
}

}  // namespace

bool is_weak_hda_morphism(const CellularWeakMorphism& f, const Hda& a,
                          const Hda& b, ValidationReport* why) {
  if (f.source() != a.set) {
    note(why, "witness source does not match the first automaton");
    return false;
  }
  if (f.target() != b.set) {
    note(why, "witness target does not match the second automaton");
    return false;
  }
  bool ok = true;
  for (Cube i : a.initial) {
    if (!b.initial.count(f.apply_vertex(i))) {
      note(why, "initial vertex " + a.set.name(i) +
                    " does not map to an initial vertex");
      ok = false;
    }
  }
  for (Cube v : a.final_states) {
    if (!b.final_states.count(f.apply_vertex(v))) {
      note(why, "final vertex " + a.set.name(v) +
                    " does not map to a final vertex");
      ok = false;
    }
  }
  for (Cube e : a.set.cubes(1)) {
    Path image = f.map_path(make_path(a.set, kNoCube, {e}));
    Word got = extended_label(b, image);
    if (got != a.label(e)) {
      note(why, "label mismatch on " + a.set.name(e) + ": image spells " +
                    b.word_text(got) + ", expected " +
                    a.word_text(a.label(e)));
      ok = false;
    }
  }
  return ok;
}

bool is_subdivision_hda(const CellularWeakMorphism& f, const Hda& a,
                        const Hda& b, ValidationReport* why) {
  bool ok = true;
  for (const auto& s : f.stages()) {
    if (s.kind != CellularWeakMorphism::Stage::Kind::Subdivision) {
      note(why, "witness has a non-subdivision stage");
      ok = false;
    }
  }
  if (!is_weak_hda_morphism(f, a, b, why)) return false;
  if (!ok) return false;

  std::set<Cube> image_i, image_f;
  for (Cube i : a.initial) image_i.insert(f.apply_vertex(i));
  for (Cube v : a.final_states) image_f.insert(f.apply_vertex(v));
  if (image_i != b.initial) {
    note(why, "initial vertices are not mapped onto the target's");
    ok = false;
  }
  if (image_f != b.final_states) {
    note(why, "final vertices are not mapped onto the target's");
    ok = false;
  }
  if (!is_homeomorphism(f)) {
    note(why, "witness is not a homeomorphism");
    ok = false;
  }
  return ok;
}

}  // namespace hda
