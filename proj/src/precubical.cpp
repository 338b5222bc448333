#include "hda/precubical.hpp"

#include <algorithm>
#include <sstream>

namespace hda {

namespace {

std::string cube_label(const PrecubicalSet& p, Cube x) {
  return x == kNoCube ? std::string("<unset>") : p.name(x);
}

}  // namespace

Cube PrecubicalSet::add_cube(std::string name, int degree) {
  if (name.empty())
    throw Error(ErrorKind::InvalidArgument, "cube name must be nonempty");
  if (degree < 0)
    throw Error(ErrorKind::InvalidArgument,
                "cube degree must be nonnegative: " + name);
  if (index_.count(name))
    throw Error(ErrorKind::InvalidArgument, "duplicate cube name: " + name);

  Cube id = static_cast<Cube>(entries_.size());
  Entry e;
  e.name = name;
  e.degree = degree;
  e.faces.assign(2 * static_cast<std::size_t>(degree), kNoCube);
  entries_.push_back(std::move(e));
  index_.emplace(std::move(name), id);

  if (by_degree_.size() <= static_cast<std::size_t>(degree))
    by_degree_.resize(degree + 1);
  auto& bucket = by_degree_[degree];
  auto pos = std::lower_bound(bucket.begin(), bucket.end(), id,
                              [this](Cube a, Cube b) {
                                return entries_[a].name < entries_[b].name;
                              });
  bucket.insert(pos, id);
  return id;
}

void PrecubicalSet::set_face(Cube x, int dir, int side, Cube f) {
  Entry& e = entry(x);
  if (dir < 1 || dir > e.degree)
    throw Error(ErrorKind::InvalidArgument,
                "face direction out of range for " + e.name);
  if (side != 0 && side != 1)
    throw Error(ErrorKind::InvalidArgument, "face side must be 0 or 1");
  if (f >= entries_.size())
    throw Error(ErrorKind::InvalidArgument, "unknown face cube");
  e.faces[2 * (dir - 1) + side] = f;
}

Cube PrecubicalSet::face(Cube x, int dir, int side) const {
  const Entry& e = entry(x);
  if (dir < 1 || dir > e.degree)
    throw Error(ErrorKind::InvalidArgument,
                "face direction out of range for " + e.name);
  if (side != 0 && side != 1)
    throw Error(ErrorKind::InvalidArgument, "face side must be 0 or 1");
  return e.faces[2 * (dir - 1) + side];
}

std::optional<Cube> PrecubicalSet::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Cube PrecubicalSet::require(std::string_view name) const {
  auto c = find(name);
  if (!c)
    throw Error(ErrorKind::InvalidArgument,
                "unknown cube: " + std::string(name));
  return *c;
}

int PrecubicalSet::dimension() const {
  for (int d = static_cast<int>(by_degree_.size()) - 1; d >= 0; --d)
    if (!by_degree_[d].empty()) return d;
  return -1;
}

const std::vector<Cube>& PrecubicalSet::cubes(int degree) const {
  static const std::vector<Cube> kEmpty;
  if (degree < 0 || static_cast<std::size_t>(degree) >= by_degree_.size())
    return kEmpty;
  return by_degree_[degree];
}

std::vector<Cube> PrecubicalSet::all_cubes() const {
  std::vector<Cube> out;
  out.reserve(entries_.size());
  for (const auto& bucket : by_degree_)
    out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

Cube PrecubicalSet::min_vertex(Cube x) const {
  while (degree(x) > 0) {
    Cube f = face(x, 1, 0);
    if (f == kNoCube)
      throw Error(ErrorKind::Precondition,
                  "boundary unset below " + name(x));
    x = f;
  }
  return x;
}

Cube PrecubicalSet::max_vertex(Cube x) const {
  while (degree(x) > 0) {
    Cube f = face(x, 1, 1);
    if (f == kNoCube)
      throw Error(ErrorKind::Precondition,
                  "boundary unset below " + name(x));
    x = f;
  }
  return x;
}

bool PrecubicalSet::operator==(const PrecubicalSet& other) const {
  if (entries_.size() != other.entries_.size()) return false;
  for (const Entry& e : entries_) {
    auto o = other.find(e.name);
    if (!o) return false;
    if (other.degree(*o) != e.degree) return false;
    for (int dir = 1; dir <= e.degree; ++dir) {
      for (int side = 0; side <= 1; ++side) {
        Cube mine = e.faces[2 * (dir - 1) + side];
        Cube theirs = other.face(*o, dir, side);
        if ((mine == kNoCube) != (theirs == kNoCube)) return false;
        if (mine != kNoCube && entries_[mine].name != other.name(theirs))
          return false;
      }
    }
  }
  return true;
}

const PrecubicalSet::Entry& PrecubicalSet::entry(Cube x) const {
  if (x >= entries_.size())
    throw Error(ErrorKind::InvalidArgument, "cube index out of range");
  return entries_[x];
}

PrecubicalSet::Entry& PrecubicalSet::entry(Cube x) {
  if (x >= entries_.size())
    throw Error(ErrorKind::InvalidArgument, "cube index out of range");
  return entries_[x];
}

ValidationReport validate_precubical(const PrecubicalSet& p) {
  ValidationReport report;
  for (int n = 1; n <= p.dimension(); ++n) {
    for (Cube x : p.cubes(n)) {
      bool complete = true;
      for (int dir = 1; dir <= n; ++dir) {
        for (int side = 0; side <= 1; ++side) {
          Cube f = p.face(x, dir, side);
          if (f == kNoCube) {
            std::ostringstream os;
            os << "missing boundary d(" << dir << "," << side << ") of "
               << p.name(x);
            report.add(os.str());
            complete = false;
          } else if (p.degree(f) != n - 1) {
            std::ostringstream os;
            os << "degree mismatch: d(" << dir << "," << side << ") of "
               << p.name(x) << " is " << p.name(f) << " of degree "
               << p.degree(f) << ", expected " << n - 1;
            report.add(os.str());
            complete = false;
          }
        }
      }
      if (!complete || n < 2) continue;
      for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          for (int k = 0; k <= 1; ++k) {
            for (int l = 0; l <= 1; ++l) {
              Cube left = p.face(p.face(x, j, l), i, k);
              Cube right = p.face(p.face(x, i, k), j - 1, l);
              if (left == kNoCube || right == kNoCube) continue;  // reported above
              if (left != right) {
                std::ostringstream os;
                os << "identity violated at (" << p.name(x) << ", i=" << i
                   << ", j=" << j << ", k=" << k << ", l=" << l << "): d(" << i
                   << "," << k << ")d(" << j << "," << l << ") = "
                   << cube_label(p, left) << " but d(" << j - 1 << "," << l
                   << ")d(" << i << "," << k << ") = " << cube_label(p, right);
                report.add(os.str());
              }
            }
          }
        }
      }
    }
  }
  return report;
}

PrecubicalSet interval(int k, int l) {
  if (k > l)
    throw Error(ErrorKind::InvalidArgument,
                "interval requires k <= l");
  PrecubicalSet p;
  std::vector<Cube> verts;
  for (int j = k; j <= l; ++j)
    verts.push_back(p.add_cube(std::to_string(j), 0));
  for (int j = k + 1; j <= l; ++j) {
    Cube e = p.add_cube(std::to_string(j - 1) + "e" + std::to_string(j), 1);
    p.set_face(e, 1, 0, verts[j - 1 - k]);
    p.set_face(e, 1, 1, verts[j - k]);
  }
  return p;
}

PrecubicalSet tensor(const PrecubicalSet& p, const PrecubicalSet& q) {
  PrecubicalSet out;
  // pair ids in a deterministic order, then wire boundaries
  std::vector<std::pair<Cube, Cube>> pairs;
  for (Cube x : p.all_cubes())
    for (Cube y : q.all_cubes())
      pairs.emplace_back(x, y);

  std::map<std::pair<Cube, Cube>, Cube> ids;
  for (auto& [x, y] : pairs)
    ids[{x, y}] =
        out.add_cube(p.name(x) + "|" + q.name(y), p.degree(x) + q.degree(y));

  for (auto& [x, y] : pairs) {
    Cube c = ids[{x, y}];
    int dx = p.degree(x);
    int dy = q.degree(y);
    for (int i = 1; i <= dx; ++i) {
      for (int k = 0; k <= 1; ++k) {
        Cube f = p.face(x, i, k);
        if (f != kNoCube) out.set_face(c, i, k, ids.at({f, y}));
      }
    }
    for (int i = 1; i <= dy; ++i) {
      for (int k = 0; k <= 1; ++k) {
        Cube f = q.face(y, i, k);
        if (f != kNoCube) out.set_face(c, dx + i, k, ids.at({x, f}));
      }
    }
  }
  return out;
}

int GridCell::degree() const {
  int d = 0;
  for (const auto& c : comps) d += c.edge ? 1 : 0;
  return d;
}

std::string GridCell::token_name() const {
  if (comps.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) out += '_';
    out += std::to_string(comps[i].lo);
    if (comps[i].edge) out += "e" + std::to_string(comps[i].lo + 1);
  }
  return out;
}

std::string GridCell::address() const {
  std::string out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(comps[i].lo);
    if (comps[i].edge) out += ":" + std::to_string(comps[i].lo + 1);
  }
  return out;
}

GridCell parse_grid_address(std::string_view text) {
  GridCell cell;
  if (text.empty())
    throw Error(ErrorKind::Parse, "empty grid cell address");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    std::string_view comp =
        text.substr(pos, end == std::string_view::npos ? end : end - pos);
    if (comp.empty())
      throw Error(ErrorKind::Parse,
                  "empty component in grid cell address: " + std::string(text));
    std::size_t colon = comp.find(':');
    auto parse_int = [&](std::string_view s) {
      if (s.empty()) return -1;
      int v = 0;
      for (char ch : s) {
        if (ch < '0' || ch > '9') return -1;
        v = v * 10 + (ch - '0');
      }
      return v;
    };
    GridComponent gc;
    if (colon == std::string_view::npos) {
      gc.lo = parse_int(comp);
      gc.edge = false;
      if (gc.lo < 0)
        throw Error(ErrorKind::Parse,
                    "bad grid cell component: " + std::string(comp));
    } else {
      int lo = parse_int(comp.substr(0, colon));
      int hi = parse_int(comp.substr(colon + 1));
      if (lo < 0 || hi != lo + 1)
        throw Error(ErrorKind::Parse,
                    "bad grid cell component: " + std::string(comp));
      gc.lo = lo;
      gc.edge = true;
    }
    cell.comps.push_back(gc);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return cell;
}

std::vector<GridCell> grid_cells(const std::vector<int>& ks) {
  std::vector<GridCell> out;
  GridCell cur;
  cur.comps.resize(ks.size());
  // componentwise canonical order: 0, [0,1], 1, [1,2], ..., k
  auto options = [](int k) {
    std::vector<GridComponent> opts;
    for (int j = 0; j < k; ++j) {
      opts.push_back({j, false});
      opts.push_back({j, true});
    }
    opts.push_back({k, false});
    return opts;
  };
  std::vector<std::vector<GridComponent>> axis_opts;
  for (int k : ks) axis_opts.push_back(options(k));

  // odometer over axis options
  std::vector<std::size_t> idx(ks.size(), 0);
  while (true) {
    for (std::size_t a = 0; a < ks.size(); ++a) cur.comps[a] = axis_opts[a][idx[a]];
    out.push_back(cur);
    std::size_t a = ks.size();
    while (a > 0) {
      --a;
      if (++idx[a] < axis_opts[a].size()) break;
      idx[a] = 0;
      if (a == 0) return out;
    }
    if (ks.empty()) return out;
  }
}

GridCell grid_cell_face(const GridCell& cell, int dir, int side) {
  GridCell out = cell;
  int seen = 0;
  for (auto& c : out.comps) {
    if (!c.edge) continue;
    if (++seen == dir) {
      c.edge = false;
      c.lo += side;
      return out;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "grid cell face direction out of range");
}

bool grid_cell_in_bounds(const GridCell& cell, const std::vector<int>& ks) {
  if (cell.comps.size() != ks.size()) return false;
  for (std::size_t a = 0; a < ks.size(); ++a) {
    const auto& c = cell.comps[a];
    if (c.lo < 0) return false;
    if (c.edge ? c.lo + 1 > ks[a] : c.lo > ks[a]) return false;
  }
  return true;
}

bool grid_cell_interior(const GridCell& cell, const std::vector<int>& ks) {
  if (cell.comps.size() != ks.size()) return false;
  for (std::size_t a = 0; a < ks.size(); ++a) {
    const auto& c = cell.comps[a];
    if (!c.edge && (c.lo <= 0 || c.lo >= ks[a])) return false;
  }
  return true;
}

PrecubicalSet grid(const std::vector<int>& ks) {
  for (int k : ks)
    if (k < 1)
      throw Error(ErrorKind::InvalidArgument,
                  "grid edge counts must be at least 1");
  PrecubicalSet p;
  auto cells = grid_cells(ks);
  std::map<std::string, Cube> ids;
  for (const auto& cell : cells)
    ids[cell.token_name()] = p.add_cube(cell.token_name(), cell.degree());
  for (const auto& cell : cells) {
    int d = cell.degree();
    Cube c = ids.at(cell.token_name());
    for (int dir = 1; dir <= d; ++dir)
      for (int side = 0; side <= 1; ++side)
        p.set_face(c, dir, side,
                   ids.at(grid_cell_face(cell, dir, side).token_name()));
  }
  return p;
}

PrecubicalSet unit_cube(int n) {
  if (n < 0)
    throw Error(ErrorKind::InvalidArgument, "cube dimension must be nonnegative");
  return grid(std::vector<int>(static_cast<std::size_t>(n), 1));
}

ValidationReport validate_morphism(const PrecubicalMorphism& f) {
  ValidationReport report;
  if (f.map.size() != f.source.size()) {
    report.add("morphism map does not cover the source cube set");
    return report;
  }
  for (Cube x : f.source.all_cubes()) {
    Cube fx = f.map[x];
    if (fx == kNoCube || fx >= f.target.size()) {
      report.add("no image for " + f.source.name(x));
      continue;
    }
    int n = f.source.degree(x);
    if (f.target.degree(fx) != n) {
      std::ostringstream os;
      os << "degree not preserved at " << f.source.name(x) << ": image "
         << f.target.name(fx) << " has degree " << f.target.degree(fx);
      report.add(os.str());
      continue;
    }
    for (int dir = 1; dir <= n; ++dir) {
      for (int side = 0; side <= 1; ++side) {
        Cube fs = f.source.face(x, dir, side);
        Cube ft = f.target.face(fx, dir, side);
        if (fs == kNoCube || ft == kNoCube) {
          std::ostringstream os;
          os << "boundary unset while checking " << f.source.name(x)
             << " at d(" << dir << "," << side << ")";
          report.add(os.str());
          continue;
        }
        if (f.map[fs] != ft) {
          std::ostringstream os;
          os << "boundary not preserved at " << f.source.name(x) << ", d("
             << dir << "," << side << "): image of " << f.source.name(fs)
             << " is " << cube_label(f.target, f.map[fs]) << ", expected "
             << f.target.name(ft);
          report.add(os.str());
        }
      }
    }
  }
  return report;
}

PrecubicalMorphism cube_morphism(const PrecubicalSet& p, Cube x) {
  if (x >= p.size())
    throw Error(ErrorKind::InvalidArgument, "cube_morphism: unknown cube");
  int n = p.degree(x);
  PrecubicalMorphism f;
  f.source = unit_cube(n);
  f.target = p;
  f.map.assign(f.source.size(), kNoCube);

  std::vector<int> ones(static_cast<std::size_t>(n), 1);
  for (const GridCell& cell : grid_cells(ones)) {
    // collapse vertex components from the highest axis down; all
    // axes below are still present, so axis a is direction a
    Cube img = x;
    for (int a = n; a >= 1; --a) {
      const GridComponent& c = cell.comps[a - 1];
      if (c.edge) continue;
      Cube next = p.face(img, a, c.lo);
      if (next == kNoCube)
        throw Error(ErrorKind::Precondition,
                    "cube_morphism: boundary unset below " + p.name(x));
      img = next;
    }
    f.map[f.source.require(cell.token_name())] = img;
  }
  return f;
}

namespace {

bool injective_on(const PrecubicalMorphism& f, const std::vector<Cube>& cells) {
  std::vector<Cube> images;
  images.reserve(cells.size());
  for (Cube c : cells) images.push_back(f.map[c]);
  std::sort(images.begin(), images.end());
  return std::adjacent_find(images.begin(), images.end()) == images.end();
}

}  // namespace

bool is_regular_cube(const PrecubicalSet& p, Cube x) {
  PrecubicalMorphism f = cube_morphism(p, x);
  std::vector<Cube> all;
  for (Cube c : f.source.all_cubes()) all.push_back(c);
  return injective_on(f, all);
}

bool is_weakly_regular_cube(const PrecubicalSet& p, Cube x) {
  PrecubicalMorphism f = cube_morphism(p, x);
  int n = p.degree(x);
  std::vector<int> ones(static_cast<std::size_t>(n), 1);
  std::vector<Cube> avoid0, avoid1;
  for (const GridCell& cell : grid_cells(ones)) {
    bool has0 = false, has1 = false;
    for (const auto& c : cell.comps) {
      if (!c.edge && c.lo == 0) has0 = true;
      if (!c.edge && c.lo == 1) has1 = true;
    }
    if (!has0) avoid0.push_back(f.source.require(cell.token_name()));
    if (!has1) avoid1.push_back(f.source.require(cell.token_name()));
  }
  return injective_on(f, avoid0) && injective_on(f, avoid1);
}

bool is_regular(const PrecubicalSet& p) {
  for (Cube x : p.all_cubes())
    if (!is_regular_cube(p, x)) return false;
  return true;
}

bool is_weakly_regular(const PrecubicalSet& p) {
  for (Cube x : p.all_cubes())
    if (!is_weakly_regular_cube(p, x)) return false;
  return true;
}

bool is_weakly_regular_dim2_only(const PrecubicalSet& p) {
  for (Cube x : p.cubes(2))
    if (!is_weakly_regular_cube(p, x)) return false;
  return true;
}

std::pair<std::vector<Cube>, std::vector<Cube>> extremal_vertices(
    const PrecubicalSet& p) {
  std::vector<bool> has_in(p.size(), false), has_out(p.size(), false);
  for (Cube e : p.cubes(1)) {
    Cube s = p.face(e, 1, 0);
    Cube t = p.face(e, 1, 1);
    if (s != kNoCube) has_out[s] = true;
    if (t != kNoCube) has_in[t] = true;
  }
  std::vector<Cube> minimal, maximal;
  for (Cube v : p.cubes(0)) {
    if (!has_in[v]) minimal.push_back(v);
    if (!has_out[v]) maximal.push_back(v);
  }
  return {minimal, maximal};
}

}  // namespace hda
