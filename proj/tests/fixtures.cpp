#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "hda/common.hpp"
#include "hda/precubical.hpp"

namespace fixtures {

using namespace hda;

namespace {

Cube edge(PrecubicalSet& p, const std::string& name, const std::string& from,
          const std::string& to) {
  Cube e = p.add_cube(name, 1);
  p.set_face(e, 1, 0, p.require(from));
  p.set_face(e, 1, 1, p.require(to));
  return e;
}

Cube square(PrecubicalSet& p, const std::string& name, const std::string& d10,
            const std::string& d11, const std::string& d20,
            const std::string& d21) {
  Cube z = p.add_cube(name, 2);
  p.set_face(z, 1, 0, p.require(d10));
  p.set_face(z, 1, 1, p.require(d11));
  p.set_face(z, 2, 0, p.require(d20));
  p.set_face(z, 2, 1, p.require(d21));
  return z;
}

}  // namespace

Hda fig1_a() {
  Hda a;
  for (const char* v : {"a00", "a10", "a01", "a11"}) a.set.add_cube(v, 0);
  edge(a.set, "ab0", "a00", "a10");
  edge(a.set, "ab1", "a01", "a11");
  edge(a.set, "cL", "a00", "a01");
  edge(a.set, "cR", "a10", "a11");
  square(a.set, "sqA", "cL", "cR", "ab0", "ab1");
  a.alphabet = {"a", "b", "c"};
  a.labels[a.set.require("ab0")] = {0, 1};
  a.labels[a.set.require("ab1")] = {0, 1};
  a.labels[a.set.require("cL")] = {2};
  a.labels[a.set.require("cR")] = {2};
  a.initial = {a.set.require("a00")};
  a.final_states = {a.set.require("a11")};
  return a;
}

Hda fig1_b() {
  Hda b;
  for (const char* v : {"b00", "b10", "b20", "b01", "b11", "b21"})
    b.set.add_cube(v, 0);
  edge(b.set, "aB", "b00", "b10");
  edge(b.set, "bB", "b10", "b20");
  edge(b.set, "aT", "b01", "b11");
  edge(b.set, "bT", "b11", "b21");
  edge(b.set, "c0", "b00", "b01");
  edge(b.set, "c1", "b10", "b11");
  edge(b.set, "c2", "b20", "b21");
  square(b.set, "sq1", "c0", "c1", "aB", "aT");
  square(b.set, "sq2", "c1", "c2", "bB", "bT");
  b.alphabet = {"a", "b", "c"};
  b.labels[b.set.require("aB")] = {0};
  b.labels[b.set.require("aT")] = {0};
  b.labels[b.set.require("bB")] = {1};
  b.labels[b.set.require("bT")] = {1};
  b.labels[b.set.require("c0")] = {2};
  b.labels[b.set.require("c1")] = {2};
  b.labels[b.set.require("c2")] = {2};
  b.initial = {b.set.require("b00")};
  b.final_states = {b.set.require("b21")};
  return b;
}

Hda ex29_a() {
  Hda a;
  for (const char* v : {"u", "v", "w"}) a.set.add_cube(v, 0);
  edge(a.set, "x", "u", "v");
  edge(a.set, "y", "v", "w");
  edge(a.set, "z", "u", "w");
  a.alphabet = {"a", "b"};
  a.labels[a.set.require("x")] = {0};
  a.labels[a.set.require("y")] = {1};
  a.labels[a.set.require("z")] = {0, 1};
  a.initial = {a.set.require("u")};
  a.final_states = {a.set.require("w")};
  return a;
}

Hda ex29_b() {
  Hda b;
  for (const char* v : {"u", "v", "w"}) b.set.add_cube(v, 0);
  edge(b.set, "x", "u", "v");
  edge(b.set, "y", "v", "w");
  b.alphabet = {"a", "b"};
  b.labels[b.set.require("x")] = {0};
  b.labels[b.set.require("y")] = {1};
  b.initial = {b.set.require("u")};
  b.final_states = {b.set.require("w")};
  return b;
}

Hda circle() {
  Hda c;
  c.set.add_cube("v", 0);
  Cube e = c.set.add_cube("e", 1);
  c.set.set_face(e, 1, 0, c.set.require("v"));
  c.set.set_face(e, 1, 1, c.set.require("v"));
  c.alphabet = {"a"};
  c.labels[e] = {0};
  c.initial = {c.set.require("v")};
  c.final_states = {c.set.require("v")};
  return c;
}

namespace {

using CellList = std::vector<std::pair<const char*, const char*>>;

void add_subdivided_cube(SubdivisionData& data, const PrecubicalSet& source,
                         const PrecubicalSet& target, const char* name,
                         std::vector<int> ks, const CellList& cells) {
  auto cd = SubdivisionData::make_cube_data(std::move(ks));
  for (const auto& [address, image] : cells) {
    GridCell cell = parse_grid_address(address);
    cd.cell_to_target[cd.cell_grid.require(cell.token_name())] =
        target.require(image);
  }
  data.cubes[source.require(name)] = std::move(cd);
}

}  // namespace

SubdivisionData wm_f_data() {
  Hda a = fig1_a();
  Hda b = fig1_b();
  SubdivisionData data;
  auto vmap = [&](const char* s, const char* t) {
    data.vertex_map[a.set.require(s)] = b.set.require(t);
  };
  vmap("a00", "b00");
  vmap("a10", "b20");
  vmap("a01", "b01");
  vmap("a11", "b21");
  add_subdivided_cube(data, a.set, b.set, "ab0", {2},
                      {{"0", "b00"},
                       {"0:1", "aB"},
                       {"1", "b10"},
                       {"1:2", "bB"},
                       {"2", "b20"}});
  add_subdivided_cube(data, a.set, b.set, "ab1", {2},
                      {{"0", "b01"},
                       {"0:1", "aT"},
                       {"1", "b11"},
                       {"1:2", "bT"},
                       {"2", "b21"}});
  add_subdivided_cube(data, a.set, b.set, "cL", {1},
                      {{"0", "b00"}, {"0:1", "c0"}, {"1", "b01"}});
  add_subdivided_cube(data, a.set, b.set, "cR", {1},
                      {{"0", "b20"}, {"0:1", "c2"}, {"1", "b21"}});
  add_subdivided_cube(data, a.set, b.set, "sqA", {2, 1},
                      {{"0;0", "b00"},
                       {"0:1;0", "aB"},
                       {"1;0", "b10"},
                       {"1:2;0", "bB"},
                       {"2;0", "b20"},
                       {"0;0:1", "c0"},
                       {"0:1;0:1", "sq1"},
                       {"1;0:1", "c1"},
                       {"1:2;0:1", "sq2"},
                       {"2;0:1", "c2"},
                       {"0;1", "b01"},
                       {"0:1;1", "aT"},
                       {"1;1", "b11"},
                       {"1:2;1", "bT"},
                       {"2;1", "b21"}});
  return data;
}

CellularWeakMorphism wm_f() {
  return CellularWeakMorphism::make_subdivision(fig1_a().set, fig1_b().set,
                                                wm_f_data());
}

CellularWeakMorphism ex29_incl() {
  Hda b = ex29_b();
  Hda a = ex29_a();
  PrecubicalMorphism f;
  f.source = b.set;
  f.target = a.set;
  f.map.assign(b.set.size(), kNoCube);
  for (const char* n : {"u", "v", "w", "x", "y"})
    f.map[b.set.require(n)] = a.set.require(n);
  return CellularWeakMorphism::from_morphism(f);
}

CellularWeakMorphism ex29_sub() {
  Hda a = ex29_a();
  Hda b = ex29_b();
  SubdivisionData data;
  for (const char* v : {"u", "v", "w"})
    data.vertex_map[a.set.require(v)] = b.set.require(v);
  add_subdivided_cube(data, a.set, b.set, "x", {1},
                      {{"0", "u"}, {"0:1", "x"}, {"1", "v"}});
  add_subdivided_cube(data, a.set, b.set, "y", {1},
                      {{"0", "v"}, {"0:1", "y"}, {"1", "w"}});
  add_subdivided_cube(data, a.set, b.set, "z", {2},
                      {{"0", "u"},
                       {"0:1", "x"},
                       {"1", "v"},
                       {"1:2", "y"},
                       {"2", "w"}});
  return CellularWeakMorphism::make_subdivision(a.set, b.set, std::move(data));
}

std::string fixture_path(const std::string& name) {
  return std::string(HDA_FIXTURE_DIR) + "/" + name;
}

std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument,
                       "missing fixture: " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

HdaDocument load_hda(const std::string& name) {
  return parse_hda(read_fixture(name + ".hda"));
}

GridRefinement refine_grid(const std::vector<int>& src_ks,
                           const std::vector<std::vector<int>>& factors) {
  const int n = static_cast<int>(src_ks.size());
  if (static_cast<int>(factors.size()) != n)
    throw Error(ErrorKind::InvalidArgument, "factors/axes mismatch");

  // offsets[i][j]: target coordinate of source coordinate j on axis i
  std::vector<std::vector<int>> offsets(n);
  std::vector<int> target_ks;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(factors[i].size()) != src_ks[i])
      throw Error(ErrorKind::InvalidArgument, "factors/segments mismatch");
    int acc = 0;
    offsets[i].push_back(0);
    for (int f : factors[i]) {
      if (f < 1) throw Error(ErrorKind::InvalidArgument, "factor < 1");
      acc += f;
      offsets[i].push_back(acc);
    }
    target_ks.push_back(acc);
  }

  Hda target = subdivided_cube_hda(target_ks);

  // Source automaton: the coarse grid; axis-i edges over segment j
  // carry l_{i+1} to the power factors[i][j].
  Hda source;
  source.set = grid(src_ks);
  source.alphabet = target.alphabet;
  for (const GridCell& cell : grid_cells(src_ks)) {
    if (cell.degree() == 1) {
      int axis = 0;
      while (!cell.comps[axis].edge) ++axis;
      Word word(factors[axis][cell.comps[axis].lo], axis);
      source.labels[source.set.require(cell.token_name())] = std::move(word);
    }
  }
  GridCell least, greatest;
  for (int i = 0; i < n; ++i) {
    least.comps.push_back({0, false});
    greatest.comps.push_back({src_ks[i], false});
  }
  source.initial = {source.set.require(least.token_name())};
  source.final_states = {source.set.require(greatest.token_name())};

  SubdivisionData data;
  for (const GridCell& cell : grid_cells(src_ks)) {
    if (cell.degree() == 0) {
      GridCell image;
      for (int i = 0; i < n; ++i)
        image.comps.push_back({offsets[i][cell.comps[i].lo], false});
      data.vertex_map[source.set.require(cell.token_name())] =
          target.set.require(image.token_name());
      continue;
    }
    std::vector<int> cell_ks;
    for (int i = 0; i < n; ++i)
      if (cell.comps[i].edge) cell_ks.push_back(factors[i][cell.comps[i].lo]);
    auto cd = SubdivisionData::make_cube_data(cell_ks);
    for (const GridCell& w : grid_cells(cell_ks)) {
      GridCell image;
      int edge_pos = 0;
      for (int i = 0; i < n; ++i) {
        if (!cell.comps[i].edge) {
          image.comps.push_back({offsets[i][cell.comps[i].lo], false});
        } else {
          int base = offsets[i][cell.comps[i].lo];
          const GridComponent& c = w.comps[edge_pos++];
          image.comps.push_back({base + c.lo, c.edge});
        }
      }
      cd.cell_to_target[cd.cell_grid.require(w.token_name())] =
          target.set.require(image.token_name());
    }
    data.cubes[source.set.require(cell.token_name())] = std::move(cd);
  }

  CellularWeakMorphism morphism = CellularWeakMorphism::make_subdivision(
      source.set, target.set, std::move(data));
  return GridRefinement{src_ks,           target_ks,
                        factors,          std::move(source),
                        std::move(target), std::move(morphism)};
}

GridRefinement random_refinement(std::mt19937& rng) {
  std::uniform_int_distribution<int> axes(1, 3);
  std::uniform_int_distribution<int> segments(1, 2);
  const int n = axes(rng);
  std::vector<int> src_ks;
  std::vector<std::vector<int>> factors;
  for (int i = 0; i < n; ++i) {
    int k = segments(rng);
    src_ks.push_back(k);
    std::vector<int> fs;
    int budget = 3;
    for (int j = 0; j < k; ++j) {
      // leave room for the remaining segments
      int cap = budget - (k - 1 - j);
      std::uniform_int_distribution<int> factor(1, cap);
      int f = factor(rng);
      fs.push_back(f);
      budget -= f;
    }
    factors.push_back(std::move(fs));
  }
  return refine_grid(src_ks, factors);
}

}  // namespace fixtures
