#include "hda/paths.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace hda {

Cube Path::target(const PrecubicalSet& p) const {
  if (edges.empty()) return base;
  return p.face(edges.back(), 1, 1);
}

Path make_path(const PrecubicalSet& p, Cube base, std::vector<Cube> edges) {
  if (base == kNoCube && edges.empty())
    throw Error(ErrorKind::InvalidArgument, "empty path needs a base vertex");
  if (!edges.empty()) {
    Cube src = p.face(edges.front(), 1, 0);
    if (base != kNoCube && base != src)
      throw Error(ErrorKind::InvalidArgument,
                  "path base does not match the first edge");
    base = src;
  }
  if (base == kNoCube || p.degree(base) != 0)
    throw Error(ErrorKind::InvalidArgument, "path base must be a vertex");
  for (Cube e : edges)
    if (p.degree(e) != 1)
      throw Error(ErrorKind::InvalidArgument,
                  "path edges must have degree 1: " + p.name(e));
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (p.face(edges[i], 1, 1) != p.face(edges[i + 1], 1, 0))
      throw Error(ErrorKind::InvalidArgument,
                  "broken path chain between " + p.name(edges[i]) + " and " +
                      p.name(edges[i + 1]));
  }
  Path out;
  out.base = base;
  out.edges = std::move(edges);
  return out;
}

Path concat(const PrecubicalSet& p, const Path& lhs, const Path& rhs) {
  if (lhs.target(p) != rhs.source())
    throw Error(ErrorKind::InvalidArgument,
                "concat: endpoint mismatch between " +
                    p.name(lhs.target(p)) + " and " + p.name(rhs.source()));
  Path out = lhs;
  out.edges.insert(out.edges.end(), rhs.edges.begin(), rhs.edges.end());
  return out;
}

bool path_name_less(const PrecubicalSet& p, const Path& a, const Path& b) {
  auto mismatch = std::mismatch(a.edges.begin(), a.edges.end(),
                                b.edges.begin(), b.edges.end());
  if (mismatch.first != a.edges.end() && mismatch.second != b.edges.end())
    return p.name(*mismatch.first) < p.name(*mismatch.second);
  if (mismatch.first == a.edges.end() && mismatch.second == b.edges.end())
    return p.name(a.base) < p.name(b.base);
  return mismatch.first == a.edges.end();
}

bool is_acyclic(const PrecubicalSet& p) {
  // DFS 3-coloring on the 1-skeleton
  std::vector<std::vector<Cube>> out(p.size());
  for (Cube e : p.cubes(1)) {
    Cube s = p.face(e, 1, 0);
    Cube t = p.face(e, 1, 1);
    if (s != kNoCube && t != kNoCube) out[s].push_back(t);
  }
  enum { White, Grey, Black };
  std::vector<int> color(p.size(), White);
  std::function<bool(Cube)> visit = [&](Cube v) {
    color[v] = Grey;
    for (Cube w : out[v]) {
      if (color[w] == Grey) return false;
      if (color[w] == White && !visit(w)) return false;
    }
    color[v] = Black;
    return true;
  };
  for (Cube v : p.cubes(0))
    if (color[v] == White && !visit(v)) return false;
  return true;
}

namespace {

std::vector<std::vector<Cube>> out_edges_by_name(const PrecubicalSet& p) {
  std::vector<std::vector<Cube>> out(p.size());
  for (Cube e : p.cubes(1)) {  // name-sorted already
    Cube s = p.face(e, 1, 0);
    if (s != kNoCube) out[s].push_back(e);
  }
  return out;
}

}  // namespace

std::vector<Path> enumerate_paths(const PrecubicalSet& p, Cube from,
                                  std::optional<Cube> to,
                                  std::optional<int> max_len) {
  if (from >= p.size() || p.degree(from) != 0)
    throw Error(ErrorKind::InvalidArgument,
                "path enumeration needs a start vertex");
  if (!max_len && !is_acyclic(p))
    throw Error(ErrorKind::CyclicInput,
                "unbounded path enumeration on a cyclic complex");
  auto out = out_edges_by_name(p);
  std::vector<Path> result;
  Path cur;
  cur.base = from;
  std::function<void(Cube)> dfs = [&](Cube v) {
    if (!to || v == *to) result.push_back(cur);
    if (max_len && static_cast<int>(cur.edges.size()) >= *max_len) return;
    for (Cube e : out[v]) {
      cur.edges.push_back(e);
      dfs(p.face(e, 1, 1));
      cur.edges.pop_back();
    }
  };
  dfs(from);
  return result;
}

std::vector<Path> enumerate_all_paths(const PrecubicalSet& p,
                                      std::optional<int> max_len) {
  std::vector<Path> result;
  for (Cube v : p.cubes(0)) {
    auto part = enumerate_paths(p, v, std::nullopt, max_len);
    result.insert(result.end(), part.begin(), part.end());
  }
  return result;
}

ElementaryMoves::ElementaryMoves(const PrecubicalSet& p) : set_(&p) {
  for (Cube z : p.cubes(2)) {
    Cube d10 = p.face(z, 1, 0);
    Cube d11 = p.face(z, 1, 1);
    Cube d20 = p.face(z, 2, 0);
    Cube d21 = p.face(z, 2, 1);
    if (d10 == kNoCube || d11 == kNoCube || d20 == kNoCube || d21 == kNoCube)
      continue;
    // both detours around z swap into each other
    swaps_[{d10, d21}].push_back({d20, d11});
    swaps_[{d20, d11}].push_back({d10, d21});
  }
}

std::vector<Path> ElementaryMoves::neighbors(const Path& path) const {
  std::vector<Path> out;
  for (std::size_t i = 0; i + 1 < path.edges.size(); ++i) {
    auto it = swaps_.find({path.edges[i], path.edges[i + 1]});
    if (it == swaps_.end()) continue;
    for (const auto& [e1, e2] : it->second) {
      Path next = path;
      next.edges[i] = e1;
      next.edges[i + 1] = e2;
      out.push_back(next);
    }
  }
  return out;
}

bool DihomotopyClass::contains(const Path& p) const {
  return std::binary_search(members.begin(), members.end(), p);
}

DihomotopyClass dihomotopy_class(const PrecubicalSet& p,
                                 const ElementaryMoves& moves,
                                 const Path& path) {
  std::set<Path> seen{path};
  std::deque<Path> queue{path};
  while (!queue.empty()) {
    Path cur = queue.front();
    queue.pop_front();
    for (Path& next : moves.neighbors(cur))
      if (seen.insert(next).second) queue.push_back(next);
  }
  DihomotopyClass cls;
  cls.members.assign(seen.begin(), seen.end());
  cls.representative = cls.members.front();
  for (const Path& m : cls.members)
    if (path_name_less(p, m, cls.representative)) cls.representative = m;
  return cls;
}

DihomotopyClass dihomotopy_class(const PrecubicalSet& p, const Path& path) {
  return dihomotopy_class(p, ElementaryMoves(p), path);
}

bool dihomotopic(const PrecubicalSet& p, const ElementaryMoves& moves,
                 const Path& a, const Path& b) {
  if (a.source() != b.source() || a.target(p) != b.target(p)) return false;
  if (a.length() != b.length()) return false;
  if (a == b) return true;
  std::set<Path> seen{a};
  std::deque<Path> queue{a};
  while (!queue.empty()) {
    Path cur = queue.front();
    queue.pop_front();
    for (Path& next : moves.neighbors(cur)) {
      if (next == b) return true;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return false;
}

bool dihomotopic(const PrecubicalSet& p, const Path& a, const Path& b) {
  return dihomotopic(p, ElementaryMoves(p), a, b);
}

bool FiniteCategory::is_object(Cube v) const {
  return std::find(objects.begin(), objects.end(), v) != objects.end();
}

const std::vector<ClassId>& FiniteCategory::hom_set(Cube src, Cube dst) const {
  static const std::vector<ClassId> kEmpty;
  auto it = hom.find({src, dst});
  return it == hom.end() ? kEmpty : it->second;
}

ClassId FiniteCategory::classify(const Path& path) const {
  for (const auto& [key, ids] : hom) {
    if (key.first != path.source()) continue;
    for (ClassId id : ids)
      if (classes[id].cls.contains(path)) return id;
  }
  return kNoClass;
}

ClassId FiniteCategory::compose(ClassId a, ClassId b) const {
  auto it = composition.find({a, b});
  return it == composition.end() ? kNoClass : it->second;
}

namespace {

FiniteCategory build_category(const PrecubicalSet& p,
                              const std::vector<Cube>& objects,
                              std::optional<int> max_len) {
  for (Cube v : objects)
    if (v >= p.size() || p.degree(v) != 0)
      throw Error(ErrorKind::InvalidArgument,
                  "category objects must be vertices");

  FiniteCategory cat;
  cat.objects = objects;
  std::sort(cat.objects.begin(), cat.objects.end(),
            [&](Cube a, Cube b) { return p.name(a) < p.name(b); });
  cat.objects.erase(std::unique(cat.objects.begin(), cat.objects.end()),
                    cat.objects.end());

  ElementaryMoves moves(p);
  std::set<Cube> object_set(cat.objects.begin(), cat.objects.end());

  for (Cube src : cat.objects) {
    auto paths = enumerate_paths(p, src, std::nullopt, max_len);
    // partition per destination object, preserving determinism
    std::map<Cube, std::vector<Path>> by_dst;
    for (Path& path : paths) {
      Cube dst = path.target(p);
      if (object_set.count(dst)) by_dst[dst].push_back(std::move(path));
    }
    for (auto& [dst, group] : by_dst) {
      std::set<Path> remaining(group.begin(), group.end());
      std::vector<DihomotopyClass> classes;
      while (!remaining.empty()) {
        DihomotopyClass cls = dihomotopy_class(p, moves, *remaining.begin());
        for (const Path& m : cls.members) remaining.erase(m);
        classes.push_back(std::move(cls));
      }
      std::sort(classes.begin(), classes.end(),
                [&](const DihomotopyClass& a, const DihomotopyClass& b) {
                  return path_name_less(p, a.representative, b.representative);
                });
      for (DihomotopyClass& cls : classes) {
        ClassId id = static_cast<ClassId>(cat.classes.size());
        if (cls.representative.length() == 0) cat.identity[src] = id;
        cat.hom[{src, dst}].push_back(id);
        cat.classes.push_back({src, dst, std::move(cls)});
      }
    }
  }

  for (ClassId a = 0; a < cat.classes.size(); ++a) {
    for (ClassId b = 0; b < cat.classes.size(); ++b) {
      if (cat.classes[a].dst != cat.classes[b].src) continue;
      Path joined = concat(p, cat.classes[a].cls.representative,
                           cat.classes[b].cls.representative);
      if (max_len && static_cast<int>(joined.length()) > *max_len)
        continue;  // out of the bounded window
      ClassId c = cat.classify(joined);
      if (c == kNoClass)
        throw Error(ErrorKind::Precondition,
                    "composition fell outside the enumerated classes");
      cat.composition[{a, b}] = c;
    }
  }
  return cat;
}

}  // namespace

FiniteCategory fundamental_category(const PrecubicalSet& p,
                                    const std::vector<Cube>& objects) {
  if (!is_acyclic(p))
    throw Error(ErrorKind::CyclicInput,
                "fundamental category requires an acyclic complex");
  return build_category(p, objects, std::nullopt);
}

FiniteCategory fundamental_category_bounded(const PrecubicalSet& p,
                                            const std::vector<Cube>& objects,
                                            int max_len) {
  if (max_len < 0)
    throw Error(ErrorKind::InvalidArgument, "max_len must be nonnegative");
  return build_category(p, objects, max_len);
}

}  // namespace hda
