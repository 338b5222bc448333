#include "hda/hda.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <sstream>

namespace hda {

std::optional<Symbol> Hda::symbol(const std::string& name) const {
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] == name) return static_cast<Symbol>(i);
  return std::nullopt;
}

const Word& Hda::label(Cube edge) const {
  auto it = labels.find(edge);
  if (it == labels.end())
    throw Error(ErrorKind::InvalidArgument,
                "no label on " + set.name(edge));
  return it->second;
}

std::string Hda::word_text(const Word& w) const {
  if (w.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += alphabet.at(static_cast<std::size_t>(w[i]));
  }
  return out;
}

ValidationReport validate_hda(const Hda& a) {
  ValidationReport report = validate_precubical(a.set);

  std::set<std::string> seen;
  for (const auto& sym : a.alphabet) {
    if (sym.empty()) report.add("empty alphabet symbol");
    if (!seen.insert(sym).second) report.add("duplicate alphabet symbol: " + sym);
  }

  for (Cube v : a.initial)
    if (v >= a.set.size() || a.set.degree(v) != 0)
      report.add("initial state is not a vertex");
  for (Cube v : a.final_states)
    if (v >= a.set.size() || a.set.degree(v) != 0)
      report.add("final state is not a vertex");

  for (const auto& [c, w] : a.labels) {
    if (c >= a.set.size() || a.set.degree(c) != 1) {
      report.add("label on a non-edge cube");
      continue;
    }
    if (w.empty()) report.add("empty label on " + a.set.name(c));
    for (Symbol s : w)
      if (s < 0 || static_cast<std::size_t>(s) >= a.alphabet.size())
        report.add("label symbol out of alphabet on " + a.set.name(c));
  }
  for (Cube e : a.set.cubes(1))
    if (!a.labels.count(e)) report.add("unlabelled edge " + a.set.name(e));

  // square condition: opposite edges of a 2-cube carry equal labels
  for (Cube z : a.set.cubes(2)) {
    for (int i = 1; i <= 2; ++i) {
      Cube e0 = a.set.face(z, i, 0);
      Cube e1 = a.set.face(z, i, 1);
      if (e0 == kNoCube || e1 == kNoCube) continue;
      auto l0 = a.labels.find(e0);
      auto l1 = a.labels.find(e1);
      if (l0 == a.labels.end() || l1 == a.labels.end()) continue;
      if (l0->second != l1->second) {
        std::ostringstream os;
        os << "square condition fails at (" << a.set.name(z) << ", i=" << i
           << "): " << a.set.name(e0) << " has " << a.word_text(l0->second)
           << " but " << a.set.name(e1) << " has " << a.word_text(l1->second);
        report.add(os.str());
      }
    }
  }
  return report;
}

Word extended_label(const Hda& a, const Path& path) {
  Word out;
  for (Cube e : path.edges) {
    const Word& w = a.label(e);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

std::set<Word> language(const Hda& a, std::optional<int> max_len) {
  std::set<Word> out;
  for (Cube i : a.initial) {
    for (const Path& path : enumerate_paths(a.set, i, std::nullopt, max_len))
      if (a.final_states.count(path.target(a.set)))
        out.insert(extended_label(a, path));
  }
  return out;
}

bool is_accessible(const Hda& a) {
  std::vector<bool> reached(a.set.size(), false);
  std::deque<Cube> queue;
  for (Cube i : a.initial) {
    if (i < a.set.size() && !reached[i]) {
      reached[i] = true;
      queue.push_back(i);
    }
  }
  std::vector<std::vector<Cube>> out(a.set.size());
  for (Cube e : a.set.cubes(1)) {
    Cube s = a.set.face(e, 1, 0);
    Cube t = a.set.face(e, 1, 1);
    if (s != kNoCube && t != kNoCube) out[s].push_back(t);
  }
  while (!queue.empty()) {
    Cube v = queue.front();
    queue.pop_front();
    for (Cube w : out[v]) {
      if (!reached[w]) {
        reached[w] = true;
        queue.push_back(w);
      }
    }
  }
  for (Cube v : a.set.cubes(0))
    if (!reached[v]) return false;
  return true;
}

bool is_deterministic(const Hda& a, std::optional<int> max_len) {
  if (a.initial.size() != 1) return false;
  for (Cube v : a.set.cubes(0)) {
    auto paths = enumerate_paths(a.set, v, std::nullopt, max_len);
    std::set<Word> seen;
    for (const Path& path : paths)
      if (!seen.insert(extended_label(a, path)).second) return false;
  }
  return true;
}

namespace {

bool all_labels_single(const Hda& a) {
  for (const auto& [c, w] : a.labels)
    if (w.size() != 1) return false;
  return true;
}

std::vector<Word> edge_label_words(const Hda& a) {
  std::set<Word> labels;
  for (Cube e : a.set.cubes(1)) labels.insert(a.label(e));
  return {labels.begin(), labels.end()};
}

// occurrences of factor f in w
std::vector<std::size_t> factor_positions(const Word& w, const Word& f) {
  std::vector<std::size_t> out;
  if (f.empty() || f.size() > w.size()) return out;
  for (std::size_t i = 0; i + f.size() <= w.size(); ++i)
    if (std::equal(f.begin(), f.end(), w.begin() + i)) out.push_back(i);
  return out;
}

// Shared worker: checks condition (3) for the pair (u, v) and
// reports whether any witnessing occurrence exists at all (for the
// vacuousness flag).  Requires u != v, both edge labels.
bool condition3(const Hda& a, const Word& u, const Word& v, bool* occurred) {
  if (occurred) *occurred = false;

  if (all_labels_single(a)) {
    // 2-cube scan: every consecutive edge pair labelled {u, v} must
    // bound a 2-cube in one of the two compatible ways
    for (Cube x1 : a.set.cubes(1)) {
      Cube mid = a.set.face(x1, 1, 1);
      if (mid == kNoCube) continue;
      for (Cube x2 : a.set.cubes(1)) {
        if (a.set.face(x2, 1, 0) != mid) continue;
        const Word& l1 = a.label(x1);
        const Word& l2 = a.label(x2);
        if (!((l1 == u && l2 == v) || (l1 == v && l2 == u))) continue;
        if (occurred) *occurred = true;
        bool witnessed = false;
        for (Cube z : a.set.cubes(2)) {
          if ((a.set.face(z, 1, 0) == x1 && a.set.face(z, 2, 1) == x2) ||
              (a.set.face(z, 2, 0) == x1 && a.set.face(z, 1, 1) == x2)) {
            witnessed = true;
            break;
          }
        }
        if (!witnessed) return false;
      }
    }
    return true;
  }

  if (!is_acyclic(a.set))
    throw Error(ErrorKind::UnsupportedInput,
                "independence on a cyclic complex needs single-symbol labels");

  ElementaryMoves moves(a.set);
  // label sets of dihomotopy classes, shared between class members
  std::map<Path, std::shared_ptr<std::set<Word>>> cache;
  auto class_labels = [&](const Path& path) {
    auto it = cache.find(path);
    if (it != cache.end()) return it->second;
    DihomotopyClass cls = dihomotopy_class(a.set, moves, path);
    auto words = std::make_shared<std::set<Word>>();
    for (const Path& m : cls.members) words->insert(extended_label(a, m));
    for (const Path& m : cls.members) cache[m] = words;
    return words;
  };

  Word uv = u, vu = v;
  uv.insert(uv.end(), v.begin(), v.end());
  vu.insert(vu.end(), u.begin(), u.end());

  for (const Path& path : enumerate_all_paths(a.set, std::nullopt)) {
    Word w = extended_label(a, path);
    for (const auto& [fwd, rev] : {std::pair{uv, vu}, std::pair{vu, uv}}) {
      for (std::size_t i : factor_positions(w, fwd)) {
        if (occurred) *occurred = true;
        Word swapped = w;
        std::copy(rev.begin(), rev.end(), swapped.begin() + i);
        if (swapped == w) continue;  // the path itself witnesses
        if (!class_labels(path)->count(swapped)) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool independent(const Hda& a, const Word& u, const Word& v) {
  if (u == v) return false;
  std::set<Word> labels;
  for (Cube e : a.set.cubes(1)) labels.insert(a.label(e));
  if (!labels.count(u) || !labels.count(v)) return false;
  return condition3(a, u, v, nullptr);
}

bool IndependenceRelation::contains(const Word& u, const Word& v) const {
  return pairs.count(u <= v ? std::pair{u, v} : std::pair{v, u}) != 0;
}

IndependenceRelation independence_relation(const Hda& a) {
  IndependenceRelation rel;
  auto labels = edge_label_words(a);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      bool occurred = false;
      if (condition3(a, labels[i], labels[j], &occurred)) {
        rel.pairs.insert({labels[i], labels[j]});
        if (!occurred) rel.vacuous.insert({labels[i], labels[j]});
      }
    }
  }
  return rel;
}

std::set<Word> congruence_class(const IndependenceRelation& rel,
                                const Word& w) {
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word cur = queue.front();
    queue.pop_front();
    for (const auto& [u, v] : rel.pairs) {
      for (const auto& [fwd, rev] :
           {std::pair{std::pair{u, v}, std::pair{v, u}},
            std::pair{std::pair{v, u}, std::pair{u, v}}}) {
        Word factor = fwd.first;
        factor.insert(factor.end(), fwd.second.begin(), fwd.second.end());
        Word repl = rev.first;
        repl.insert(repl.end(), rev.second.begin(), rev.second.end());
        for (std::size_t i : factor_positions(cur, factor)) {
          Word next = cur;
          std::copy(repl.begin(), repl.end(), next.begin() + i);
          if (seen.insert(next).second) queue.push_back(next);
        }
      }
    }
  }
  return seen;
}

bool congruent(const IndependenceRelation& rel, const Word& u, const Word& v) {
  if (u == v) return true;
  if (u.size() != v.size()) return false;
  return congruence_class(rel, u).count(v) != 0;
}

bool congruent(const Hda& a, const Word& u, const Word& v) {
  return congruent(independence_relation(a), u, v);
}

std::vector<TraceClass> trace_language(const Hda& a,
                                       std::optional<int> max_len) {
  auto lang = language(a, max_len);
  auto rel = independence_relation(a);
  std::vector<TraceClass> out;
  std::set<Word> remaining = lang;
  while (!remaining.empty()) {
    TraceClass tc;
    tc.members = congruence_class(rel, *remaining.begin());
    tc.representative = *tc.members.begin();
    for (const Word& m : tc.members) remaining.erase(m);
    out.push_back(std::move(tc));
  }
  std::sort(out.begin(), out.end(),
            [](const TraceClass& x, const TraceClass& y) {
              return x.representative < y.representative;
            });
  return out;
}

bool is_stable(const Hda& a) {
  auto rel = independence_relation(a);
  for (Cube z : a.set.cubes(2)) {
    Cube e1 = a.set.face(z, 1, 0);
    Cube e2 = a.set.face(z, 2, 0);
    if (e1 == kNoCube || e2 == kNoCube)
      throw Error(ErrorKind::Precondition,
                  "stability check needs a complete boundary table");
    const Word& p = a.label(e1);
    const Word& q = a.label(e2);
    if (p == q) continue;
    if (!rel.contains(p, q)) return false;
  }
  return true;
}

std::vector<Cube> trace_objects(const Hda& a) {
  auto [minimal, maximal] = extremal_vertices(a.set);
  std::set<Cube> objs(a.initial.begin(), a.initial.end());
  objs.insert(a.final_states.begin(), a.final_states.end());
  objs.insert(minimal.begin(), minimal.end());
  objs.insert(maximal.begin(), maximal.end());
  std::vector<Cube> out(objs.begin(), objs.end());
  std::sort(out.begin(), out.end(), [&](Cube x, Cube y) {
    return a.set.name(x) < a.set.name(y);
  });
  return out;
}

FiniteCategory trace_category(const Hda& a) {
  return fundamental_category(a.set, trace_objects(a));
}

Hda subdivided_cube_hda(const std::vector<int>& ks) {
  if (ks.empty())
    throw Error(ErrorKind::InvalidArgument,
                "subdivided cube needs at least one axis");
  for (int k : ks)
    if (k < 1)
      throw Error(ErrorKind::InvalidArgument,
                  "subdivided cube needs positive edge counts");
  Hda a;
  a.set = grid(ks);
  for (std::size_t p = 0; p < ks.size(); ++p)
    a.alphabet.push_back("l" + std::to_string(p + 1));

  for (const GridCell& cell : grid_cells(ks)) {
    if (cell.degree() != 1) continue;
    for (std::size_t axis = 0; axis < cell.comps.size(); ++axis) {
      if (cell.comps[axis].edge) {
        a.labels[a.set.require(cell.token_name())] =
            Word{static_cast<Symbol>(axis)};
        break;
      }
    }
  }

  GridCell lo, hi;
  for (int k : ks) {
    lo.comps.push_back({0, false});
    hi.comps.push_back({k, false});
  }
  a.initial.insert(a.set.require(lo.token_name()));
  a.final_states.insert(a.set.require(hi.token_name()));
  return a;
}

}  // namespace hda
