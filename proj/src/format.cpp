#include "hda/format.hpp"

#include <algorithm>
#include <sstream>

namespace hda {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, end == std::string_view::npos ? std::string_view::npos
                                           : end - pos);
    ++number;
    std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line;
    line.number = number;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      std::size_t start = i;
      while (i < raw.size() &&
             !std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      if (i > start) line.tokens.emplace_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return lines;
}

bool is_name_token(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

int parse_int(const Line& line, const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line.number,
                     std::string("expected ") + what + ", got '" + tok + "'");
  }
}

}  // namespace

HdaDocument parse_hda(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines.front().tokens.front() != "hda")
    throw ParseError(lines.empty() ? 1 : lines.front().number,
                     "missing hda header");

  HdaDocument doc;
  Hda& a = doc.automaton;
  std::map<std::string, int> cube_lines;

  auto resolve = [&](const Line& line, const std::string& name) {
    auto c = a.set.find(name);
    if (!c)
      throw ParseError(line.number, "unknown cube id '" + name + "'");
    return *c;
  };

  bool header = false;
  for (const Line& line : lines) {
    const auto& t = line.tokens;
    const std::string& directive = t.front();

    if (!header) {
      if (directive != "hda" || t.size() != 2 || !is_name_token(t[1]))
        throw ParseError(line.number, "missing hda header");
      doc.name = t[1];
      header = true;
      continue;
    }

    if (directive == "hda") {
      throw ParseError(line.number, "duplicate hda header");
    } else if (directive == "alphabet") {
      if (t.size() < 2)
        throw ParseError(line.number, "alphabet needs at least one symbol");
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (!is_name_token(t[i]))
          throw ParseError(line.number, "bad symbol token '" + t[i] + "'");
        if (a.symbol(t[i]))
          throw ParseError(line.number, "duplicate alphabet symbol '" + t[i] + "'");
        a.alphabet.push_back(t[i]);
      }
    } else if (directive == "cube") {
      if (t.size() < 3)
        throw ParseError(line.number, "cube needs a dimension and ids");
      int dim = parse_int(line, t[1], "a dimension");
      if (dim < 0) throw ParseError(line.number, "negative dimension");
      for (std::size_t i = 2; i < t.size(); ++i) {
        if (!is_name_token(t[i]))
          throw ParseError(line.number, "bad cube id '" + t[i] + "'");
        auto prev = cube_lines.find(t[i]);
        if (prev != cube_lines.end())
          throw ParseError(line.number, "duplicate cube id '" + t[i] +
                                            "' (also declared on line " +
                                            std::to_string(prev->second) +
                                            ")");
        a.set.add_cube(t[i], dim);
        cube_lines[t[i]] = line.number;
      }
    } else if (directive == "face") {
      if (t.size() != 5)
        throw ParseError(line.number, "face needs <id> <i> <k> <faceid>");
      Cube x = resolve(line, t[1]);
      int dir = parse_int(line, t[2], "a direction");
      int side = parse_int(line, t[3], "a side");
      Cube face = resolve(line, t[4]);
      if (side != 0 && side != 1)
        throw ParseError(line.number, "face side must be 0 or 1");
      if (dir < 1 || dir > a.set.degree(x))
        throw ParseError(line.number, "face direction " + t[2] +
                                          " out of range for '" + t[1] + "'");
      a.set.set_face(x, dir, side, face);
    } else if (directive == "label") {
      if (t.size() != 3)
        throw ParseError(line.number, "label needs <edgeid> <word>");
      Cube e = resolve(line, t[1]);
      Word word;
      std::size_t posn = 0;
      const std::string& spelled = t[2];
      while (posn <= spelled.size()) {
        std::size_t dot = spelled.find('.', posn);
        std::string sym = spelled.substr(
            posn, dot == std::string::npos ? dot : dot - posn);
        auto s = a.symbol(sym);
        if (!s)
          throw ParseError(line.number, "unknown symbol '" + sym + "'");
        word.push_back(*s);
        if (dot == std::string::npos) break;
        posn = dot + 1;
      }
      if (a.labels.count(e))
        throw ParseError(line.number, "duplicate label for '" + t[1] + "'");
      a.labels[e] = std::move(word);
    } else if (directive == "initial") {
      if (t.size() != 2) throw ParseError(line.number, "initial needs one id");
      a.initial.insert(resolve(line, t[1]));
    } else if (directive == "final") {
      if (t.size() != 2) throw ParseError(line.number, "final needs one id");
      a.final_states.insert(resolve(line, t[1]));
    } else {
      throw ParseError(line.number, "unknown directive '" + directive + "'");
    }
  }
  return doc;
}

std::string serialize_hda(const HdaDocument& doc) {
  const Hda& a = doc.automaton;
  std::ostringstream os;
  os << "hda " << doc.name << "\n";
  if (!a.alphabet.empty()) {
    os << "alphabet";
    for (const auto& s : a.alphabet) os << " " << s;
    os << "\n";
  }
  for (int d = 0; d <= a.set.dimension(); ++d) {
    if (a.set.cubes(d).empty()) continue;
    os << "cube " << d;
    for (Cube c : a.set.cubes(d)) os << " " << a.set.name(c);
    os << "\n";
  }
  for (int d = 1; d <= a.set.dimension(); ++d) {
    for (Cube c : a.set.cubes(d)) {
      for (int dir = 1; dir <= d; ++dir) {
        for (int side = 0; side <= 1; ++side) {
          Cube f = a.set.face(c, dir, side);
          if (f == kNoCube) continue;
          os << "face " << a.set.name(c) << " " << dir << " " << side << " "
             << a.set.name(f) << "\n";
        }
      }
    }
  }
  for (Cube e : a.set.cubes(1)) {
    auto it = a.labels.find(e);
    if (it == a.labels.end()) continue;
    os << "label " << a.set.name(e) << " ";
    for (std::size_t i = 0; i < it->second.size(); ++i) {
      if (i) os << ".";
      os << a.alphabet.at(static_cast<std::size_t>(it->second[i]));
    }
    os << "\n";
  }
  std::vector<std::string> names;
  for (Cube v : a.initial) names.push_back(a.set.name(v));
  std::sort(names.begin(), names.end());
  for (const auto& n : names) os << "initial " << n << "\n";
  names.clear();
  for (Cube v : a.final_states) names.push_back(a.set.name(v));
  std::sort(names.begin(), names.end());
  for (const auto& n : names) os << "final " << n << "\n";
  return os.str();
}

WmDocument parse_wm(std::string_view text,
                    const std::map<std::string, HdaDocument>& automata,
                    const std::map<std::string, WmDocument>& morphisms) {
  auto lines = tokenize(text);
  if (lines.empty() || lines.front().tokens.front() != "weakmor")
    throw ParseError(lines.empty() ? 1 : lines.front().number,
                     "missing weakmor header");
  const Line& head = lines.front();
  if (head.tokens.size() != 4)
    throw ParseError(head.number, "weakmor needs <name> <source> <target>");

  std::string name = head.tokens[1];
  std::string source_name = head.tokens[2];
  std::string target_name = head.tokens[3];
  std::vector<std::string> compose_names;
  if (!is_name_token(name))
    throw ParseError(head.number, "bad morphism name '" + name + "'");

  auto source_doc = automata.find(source_name);
  auto target_doc = automata.find(target_name);
  if (source_doc == automata.end())
    throw ParseError(head.number,
                     "unknown automaton '" + source_name + "'");
  if (target_doc == automata.end())
    throw ParseError(head.number,
                     "unknown automaton '" + target_name + "'");
  const PrecubicalSet& src = source_doc->second.automaton.set;
  const PrecubicalSet& tgt = target_doc->second.automaton.set;

  // collected raw content
  std::map<Cube, Cube> realization;
  SubdivisionData data;
  bool has_map = false, has_sub = false, has_compose = false;
  int mixed_line = 0;

  auto resolve = [](const Line& line, const PrecubicalSet& p,
                    const std::string& name) {
    auto c = p.find(name);
    if (!c)
      throw ParseError(line.number, "unknown cube id '" + name + "'");
    return *c;
  };

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const auto& t = line.tokens;
    const std::string& directive = t.front();

    if (directive == "map") {
      if (t.size() != 3)
        throw ParseError(line.number, "map needs <srcId> <tgtId>");
      has_map = true;
      mixed_line = line.number;
      Cube x = resolve(line, src, t[1]);
      Cube y = resolve(line, tgt, t[2]);
      if (realization.count(x))
        throw ParseError(line.number, "duplicate map entry for '" + t[1] + "'");
      realization[x] = y;
    } else if (directive == "vertex") {
      if (t.size() != 3)
        throw ParseError(line.number, "vertex needs <v> <v'>");
      has_sub = true;
      mixed_line = line.number;
      Cube v = resolve(line, src, t[1]);
      Cube w = resolve(line, tgt, t[2]);
      if (data.vertex_map.count(v))
        throw ParseError(line.number,
                         "duplicate vertex entry for '" + t[1] + "'");
      data.vertex_map[v] = w;
    } else if (directive == "cube") {
      if (t.size() < 4 || t[2] != "k")
        throw ParseError(line.number, "cube needs <x> k <k1> ... <kn>");
      has_sub = true;
      mixed_line = line.number;
      Cube x = resolve(line, src, t[1]);
      std::vector<int> ks;
      for (std::size_t i = 3; i < t.size(); ++i) {
        int k = parse_int(line, t[i], "an edge count");
        if (k < 1)
          throw ParseError(line.number, "edge counts must be at least 1");
        ks.push_back(k);
      }
      if (static_cast<int>(ks.size()) != src.degree(x))
        throw ParseError(line.number, "subdivision of '" + t[1] + "' needs " +
                                          std::to_string(src.degree(x)) +
                                          " edge counts");
      if (data.cubes.count(x))
        throw ParseError(line.number,
                         "duplicate cube entry for '" + t[1] + "'");
      data.cubes.emplace(x, SubdivisionData::make_cube_data(std::move(ks)));
    } else if (directive == "cell") {
      if (t.size() != 4)
        throw ParseError(line.number, "cell needs <x> <address> <targetId>");
      has_sub = true;
      mixed_line = line.number;
      Cube x = resolve(line, src, t[1]);
      auto it = data.cubes.find(x);
      if (it == data.cubes.end())
        throw ParseError(line.number, "cell before the cube line for '" +
                                          t[1] + "'");
      GridCell cell;
      try {
        cell = parse_grid_address(t[2]);
      } catch (const Error& e) {
        throw ParseError(line.number, e.what());
      }
      if (!grid_cell_in_bounds(cell, it->second.ks))
        throw ParseError(line.number, "cell address '" + t[2] +
                                          "' is outside the grid of '" +
                                          t[1] + "'");
      Cube target_cube = resolve(line, tgt, t[3]);
      Cube gc = it->second.cell_grid.require(cell.token_name());
      if (it->second.cell_to_target[gc] != kNoCube)
        throw ParseError(line.number, "duplicate cell entry '" + t[2] +
                                          "' for '" + t[1] + "'");
      it->second.cell_to_target[gc] = target_cube;
    } else if (directive == "compose") {
      if (t.size() < 2)
        throw ParseError(line.number, "compose needs morphism names");
      if (has_compose)
        throw ParseError(line.number, "duplicate compose line");
      has_compose = true;
      mixed_line = line.number;
      for (std::size_t i = 1; i < t.size(); ++i)
        compose_names.push_back(t[i]);
    } else {
      throw ParseError(line.number, "unknown directive '" + directive + "'");
    }
  }

  if (has_map + has_sub + has_compose > 1)
    throw ParseError(mixed_line, "mixed morphism kinds in one document");

  if (has_compose) {
    CellularWeakMorphism built = [&] {
      std::vector<const WmDocument*> parts;
      for (const auto& n : compose_names) {
        auto it = morphisms.find(n);
        if (it == morphisms.end())
          throw ParseError(head.number, "unknown morphism '" + n + "'");
        parts.push_back(&it->second);
      }
      CellularWeakMorphism acc = parts.front()->morphism;
      for (std::size_t i = 1; i < parts.size(); ++i)
        acc = CellularWeakMorphism::compose(acc, parts[i]->morphism);
      return acc;
    }();
    if (built.source() != src)
      throw ParseError(head.number,
                       "composite source does not match '" + source_name +
                           "'");
    if (built.target() != tgt)
      throw ParseError(head.number,
                       "composite target does not match '" + target_name +
                           "'");
    return WmDocument{std::move(name), std::move(source_name),
                      std::move(target_name), std::move(built),
                      std::move(compose_names)};
  }

  if (has_map) {
    PrecubicalMorphism f;
    f.source = src;
    f.target = tgt;
    f.map.assign(src.size(), kNoCube);
    for (const auto& [x, y] : realization) f.map[x] = y;
    return WmDocument{std::move(name), std::move(source_name),
                      std::move(target_name),
                      CellularWeakMorphism::from_morphism(f),
                      {}};
  }

  return WmDocument{std::move(name), std::move(source_name),
                    std::move(target_name),
                    CellularWeakMorphism::make_subdivision(src, tgt, data),
                    {}};
}

std::string serialize_wm(const WmDocument& doc) {
  std::ostringstream os;
  os << "weakmor " << doc.name << " " << doc.source_name << " "
     << doc.target_name << "\n";

  if (!doc.compose_names.empty()) {
    os << "compose";
    for (const auto& n : doc.compose_names) os << " " << n;
    os << "\n";
    return os.str();
  }

  const auto& stage = doc.morphism.stages().front();
  const PrecubicalSet& src = *stage.source;
  const PrecubicalSet& tgt = *stage.target;

  if (stage.kind == CellularWeakMorphism::Stage::Kind::Realization) {
    for (Cube x : src.all_cubes())
      os << "map " << src.name(x) << " " << tgt.name(stage.realization[x])
         << "\n";
    return os.str();
  }

  const SubdivisionData& data = stage.subdivision;
  for (Cube v : src.cubes(0)) {
    auto it = data.vertex_map.find(v);
    if (it != data.vertex_map.end())
      os << "vertex " << src.name(v) << " " << tgt.name(it->second) << "\n";
  }
  for (Cube x : src.all_cubes()) {
    auto it = data.cubes.find(x);
    if (it == data.cubes.end()) continue;
    os << "cube " << src.name(x) << " k";
    for (int k : it->second.ks) os << " " << k;
    os << "\n";
    for (const GridCell& cell : grid_cells(it->second.ks)) {
      Cube t = it->second
                   .cell_to_target[it->second.cell_grid.require(
                       cell.token_name())];
      if (t == kNoCube) continue;
      os << "cell " << src.name(x) << " " << cell.address() << " "
         << tgt.name(t) << "\n";
    }
  }
  return os.str();
}

}  // namespace hda
