#include "hda/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hda/carrier.hpp"
#include "hda/common.hpp"
#include "hda/format.hpp"
#include "hda/hda.hpp"
#include "hda/paths.hpp"
#include "hda/precubical.hpp"
#include "hda/relations.hpp"
#include "hda/weakmor.hpp"

namespace hda::cli {
namespace {

// Internal control flow: message plus the process exit code.
struct CliFailure {
  int code;
  std::string message;
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{2, "cannot read file: " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Files loaded for one invocation.  Automata are loaded (and
// validated) before morphism documents so that the latter can
// resolve source/target names and compose chains.
struct Workspace {
  std::vector<std::string> hda_names;  // document names, listing order
  std::vector<std::string> wm_names;
  std::map<std::string, HdaDocument> automata;
  std::map<std::string, WmDocument> morphisms;
};

Workspace load_workspace(const std::vector<std::string>& files) {
  Workspace ws;
  std::vector<std::string> wm_files;
  for (const auto& path : files) {
    if (ends_with(path, ".hda")) {
      std::string text = read_file(path);
      HdaDocument doc;
      try {
        doc = parse_hda(text);
      } catch (const ParseError& e) {
        throw CliFailure{2, path + ": " + e.what()};
      }
      ValidationReport report = validate_hda(doc.automaton);
      if (!report.ok())
        throw CliFailure{2, path + ": invalid automaton\n" + report.to_string()};
      auto known = ws.automata.find(doc.name);
      if (known != ws.automata.end()) {
        // Listing the same document twice (e.g. relating an
        // automaton to itself) is fine; a name clash between
        // different documents is not.
        if (serialize_hda(known->second) != serialize_hda(doc))
          throw CliFailure{2, path + ": duplicate automaton name '" +
                                  doc.name + "'"};
        ws.hda_names.push_back(doc.name);
      } else {
        ws.hda_names.push_back(doc.name);
        ws.automata.emplace(doc.name, std::move(doc));
      }
    } else if (ends_with(path, ".wm")) {
      wm_files.push_back(path);
    } else {
      throw CliFailure{2, path + ": expected a .hda or .wm file"};
    }
  }
  for (const auto& path : wm_files) {
    std::string text = read_file(path);
    try {
      WmDocument doc = parse_wm(text, ws.automata, ws.morphisms);
      if (ws.morphisms.count(doc.name))
        throw CliFailure{2, path + ": duplicate morphism name '" + doc.name + "'"};
      ws.wm_names.push_back(doc.name);
      ws.morphisms.emplace(doc.name, std::move(doc));
    } catch (const ParseError& e) {
      throw CliFailure{2, path + ": " + e.what()};
    } catch (const Error& e) {
      // Factory validation failed: the document parses but does not
      // describe a weak morphism.  That is a failed property, not a
      // usage error.
      throw CliFailure{1, path + ": invalid weak morphism\n" + e.what()};
    }
  }
  return ws;
}

const Hda& single_automaton(const Workspace& ws) {
  if (ws.hda_names.size() != 1 || !ws.wm_names.empty())
    throw CliFailure{2, "expected exactly one .hda file"};
  return ws.automata.at(ws.hda_names.front()).automaton;
}

// The witness morphism: the top-level .wm documents composed left to
// right.  A document referenced by a listed compose document is only
// context, so a chain can be given either as several plain documents
// or as its factors plus one compose document.
CellularWeakMorphism witness_morphism(const Workspace& ws) {
  std::set<std::string> referenced;
  for (const auto& name : ws.wm_names)
    for (const auto& factor : ws.morphisms.at(name).compose_names)
      referenced.insert(factor);
  std::vector<std::string> top;
  for (const auto& name : ws.wm_names)
    if (!referenced.count(name)) top.push_back(name);
  if (top.empty()) throw CliFailure{2, "expected a .wm witness file"};
  CellularWeakMorphism acc = ws.morphisms.at(top.front()).morphism;
  for (std::size_t i = 1; i < top.size(); ++i)
    acc = CellularWeakMorphism::compose(acc, ws.morphisms.at(top[i]).morphism);
  return acc;
}

std::pair<const Hda*, const Hda*> source_and_target(const Workspace& ws) {
  if (ws.hda_names.size() < 2)
    throw CliFailure{2, "expected at least two .hda files (source, target)"};
  return {&ws.automata.at(ws.hda_names[0]).automaton,
          &ws.automata.at(ws.hda_names[1]).automaton};
}

// A path given on the command line: comma-separated edge names, or a
// single vertex name for the empty path at that vertex.
Path parse_path_spec(const PrecubicalSet& p, const std::string& spec) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : spec) {
    if (ch == ',') {
      if (!cur.empty()) tokens.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  if (tokens.empty()) throw CliFailure{2, "empty --path"};

  if (tokens.size() == 1) {
    auto c = p.find(tokens.front());
    if (c && p.degree(*c) == 0) return make_path(p, *c, {});
  }
  std::vector<Cube> edges;
  for (const auto& tok : tokens) {
    auto c = p.find(tok);
    if (!c) throw CliFailure{2, "unknown cube '" + tok + "' in --path"};
    edges.push_back(*c);
  }
  Cube base = p.face(edges.front(), 1, 0);
  if (base == kNoCube)
    throw CliFailure{2, "edge '" + p.name(edges.front()) + "' has no source"};
  return make_path(p, base, std::move(edges));
}

std::string path_text(const PrecubicalSet& p, const Path& path) {
  if (path.edges.empty()) return "(empty at " + p.name(path.base) + ")";
  std::string s;
  for (Cube e : path.edges) {
    if (!s.empty()) s += ' ';
    s += p.name(e);
  }
  return s;
}

void print_report(std::ostream& out, const ValidationReport& report) {
  for (const auto& v : report.violations) out << "  " << v << "\n";
}

int cmd_validate(const std::vector<std::string>& files, std::ostream& out) {
  // Unlike the other commands, semantic failures are reported file
  // by file instead of aborting the load.
  std::map<std::string, HdaDocument> automata;
  std::map<std::string, WmDocument> morphisms;
  bool all_ok = true;
  std::vector<std::string> wm_files;
  for (const auto& path : files) {
    if (ends_with(path, ".hda")) {
      std::string text = read_file(path);
      HdaDocument doc;
      try {
        doc = parse_hda(text);
      } catch (const ParseError& e) {
        throw CliFailure{2, path + ": " + e.what()};
      }
      ValidationReport report = validate_hda(doc.automaton);
      if (report.ok()) {
        out << path << ": OK\n";
      } else {
        all_ok = false;
        out << path << ": INVALID\n";
        print_report(out, report);
      }
      automata.emplace(doc.name, std::move(doc));
    } else if (ends_with(path, ".wm")) {
      wm_files.push_back(path);
    } else {
      throw CliFailure{2, path + ": expected a .hda or .wm file"};
    }
  }
  for (const auto& path : wm_files) {
    std::string text = read_file(path);
    try {
      WmDocument doc = parse_wm(text, automata, morphisms);
      const char* kind = "composite";
      if (doc.morphism.kind() == CellularWeakMorphism::Kind::Realization)
        kind = "realization";
      else if (doc.morphism.kind() == CellularWeakMorphism::Kind::Subdivision)
        kind = "subdivision";
      out << path << ": OK (" << kind << ", " << doc.morphism.stages().size()
          << (doc.morphism.stages().size() == 1 ? " stage)" : " stages)")
          << "\n";
      morphisms.emplace(doc.name, std::move(doc));
    } catch (const ParseError& e) {
      throw CliFailure{2, path + ": " + e.what()};
    } catch (const Error& e) {
      all_ok = false;
      out << path << ": INVALID\n";
      std::istringstream lines(e.what());
      std::string line;
      while (std::getline(lines, line))
        if (!line.empty()) out << "  " << line << "\n";
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_info(const Workspace& ws, std::ostream& out) {
  if (ws.hda_names.size() != 1 || !ws.wm_names.empty())
    throw CliFailure{2, "expected exactly one .hda file"};
  const auto& doc = ws.automata.at(ws.hda_names.front());
  const Hda& a = doc.automaton;
  out << "name: " << doc.name << "\n";
  out << "alphabet:";
  for (const auto& s : a.alphabet) out << " " << s;
  out << "\n";
  out << "dimension: " << a.set.dimension() << "\n";
  for (int d = 0; d <= a.set.dimension(); ++d)
    out << "cubes[" << d << "]: " << a.set.cubes(d).size() << "\n";
  out << "initial:";
  for (Cube v : a.initial) out << " " << a.set.name(v);
  out << "\n";
  out << "final:";
  for (Cube v : a.final_states) out << " " << a.set.name(v);
  out << "\n";
  return 0;
}

int cmd_language(const Hda& a, std::optional<int> max_len, std::ostream& out) {
  for (const Word& w : language(a, max_len)) out << a.word_text(w) << "\n";
  return 0;
}

int cmd_trace_language(const Hda& a, std::optional<int> max_len,
                       std::ostream& out) {
  for (const TraceClass& c : trace_language(a, max_len)) {
    out << a.word_text(c.representative) << ":";
    for (const Word& w : c.members) out << " " << a.word_text(w);
    out << "\n";
  }
  return 0;
}

int cmd_independence(const Hda& a, std::ostream& out) {
  IndependenceRelation rel = independence_relation(a);
  for (const auto& [u, v] : rel.pairs) {
    out << a.word_text(u) << " ~ " << a.word_text(v);
    if (rel.vacuous.count({u, v})) out << "  [vacuous]";
    out << "\n";
  }
  return 0;
}

int cmd_check(const Hda& a, const std::string& property,
              std::optional<int> max_len, std::ostream& out) {
  bool holds = false;
  if (property == "stable") {
    holds = is_stable(a);
  } else if (property == "deterministic") {
    holds = is_deterministic(a, max_len);
  } else if (property == "accessible") {
    holds = is_accessible(a);
  } else if (property == "acyclic") {
    holds = is_acyclic(a.set);
  } else if (property == "weakly-regular") {
    holds = is_weakly_regular(a.set);
  } else if (property == "regular") {
    holds = is_regular(a.set);
  } else {
    throw CliFailure{2, "unknown property '" + property +
                            "' (stable, deterministic, accessible, acyclic, "
                            "weakly-regular, regular)"};
  }
  out << property << ": " << (holds ? "YES" : "NO") << "\n";
  return holds ? 0 : 1;
}

int cmd_dihomotopic(const Hda& a, const std::vector<std::string>& specs,
                    std::ostream& out) {
  if (specs.size() != 2)
    throw CliFailure{2, "need exactly two --path arguments"};
  Path p1 = parse_path_spec(a.set, specs[0]);
  Path p2 = parse_path_spec(a.set, specs[1]);
  bool holds = dihomotopic(a.set, p1, p2);
  out << "dihomotopic: " << (holds ? "YES" : "NO") << "\n";
  return holds ? 0 : 1;
}

void write_dot(const Hda& a, const FiniteCategory& cat, std::ostream& os) {
  os << "digraph trace_category {\n";
  os << "  rankdir=LR;\n";
  for (Cube v : cat.objects) os << "  \"" << a.set.name(v) << "\";\n";
  for (Cube src : cat.objects)
    for (Cube dst : cat.objects)
      for (ClassId id : cat.hom_set(src, dst)) {
        const auto& entry = cat.classes[id];
        os << "  \"" << a.set.name(src) << "\" -> \"" << a.set.name(dst)
           << "\" [label=\""
           << a.word_text(extended_label(a, entry.cls.representative))
           << "\"];\n";
      }
  os << "}\n";
}

int cmd_trace_category(const Hda& a, const std::string& dot_path,
                       std::ostream& out) {
  FiniteCategory cat = trace_category(a);
  out << "objects:";
  for (Cube v : cat.objects) out << " " << a.set.name(v);
  out << "\n";
  for (Cube src : cat.objects)
    for (Cube dst : cat.objects) {
      const auto& hom = cat.hom_set(src, dst);
      if (!hom.empty())
        out << "hom " << a.set.name(src) << " " << a.set.name(dst) << ": "
            << hom.size() << "\n";
    }
  out << "classes: " << cat.classes.size() << "\n";
  if (!dot_path.empty()) {
    if (dot_path == "-") {
      write_dot(a, cat, out);
    } else {
      std::ofstream os(dot_path, std::ios::binary);
      if (!os) throw CliFailure{2, "cannot write file: " + dot_path};
      write_dot(a, cat, os);
    }
  }
  return 0;
}

int cmd_gen_grid(const std::vector<int>& ks, std::ostream& out) {
  HdaDocument doc;
  std::string name = "grid";
  for (std::size_t i = 0; i < ks.size(); ++i)
    name += (i == 0 ? "_" : "x") + std::to_string(ks[i]);
  doc.name = name;
  doc.automaton = subdivided_cube_hda(ks);
  out << serialize_hda(doc);
  return 0;
}

int cmd_wm_map_path(const Workspace& ws, const std::string& spec,
                    std::ostream& out) {
  CellularWeakMorphism f = witness_morphism(ws);
  Path path = parse_path_spec(f.source(), spec);
  Path image = f.map_path(path);
  out << "mapped path: " << path_text(f.target(), image) << "\n";
  return 0;
}

int cmd_relate(const Workspace& ws, const std::string& relation,
               std::ostream& out) {
  auto [a, b] = source_and_target(ws);
  CellularWeakMorphism f = witness_morphism(ws);
  ValidationReport why;
  bool holds = false;
  std::string label;
  if (relation == "weak") {
    label = "weak HDA morphism";
    holds = is_weak_hda_morphism(f, *a, *b, &why);
  } else if (relation == "subdivision") {
    label = "subdivision of HDAs";
    holds = is_subdivision_hda(f, *a, *b, &why);
  } else if (relation == "homeo") {
    label = "homeomorphic abstraction";
    holds = check_homeomorphic_abstraction(*a, *b, f, &why);
  } else if (relation == "trace-equiv") {
    label = "trace equivalent abstraction";
    holds = check_trace_equivalence(*a, *b, f, &why);
  } else {
    throw CliFailure{2, "unknown relation '" + relation +
                            "' (weak, subdivision, homeo, trace-equiv)"};
  }
  out << label << ": " << (holds ? "YES" : "NO") << "\n";
  if (!holds) print_report(out, why);
  return holds ? 0 : 1;
}

int cmd_theorem(const Workspace& ws, std::ostream& out) {
  auto [a, b] = source_and_target(ws);
  CellularWeakMorphism f = witness_morphism(ws);
  TheoremOutcome o = theorem_homeo_implies_trace(*a, *b, f);
  out << "hypotheses hold: " << (o.hypotheses_hold ? "YES" : "NO") << "\n";
  for (const auto& n : o.notes) out << "  " << n << "\n";
  if (!o.hypotheses_hold) return 1;
  if (!o.applicable) return 1;
  out << "conclusion holds: " << (o.conclusion_holds ? "YES" : "NO") << "\n";
  if (!o.conclusion_holds) {
    out << "theorem violated: internal defect\n";
    return 3;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Combinatorial analyses of higher-dimensional automata"};
  app.name("hda");
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::vector<std::string> path_specs;
  std::vector<int> grid_ks;
  std::string property;
  std::string relation;
  std::string dot_path;
  int max_len_value = -1;

  auto* c_validate = app.add_subcommand("validate", "Validate documents");
  c_validate->add_option("files", files, ".hda and .wm files")->required();

  auto* c_info = app.add_subcommand("info", "Summarize an automaton");
  c_info->add_option("file", files, ".hda file")->required();

  auto* c_language = app.add_subcommand("language", "Accepted label words");
  c_language->add_option("file", files, ".hda file")->required();
  c_language->add_option("--max-len", max_len_value, "path length bound");

  auto* c_trace_language =
      app.add_subcommand("trace-language", "Trace classes of the language");
  c_trace_language->add_option("file", files, ".hda file")->required();
  c_trace_language->add_option("--max-len", max_len_value, "path length bound");

  auto* c_independence =
      app.add_subcommand("independence", "Independent label pairs");
  c_independence->add_option("file", files, ".hda file")->required();

  auto* c_check = app.add_subcommand("check", "Check one property");
  c_check
      ->add_option("property", property,
                   "stable | deterministic | accessible | acyclic | "
                   "weakly-regular | regular")
      ->required();
  c_check->add_option("file", files, ".hda file")->required();
  c_check->add_option("--max-len", max_len_value, "path length bound");

  auto* c_dihomotopic =
      app.add_subcommand("dihomotopic", "Compare two paths");
  c_dihomotopic->add_option("file", files, ".hda file")->required();
  c_dihomotopic
      ->add_option("--path", path_specs,
                   "comma-separated edge names, or one vertex name")
      ->required();

  auto* c_trace_category =
      app.add_subcommand("trace-category", "Trace category summary");
  c_trace_category->add_option("file", files, ".hda file")->required();
  c_trace_category->add_option("--dot", dot_path, "write DOT ('-' = stdout)");

  auto* c_gen = app.add_subcommand("gen", "Generate fixtures");
  c_gen->require_subcommand(1);
  auto* c_gen_grid =
      c_gen->add_subcommand("grid", "Subdivided-cube automaton");
  c_gen_grid->add_option("ks", grid_ks, "per-axis edge counts")->required();

  auto* c_wm = app.add_subcommand("wm", "Weak morphism documents");
  c_wm->require_subcommand(1);
  auto* c_wm_validate =
      c_wm->add_subcommand("validate", "Validate morphism documents");
  c_wm_validate->add_option("files", files, ".hda and .wm files")->required();
  auto* c_wm_map_path =
      c_wm->add_subcommand("map-path", "Image of a source path");
  c_wm_map_path->add_option("files", files, ".hda and .wm files")->required();
  c_wm_map_path
      ->add_option("--path", path_specs,
                   "comma-separated edge names, or one vertex name")
      ->required();

  auto* c_relate = app.add_subcommand("relate", "Check a witnessed relation");
  c_relate
      ->add_option("relation", relation,
                   "weak | subdivision | homeo | trace-equiv")
      ->required();
  c_relate->add_option("files", files, "source .hda, target .hda, .wm chain")
      ->required();

  auto* c_theorem = app.add_subcommand("theorem", "Replay a theorem");
  c_theorem->require_subcommand(1);
  auto* c_theorem_hit = c_theorem->add_subcommand(
      "homeo-implies-trace",
      "weakly regular + homeomorphic abstraction => trace equivalent");
  c_theorem_hit->add_option("files", files, "source .hda, target .hda, .wm chain")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::optional<int> max_len;
  if (max_len_value >= 0) max_len = max_len_value;

  try {
    if (c_validate->parsed()) return cmd_validate(files, out);
    if (c_info->parsed()) return cmd_info(load_workspace(files), out);
    if (c_language->parsed())
      return cmd_language(single_automaton(load_workspace(files)), max_len, out);
    if (c_trace_language->parsed())
      return cmd_trace_language(single_automaton(load_workspace(files)),
                                max_len, out);
    if (c_independence->parsed())
      return cmd_independence(single_automaton(load_workspace(files)), out);
    if (c_check->parsed())
      return cmd_check(single_automaton(load_workspace(files)), property,
                       max_len, out);
    if (c_dihomotopic->parsed())
      return cmd_dihomotopic(single_automaton(load_workspace(files)),
                             path_specs, out);
    if (c_trace_category->parsed())
      return cmd_trace_category(single_automaton(load_workspace(files)),
                                dot_path, out);
    if (c_gen_grid->parsed()) return cmd_gen_grid(grid_ks, out);
    if (c_wm_validate->parsed()) {
      // Context automata must be well formed; morphism failures are
      // reported document by document.
      std::vector<std::string> context, docs;
      for (const auto& f : files)
        (ends_with(f, ".wm") ? docs : context).push_back(f);
      Workspace ws = load_workspace(context);
      bool ok = true;
      for (const auto& path : docs) {
        std::string text = read_file(path);
        try {
          WmDocument doc = parse_wm(text, ws.automata, ws.morphisms);
          const char* kind = "composite";
          if (doc.morphism.kind() == CellularWeakMorphism::Kind::Realization)
            kind = "realization";
          else if (doc.morphism.kind() ==
                   CellularWeakMorphism::Kind::Subdivision)
            kind = "subdivision";
          out << path << ": OK (" << kind << ", "
              << doc.morphism.stages().size()
              << (doc.morphism.stages().size() == 1 ? " stage)" : " stages)")
              << "\n";
          ws.wm_names.push_back(doc.name);
          ws.morphisms.emplace(doc.name, std::move(doc));
        } catch (const ParseError& e) {
          throw CliFailure{2, path + ": " + e.what()};
        } catch (const Error& e) {
          ok = false;
          out << path << ": INVALID\n";
          std::istringstream lines(e.what());
          std::string line;
          while (std::getline(lines, line))
            if (!line.empty()) out << "  " << line << "\n";
        }
      }
      return ok ? 0 : 1;
    }
    if (c_wm_map_path->parsed()) {
      if (path_specs.size() != 1)
        throw CliFailure{2, "need exactly one --path argument"};
      return cmd_wm_map_path(load_workspace(files), path_specs.front(), out);
    }
    if (c_relate->parsed())
      return cmd_relate(load_workspace(files), relation, out);
    if (c_theorem_hit->parsed()) return cmd_theorem(load_workspace(files), out);
    err << "no subcommand\n";
    return 2;
  } catch (const CliFailure& e) {
    err << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hda::cli
