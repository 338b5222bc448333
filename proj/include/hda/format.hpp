#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hda/hda.hpp"
#include "hda/weakmor.hpp"

namespace hda {

// Parse failures carry the offending 1-based line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_ = 0;
};

struct HdaDocument {
  std::string name;
  Hda automaton;
};

// Line-oriented text: '#' starts a comment, tokens are whitespace
// separated, names and symbols use [A-Za-z0-9_].  Directives:
//   hda <name>
//   alphabet <sym> ...
//   cube <dim> <id> ...
//   face <id> <i> <k> <faceid>
//   label <edgeid> <sym>[.<sym>...]
//   initial <id>
//   final <id>
// Cubes must be declared before they are referenced.  Structural
// problems beyond name resolution are left to the validators.
HdaDocument parse_hda(std::string_view text);

// Canonical form: cubes per degree sorted by name, faces sorted by
// (degree, name, direction, side), labels and markers sorted by
// name.  parse(serialize(d)) reproduces d.
std::string serialize_hda(const HdaDocument& doc);

struct WmDocument {
  std::string name;
  std::string source_name;
  std::string target_name;
  CellularWeakMorphism morphism;
  // composite documents list their factors for serialization
  std::vector<std::string> compose_names;
};

// Directives after the header "weakmor <name> <source> <target>":
// realization documents use "map <srcId> <tgtId>" lines, subdivision
// documents use "vertex <v> <v'>", "cube <x> k <k1> ... <kn>" and
// "cell <x> <comp1;...;compn> <targetId>" lines, composite documents
// a single "compose <wmName> ..." line over previously loaded
// documents.  Mixing kinds is an error.  Semantic validation happens
// while building the morphism; those failures surface as
// InvalidArgument, parse and resolution failures as ParseError.
WmDocument parse_wm(std::string_view text,
                    const std::map<std::string, HdaDocument>& automata,
                    const std::map<std::string, WmDocument>& morphisms);

std::string serialize_wm(const WmDocument& doc);

}  // namespace hda
