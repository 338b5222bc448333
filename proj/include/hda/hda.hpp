#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hda/paths.hpp"
#include "hda/precubical.hpp"

namespace hda {

// A symbol is an index into the automaton's declared alphabet; a
// word is a finite symbol sequence.  Keeping words as index vectors
// makes "lexicographically least under the declared alphabet order"
// plain vector comparison.
using Symbol = int;
using Word = std::vector<Symbol>;

// A higher-dimensional automaton over a free monoid: a precubical
// set with initial and final vertices and a nonempty word label on
// every edge, subject to the square condition that opposite edges
// of every 2-cube carry equal labels.
struct Hda {
  PrecubicalSet set;
  std::vector<std::string> alphabet;  // declared order
  std::set<Cube> initial;
  std::set<Cube> final_states;
  std::map<Cube, Word> labels;

  std::optional<Symbol> symbol(const std::string& name) const;
  const Word& label(Cube edge) const;
  // Renders a word with "." between symbols; empty word renders
  // as "-" so reports stay unambiguous.
  std::string word_text(const Word& w) const;
};

// Alphabet well-formedness, I/F are vertices, labels are total on
// edges, nonempty, over the alphabet, and the square condition.
ValidationReport validate_hda(const Hda& a);

// Concatenated labels along a path; empty word for length 0.
Word extended_label(const Hda& a, const Path& path);

// Labels of initial-to-final paths.  Path length is bounded by
// max_len when given; unbounded mode requires acyclicity.
std::set<Word> language(const Hda& a, std::optional<int> max_len = {});

// Every vertex is reachable from an initial vertex along edges.
bool is_accessible(const Hda& a);

// One initial vertex and, from any common start vertex, no two
// distinct paths with the same extended label.  Bounded mode (an
// approximation) when max_len is given; unbounded requires
// acyclicity.
bool is_deterministic(const Hda& a, std::optional<int> max_len = {});

// Independence of two label words: both appear as edge labels, they
// differ, and every path whose label contains the pair adjacently
// admits a dihomotopic path with the pair swapped.  The exact check
// enumerates all paths and requires acyclicity; when every edge
// label is a single symbol an equivalent 2-cube scan is used, which
// also covers cyclic complexes.  Cyclic input with longer labels is
// UnsupportedInput.
bool independent(const Hda& a, const Word& u, const Word& v);

struct IndependenceRelation {
  // unordered pairs stored as (min, max)
  std::set<std::pair<Word, Word>> pairs;
  // independent pairs with no witnessing occurrence in any path
  // label; flagged so reports can point out vacuous entries
  std::set<std::pair<Word, Word>> vacuous;

  bool contains(const Word& u, const Word& v) const;
};

IndependenceRelation independence_relation(const Hda& a);

// Congruence closure of swapping adjacent independent label words.
bool congruent(const Hda& a, const Word& u, const Word& v);
bool congruent(const IndependenceRelation& rel, const Word& u, const Word& v);
std::set<Word> congruence_class(const IndependenceRelation& rel, const Word& w);

struct TraceClass {
  Word representative;  // least member in the declared alphabet order
  std::set<Word> members;
};

// Trace classes of the language, sorted by representative.
std::vector<TraceClass> trace_language(const Hda& a,
                                       std::optional<int> max_len = {});

// No 2-cube is bounded by a dependent pair of distinct labels.
bool is_stable(const Hda& a);

// I, F and the extremal vertices: the objects of the trace category.
std::vector<Cube> trace_objects(const Hda& a);

// Full subcategory of the fundamental category on trace_objects.
// Requires acyclicity.
FiniteCategory trace_category(const Hda& a);

// The subdivided-cube automaton: the grid [0,k1] x ... x [0,kn]
// with alphabet l1..ln, every axis-p edge labelled lp, the least
// vertex initial and the greatest final.  Throws InvalidArgument
// when n = 0 or some k < 1.
Hda subdivided_cube_hda(const std::vector<int>& ks);

}  // namespace hda
