#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "hda/cli.hpp"
#include "hda/format.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = hda::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const char* name) { return fixtures::fixture_path(name); }

// Scratch file helper: files live in a per-process temp directory.
class Scratch {
 public:
  Scratch() {
    dir_ = fs::temp_directory_path() /
           ("hda_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~Scratch() { std::error_code ec; fs::remove_all(dir_, ec); }

  std::string file(const std::string& name, const std::string& content) {
    fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }

 private:
  fs::path dir_;
};

}  // namespace

TEST_CASE("cli validate reports per file") {
  CliResult r = run_cli({"validate", fx("fig1_a.hda"), fx("fig1_b.hda"),
                         fx("wm_f.wm")});
  CHECK(r.code == 0);
  CHECK(helpers::contains(r.out, fx("fig1_a.hda") + ": OK\n"));
  CHECK(helpers::contains(r.out, fx("wm_f.wm") + ": OK (subdivision, 1 stage)\n"));
  CHECK(r.err.empty());

  CliResult incl = run_cli({"validate", fx("ex29_b.hda"), fx("ex29_a.hda"),
                            fx("ex29_incl.wm")});
  CHECK(incl.code == 0);
  CHECK(helpers::contains(incl.out, "OK (realization, 1 stage)\n"));
}

TEST_CASE("cli validate flags broken input") {
  Scratch scratch;
  std::string bad = scratch.file("bad.hda", "hda bad\ncube 1 e\n");
  CliResult r = run_cli({"validate", bad});
  CHECK(r.code == 1);
  CHECK(helpers::contains(r.out, bad + ": INVALID\n"));
  CHECK(helpers::contains(r.out, "  missing boundary d(1,0) of e\n"));
  CHECK(helpers::contains(r.out, "  unlabelled edge e\n"));
}

TEST_CASE("cli language output is exact and deterministic") {
  CliResult r = run_cli({"language", fx("fig1_a.hda")});
  CHECK(r.code == 0);
  CHECK(r.out == "a.b.c\nc.a.b\n");
  CliResult again = run_cli({"language", fx("fig1_a.hda")});
  CHECK(again.out == r.out);

  CliResult b = run_cli({"language", fx("fig1_b.hda")});
  CHECK(b.out == "a.b.c\na.c.b\nc.a.b\n");
}

TEST_CASE("cli language on cyclic input needs a bound") {
  CliResult unbounded = run_cli({"language", fx("circle.hda")});
  CHECK(unbounded.code == 2);
  CHECK(helpers::contains(unbounded.err, "cyclic"));

  CliResult bounded = run_cli({"language", "--max-len", "2", fx("circle.hda")});
  CHECK(bounded.code == 0);
  CHECK(bounded.out == "-\na\na.a\n");
}

TEST_CASE("cli trace language") {
  CliResult r = run_cli({"trace-language", fx("fig1_a.hda")});
  CHECK(r.code == 0);
  CHECK(r.out == "a.b.c: a.b.c c.a.b\n");

  CliResult b = run_cli({"trace-language", fx("fig1_b.hda")});
  CHECK(b.out == "a.b.c: a.b.c a.c.b c.a.b\n");
}

TEST_CASE("cli independence") {
  CliResult a = run_cli({"independence", fx("fig1_a.hda")});
  CHECK(a.code == 0);
  CHECK(a.out == "a.b ~ c\n");

  CliResult e = run_cli({"independence", fx("ex29_a.hda")});
  CHECK(e.out == "a ~ a.b  [vacuous]\na.b ~ b  [vacuous]\n");
}

TEST_CASE("cli info") {
  CliResult r = run_cli({"info", fx("fig1_a.hda")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "name: fig1_a\n"
        "alphabet: a b c\n"
        "dimension: 2\n"
        "cubes[0]: 4\n"
        "cubes[1]: 4\n"
        "cubes[2]: 1\n"
        "initial: a00\n"
        "final: a11\n");
}

TEST_CASE("cli property checks") {
  CliResult det = run_cli({"check", "deterministic", fx("ex29_a.hda")});
  CHECK(det.code == 1);
  CHECK(det.out == "deterministic: NO\n");

  CliResult stable = run_cli({"check", "stable", fx("fig1_a.hda")});
  CHECK(stable.code == 0);
  CHECK(stable.out == "stable: YES\n");

  CliResult wr = run_cli({"check", "weakly-regular", fx("fig1_a.hda")});
  CHECK(wr.code == 0);
  CHECK(wr.out == "weakly-regular: YES\n");

  CliResult acyclic = run_cli({"check", "acyclic", fx("circle.hda")});
  CHECK(acyclic.code == 1);
  CHECK(acyclic.out == "acyclic: NO\n");

  CliResult acc = run_cli({"check", "accessible", fx("ex29_a.hda")});
  CHECK(acc.code == 0);
  CHECK(acc.out == "accessible: YES\n");
}

TEST_CASE("cli dihomotopic") {
  CliResult yes = run_cli({"dihomotopic", fx("fig1_b.hda"), "--path",
                           "aB,bB,c2", "--path", "c0,aT,bT"});
  CHECK(yes.code == 0);
  CHECK(yes.out == "dihomotopic: YES\n");

  CliResult no = run_cli({"dihomotopic", fx("ex29_a.hda"), "--path", "x,y",
                          "--path", "z"});
  CHECK(no.code == 1);
  CHECK(no.out == "dihomotopic: NO\n");

  CliResult usage =
      run_cli({"dihomotopic", fx("fig1_b.hda"), "--path", "aB,bB,c2"});
  CHECK(usage.code == 2);
  CHECK(helpers::contains(usage.err, "two --path"));
}

TEST_CASE("cli trace category with dot output") {
  CliResult r = run_cli({"trace-category", fx("fig1_a.hda"), "--dot", "-"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "objects: a00 a11\n"
        "hom a00 a00: 1\n"
        "hom a00 a11: 1\n"
        "hom a11 a11: 1\n"
        "classes: 3\n"
        "digraph trace_category {\n"
        "  rankdir=LR;\n"
        "  \"a00\";\n"
        "  \"a11\";\n"
        "  \"a00\" -> \"a00\" [label=\"-\"];\n"
        "  \"a00\" -> \"a11\" [label=\"a.b.c\"];\n"
        "  \"a11\" -> \"a11\" [label=\"-\"];\n"
        "}\n");

  CliResult e = run_cli({"trace-category", fx("ex29_a.hda")});
  CHECK(e.out ==
        "objects: u w\n"
        "hom u u: 1\n"
        "hom u w: 2\n"
        "hom w w: 1\n"
        "classes: 4\n");
}

TEST_CASE("cli trace category writes dot files") {
  Scratch scratch;
  std::string dot = scratch.file("cat.dot", "");
  CliResult r = run_cli({"trace-category", fx("ex29_a.hda"), "--dot", dot});
  CHECK(r.code == 0);
  std::ifstream in(dot);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(helpers::contains(buf.str(), "digraph trace_category {"));
  CHECK(helpers::contains(buf.str(), "\"u\" -> \"w\""));
}

TEST_CASE("cli gen grid emits a parseable document") {
  CliResult r = run_cli({"gen", "grid", "2", "1"});
  CHECK(r.code == 0);
  hda::HdaDocument doc = hda::parse_hda(r.out);
  CHECK(doc.name == "grid_2x1");
  CHECK(hda::validate_hda(doc.automaton).ok());
  CHECK(doc.automaton.set == hda::subdivided_cube_hda({2, 1}).set);

  CliResult bad = run_cli({"gen", "grid", "0"});
  CHECK(bad.code == 2);
  CHECK(helpers::contains(bad.err, "positive"));
}

TEST_CASE("cli wm map-path") {
  CliResult r = run_cli({"wm", "map-path", fx("fig1_a.hda"), fx("fig1_b.hda"),
                         fx("wm_f.wm"), "--path", "ab0,cR"});
  CHECK(r.code == 0);
  CHECK(r.out == "mapped path: aB bB c2\n");

  CliResult empty = run_cli({"wm", "map-path", fx("fig1_a.hda"),
                             fx("fig1_b.hda"), fx("wm_f.wm"), "--path",
                             "a10"});
  CHECK(empty.code == 0);
  CHECK(empty.out == "mapped path: (empty at b20)\n");
}

TEST_CASE("cli wm validate") {
  CliResult r = run_cli({"wm", "validate", fx("fig1_a.hda"), fx("fig1_b.hda"),
                         fx("wm_f.wm")});
  CHECK(r.code == 0);
  CHECK(helpers::contains(r.out, "OK (subdivision, 1 stage)"));
}

TEST_CASE("cli relate verdicts") {
  std::vector<std::string> fig1 = {fx("fig1_a.hda"), fx("fig1_b.hda"),
                                   fx("wm_f.wm")};
  for (const char* mode : {"weak", "subdivision", "homeo", "trace-equiv"}) {
    std::vector<std::string> args = {"relate", mode};
    args.insert(args.end(), fig1.begin(), fig1.end());
    CliResult r = run_cli(args);
    CHECK(r.code == 0);
    CHECK(helpers::contains(r.out, ": YES\n"));
  }

  CliResult weak = run_cli({"relate", "weak", fx("fig1_a.hda"),
                            fx("fig1_b.hda"), fx("wm_f.wm")});
  CHECK(weak.out == "weak HDA morphism: YES\n");

  CliResult te = run_cli({"relate", "trace-equiv", fx("ex29_b.hda"),
                          fx("ex29_a.hda"), fx("ex29_incl.wm")});
  CHECK(te.code == 1);
  CHECK(te.out ==
        "trace equivalent abstraction: NO\n"
        "  hom-set bijection fails at (u, w): 1 classes against 2\n");

  CliResult sub = run_cli({"relate", "subdivision", fx("ex29_a.hda"),
                           fx("ex29_b.hda"), fx("ex29_sub.wm")});
  CHECK(sub.code == 1);
  CHECK(sub.out ==
        "subdivision of HDAs: NO\n  witness is not a homeomorphism\n");

  CliResult inclweak = run_cli({"relate", "weak", fx("ex29_a.hda"),
                                fx("ex29_b.hda"), fx("ex29_sub.wm")});
  CHECK(inclweak.code == 0);
  CHECK(inclweak.out == "weak HDA morphism: YES\n");
}

TEST_CASE("cli theorem replay") {
  CliResult r = run_cli({"theorem", "homeo-implies-trace", fx("fig1_a.hda"),
                         fx("fig1_b.hda"), fx("wm_f.wm")});
  CHECK(r.code == 0);
  CHECK(r.out == "hypotheses hold: YES\nconclusion holds: YES\n");

  CliResult hf = run_cli({"theorem", "homeo-implies-trace", fx("ex29_a.hda"),
                          fx("ex29_b.hda"), fx("ex29_sub.wm")});
  CHECK(hf.code == 1);
  CHECK(helpers::contains(hf.out, "hypotheses hold: NO\n"));
}

TEST_CASE("cli usage errors") {
  CliResult unknown = run_cli({"nonsense"});
  CHECK(unknown.code == 2);

  CliResult missing = run_cli({"language", fx("missing.hda")});
  CHECK(missing.code == 2);
  CHECK(helpers::contains(missing.err, "cannot read file"));

  Scratch scratch;
  std::string txt = scratch.file("notes.txt", "hello\n");
  CliResult ext = run_cli({"validate", txt});
  CHECK(ext.code == 2);
  CHECK(helpers::contains(ext.err, ".hda or .wm"));

  CliResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(helpers::contains(help.out, "Usage"));
}

TEST_CASE("cli composite witnesses") {
  // listing factors plus the compose document: only the compose
  // document acts as the witness
  Scratch scratch;
  std::string round = scratch.file(
      "round.wm", "weakmor round ex29_a ex29_a\ncompose ex29_sub ex29_incl\n");
  // the intermediate automaton must be listed so names resolve
  CliResult r = run_cli({"relate", "weak", fx("ex29_a.hda"), fx("ex29_a.hda"),
                         fx("ex29_b.hda"), fx("ex29_sub.wm"),
                         fx("ex29_incl.wm"), round});
  CHECK(r.code == 0);
  CHECK(r.out == "weak HDA morphism: YES\n");

  CliResult v = run_cli({"wm", "validate", fx("ex29_a.hda"), fx("ex29_b.hda"),
                         fx("ex29_sub.wm"), fx("ex29_incl.wm"), round});
  CHECK(v.code == 0);
  CHECK(helpers::contains(v.out, "OK (composite, 2 stages)"));
  CHECK(helpers::contains(v.out, "OK (realization, 1 stage)"));

  // without the intermediate automaton the witness cannot be built
  CliResult broken = run_cli({"relate", "weak", fx("ex29_a.hda"),
                              fx("ex29_a.hda"), fx("ex29_sub.wm"),
                              fx("ex29_incl.wm"), round});
  CHECK(broken.code == 2);
  CHECK(helpers::contains(broken.err, "unknown automaton"));
}
