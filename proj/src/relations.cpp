#include "hda/relations.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hda {

namespace {

void note(ValidationReport* why, std::string msg) {
  if (why) why->add(std::move(msg));
}

std::set<Cube> image_of(const CellularWeakMorphism& f,
                        const std::vector<Cube>& vs) {
  std::set<Cube> out;
  for (Cube v : vs) out.insert(f.apply_vertex(v));
  return out;
}

}  // namespace

TraceFunctor trace_functor(const CellularWeakMorphism& f, const Hda& a,
                           const Hda& b) {
  TraceFunctor tf;
  tf.source_category = trace_category(a);
  tf.target_category = trace_category(b);

  for (Cube v : tf.source_category.objects) {
    Cube fv = f.apply_vertex(v);
    if (!tf.target_category.is_object(fv))
      throw Error(ErrorKind::Precondition,
                  "not a trace functor: image of " + a.set.name(v) +
                      " is not an object of the target trace category");
    tf.object_map[v] = fv;
  }

  for (ClassId id = 0; id < tf.source_category.classes.size(); ++id) {
    const auto& entry = tf.source_category.classes[id];
    Path image = f.map_path(entry.cls.representative);
    ClassId target = tf.target_category.classify(image);
    if (target == kNoClass)
      throw Error(ErrorKind::Precondition,
                  "not a trace functor: a mapped representative has no class "
                  "in the target trace category");
    tf.hom_map[id] = target;
  }

  tf.identities_preserved = true;
  for (const auto& [v, id] : tf.source_category.identity) {
    auto target_identity = tf.target_category.identity.find(tf.object_map[v]);
    if (target_identity == tf.target_category.identity.end() ||
        tf.hom_map[id] != target_identity->second)
      tf.identities_preserved = false;
  }

  tf.composition_preserved = true;
  for (const auto& [pair, composite] : tf.source_category.composition) {
    ClassId mapped =
        tf.target_category.compose(tf.hom_map[pair.first],
                                   tf.hom_map[pair.second]);
    if (mapped == kNoClass || mapped != tf.hom_map[composite])
      tf.composition_preserved = false;
  }
  return tf;
}

bool check_trace_equivalence(const Hda& a, const Hda& b,
                             const CellularWeakMorphism& f,
                             ValidationReport* why) {
  if (!is_weak_hda_morphism(f, a, b, why)) return false;

  bool ok = true;
  if (image_of(f, {a.initial.begin(), a.initial.end()}) != b.initial) {
    note(why, "initial vertices are not mapped onto the target's");
    ok = false;
  }
  if (image_of(f, {a.final_states.begin(), a.final_states.end()}) !=
      b.final_states) {
    note(why, "final vertices are not mapped onto the target's");
    ok = false;
  }
  auto [min_a, max_a] = extremal_vertices(a.set);
  auto [min_b, max_b] = extremal_vertices(b.set);
  if (image_of(f, min_a) != std::set<Cube>(min_b.begin(), min_b.end())) {
    note(why, "minimal vertices are not mapped onto the target's");
    ok = false;
  }
  if (image_of(f, max_a) != std::set<Cube>(max_b.begin(), max_b.end())) {
    note(why, "maximal vertices are not mapped onto the target's");
    ok = false;
  }
  if (!ok) return false;

  TraceFunctor tf;
  try {
    tf = trace_functor(f, a, b);
  } catch (const Error& e) {
    note(why, e.what());
    return false;
  }
  if (!tf.identities_preserved) {
    note(why, "the induced functor does not preserve identities");
    ok = false;
  }
  if (!tf.composition_preserved) {
    note(why, "the induced functor does not preserve composition");
    ok = false;
  }

  // isomorphism of categories: bijective on objects, bijective on
  // every hom-set
  std::set<Cube> object_images;
  for (const auto& [v, fv] : tf.object_map) object_images.insert(fv);
  if (object_images.size() != tf.object_map.size() ||
      object_images != std::set<Cube>(tf.target_category.objects.begin(),
                                      tf.target_category.objects.end())) {
    note(why, "the induced functor is not bijective on objects");
    ok = false;
  }

  for (Cube src : tf.source_category.objects) {
    for (Cube dst : tf.source_category.objects) {
      const auto& from = tf.source_category.hom_set(src, dst);
      const auto& to = tf.target_category.hom_set(tf.object_map[src],
                                                  tf.object_map[dst]);
      std::set<ClassId> images;
      for (ClassId id : from) images.insert(tf.hom_map[id]);
      if (images.size() != from.size() ||
          images != std::set<ClassId>(to.begin(), to.end())) {
        std::ostringstream os;
        os << "hom-set bijection fails at (" << a.set.name(src) << ", "
           << a.set.name(dst) << "): " << from.size() << " classes against "
           << to.size();
        note(why, os.str());
        ok = false;
      }
    }
  }
  return ok;
}

bool check_homeomorphic_abstraction(const Hda& a, const Hda& b,
                                    const CellularWeakMorphism& f,
                                    ValidationReport* why) {
  if (!is_weak_hda_morphism(f, a, b, why)) return false;
  bool ok = true;
  if (image_of(f, {a.initial.begin(), a.initial.end()}) != b.initial) {
    note(why, "initial vertices are not mapped onto the target's");
    ok = false;
  }
  if (image_of(f, {a.final_states.begin(), a.final_states.end()}) !=
      b.final_states) {
    note(why, "final vertices are not mapped onto the target's");
    ok = false;
  }
  if (!is_homeomorphism(f)) {
    note(why, "witness is not a homeomorphism");
    ok = false;
  }
  return ok;
}

bool check_language_inclusion(const Hda& a, const Hda& b,
                              const CellularWeakMorphism& f,
                              std::optional<int> max_len,
                              ValidationReport* why) {
  if (!is_weak_hda_morphism(f, a, b, why)) return false;

  std::optional<int> target_len;
  if (max_len) {
    int stretch = 1;
    for (const auto& s : f.stages()) {
      int stage_stretch = 1;
      if (s.kind == CellularWeakMorphism::Stage::Kind::Subdivision)
        for (const auto& [x, cd] : s.subdivision.cubes)
          if (s.source->degree(x) == 1)
            stage_stretch = std::max(stage_stretch, cd.ks[0]);
      stretch *= stage_stretch;
    }
    target_len = *max_len * stretch;
  }

  auto la = language(a, max_len);
  auto lb = language(b, target_len);
  bool ok = true;
  for (const Word& w : la) {
    if (!lb.count(w)) {
      note(why, "word " + a.word_text(w) + " is accepted by the source only");
      ok = false;
    }
  }
  return ok;
}

TraceBijection check_trace_language_bijection(const Hda& a, const Hda& b,
                                              const CellularWeakMorphism& f) {
  TraceBijection out;
  bool hyp = true;
  if (!is_stable(a)) {
    out.notes.push_back("hypothesis fails: the source is not stable");
    hyp = false;
  }
  if (!is_stable(b)) {
    out.notes.push_back("hypothesis fails: the target is not stable");
    hyp = false;
  }
  if (!is_deterministic(b)) {
    out.notes.push_back("hypothesis fails: the target is not deterministic");
    hyp = false;
  }
  ValidationReport why;
  if (!check_trace_equivalence(a, b, f, &why)) {
    out.notes.push_back("hypothesis fails: not a trace equivalence");
    for (const auto& v : why.violations) out.notes.push_back("  " + v);
    hyp = false;
  }
  if (!hyp) {
    out.status = TraceBijection::Status::HypothesisFailure;
    return out;
  }

  auto la = language(a);
  auto tla = trace_language(a);
  auto tlb = trace_language(b);

  auto find_target_class = [&](const Word& w) -> int {
    for (std::size_t i = 0; i < tlb.size(); ++i)
      if (tlb[i].members.count(w)) return static_cast<int>(i);
    return -1;
  };

  std::vector<int> image(tla.size(), -1);
  bool ok = true;
  for (std::size_t i = 0; i < tla.size(); ++i) {
    for (const Word& w : tla[i].members) {
      if (!la.count(w)) continue;  // map classes through accepted words
      int j = find_target_class(w);
      if (j < 0) {
        out.notes.push_back("word " + a.word_text(w) +
                            " has no trace class in the target");
        ok = false;
        continue;
      }
      if (image[i] < 0) {
        image[i] = j;
      } else if (image[i] != j) {
        out.notes.push_back("the induced map is not well defined at " +
                            a.word_text(w));
        ok = false;
      }
    }
    if (image[i] < 0) {
      out.notes.push_back("trace class of " +
                          a.word_text(tla[i].representative) +
                          " contains no accepted word");
      ok = false;
    }
  }

  std::set<int> hit;
  for (std::size_t i = 0; i < tla.size(); ++i) {
    if (image[i] >= 0 && !hit.insert(image[i]).second) {
      out.notes.push_back("the induced map is not injective");
      ok = false;
    }
  }
  if (hit.size() != tlb.size()) {
    out.notes.push_back("the induced map is not surjective");
    ok = false;
  }

  if (ok)
    for (std::size_t i = 0; i < tla.size(); ++i)
      out.pairs.emplace_back(tla[i].representative,
                             tlb[static_cast<std::size_t>(image[i])]
                                 .representative);
  out.status = ok ? TraceBijection::Status::Holds
                  : TraceBijection::Status::Failure;
  return out;
}

TheoremOutcome theorem_homeo_implies_trace(const Hda& a, const Hda& b,
                                           const CellularWeakMorphism& f) {
  TheoremOutcome out;
  bool hyp = true;
  if (!is_weakly_regular(a.set)) {
    out.notes.push_back("hypothesis fails: the source is not weakly regular");
    hyp = false;
  }
  ValidationReport why;
  if (!check_homeomorphic_abstraction(a, b, f, &why)) {
    out.notes.push_back("hypothesis fails: not a homeomorphic abstraction");
    for (const auto& v : why.violations) out.notes.push_back("  " + v);
    hyp = false;
  }
  out.hypotheses_hold = hyp;
  if (!hyp) {
    out.applicable = true;
    return out;
  }
  if (!is_acyclic(a.set) || !is_acyclic(b.set)) {
    out.applicable = false;
    out.notes.push_back(
        "not applicable: cyclic complexes have no finite trace category");
    return out;
  }
  out.applicable = true;
  ValidationReport conclusion_why;
  out.conclusion_holds = check_trace_equivalence(a, b, f, &conclusion_why);
  if (!out.conclusion_holds) {
    out.notes.push_back("conclusion fails despite valid hypotheses:");
    for (const auto& v : conclusion_why.violations)
      out.notes.push_back("  " + v);
  }
  return out;
}

ValidationReport check_mutually_inverse(const Hda& a, const Hda& b,
                                        const CellularWeakMorphism& f,
                                        const CellularWeakMorphism& g,
                                        std::optional<int> max_len) {
  ValidationReport report;
  if (!is_weak_hda_morphism(f, a, b, &report) ||
      !is_weak_hda_morphism(g, b, a, &report))
    return report;

  for (Cube v : a.set.cubes(0))
    if (g.apply_vertex(f.apply_vertex(v)) != v)
      report.add("vertex maps are not mutually inverse at " + a.set.name(v));
  for (Cube v : b.set.cubes(0))
    if (f.apply_vertex(g.apply_vertex(v)) != v)
      report.add("vertex maps are not mutually inverse at " + b.set.name(v));

  for (Cube v : a.set.cubes(0))
    for (const Path& w : enumerate_paths(a.set, v, std::nullopt, max_len))
      if (g.map_path(f.map_path(w)) != w)
        report.add("path maps are not mutually inverse on a path from " +
                   a.set.name(v));
  for (Cube v : b.set.cubes(0))
    for (const Path& w : enumerate_paths(b.set, v, std::nullopt, max_len))
      if (f.map_path(g.map_path(w)) != w)
        report.add("path maps are not mutually inverse on a path from " +
                   b.set.name(v));

  auto [min_a, max_a] = extremal_vertices(a.set);
  auto [min_b, max_b] = extremal_vertices(b.set);
  if (image_of(f, min_a) != std::set<Cube>(min_b.begin(), min_b.end()))
    report.add("minimal vertices do not correspond");
  if (image_of(f, max_a) != std::set<Cube>(max_b.begin(), max_b.end()))
    report.add("maximal vertices do not correspond");
  return report;
}

}  // namespace hda
