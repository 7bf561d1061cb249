#include "graphprod/classification.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "graphprod/error.hpp"

namespace graphprod {

namespace {

struct TheoremInfo {
  Theorem theorem;
  const char* token;
  const char* tag;
};

constexpr TheoremInfo kTheorems[] = {
    {Theorem::A, "A", "Thm-A"},
    {Theorem::B, "B", "Thm-B"},
    {Theorem::BGeneral, "B-general", "Thm-B-general"},
    {Theorem::C, "C", "Thm-C"},
    {Theorem::D, "D", "Thm-D"},
    {Theorem::DMoreover, "D-moreover", "Thm-D-moreover"},
    {Theorem::E, "E", "Thm-E"},
    {Theorem::F, "F", "Thm-F"},
    {Theorem::CorRAAG, "Cor-RAAG", "Cor-RAAG"},
    {Theorem::CorHyperfinite, "Cor-hyperfinite", "Cor-hyperfinite"},
    {Theorem::CorICC, "Cor-ICC", "Cor-ICC"},
};

const TheoremInfo& info(Theorem t) {
  for (const auto& i : kTheorems) {
    if (i.theorem == t) return i;
  }
  throw std::logic_error("unknown theorem");
}

bool all_labels(const LabeledGraph& lg, const std::function<bool(const AlgebraLabel&)>& pred) {
  return std::all_of(lg.labels.begin(), lg.labels.end(), pred);
}

bool is_hyperfinite(const AlgebraLabel& l) { return l.class_id == kHyperfiniteToken; }

bool components_satisfy(const SimpleGraph& g, const std::function<bool(const SimpleGraph&)>& pred) {
  for (const auto& c : connected_components(g)) {
    if (!pred(induced(g, c).graph)) return false;
  }
  return true;
}

void require(std::vector<std::string>& out, bool holds, const char* name) {
  if (!holds) out.emplace_back(name);
}

void girth_conditions(const SimpleGraph& g, std::vector<std::string>& out) {
  require(out, girth(g) >= 5, "girth-ge-5");
  require(out, min_degree(g) >= 2, "min-degree-ge-2");
}

// Every maximal clique factor vertex carries a II_1 factor, so the graph
// product of diffuse algebras is a factor.
bool graph_product_factor(const LabeledGraph& lg) {
  if (lg.n() == 0) return false;
  for (int v : maximal_clique_factor(lg.graph)) {
    if (!lg.label(v).ii1_factor) return false;
  }
  return true;
}

HypothesisCheck finish(HypothesisCheck h) {
  h.ok = h.unmet_graph.empty() && h.unmet_labels.empty();
  return h;
}

// B-general without the condition on the untransvectable subgraph, which
// only gates the class-graph comparison.
HypothesisCheck b_general_core(const LabeledGraph& lg) {
  HypothesisCheck h;
  require(h.unmet_labels, all_labels(lg, [](const auto& l) { return l.diffuse; }), "all-diffuse");
  require(h.unmet_labels, all_labels(lg, [](const auto& l) { return l.amenable; }), "all-amenable");
  require(h.unmet_labels, graph_product_factor(lg), "graph-product-factor");
  require(h.unmet_graph, is_clique_reduced(lg.graph), "clique-reduced");
  require(h.unmet_graph, !untransvectable_vertices(lg.graph).is_empty(), "untransvectable-nonempty");
  return finish(std::move(h));
}

}  // namespace

std::string theorem_token(Theorem t) { return info(t).token; }
std::string theorem_tag(Theorem t) { return info(t).tag; }

Theorem parse_theorem(std::string_view token) {
  for (const auto& i : kTheorems) {
    if (token == i.token || token == i.tag) return i.theorem;
  }
  throw InputError("unknown theorem '" + std::string(token) + "'");
}

std::vector<Theorem> all_theorems() {
  std::vector<Theorem> out;
  for (const auto& i : kTheorems) out.push_back(i.theorem);
  return out;
}

std::vector<std::string> HypothesisCheck::unmet() const {
  std::vector<std::string> out = unmet_graph;
  out.insert(out.end(), unmet_labels.begin(), unmet_labels.end());
  return out;
}

HypothesisCheck check_graph_hypotheses(const SimpleGraph& g, Theorem t) {
  HypothesisCheck h;
  auto& u = h.unmet_graph;
  if (g.n() == 0) {
    u.emplace_back("nonempty");
    return finish(std::move(h));
  }
  switch (t) {
    case Theorem::A:
      require(u, is_transvection_free(g), "transvection-free");
      require(u, !contains_square(g), "square-free");
      require(u, g.n() >= 2, "not-single-vertex");
      break;
    case Theorem::B:
    case Theorem::CorRAAG:
    case Theorem::CorHyperfinite:
      require(u, is_transvection_free(g), "transvection-free");
      break;
    case Theorem::BGeneral: {
      require(u, is_clique_reduced(g), "clique-reduced");
      const auto gu = untransvectable_subgraph(g);
      require(u, !gu.graph.is_empty(), "untransvectable-nonempty");
      require(u, !gu.graph.is_empty() && is_clique_reduced(gu.graph), "untransvectable-clique-reduced");
      break;
    }
    case Theorem::C:
      require(u, components_satisfy(g, is_strongly_reduced), "components-strongly-reduced");
      require(u, components_satisfy(g, is_transvection_free), "components-transvection-free");
      require(u, components_satisfy(g, [](const SimpleGraph& c) { return c.n() >= 2; }),
              "components-not-single-vertex");
      break;
    case Theorem::D:
    case Theorem::F:
    case Theorem::CorICC:
      girth_conditions(g, u);
      break;
    case Theorem::DMoreover:
      girth_conditions(g, u);
      require(u, !separating_star(g).has_value(), "no-separating-star");
      break;
    case Theorem::E:
      require(u, g.n() >= 2, "not-single-vertex");
      require(u, maximal_clique_factor(g).is_empty(), "empty-clique-factor");
      break;
  }
  return finish(std::move(h));
}

HypothesisCheck check_hypotheses(const LabeledGraph& lg, Theorem t) {
  HypothesisCheck h = check_graph_hypotheses(lg.graph, t);
  auto& u = h.unmet_labels;
  const bool diffuse = all_labels(lg, [](const auto& l) { return l.diffuse; });
  const bool amenable = all_labels(lg, [](const auto& l) { return l.amenable; });
  const bool factors = all_labels(lg, [](const auto& l) { return l.ii1_factor; });
  switch (t) {
    case Theorem::A:
    case Theorem::E:
      require(u, diffuse, "all-diffuse");
      break;
    case Theorem::B:
      require(u, diffuse, "all-diffuse");
      require(u, amenable, "all-amenable");
      break;
    case Theorem::BGeneral:
      require(u, diffuse, "all-diffuse");
      require(u, amenable, "all-amenable");
      require(u, graph_product_factor(lg), "graph-product-factor");
      break;
    case Theorem::C:
    case Theorem::D:
    case Theorem::DMoreover:
    case Theorem::F:
      require(u, factors, "all-ii1-factors");
      break;
    case Theorem::CorRAAG:
      require(u, all_labels(lg, [](const auto& l) { return l.is_abelian_diffuse(); }), "all-abelian-diffuse");
      break;
    case Theorem::CorHyperfinite:
      require(u, all_labels(lg, is_hyperfinite), "all-hyperfinite");
      break;
    case Theorem::CorICC:
      require(u, all_labels(lg, [](const auto& l) { return l.icc_group.value_or(false); }), "all-icc");
      break;
  }
  return finish(std::move(h));
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::IsomorphicCertified: return "IsomorphicCertified";
    case VerdictKind::DistinctCertified: return "DistinctCertified";
    case VerdictKind::EquivalentKnown: return "EquivalentKnown";
    case VerdictKind::Undecided: return "Undecided";
  }
  return "Undecided";
}

std::string to_string(ConclusionStrength s) {
  switch (s) {
    case ConclusionStrength::StrongIntertwining: return "strong-intertwining";
    case ConclusionStrength::StableIsomorphism: return "stable-isomorphism";
    case ConclusionStrength::UnitaryConjugacy: return "unitary-conjugacy";
    case ConclusionStrength::SingleUnitary: return "single-unitary";
  }
  return "strong-intertwining";
}

std::optional<bool> compatible_relation_exists(const SimpleGraph& g_in, const SimpleGraph& h_in,
                                              std::size_t budget) {
  // The conditions are symmetric, so subsets are taken in the smaller graph.
  const bool swap = h_in.n() > g_in.n();
  const SimpleGraph& g = swap ? h_in : g_in;
  const SimpleGraph& h = swap ? g_in : h_in;
  if (g.n() == 0 || h.n() == 0) return false;
  if (h.n() > 20) return std::nullopt;

  const int n = g.n();
  const Mask all_h = low_bits(h.n());
  std::vector<Mask> chosen(static_cast<std::size_t>(n), 0);
  std::size_t nodes = 0;
  bool exhausted = false;

  std::function<bool(int, Mask)> search = [&](int v, Mask covered) -> bool {
    if (++nodes > budget) {
      exhausted = true;
      return false;
    }
    if (v == n) return covered == all_h;
    Mask allowed = all_h;
    for (int u = 0; u < v; ++u) {
      const Mask t = chosen[static_cast<std::size_t>(u)];
      if (g.adjacent(u, v)) {
        for (int w : VertexSet(t, h.n())) allowed &= h.row(w);
      } else {
        for (int w : VertexSet(t, h.n())) allowed &= ~h.row(w);
      }
    }
    for (Mask s = allowed; s != 0; s = (s - 1) & allowed) {
      if (!is_independent(h, s)) continue;
      chosen[static_cast<std::size_t>(v)] = s;
      if (search(v + 1, covered | s)) return true;
      if (exhausted) return false;
    }
    chosen[static_cast<std::size_t>(v)] = 0;
    return false;
  };
  const bool found = search(0, 0);
  if (exhausted) return std::nullopt;
  return found;
}

std::optional<std::pair<int, int>> complete_bipartite_sides(const SimpleGraph& g) {
  if (g.n() < 4) return std::nullopt;
  const auto jd = join_decomposition(g);
  if (!jd.clique_factor.is_empty() || jd.parts.size() != 2) return std::nullopt;
  for (const auto& p : jd.parts) {
    if (p.size() < 2 || !is_independent(g, p.mask())) return std::nullopt;
  }
  int a = jd.parts[0].size(), b = jd.parts[1].size();
  if (a > b) std::swap(a, b);
  return std::pair{a, b};
}

namespace {

enum class Outcome { Iso, Distinct, Inconclusive };

struct StageResult {
  Outcome outcome = Outcome::Inconclusive;
  std::optional<GraphIso> witness;
  std::string tag;
  std::string reason;
};

bool all_abelian_diffuse(const LabeledGraph& lg) {
  return all_labels(lg, [](const auto& l) { return l.is_abelian_diffuse(); });
}

bool all_icc(const LabeledGraph& lg) {
  return all_labels(lg, [](const auto& l) { return l.icc_group.value_or(false); });
}

// Distinct without a key-preserving isomorphism; Isomorphic with a
// strict-class isomorphism.
StageResult keyed_stage(const LabeledGraph& a, const LabeledGraph& b, std::optional<LabelEquivalence> key,
                        const std::string& invariant) {
  StageResult r;
  const bool exists = key ? labeled_isomorphism(a, b, *key).has_value()
                          : isomorphism(a.graph, b.graph).has_value();
  if (!exists) {
    r.outcome = Outcome::Distinct;
    r.reason = "no graph isomorphism preserving " + invariant;
    return r;
  }
  if (auto w = labeled_isomorphism(a, b, LabelEquivalence::StrictClass)) {
    r.outcome = Outcome::Iso;
    r.witness = std::move(w);
    r.reason = "class-preserving graph isomorphism";
    return r;
  }
  r.reason = "graphs match under " + invariant + " but vertex algebras are not identified";
  return r;
}

StageResult d_stage(const LabeledGraph& a, const LabeledGraph& b) {
  if (all_icc(a) && all_icc(b)) {
    StageResult r;
    if (auto w = labeled_isomorphism(a, b, LabelEquivalence::WstarClass)) {
      r.outcome = Outcome::Iso;
      r.witness = std::move(w);
      r.reason = "graph isomorphism preserving W*-equivalence classes";
    } else {
      r.outcome = Outcome::Distinct;
      r.reason = "no graph isomorphism preserving W*-equivalence classes";
    }
    r.tag = theorem_tag(Theorem::CorICC);
    return r;
  }
  return keyed_stage(a, b, LabelEquivalence::StrictClass, "vertex algebra classes");
}

StageResult b_general_stage(const LabeledGraph& a, const LabeledGraph& b) {
  StageResult r;
  const auto au = untransvectable_subgraph(a.graph).graph;
  const auto bu = untransvectable_subgraph(b.graph).graph;
  const bool hyperfinite = all_labels(a, is_hyperfinite) && all_labels(b, is_hyperfinite);
  if (hyperfinite && !isomorphism(au, bu)) {
    r.outcome = Outcome::Distinct;
    r.reason = "untransvectable subgraphs are not isomorphic";
    return r;
  }
  if (is_clique_reduced(au) && is_clique_reduced(bu)) {
    const auto ea = transvection_quotient(au).class_adj;
    const auto eb = transvection_quotient(bu).class_adj;
    if (!isomorphism(ea, eb)) {
      r.outcome = Outcome::Distinct;
      r.reason = "class graphs of the untransvectable subgraphs differ (" + std::to_string(ea.n()) +
                 " vs " + std::to_string(eb.n()) + " classes)";
      return r;
    }
  } else {
    const auto rel = compatible_relation_exists(au, bu);
    if (rel.has_value() && !*rel) {
      r.outcome = Outcome::Distinct;
      r.reason = "no compatible relation between the untransvectable subgraphs";
      return r;
    }
    if (!rel.has_value()) r.reason = "relation search budget exhausted; ";
  }
  if (auto w = labeled_isomorphism(a, b, LabelEquivalence::StrictClass)) {
    r.outcome = Outcome::Iso;
    r.witness = std::move(w);
    r.reason += "class-preserving graph isomorphism";
    return r;
  }
  r.reason += "untransvectable invariants agree but no class-preserving isomorphism";
  return r;
}

struct Stage {
  Theorem theorem;
  ConclusionStrength strength;
  std::optional<std::string> note;
};

const Stage kStages[] = {
    {Theorem::DMoreover, ConclusionStrength::SingleUnitary, "t=1 forced"},
    {Theorem::D, ConclusionStrength::UnitaryConjugacy, "t=1 forced"},
    {Theorem::C, ConclusionStrength::StableIsomorphism, "stable (some t>0)"},
    {Theorem::A, ConclusionStrength::StrongIntertwining, std::nullopt},
    {Theorem::B, ConclusionStrength::StrongIntertwining, std::nullopt},
    {Theorem::BGeneral, ConclusionStrength::StrongIntertwining, std::nullopt},
};

StageResult run_stage(Theorem t, const LabeledGraph& a, const LabeledGraph& b) {
  switch (t) {
    case Theorem::DMoreover:
    case Theorem::D: return d_stage(a, b);
    case Theorem::C: return keyed_stage(a, b, LabelEquivalence::StableClass, "stable classes");
    case Theorem::A:
    case Theorem::B: return keyed_stage(a, b, std::nullopt, "the graph structure");
    case Theorem::BGeneral: return b_general_stage(a, b);
    default: break;
  }
  throw std::logic_error("not a classification stage");
}

void append_unmet(std::vector<UnmetHypothesis>& out, const std::string& tag, const char* side,
                  const HypothesisCheck& h) {
  for (const auto& name : h.unmet()) out.push_back({tag, side, name});
}

// Corollary tags for the special label families, keeping the theorem used.
void refine_tag(ClassificationVerdict& v, Theorem stage, const LabeledGraph& a, const LabeledGraph& b) {
  const bool tf = is_transvection_free(a.graph) && is_transvection_free(b.graph);
  std::optional<std::string> corollary;
  if (tf && (stage == Theorem::A || stage == Theorem::B) && all_abelian_diffuse(a) && all_abelian_diffuse(b)) {
    corollary = theorem_tag(Theorem::CorRAAG);
  } else if (tf && all_labels(a, is_hyperfinite) && all_labels(b, is_hyperfinite)) {
    corollary = theorem_tag(Theorem::CorHyperfinite);
  }
  if (corollary && *corollary != v.theorem_tag) {
    v.derived_from = v.theorem_tag;
    v.theorem_tag = *corollary;
  }
}

// (m-1)(m'-1) for K_{m,m'}, else -1.
int bipartite_invariant(const SimpleGraph& g) {
  const auto s = complete_bipartite_sides(g);
  return s ? (s->first - 1) * (s->second - 1) : -1;
}

// Equal class tokens must agree on their coarser tokens.
void require_consistent_classes(const LabeledGraph& a, const LabeledGraph& b) {
  std::map<std::string, const AlgebraLabel*> seen;
  for (const auto* lg : {&a, &b}) {
    for (const auto& l : lg->labels) {
      auto [it, fresh] = seen.emplace(l.class_id, &l);
      if (!fresh && (it->second->stable_class_id != l.stable_class_id ||
                     it->second->wstar_class_id != l.wstar_class_id)) {
        throw InputError("class '" + l.class_id + "' is given conflicting stable or W* classes");
      }
    }
  }
}

}  // namespace

ClassificationVerdict classify(const LabeledGraph& a, const LabeledGraph& b) {
  require_consistent_classes(a, b);
  ClassificationVerdict v;
  bool some_applied = false;
  std::vector<UnmetHypothesis> unmet;
  std::string undetermined_tag;

  for (const auto& stage : kStages) {
    const auto tag = theorem_tag(stage.theorem);
    const auto ha = stage.theorem == Theorem::BGeneral ? b_general_core(a) : check_hypotheses(a, stage.theorem);
    const auto hb = stage.theorem == Theorem::BGeneral ? b_general_core(b) : check_hypotheses(b, stage.theorem);
    if (!ha.ok || !hb.ok) {
      append_unmet(unmet, tag, "left", ha);
      append_unmet(unmet, tag, "right", hb);
      continue;
    }
    auto r = run_stage(stage.theorem, a, b);
    if (r.outcome == Outcome::Inconclusive) {
      if (!some_applied) undetermined_tag = tag;
      some_applied = true;
      continue;
    }
    v.kind = r.outcome == Outcome::Iso ? VerdictKind::IsomorphicCertified : VerdictKind::DistinctCertified;
    v.theorem_tag = tag;
    if (!r.tag.empty() && r.tag != tag) {
      v.derived_from = tag;
      v.theorem_tag = r.tag;
    }
    v.witness = std::move(r.witness);
    v.strength = stage.strength;
    v.amplification_note = stage.note;
    v.reason = r.reason;
    if (!v.derived_from) refine_tag(v, stage.theorem, a, b);
    break;
  }

  if (v.kind == VerdictKind::Undecided) {
    const int ka = all_abelian_diffuse(a) ? bipartite_invariant(a.graph) : -1;
    const int kb = all_abelian_diffuse(b) ? bipartite_invariant(b.graph) : -1;
    if (ka > 0 && ka == kb) {
      v.kind = VerdictKind::EquivalentKnown;
      v.theorem_tag = "Radulescu";
      v.reason = "free group factor tensor products depend only on (m-1)(m'-1) = " + std::to_string(ka);
      return v;
    }
    if (some_applied) unmet.push_back({undetermined_tag, "both", "vertex-algebra-isomorphism-undetermined"});
    v.unmet = std::move(unmet);
    v.reason = some_applied ? "theorem hypotheses hold but the invariants do not decide"
                            : "no theorem applies to both graphs";
    return v;
  }

  if (v.kind == VerdictKind::DistinctCertified &&
      labeled_isomorphism(a, b, LabelEquivalence::StrictClass).has_value()) {
    throw std::logic_error("distinct verdict contradicts a class-preserving isomorphism");
  }
  return v;
}

nlohmann::json verdict_to_json(const ClassificationVerdict& v) {
  nlohmann::json j;
  j["kind"] = to_string(v.kind);
  j["theorem_tag"] = v.theorem_tag;
  j["derived_from"] = v.derived_from ? nlohmann::json(*v.derived_from) : nlohmann::json(nullptr);
  j["witness"] = v.witness ? nlohmann::json(v.witness->map) : nlohmann::json(nullptr);
  j["conclusion_strength"] = v.strength ? nlohmann::json(to_string(*v.strength)) : nlohmann::json(nullptr);
  j["amplification_note"] = v.amplification_note ? nlohmann::json(*v.amplification_note) : nlohmann::json(nullptr);
  auto unmet = nlohmann::json::array();
  for (const auto& u : v.unmet) unmet.push_back({{"theorem", u.theorem}, {"side", u.side}, {"hypothesis", u.hypothesis}});
  j["unmet"] = std::move(unmet);
  j["detail"] = v.reason;
  return j;
}

OutDescriptor symmetry(const LabeledGraph& lg) {
  OutDescriptor d;
  d.fundamental_group_trivial = check_hypotheses(lg, Theorem::D).ok;
  if (d.fundamental_group_trivial) d.amplification_note = "t=1 forced";
  const auto h = check_hypotheses(lg, Theorem::DMoreover);
  d.certified = h.ok;
  d.unmet = h.unmet();
  if (!d.certified) return d;
  d.acting_group = automorphism_group(lg, LabelEquivalence::StrictClass);
  for (const auto& l : lg.labels) d.vertex_summands.push_back("Aut(" + l.class_id + ")");
  const bool uniform = std::all_of(lg.labels.begin(), lg.labels.end(),
                                   [&](const auto& l) { return l.class_id == lg.labels.front().class_id; });
  if (uniform) d.wreath_form = lg.labels.front().class_id;
  return d;
}

nlohmann::json out_descriptor_to_json(const OutDescriptor& d) {
  nlohmann::json j;
  j["certified"] = d.certified;
  j["fundamental_group_trivial"] = d.fundamental_group_trivial;
  j["amplification_note"] = d.amplification_note ? nlohmann::json(*d.amplification_note) : nlohmann::json(nullptr);
  j["unmet"] = d.unmet;
  if (!d.certified) {
    j["vertex_summands"] = "not certified";
    j["acting_group"] = "not certified";
    j["wreath_form"] = "not certified";
    return j;
  }
  j["vertex_summands"] = d.vertex_summands;
  auto orbits = nlohmann::json::array();
  for (const auto& o : d.acting_group.orbits) {
    auto members = nlohmann::json::array();
    for (int v : o) members.push_back(v);
    orbits.push_back(std::move(members));
  }
  j["acting_group"] = {{"order", d.acting_group.order},
                       {"generators", d.acting_group.generators},
                       {"orbits", std::move(orbits)}};
  if (d.wreath_form) {
    j["wreath_form"] = {{"class", *d.wreath_form}, {"acting_group_order", d.acting_group.order}};
  } else {
    j["wreath_form"] = nullptr;
  }
  return j;
}

PrimeFactorization prime_factorization_structure(const LabeledGraph& lg) {
  PrimeFactorization p;
  p.parts = join_decomposition(lg.graph);
  const auto h = check_hypotheses(lg, Theorem::E);
  p.certified = h.ok;
  p.unmet = h.unmet();
  return p;
}

std::vector<ObstructionWitness> rigidity_obstructions(const LabeledGraph& lg) {
  std::vector<ObstructionWitness> out;
  const auto& g = lg.graph;
  for (int v = 0; v < g.n(); ++v) {
    for (int w = 0; w < g.n(); ++w) {
      if (v == w || !dominated_by(g, v, w)) continue;
      const auto& lv = lg.label(v);
      const auto& lw = lg.label(w);
      const bool adjacent = g.adjacent(v, w);
      const bool w_center = lw.has(kDiffuseCenter) || lw.is_abelian_diffuse();
      if (adjacent && lv.is_abelian_diffuse() && w_center) out.push_back({v, w, "abelian-pair"});
      if (adjacent && lv.has(kCrossedProductInfiniteAbelianQuotient) && lw.has(kDiffuseCenter)) {
        out.push_back({v, w, "central-quotient"});
      }
      if (!adjacent && ((lv.is_abelian_diffuse() && lw.diffuse) ||
                        (lv.has(kFreeProductSplit) && (lw.has(kTraceZeroUnitary) || lw.diffuse)))) {
        out.push_back({v, w, "free-product-nonadjacent"});
      }
      if (lv.is_abelian_diffuse() && lw.is_abelian_diffuse()) out.push_back({v, w, "artin-transvection"});
    }
  }
  return out;
}

}  // namespace graphprod
