#include "graphprod/report.hpp"

#include "graphprod/graph_io.hpp"
#include "graphprod/structure.hpp"

namespace graphprod {

using nlohmann::json;

namespace {

json sets_json(const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(vertex_set_json(s));
  return out;
}

json edges_json(const SimpleGraph& g, const std::vector<int>* to_host = nullptr) {
  json out = json::array();
  for (auto [u, v] : g.edges()) {
    if (to_host) {
      out.push_back({(*to_host)[static_cast<std::size_t>(u)], (*to_host)[static_cast<std::size_t>(v)]});
    } else {
      out.push_back({u, v});
    }
  }
  return out;
}

json quotient_json(const QuotientGraph& q, const std::vector<int>* to_host = nullptr) {
  json classes = json::array();
  for (const auto& c : q.classes) {
    json members = json::array();
    for (int v : c) members.push_back(to_host ? (*to_host)[static_cast<std::size_t>(v)] : v);
    classes.push_back(std::move(members));
  }
  return {{"classes", std::move(classes)}, {"edges", edges_json(q.class_adj)}};
}

}  // namespace

json vertex_set_json(const VertexSet& s) {
  json out = json::array();
  for (int v : s) out.push_back(v);
  return out;
}

std::vector<int> separating_stars(const SimpleGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.n(); ++v) {
    const Mask rest = low_bits(g.n()) & ~(g.row(v) | bit(v));
    if (components_within(g, rest).size() >= 2) out.push_back(v);
  }
  return out;
}

json hypothesis_json(const HypothesisCheck& h) {
  return {{"ok", h.ok}, {"unmet_graph", h.unmet_graph}, {"unmet_labels", h.unmet_labels}};
}

json obstructions_json(const std::vector<ObstructionWitness>& obs) {
  json out = json::array();
  for (const auto& o : obs) out.push_back({{"v", o.v}, {"v_prime", o.v_prime}, {"condition", o.condition}});
  return out;
}

json analyze_report(const SimpleGraph& g, const LabeledGraph* labeled) {
  json r;
  r["n"] = g.n();
  r["edges"] = edges_json(g);
  r["graph6"] = g.n() <= 62 ? json(to_graph6(g)) : json(nullptr);
  const int gi = girth(g);
  r["girth"] = gi == kInfiniteGirth ? json(nullptr) : json(gi);
  r["triangles"] = triangle_count(g);
  r["contains_square"] = contains_square(g);
  r["min_degree"] = min_degree(g);
  r["components"] = sets_json(connected_components(g));

  const auto jd = join_decomposition(g);
  r["join_decomposition"] = {{"clique_factor", vertex_set_json(jd.clique_factor)},
                             {"parts", sets_json(jd.parts)}};
  r["strongly_reduced"] = is_strongly_reduced(g);
  r["clique_reduced"] = is_clique_reduced(g);
  r["transvection_free"] = is_transvection_free(g);
  r["maximal_joins"] = sets_json(maximal_join_subgraphs(g));
  r["collapsible_subgraphs"] = sets_json(collapsible_subgraphs(g, 2));
  r["internal_vertices"] = vertex_set_json(internal_vertices(g));
  r["separating_stars"] = separating_stars(g);
  r["transvection_classes"] = quotient_json(transvection_quotient(g));

  const auto u = untransvectable_subgraph(g);
  json uj = {{"vertices", u.to_host}, {"edges", edges_json(u.graph, &u.to_host)}};
  if (!u.graph.is_empty()) {
    uj["clique_reduced"] = is_clique_reduced(u.graph);
    uj["classes"] = quotient_json(transvection_quotient(u.graph), &u.to_host);
  } else {
    uj["clique_reduced"] = nullptr;
    uj["classes"] = nullptr;
  }
  r["untransvectable"] = std::move(uj);

  json hyp = json::object();
  for (Theorem t : all_theorems()) {
    hyp[theorem_token(t)] = hypothesis_json(labeled ? check_hypotheses(*labeled, t) : check_graph_hypotheses(g, t));
  }
  r["hypotheses"] = std::move(hyp);
  r["labels_checked"] = labeled != nullptr;

  if (labeled) {
    json labels = json::array();
    for (const auto& l : labeled->labels) labels.push_back(label_to_json(l));
    r["labels"] = std::move(labels);
    r["obstructions"] = obstructions_json(rigidity_obstructions(*labeled));
    r["symmetry"] = out_descriptor_to_json(symmetry(*labeled));
    const auto pf = prime_factorization_structure(*labeled);
    r["prime_factorization"] = {{"clique_factor", vertex_set_json(pf.parts.clique_factor)},
                                {"parts", sets_json(pf.parts.parts)},
                                {"certified", pf.certified},
                                {"unmet", pf.unmet}};
  }
  return r;
}

json lemma_report_json(const LemmaReport& r) {
  json cex = json::array();
  for (const auto& c : r.counterexamples) {
    cex.push_back({{"graph6", to_graph6(c.graph)}, {"detail", c.detail}});
  }
  return {{"lemma", r.lemma},
          {"variant", r.variant == LemmaVariant::Faithful ? "faithful" : "drop-hypothesis"},
          {"checked", r.checked},
          {"eligible", r.eligible},
          {"counterexamples", std::move(cex)}};
}

json sample_report_json(const SampleReport& r) {
  return {{"n", r.n},     {"p", r.p},           {"trials", r.trials},
          {"seed", r.seed}, {"counts", r.counts}, {"fractions", r.fractions}};
}

json enumeration_json(const WordEnumeration& e, bool with_elements) {
  json out = {{"size", e.size()}, {"strata", e.strata}};
  if (with_elements) {
    json els = json::array();
    for (const auto& w : e.elements) els.push_back(w.letters());
    out["elements"] = std::move(els);
  }
  return out;
}

json iso_json(const std::optional<GraphIso>& iso) {
  if (!iso) return {{"isomorphic", false}, {"witness", "none"}};
  return {{"isomorphic", true}, {"witness", iso->map}};
}

}  // namespace graphprod
