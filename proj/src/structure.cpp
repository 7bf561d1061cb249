#include "graphprod/structure.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "graphprod/error.hpp"

namespace graphprod {

namespace {

void require_subset_scan(const SimpleGraph& g) {
  if (g.n() > kMaxSubsetEnumerationVertices) {
    throw CapExceeded("subset enumeration is limited to " +
                      std::to_string(kMaxSubsetEnumerationVertices) + " vertices, graph has " +
                      std::to_string(g.n()));
  }
}

// Connected components of the complement of the full subgraph on s.
std::vector<Mask> co_components(const SimpleGraph& g, Mask s) {
  std::vector<Mask> out;
  Mask remaining = s;
  while (remaining != 0) {
    Mask comp = remaining & (~remaining + 1);
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      for (int v : VertexSet(frontier, g.n())) next |= ~g.row(v) & ~bit(v);
      next &= s & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

bool part_order(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.min() < b.min();
}

}  // namespace

VertexSet maximal_clique_factor(const SimpleGraph& g) {
  const Mask all = low_bits(g.n());
  Mask out = 0;
  for (int v = 0; v < g.n(); ++v) {
    if ((g.row(v) | bit(v)) == all) out |= bit(v);
  }
  return VertexSet(out, g.n());
}

JoinDecomposition join_decomposition(const SimpleGraph& g) {
  if (g.is_empty()) throw InputError("join decomposition of the empty graph");
  JoinDecomposition out;
  out.clique_factor = maximal_clique_factor(g);
  const Mask rest = low_bits(g.n()) & ~out.clique_factor.mask();
  for (Mask c : co_components(g, rest)) out.parts.emplace_back(c, g.n());
  std::sort(out.parts.begin(), out.parts.end(), part_order);
  return out;
}

bool is_join(const SimpleGraph& g, Mask s) {
  if (std::popcount(s) < 2) return false;
  return co_components(g, s).size() >= 2;
}

bool is_irreducible(const SimpleGraph& g, Mask s) { return !is_join(g, s); }

std::vector<VertexSet> maximal_join_subgraphs(const SimpleGraph& g) {
  require_subset_scan(g);
  const Mask limit = low_bits(g.n());
  std::vector<Mask> joins;
  for (Mask s = 1; s != 0 && s <= limit; ++s) {
    if (std::popcount(s) < 2) continue;
    // A join always contains an edge between its two sides.
    if (is_independent(g, s)) continue;
    if (is_join(g, s)) joins.push_back(s);
    if (s == limit) break;
  }
  // Every join lies in a maximal one of larger size, so scanning by
  // decreasing size needs to compare against kept sets only.
  std::stable_sort(joins.begin(), joins.end(),
                   [](Mask a, Mask b) { return std::popcount(a) > std::popcount(b); });
  std::vector<Mask> maximal;
  for (Mask s : joins) {
    const bool covered = std::any_of(maximal.begin(), maximal.end(),
                                     [s](Mask m) { return (s & ~m) == 0; });
    if (!covered) maximal.push_back(s);
  }
  std::vector<VertexSet> out;
  for (Mask m : maximal) out.emplace_back(m, g.n());
  std::sort(out.begin(), out.end(), subset_order);
  return out;
}

bool is_collapsible(const SimpleGraph& g, Mask s) {
  if (s == 0) return false;
  Mask p = low_bits(g.n());
  for (int v : VertexSet(s, g.n())) p &= g.row(v);
  for (int v : VertexSet(s, g.n())) {
    if (((g.row(v) | bit(v)) & ~s) != p) return false;
  }
  return true;
}

std::vector<VertexSet> collapsible_subgraphs(const SimpleGraph& g, int min_size) {
  if (min_size < 1) throw InputError("collapsible_subgraphs: min_size must be at least 1");
  require_subset_scan(g);
  const Mask limit = low_bits(g.n());
  std::vector<VertexSet> out;
  for (Mask s = 1; s != 0 && s <= limit; ++s) {
    if (std::popcount(s) >= min_size && is_collapsible(g, s)) out.emplace_back(s, g.n());
    if (s == limit) break;
  }
  std::sort(out.begin(), out.end(), subset_order);
  return out;
}

bool is_strongly_reduced(const SimpleGraph& g) {
  require_subset_scan(g);
  const Mask limit = low_bits(g.n());
  for (Mask s = 1; s < limit; ++s) {
    if (std::popcount(s) >= 2 && is_collapsible(g, s)) return false;
  }
  return true;
}

bool is_clique_reduced(const SimpleGraph& g) {
  require_subset_scan(g);
  const Mask limit = low_bits(g.n());
  // The whole graph counts: a complete graph on two or more vertices is not
  // clique-reduced.
  for (Mask s = 1; s <= limit; ++s) {
    if (std::popcount(s) >= 2 && is_clique(g, s) && is_collapsible(g, s)) return false;
  }
  return true;
}

bool is_untransvectable(const SimpleGraph& g, int v) {
  require_vertex(g, v);
  for (int w = 0; w < g.n(); ++w) {
    if (w != v && dominated_by(g, v, w)) return false;
  }
  return true;
}

VertexSet untransvectable_vertices(const SimpleGraph& g) {
  Mask out = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (is_untransvectable(g, v)) out |= bit(v);
  }
  return VertexSet(out, g.n());
}

bool is_transvection_free(const SimpleGraph& g) {
  return untransvectable_vertices(g).size() == g.n();
}

QuotientGraph transvection_quotient(const SimpleGraph& g) {
  const int n = g.n();
  QuotientGraph q;
  q.vertex_to_class.assign(static_cast<std::size_t>(n), -1);
  Mask assigned = 0;
  for (int v = 0; v < n; ++v) {
    if ((assigned >> v) & 1U) continue;
    Mask cls = bit(v);
    for (int w = v + 1; w < n; ++w) {
      if (dominated_by(g, v, w) && dominated_by(g, w, v)) cls |= bit(w);
    }
    const int id = static_cast<int>(q.classes.size());
    for (int w : VertexSet(cls, n)) q.vertex_to_class[static_cast<std::size_t>(w)] = id;
    q.classes.emplace_back(cls, n);
    assigned |= cls;
  }
  const int k = static_cast<int>(q.classes.size());
  if (k == 0) return q;
  q.class_adj = SimpleGraph(k);
  for (auto [u, v] : g.edges()) {
    const int cu = q.vertex_to_class[static_cast<std::size_t>(u)];
    const int cv = q.vertex_to_class[static_cast<std::size_t>(v)];
    if (cu != cv) q.class_adj.add_edge(cu, cv);
  }
  return q;
}

TransvectionStructure transvection_structure(const SimpleGraph& g) {
  TransvectionStructure out;
  out.untransvectable = untransvectable_vertices(g);
  for (int v = 0; v < g.n(); ++v) {
    for (int w = 0; w < g.n(); ++w) {
      if (v != w && dominated_by(g, v, w)) out.leq_pairs.emplace_back(v, w);
    }
  }
  out.classes = transvection_quotient(g);
  return out;
}

InducedSubgraph untransvectable_subgraph(const SimpleGraph& g) {
  const VertexSet u = untransvectable_vertices(g);
  if (u.is_empty()) return InducedSubgraph{SimpleGraph::empty_sentinel(), {}};
  return induced(g, u);
}

VertexSet internal_vertices(const SimpleGraph& g) {
  Mask out = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (!is_clique(g, g.row(v))) out |= bit(v);
  }
  return VertexSet(out, g.n());
}

std::optional<int> separating_star(const SimpleGraph& g) {
  for (int v = 0; v < g.n(); ++v) {
    const Mask rest = low_bits(g.n()) & ~(g.row(v) | bit(v));
    if (components_within(g, rest).size() >= 2) return v;
  }
  return std::nullopt;
}

SimpleGraph collapse(const SimpleGraph& g, const VertexSet& s) {
  if (s.is_empty() || !is_collapsible(g, s.mask())) {
    throw InputError("collapse on a non-collapsible set");
  }
  const int keeper = s.min();
  const Mask keep = (low_bits(g.n()) & ~s.mask()) | bit(keeper);
  std::vector<int> to_new(static_cast<std::size_t>(g.n()), -1);
  std::vector<int> survivors = VertexSet(keep, g.n()).to_vector();
  for (std::size_t i = 0; i < survivors.size(); ++i) to_new[static_cast<std::size_t>(survivors[i])] = static_cast<int>(i);

  const Mask p = perp(g, s).mask();
  SimpleGraph out(static_cast<int>(survivors.size()));
  for (auto [u, v] : g.edges()) {
    if (s.contains(u) || s.contains(v)) continue;
    out.add_edge(to_new[static_cast<std::size_t>(u)], to_new[static_cast<std::size_t>(v)]);
  }
  for (int w : VertexSet(p, g.n())) {
    out.add_edge(to_new[static_cast<std::size_t>(keeper)], to_new[static_cast<std::size_t>(w)]);
  }
  if (!g.names().empty()) {
    std::vector<std::string> names;
    for (int h : survivors) names.push_back(g.name(h));
    out.set_names(std::move(names));
  }
  return out;
}

SimpleGraph substitute(const SimpleGraph& g, int v, const SimpleGraph& h) {
  require_vertex(g, v);
  if (h.is_empty()) throw InputError("substitute: replacement graph is empty");
  const int k = h.n();
  const int total = g.n() - 1 + k;
  if (total > kMaxVertices) throw InputError("substitute: result exceeds 64 vertices");
  auto remap = [&](int u) { return u < v ? u : u + k - 1; };

  SimpleGraph out(total);
  for (auto [a, b] : g.edges()) {
    if (a == v || b == v) continue;
    out.add_edge(remap(a), remap(b));
  }
  for (auto [a, b] : h.edges()) out.add_edge(v + a, v + b);
  for (int w : link(g, v)) {
    for (int i = 0; i < k; ++i) out.add_edge(v + i, remap(w));
  }
  if (!g.names().empty()) {
    std::vector<std::string> names;
    for (int u = 0; u < g.n(); ++u) {
      if (u != v) {
        names.push_back(g.name(u));
        continue;
      }
      for (int i = 0; i < k; ++i) names.push_back(g.name(v) + "." + h.name(i));
    }
    out.set_names(std::move(names));
  }
  return out;
}

SimpleGraph graph_surgery(const SimpleGraph& g, const SurgeryOp& op) {
  return std::visit(
      [&](const auto& o) -> SimpleGraph {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Collapse>) {
          return collapse(g, o.set);
        } else {
          return substitute(g, o.vertex, o.replacement);
        }
      },
      op);
}

}  // namespace graphprod
