#include "graphprod/verification.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

#include "graphprod/error.hpp"
#include "graphprod/iso.hpp"
#include "graphprod/parallel.hpp"
#include "graphprod/structure.hpp"

namespace graphprod {

// ---------------------------------------------------------------------------
// Catalog

namespace {

std::uint64_t code_for_order(const SimpleGraph& g, const std::vector<int>& order) {
  const int n = g.n();
  std::uint64_t code = 0;
  int b = 0;
  for (int i = 0; i < n; ++i) {
    const Mask row = g.row(order[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < n; ++j, ++b) {
      if ((row >> order[static_cast<std::size_t>(j)]) & 1U) code |= std::uint64_t{1} << b;
    }
  }
  return code;
}

// Isomorphism-invariant vertex colours: degree refined by neighbour colours,
// with ids given by the sorted signatures.
std::vector<int> invariant_colors(const SimpleGraph& g) {
  const int n = g.n();
  std::vector<int> c(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) c[static_cast<std::size_t>(v)] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(c[static_cast<std::size_t>(v)]);
      for (int w : VertexSet(g.row(v), n)) s.push_back(c[static_cast<std::size_t>(w)]);
      std::sort(s.begin() + 1, s.end());
    }
    std::vector<std::vector<int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v) {
      c[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<std::size_t>(v)]) -
          sorted.begin());
    }
    const int k = static_cast<int>(sorted.size());
    if (k == classes) return c;
    classes = k;
  }
}

}  // namespace

std::uint64_t canonical_code(const SimpleGraph& g) {
  const int n = g.n();
  if (n > kMaxCatalogVertices + 3) throw CapExceeded("canonical_code is limited to 11 vertices");
  const std::vector<int> c = invariant_colors(g);
  std::map<int, std::vector<int>> cells_by_color;
  for (int v = 0; v < n; ++v) cells_by_color[c[static_cast<std::size_t>(v)]].push_back(v);
  std::vector<std::vector<int>> cells;
  for (auto& [color, cell] : cells_by_color) cells.push_back(cell);

  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> order;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      best = std::min(best, code_for_order(g, order));
      return;
    }
    std::vector<int> cell = cells[k];
    do {
      order.insert(order.end(), cell.begin(), cell.end());
      rec(k + 1);
      order.resize(order.size() - cell.size());
    } while (std::next_permutation(cell.begin(), cell.end()));
  };
  rec(0);
  return best;
}

SimpleGraph graph_from_code(int n, std::uint64_t code) {
  SimpleGraph g(n);
  int b = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++b)
      if ((code >> b) & 1U) g.add_edge(i, j);
  return g;
}

std::vector<GraphCatalog> enumerate_graphs_up_to(int max_n, int threads) {
  if (max_n < 1 || max_n > kMaxCatalogVertices) {
    throw CapExceeded("graph enumeration supports 1..8 vertices, got " + std::to_string(max_n));
  }
  std::vector<GraphCatalog> out;
  out.push_back(GraphCatalog{1, {SimpleGraph(1)}});
  for (int n = 2; n <= max_n; ++n) {
    const auto& parents = out.back().graphs;
    std::vector<std::vector<std::uint64_t>> codes(parents.size());
    parallel_for(parents.size(), threads, [&](std::size_t i) {
      const SimpleGraph& p = parents[i];
      std::set<std::uint64_t> local;
      for (Mask nbrs = 0; nbrs < (Mask{1} << (n - 1)); ++nbrs) {
        SimpleGraph g(n);
        for (auto [u, v] : p.edges()) g.add_edge(u, v);
        for (int w : VertexSet(nbrs, n)) g.add_edge(w, n - 1);
        local.insert(canonical_code(g));
      }
      codes[i].assign(local.begin(), local.end());
    });
    std::set<std::uint64_t> all;
    for (const auto& c : codes) all.insert(c.begin(), c.end());
    GraphCatalog cat{n, {}};
    for (std::uint64_t code : all) cat.graphs.push_back(graph_from_code(n, code));
    out.push_back(std::move(cat));
  }
  return out;
}

GraphCatalog enumerate_graphs(int n, int threads) {
  return std::move(enumerate_graphs_up_to(n, threads).back());
}

// ---------------------------------------------------------------------------
// Lemmas

std::string lemma_token(Lemma lemma) {
  switch (lemma) {
    case Lemma::GirthTransvection: return "girth-transvection";
    case Lemma::StronglyReducedComponents: return "strongly-reduced-components";
    case Lemma::CollapsibleComponents: return "collapsible-components";
    case Lemma::ClassShape: return "class-shape";
    case Lemma::StarJoins: return "star-joins";
    case Lemma::MapLemma: return "map-lemma";
  }
  return "unknown";
}

Lemma parse_lemma(std::string_view token) {
  for (Lemma l : all_lemmas()) {
    if (lemma_token(l) == token) return l;
  }
  throw InputError("unknown lemma: " + std::string(token));
}

std::vector<Lemma> all_lemmas() {
  return {Lemma::GirthTransvection, Lemma::StronglyReducedComponents, Lemma::CollapsibleComponents,
          Lemma::ClassShape,        Lemma::StarJoins,                 Lemma::MapLemma};
}

namespace {

std::string mask_text(Mask m, int n) {
  std::string s = "{";
  bool first = true;
  for (int v : VertexSet(m, n)) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

bool components_strongly_reduced(const SimpleGraph& g) {
  for (const auto& c : connected_components(g)) {
    if (!is_strongly_reduced(induced(g, c).graph)) return false;
  }
  return true;
}

struct Outcome {
  bool eligible = false;
  std::optional<std::string> violation;
};

Outcome check_girth_transvection(const SimpleGraph& g, LemmaVariant variant) {
  Outcome o;
  o.eligible = girth(g) >= 5 && (variant == LemmaVariant::DropHypothesis || min_degree(g) >= 2);
  if (o.eligible && !is_transvection_free(g)) {
    o.violation = "transvectable vertices " +
                  mask_text(low_bits(g.n()) & ~untransvectable_vertices(g).mask(), g.n());
  }
  return o;
}

Outcome check_strongly_reduced_components(const SimpleGraph& g, LemmaVariant variant) {
  Outcome o;
  o.eligible = !contains_square(g) && (variant == LemmaVariant::DropHypothesis || is_transvection_free(g));
  if (!o.eligible) return o;
  for (const auto& c : connected_components(g)) {
    if (!is_strongly_reduced(induced(g, c).graph)) {
      o.violation = "component " + mask_text(c.mask(), g.n()) + " is not strongly reduced";
      return o;
    }
  }
  return o;
}

Outcome check_collapsible_components(const SimpleGraph& g, LemmaVariant variant) {
  Outcome o;
  o.eligible = variant == LemmaVariant::DropHypothesis || components_strongly_reduced(g);
  if (!o.eligible) return o;
  const auto comps = connected_components(g);
  for (const auto& d : collapsible_subgraphs(g, 2)) {
    Mask covered = 0;
    for (const auto& c : comps) {
      if ((c.mask() & d.mask()) != 0) covered |= c.mask();
    }
    if (covered != d.mask()) {
      o.violation = "collapsible " + mask_text(d.mask(), g.n()) + " is not a union of components";
      return o;
    }
  }
  return o;
}

// Classes of the relation "v <= w or w <= v", transitively closed.
std::vector<Mask> one_sided_classes(const SimpleGraph& g) {
  const int n = g.n();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (v != w && dominated_by(g, v, w)) parent[static_cast<std::size_t>(find(v))] = find(w);
  std::map<int, Mask> groups;
  for (int v = 0; v < n; ++v) groups[find(v)] |= bit(v);
  std::vector<Mask> out;
  for (auto& [root, m] : groups) out.push_back(m);
  return out;
}

Outcome check_class_shape(const SimpleGraph& g, LemmaVariant variant) {
  Outcome o;
  o.eligible = true;
  std::vector<Mask> classes;
  if (variant == LemmaVariant::DropHypothesis) {
    classes = one_sided_classes(g);
  } else {
    for (const auto& c : transvection_quotient(g).classes) classes.push_back(c.mask());
  }
  for (Mask c : classes) {
    const bool shape = is_clique(g, c) || is_independent(g, c);
    if (!shape || !is_collapsible(g, c)) {
      o.violation = "class " + mask_text(c, g.n()) +
                    (shape ? " is not collapsible" : " is neither complete nor edgeless");
      return o;
    }
  }
  return o;
}

Outcome check_star_joins(const SimpleGraph& g, LemmaVariant variant) {
  Outcome o;
  o.eligible = g.n() >= 2 && !contains_square(g) &&
               (variant == LemmaVariant::DropHypothesis || is_transvection_free(g));
  if (!o.eligible) return o;
  const int n = g.n();
  std::vector<VertexSet> stars;
  for (int v = 0; v < n; ++v) stars.push_back(star(g, v));
  std::sort(stars.begin(), stars.end(), subset_order);
  stars.erase(std::unique(stars.begin(), stars.end()), stars.end());
  if (maximal_join_subgraphs(g) != stars) {
    o.violation = "maximal joins differ from the vertex stars";
    return o;
  }
  for (int v = 0; v < n; ++v) {
    const auto st = induced(g, star(g, v));
    const VertexSet cf = maximal_clique_factor(st.graph);
    if (cf.size() != 1 || st.to_host[static_cast<std::size_t>(cf.min())] != v) {
      o.violation = "clique factor of st(" + std::to_string(v) + ") is not {" + std::to_string(v) + "}";
      return o;
    }
    if (!is_irreducible(g, g.row(v))) {
      o.violation = "lk(" + std::to_string(v) + ") is a join";
      return o;
    }
  }
  return o;
}

// All elements of the group generated by gens, for small permutation groups.
std::vector<Permutation> group_elements(const std::vector<Permutation>& gens, int n) {
  Permutation id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> seen{id};
  std::deque<Permutation> queue{id};
  while (!queue.empty()) {
    Permutation p = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      Permutation q = compose(p, s);
      if (seen.insert(q).second) queue.push_back(std::move(q));
    }
  }
  return {seen.begin(), seen.end()};
}

struct MapPartner {
  SimpleGraph graph;
};

Outcome check_map_lemma(const SimpleGraph& g, LemmaVariant variant,
                        const std::vector<SimpleGraph>& partners) {
  Outcome o;
  o.eligible = variant == LemmaVariant::DropHypothesis || is_clique_reduced(g);
  if (!o.eligible) return o;
  const int n = g.n();
  const auto quotient = transvection_quotient(g);
  // Maps induced by automorphisms: points and whole classes.
  for (const auto& phi : group_elements(automorphism_group(g).generators, n)) {
    std::vector<Mask> point(static_cast<std::size_t>(n)), cls(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      const int w = phi[static_cast<std::size_t>(v)];
      point[static_cast<std::size_t>(v)] = bit(w);
      cls[static_cast<std::size_t>(v)] =
          quotient.classes[static_cast<std::size_t>(quotient.vertex_to_class[static_cast<std::size_t>(w)])].mask();
    }
    for (const auto* alpha : {&point, &cls}) {
      if (auto why = map_lemma_violation(g, g, *alpha)) {
        o.violation = *why;
        return o;
      }
    }
  }
  if (n > kMapLemmaRelationVertices) return o;
  // Every relation between the vertices of g and a partner graph.
  for (const auto& h : partners) {
    const int m = h.n();
    if (variant == LemmaVariant::Faithful && !is_clique_reduced(h)) continue;
    const std::uint32_t total = 1U << (n * m);
    std::vector<Mask> alpha(static_cast<std::size_t>(n));
    for (std::uint32_t r = 0; r < total; ++r) {
      bool rows_ok = true;
      Mask cols = 0;
      for (int v = 0; v < n; ++v) {
        alpha[static_cast<std::size_t>(v)] = (r >> (v * m)) & low_bits(m);
        rows_ok = rows_ok && alpha[static_cast<std::size_t>(v)] != 0;
        cols |= alpha[static_cast<std::size_t>(v)];
      }
      if (!rows_ok || cols != low_bits(m)) continue;
      if (auto why = map_lemma_violation(g, h, alpha)) {
        o.violation = *why + " (partner with " + std::to_string(m) + " vertices)";
        return o;
      }
    }
  }
  return o;
}

Outcome check_one(const SimpleGraph& g, Lemma lemma, LemmaVariant variant,
                  const std::vector<SimpleGraph>& partners) {
  switch (lemma) {
    case Lemma::GirthTransvection: return check_girth_transvection(g, variant);
    case Lemma::StronglyReducedComponents: return check_strongly_reduced_components(g, variant);
    case Lemma::CollapsibleComponents: return check_collapsible_components(g, variant);
    case Lemma::ClassShape: return check_class_shape(g, variant);
    case Lemma::StarJoins: return check_star_joins(g, variant);
    case Lemma::MapLemma: return check_map_lemma(g, variant, partners);
  }
  return {};
}

}  // namespace

std::optional<std::string> map_lemma_violation(const SimpleGraph& g, const SimpleGraph& h,
                                               std::span<const Mask> alpha) {
  const int n = g.n(), m = h.n();
  if (static_cast<int>(alpha.size()) != n) throw InputError("map must have one entry per vertex");
  std::vector<Mask> beta(static_cast<std::size_t>(m), 0);
  for (int v = 0; v < n; ++v) {
    const Mask a = alpha[static_cast<std::size_t>(v)];
    if (a == 0 || (a & ~low_bits(m)) != 0) return std::nullopt;
    for (int w : VertexSet(a, m)) beta[static_cast<std::size_t>(w)] |= bit(v);
  }
  for (Mask b : beta) {
    if (b == 0) return std::nullopt;
  }
  auto perp_of = [](const SimpleGraph& x, Mask s) {
    Mask p = low_bits(x.n());
    for (int v : VertexSet(s, x.n())) p &= x.row(v);
    return p;
  };
  // Conditions (adjacent images land in each other's perp).
  for (auto [v, w] : g.edges()) {
    if ((alpha[static_cast<std::size_t>(w)] & ~perp_of(h, alpha[static_cast<std::size_t>(v)])) != 0) return std::nullopt;
    if ((alpha[static_cast<std::size_t>(v)] & ~perp_of(h, alpha[static_cast<std::size_t>(w)])) != 0) return std::nullopt;
  }
  for (auto [v, w] : h.edges()) {
    if ((beta[static_cast<std::size_t>(w)] & ~perp_of(g, beta[static_cast<std::size_t>(v)])) != 0) return std::nullopt;
    if ((beta[static_cast<std::size_t>(v)] & ~perp_of(g, beta[static_cast<std::size_t>(w)])) != 0) return std::nullopt;
  }

  const auto qg = transvection_quotient(g);
  const auto qh = transvection_quotient(h);
  auto class_index = [](const QuotientGraph& q, Mask s) -> int {
    for (std::size_t i = 0; i < q.classes.size(); ++i) {
      if (q.classes[i].mask() == s) return static_cast<int>(i);
    }
    return -1;
  };
  std::vector<int> abar(qg.classes.size()), bbar(qh.classes.size());
  for (std::size_t i = 0; i < qg.classes.size(); ++i) {
    Mask image = 0;
    for (int v : qg.classes[i]) image |= alpha[static_cast<std::size_t>(v)];
    abar[i] = class_index(qh, image);
    if (abar[i] < 0) {
      return "alpha of class " + mask_text(qg.classes[i].mask(), n) + " is " + mask_text(image, m) +
             ", not a class";
    }
  }
  for (std::size_t i = 0; i < qh.classes.size(); ++i) {
    Mask image = 0;
    for (int w : qh.classes[i]) image |= beta[static_cast<std::size_t>(w)];
    bbar[i] = class_index(qg, image);
    if (bbar[i] < 0) {
      return "beta of class " + mask_text(qh.classes[i].mask(), m) + " is " + mask_text(image, n) +
             ", not a class";
    }
  }
  if (qg.classes.size() != qh.classes.size()) return std::string("class counts differ");
  for (std::size_t i = 0; i < abar.size(); ++i) {
    if (bbar[static_cast<std::size_t>(abar[i])] != static_cast<int>(i)) return std::string("induced maps are not inverse");
  }
  for (std::size_t i = 0; i < abar.size(); ++i)
    for (std::size_t j = 0; j < abar.size(); ++j)
      if (qg.class_adj.adjacent(static_cast<int>(i), static_cast<int>(j)) !=
          qh.class_adj.adjacent(abar[i], abar[j]))
        return std::string("induced class map does not preserve adjacency");
  return std::nullopt;
}

LemmaReport check_lemma(std::span<const GraphCatalog> catalogs, Lemma lemma, LemmaVariant variant,
                        int threads) {
  std::vector<const SimpleGraph*> graphs;
  std::vector<SimpleGraph> partners;
  for (const auto& c : catalogs) {
    for (const auto& g : c.graphs) {
      graphs.push_back(&g);
      if (g.n() <= kMapLemmaRelationVertices) partners.push_back(g);
    }
  }
  std::vector<Outcome> outcomes(graphs.size());
  parallel_for(graphs.size(), threads, [&](std::size_t i) {
    outcomes[i] = check_one(*graphs[i], lemma, variant, partners);
  });
  LemmaReport report;
  report.lemma = lemma_token(lemma);
  report.variant = variant;
  report.checked = graphs.size();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (outcomes[i].eligible) ++report.eligible;
    if (outcomes[i].violation) report.counterexamples.push_back({*graphs[i], *outcomes[i].violation});
  }
  return report;
}

LemmaReport check_lemma(const GraphCatalog& catalog, Lemma lemma, LemmaVariant variant,
                        int threads) {
  return check_lemma(std::span<const GraphCatalog>(&catalog, 1), lemma, variant, threads);
}

// ---------------------------------------------------------------------------
// Sampler

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

namespace {

double keyed_uniform(std::uint64_t seed, std::uint64_t trial, std::uint64_t edge) {
  const std::uint64_t r = splitmix64(splitmix64(splitmix64(seed) ^ trial) ^ edge);
  return static_cast<double>(r >> 11) * 0x1.0p-53;
}

void require_probability(double p) {
  if (!(p > 0.0 && p < 1.0)) throw InputError("edge probability must lie strictly between 0 and 1");
}

}  // namespace

SimpleGraph sample_graph(int n, double p, std::uint64_t seed, std::uint64_t trial) {
  require_probability(p);
  SimpleGraph g(n);
  std::uint64_t edge = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++edge)
      if (keyed_uniform(seed, trial, edge) < p) g.add_edge(i, j);
  return g;
}

SampleReport sample_er(int n, double p, int trials, std::uint64_t seed, int threads) {
  require_probability(p);
  if (trials < 1) throw InputError("trials must be at least 1");
  if (n < 1 || n > kMaxVertices) throw InputError("n must be in [1, 64]");
  constexpr std::size_t k = kSamplePredicates.size();
  std::vector<std::array<bool, k>> results(static_cast<std::size_t>(trials));
  parallel_for(results.size(), threads, [&](std::size_t t) {
    const SimpleGraph g = sample_graph(n, p, seed, t);
    results[t] = {is_transvection_free(g), girth(g) >= 5,         !contains_square(g),
                  min_degree(g) >= 2,       connected_components(g).size() == 1,
                  !separating_star(g).has_value()};
  });
  SampleReport report{n, p, trials, seed, {}, {}};
  for (std::size_t i = 0; i < k; ++i) {
    int c = 0;
    for (const auto& r : results) c += r[i] ? 1 : 0;
    const std::string name(kSamplePredicates[i]);
    report.counts[name] = c;
    report.fractions[name] = static_cast<double>(c) / trials;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Word oracle

WordOracle::WordOracle(const SimpleGraph& g, int radius, std::size_t cap)
    : g_(g), radius_(radius), n_(g.n()) {
  if (radius < 0) throw InputError("oracle radius must be nonnegative");
  keys_.push_back({});
  lengths_.push_back(0);
  ids_.emplace(std::vector<int>{}, 0);
  strata_.push_back(1);
  std::size_t begin = 0;
  for (int len = 0; len <= radius; ++len) {
    const std::size_t end = keys_.size();
    std::size_t added = 0;
    next_.resize(end * static_cast<std::size_t>(n_), -1);
    for (std::size_t s = begin; s < end; ++s) {
      for (int a = 0; a < n_; ++a) {
        std::vector<int> raw = keys_[s];
        raw.push_back(a);
        std::vector<int> k = naive_key(raw);
        if (static_cast<int>(k.size()) > radius) continue;
        auto it = ids_.find(k);
        if (it == ids_.end()) {
          if (keys_.size() >= cap) throw CapExceeded("word oracle exceeds its state cap");
          it = ids_.emplace(k, static_cast<int>(keys_.size())).first;
          lengths_.push_back(static_cast<int>(k.size()));
          keys_.push_back(std::move(k));
          ++added;
        }
        next_[s * static_cast<std::size_t>(n_) + static_cast<std::size_t>(a)] = it->second;
      }
    }
    if (len < radius) strata_.push_back(added);
    begin = end;
  }
  next_.resize(keys_.size() * static_cast<std::size_t>(n_), -1);
}

std::vector<int> WordOracle::naive_key(std::span<const int> raw) const {
  for (int a : raw) {
    if (a < 0 || a >= n_) throw InputError("oracle letter out of range");
  }
  std::vector<int> word(raw.begin(), raw.end());
  while (true) {
    // Explore every rearrangement reachable by swapping neighbouring
    // commuting letters; any adjacent equal pair found is deleted.
    std::set<std::vector<int>> seen{word};
    std::deque<std::vector<int>> queue{word};
    bool shortened = false;
    while (!queue.empty() && !shortened) {
      std::vector<int> w = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == w[i + 1]) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
          word = std::move(w);
          shortened = true;
          break;
        }
        if (g_.adjacent(w[i], w[i + 1])) {
          std::vector<int> x = w;
          std::swap(x[i], x[i + 1]);
          if (seen.insert(x).second) queue.push_back(std::move(x));
        }
      }
    }
    if (!shortened) return *seen.begin();
  }
}

std::optional<int> WordOracle::locate(std::span<const int> raw) const {
  const std::vector<int> k = naive_key(raw);
  auto it = ids_.find(k);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

bool WordOracle::equal(std::span<const int> a, std::span<const int> b) const {
  return naive_key(a) == naive_key(b);
}

std::vector<char> WordOracle::product_states(std::span<const Mask> factors) const {
  std::vector<char> in(keys_.size(), 0);
  in[0] = 1;
  for (Mask s : factors) {
    std::deque<int> queue;
    for (std::size_t i = 0; i < in.size(); ++i)
      if (in[i]) queue.push_back(static_cast<int>(i));
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int a : VertexSet(s & low_bits(n_), n_)) {
        const int y = step(x, a);
        if (y >= 0 && !in[static_cast<std::size_t>(y)]) {
          in[static_cast<std::size_t>(y)] = 1;
          queue.push_back(y);
        }
      }
    }
  }
  return in;
}

bool WordOracle::in_parabolic(std::span<const int> raw, Mask s) const {
  return in_product(raw, std::span<const Mask>(&s, 1));
}

bool WordOracle::in_product(std::span<const int> raw, std::span<const Mask> factors) const {
  const auto id = locate(raw);
  if (!id) throw InputError("word lies outside the oracle radius");
  return product_states(factors)[static_cast<std::size_t>(*id)] != 0;
}

}  // namespace graphprod
