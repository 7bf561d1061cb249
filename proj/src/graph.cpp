#include "graphprod/graph.hpp"

#include <algorithm>
#include <string>

#include "graphprod/error.hpp"

namespace graphprod {

VertexSet::VertexSet(Mask mask, int host_n) : mask_(mask), host_n_(host_n) {
  if (host_n < 0 || host_n > kMaxVertices) {
    throw InputError("vertex set host size out of range: " + std::to_string(host_n));
  }
  if ((mask & ~low_bits(host_n)) != 0) {
    throw InputError("vertex set has members outside a host of " + std::to_string(host_n) +
                     " vertices");
  }
}

VertexSet VertexSet::of(std::initializer_list<int> vertices, int host_n) {
  return of(std::span<const int>(vertices.begin(), vertices.size()), host_n);
}

VertexSet VertexSet::of(std::span<const int> vertices, int host_n) {
  Mask m = 0;
  for (int v : vertices) {
    if (v < 0 || v >= host_n) {
      throw InputError("vertex " + std::to_string(v) + " out of range for " +
                       std::to_string(host_n) + " vertices");
    }
    m |= bit(v);
  }
  return VertexSet(m, host_n);
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int v : *this) out.push_back(v);
  return out;
}

SimpleGraph::SimpleGraph(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw InputError("vertex count must be in [1, 64], got " + std::to_string(n));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

SimpleGraph::SimpleGraph(int n, std::span<const Edge> edges) : SimpleGraph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

SimpleGraph::SimpleGraph(int n, std::initializer_list<Edge> edges)
    : SimpleGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

SimpleGraph SimpleGraph::from_rows(std::vector<Mask> rows) {
  const int n = static_cast<int>(rows.size());
  if (n > kMaxVertices) throw InputError("more than 64 vertices");
  for (int u = 0; u < n; ++u) {
    const Mask r = rows[static_cast<std::size_t>(u)];
    if ((r & ~low_bits(n)) != 0) throw InputError("adjacency row has bits beyond n");
    if ((r >> u) & 1U) throw InputError("loop at vertex " + std::to_string(u));
    for (int v = 0; v < n; ++v) {
      if (((r >> v) & 1U) != ((rows[static_cast<std::size_t>(v)] >> u) & 1U)) {
        throw InputError("adjacency is not symmetric");
      }
    }
  }
  SimpleGraph g;
  g.adj_ = std::move(rows);
  return g;
}

void SimpleGraph::check_vertex(int v) const {
  if (v < 0 || v >= n()) {
    throw InputError("vertex " + std::to_string(v) + " out of range for " +
                     std::to_string(n()) + " vertices");
  }
}

void SimpleGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u)] |= bit(v);
  adj_[static_cast<std::size_t>(v)] |= bit(u);
}

int SimpleGraph::edge_count() const {
  int total = 0;
  for (Mask r : adj_) total += std::popcount(r);
  return total / 2;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n(); ++u) {
    for (int v : VertexSet(row(u) & ~low_bits(u + 1), n())) out.emplace_back(u, v);
  }
  return out;
}

void SimpleGraph::set_names(std::vector<std::string> names) {
  if (!names.empty() && static_cast<int>(names.size()) != n()) {
    throw InputError("name count does not match vertex count");
  }
  names_ = std::move(names);
}

std::string SimpleGraph::name(int v) const {
  if (!names_.empty()) return names_[static_cast<std::size_t>(v)];
  return std::to_string(v);
}

void require_vertex(const SimpleGraph& g, int v) {
  if (v < 0 || v >= g.n()) {
    throw InputError("vertex " + std::to_string(v) + " out of range for " +
                     std::to_string(g.n()) + " vertices");
  }
}

VertexSet link(const SimpleGraph& g, int v) {
  require_vertex(g, v);
  return VertexSet(g.row(v), g.n());
}

VertexSet star(const SimpleGraph& g, int v) {
  require_vertex(g, v);
  return VertexSet(g.row(v) | bit(v), g.n());
}

VertexSet perp(const SimpleGraph& g, const VertexSet& s) {
  Mask acc = low_bits(g.n());
  for (int v : s) acc &= g.row(v);
  return VertexSet(acc, g.n());
}

int girth(const SimpleGraph& g) {
  const int n = g.n();
  int best = kInfiniteGirth;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> queue(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    int head = 0, tail = 0;
    queue[static_cast<std::size_t>(tail++)] = root;
    while (head < tail) {
      const int u = queue[static_cast<std::size_t>(head++)];
      const int du = dist[static_cast<std::size_t>(u)];
      // Any cycle through root found later is at least this long.
      if (best != kInfiniteGirth && 2 * du + 1 >= best) break;
      for (int w : VertexSet(g.row(u), n)) {
        auto& dw = dist[static_cast<std::size_t>(w)];
        if (dw < 0) {
          dw = du + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue[static_cast<std::size_t>(tail++)] = w;
        } else if (parent[static_cast<std::size_t>(u)] != w) {
          best = std::min(best, du + dw + 1);
        }
      }
    }
  }
  return best;
}

int triangle_count(const SimpleGraph& g) {
  int count = 0;
  for (auto [u, v] : g.edges()) {
    count += std::popcount(g.row(u) & g.row(v) & ~low_bits(v + 1));
  }
  return count;
}

bool contains_square(const SimpleGraph& g) {
  const int n = g.n();
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      if (g.adjacent(u, w)) continue;
      const Mask common = g.row(u) & g.row(w);
      for (int x : VertexSet(common, n)) {
        if ((common & ~g.row(x) & ~bit(x) & ~low_bits(x + 1)) != 0) return true;
      }
    }
  }
  return false;
}

std::vector<Mask> components_within(const SimpleGraph& g, Mask s) {
  std::vector<Mask> out;
  Mask remaining = s;
  while (remaining != 0) {
    Mask comp = remaining & (~remaining + 1);
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      for (int v : VertexSet(frontier, g.n())) next |= g.row(v);
      next &= s & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

bool is_connected_within(const SimpleGraph& g, Mask s) {
  return components_within(g, s).size() <= 1;
}

std::vector<VertexSet> connected_components(const SimpleGraph& g) {
  std::vector<VertexSet> out;
  for (Mask c : components_within(g, low_bits(g.n()))) out.emplace_back(c, g.n());
  return out;
}

int min_degree(const SimpleGraph& g) {
  int best = kMaxVertices;
  for (int v = 0; v < g.n(); ++v) best = std::min(best, g.degree(v));
  return g.n() == 0 ? 0 : best;
}

bool is_clique(const SimpleGraph& g, Mask s) {
  for (int v : VertexSet(s, g.n())) {
    if ((s & ~bit(v) & ~g.row(v)) != 0) return false;
  }
  return true;
}

bool is_independent(const SimpleGraph& g, Mask s) {
  for (int v : VertexSet(s, g.n())) {
    if ((s & g.row(v)) != 0) return false;
  }
  return true;
}

SimpleGraph complement(const SimpleGraph& g) {
  std::vector<Mask> rows(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) {
    rows[static_cast<std::size_t>(v)] = low_bits(g.n()) & ~g.row(v) & ~bit(v);
  }
  SimpleGraph c = SimpleGraph::from_rows(std::move(rows));
  c.set_names(g.names());
  return c;
}

InducedSubgraph induced(const SimpleGraph& g, const VertexSet& s) {
  if (s.is_empty()) throw InputError("induced subgraph on an empty vertex set");
  if ((s.mask() & ~low_bits(g.n())) != 0) throw InputError("induced: set exceeds host");
  InducedSubgraph out;
  out.to_host = s.to_vector();
  const int m = static_cast<int>(out.to_host.size());
  std::vector<int> to_local(static_cast<std::size_t>(g.n()), -1);
  for (int i = 0; i < m; ++i) to_local[static_cast<std::size_t>(out.to_host[static_cast<std::size_t>(i)])] = i;
  std::vector<Mask> rows(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    for (int w : VertexSet(g.row(out.to_host[static_cast<std::size_t>(i)]) & s.mask(), g.n())) {
      rows[static_cast<std::size_t>(i)] |= bit(to_local[static_cast<std::size_t>(w)]);
    }
  }
  out.graph = SimpleGraph::from_rows(std::move(rows));
  if (!g.names().empty()) {
    std::vector<std::string> names;
    for (int h : out.to_host) names.push_back(g.name(h));
    out.graph.set_names(std::move(names));
  }
  return out;
}

namespace families {

SimpleGraph cycle(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SimpleGraph path(int n) {
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph complete(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

SimpleGraph edgeless(int n) { return SimpleGraph(n); }

SimpleGraph complete_bipartite(int a, int b) {
  SimpleGraph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

SimpleGraph star_graph(int leaves) {
  SimpleGraph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

SimpleGraph petersen() {
  SimpleGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph g(a.n() + b.n());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
  return g;
}

SimpleGraph permuted(const SimpleGraph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw InputError("permutation size mismatch");
  SimpleGraph h(g.n());
  for (auto [u, v] : g.edges()) {
    h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  }
  return h;
}

}  // namespace families

}  // namespace graphprod
