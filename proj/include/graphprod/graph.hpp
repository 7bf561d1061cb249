#pragma once

// Finite simple graphs on at most 64 vertices with bit-row adjacency.

#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace graphprod {

using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

// Returned by girth() for forests.
inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

inline constexpr Mask low_bits(int n) {
  return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

inline constexpr Mask bit(int v) { return Mask{1} << v; }

/// A set of vertices of some host graph, stored as one machine word.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(Mask mask, int host_n);

  static VertexSet empty(int host_n) { return VertexSet(0, host_n); }
  static VertexSet all(int host_n) { return VertexSet(low_bits(host_n), host_n); }
  static VertexSet of(std::initializer_list<int> vertices, int host_n);
  static VertexSet of(std::span<const int> vertices, int host_n);

  Mask mask() const { return mask_; }
  int host_n() const { return host_n_; }

  bool contains(int v) const { return v >= 0 && v < 64 && ((mask_ >> v) & 1U); }
  int size() const { return std::popcount(mask_); }
  bool is_empty() const { return mask_ == 0; }
  bool subset_of(const VertexSet& other) const { return (mask_ & ~other.mask_) == 0; }
  // Smallest member; -1 if empty.
  int min() const { return mask_ == 0 ? -1 : std::countr_zero(mask_); }

  std::vector<int> to_vector() const;

  VertexSet operator|(const VertexSet& o) const { return {mask_ | o.mask_, host_n_}; }
  VertexSet operator&(const VertexSet& o) const { return {mask_ & o.mask_, host_n_}; }
  VertexSet operator-(const VertexSet& o) const { return {mask_ & ~o.mask_, host_n_}; }
  VertexSet complement() const { return {low_bits(host_n_) & ~mask_, host_n_}; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  // Iteration over members in increasing order.
  class Iterator {
   public:
    explicit Iterator(Mask m) : m_(m) {}
    int operator*() const { return std::countr_zero(m_); }
    Iterator& operator++() {
      m_ &= m_ - 1;
      return *this;
    }
    bool operator!=(const Iterator& o) const { return m_ != o.m_; }

   private:
    Mask m_;
  };
  Iterator begin() const { return Iterator(mask_); }
  Iterator end() const { return Iterator(0); }

 private:
  Mask mask_ = 0;
  int host_n_ = 0;
};

// Ordering used for every deterministic listing of subsets: (popcount, mask).
inline bool subset_order(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.mask() < b.mask();
}

using Edge = std::pair<int, int>;

/// Undirected loopless graph. Vertex order is part of the identity: two graphs
/// compare equal only if they have the same adjacency rows in the same order.
///
/// The zero-vertex graph exists only as the "empty subgraph" sentinel; all
/// user-facing constructors require at least one vertex.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  // Edgeless graph on n vertices, 1 <= n <= 64.
  explicit SimpleGraph(int n);
  SimpleGraph(int n, std::span<const Edge> edges);
  SimpleGraph(int n, std::initializer_list<Edge> edges);

  // Validates symmetry, empty diagonal and range of every row.
  static SimpleGraph from_rows(std::vector<Mask> rows);
  static SimpleGraph empty_sentinel() { return SimpleGraph(); }

  int n() const { return static_cast<int>(adj_.size()); }
  bool is_empty() const { return adj_.empty(); }
  Mask row(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  const std::vector<Mask>& rows() const { return adj_; }
  bool adjacent(int u, int v) const { return (row(u) >> v) & 1U; }
  int degree(int v) const { return std::popcount(row(v)); }
  int edge_count() const;
  std::vector<Edge> edges() const;
  VertexSet vertices() const { return VertexSet::all(n()); }

  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names);
  // Display name of v: the stored name, else its index.
  std::string name(int v) const;

  void add_edge(int u, int v);

  // Names are display-only and do not participate in equality.
  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.adj_ == b.adj_; }

 private:
  void check_vertex(int v) const;

  std::vector<Mask> adj_;
  std::vector<std::string> names_;
};

// Throws InputError unless 0 <= v < g.n().
void require_vertex(const SimpleGraph& g, int v);

VertexSet link(const SimpleGraph& g, int v);
VertexSet star(const SimpleGraph& g, int v);

// Vertices adjacent to every member of s; perp(g, {}) is the whole vertex set.
VertexSet perp(const SimpleGraph& g, const VertexSet& s);

// Length of a shortest cycle, or kInfiniteGirth for forests.
int girth(const SimpleGraph& g);

int triangle_count(const SimpleGraph& g);

// True iff there is an induced 4-cycle.
bool contains_square(const SimpleGraph& g);

std::vector<VertexSet> connected_components(const SimpleGraph& g);

// Components of the full subgraph on s, in order of smallest vertex.
std::vector<Mask> components_within(const SimpleGraph& g, Mask s);
bool is_connected_within(const SimpleGraph& g, Mask s);

int min_degree(const SimpleGraph& g);
bool is_clique(const SimpleGraph& g, Mask s);
bool is_independent(const SimpleGraph& g, Mask s);

SimpleGraph complement(const SimpleGraph& g);

struct InducedSubgraph {
  SimpleGraph graph;
  std::vector<int> to_host;  // vertex i of graph is to_host[i] in the host
};

// Full subgraph on s with vertices in increasing host order. Throws on empty s.
InducedSubgraph induced(const SimpleGraph& g, const VertexSet& s);

// Standard families used throughout tests and fixtures.
namespace families {
SimpleGraph cycle(int n);
SimpleGraph path(int n);
SimpleGraph complete(int n);
SimpleGraph edgeless(int n);
SimpleGraph complete_bipartite(int a, int b);
SimpleGraph star_graph(int leaves);
SimpleGraph petersen();
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);
// Relabel: vertex v of g becomes perm[v].
SimpleGraph permuted(const SimpleGraph& g, std::span<const int> perm);
}  // namespace families

}  // namespace graphprod
