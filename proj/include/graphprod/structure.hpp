#pragma once

// Derived combinatorial structure of a finite simple graph: join
// decompositions, collapsible subgraphs, the transvection preorder and its
// quotient, separating stars and graph surgery.

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "graphprod/graph.hpp"

namespace graphprod {

// Operations that scan all 2^n vertex subsets refuse larger graphs.
inline constexpr int kMaxSubsetEnumerationVertices = 24;

struct JoinDecomposition {
  VertexSet clique_factor;
  // Irreducible factors with at least two vertices, sorted by (size, min vertex).
  std::vector<VertexSet> parts;
};

/// Graph on the equivalence classes of v ~ w  <=>  lk(v) in st(w) and lk(w) in st(v).
struct QuotientGraph {
  std::vector<VertexSet> classes;  // ordered by smallest member
  SimpleGraph class_adj;           // vertex i is classes[i]
  std::vector<int> vertex_to_class;
};

struct TransvectionStructure {
  VertexSet untransvectable;
  std::vector<std::pair<int, int>> leq_pairs;  // (v, w), v != w, lk(v) in st(w)
  QuotientGraph classes;
};

VertexSet maximal_clique_factor(const SimpleGraph& g);

// Requires g nonempty.
JoinDecomposition join_decomposition(const SimpleGraph& g);

// Whether the full subgraph on s splits as a join of two nonempty full subgraphs.
bool is_join(const SimpleGraph& g, Mask s);
bool is_irreducible(const SimpleGraph& g, Mask s);

// The maximal join full subgraphs, in (popcount, mask) order. Exponential in n.
std::vector<VertexSet> maximal_join_subgraphs(const SimpleGraph& g);

// st(v) \ s == perp(s) for every v in s.
bool is_collapsible(const SimpleGraph& g, Mask s);

// Every collapsible s with |s| >= min_size, in (popcount, mask) order. Exponential in n.
std::vector<VertexSet> collapsible_subgraphs(const SimpleGraph& g, int min_size);

// No proper collapsible s with |s| >= 2.
bool is_strongly_reduced(const SimpleGraph& g);
// No collapsible complete s with |s| >= 2, the whole graph included.
bool is_clique_reduced(const SimpleGraph& g);

// v <= w in the transvection preorder: lk(v) is contained in st(w).
inline bool dominated_by(const SimpleGraph& g, int v, int w) {
  return (g.row(v) & ~(g.row(w) | bit(w))) == 0;
}

bool is_untransvectable(const SimpleGraph& g, int v);
bool is_transvection_free(const SimpleGraph& g);
VertexSet untransvectable_vertices(const SimpleGraph& g);

QuotientGraph transvection_quotient(const SimpleGraph& g);
TransvectionStructure transvection_structure(const SimpleGraph& g);

// Full subgraph on the untransvectable vertices. When there are none the
// graph is the zero-vertex sentinel and to_host is empty.
InducedSubgraph untransvectable_subgraph(const SimpleGraph& g);

// Vertices whose link is not a clique.
VertexSet internal_vertices(const SimpleGraph& g);

// Smallest v such that the full subgraph on V \ st(v) is disconnected.
std::optional<int> separating_star(const SimpleGraph& g);

struct Collapse {
  VertexSet set;
};

struct Substitute {
  int vertex;
  SimpleGraph replacement;
};

using SurgeryOp = std::variant<Collapse, Substitute>;

// Replaces a collapsible set by a single vertex adjacent to exactly its perp.
// The new vertex takes the smallest index of the set; the other survivors keep
// their relative order.
SimpleGraph collapse(const SimpleGraph& g, const VertexSet& s);

// Replaces v by a copy of h whose vertices occupy indices v .. v+|h|-1; each
// copy is joined to lk(v). Collapsing that block recovers g exactly.
SimpleGraph substitute(const SimpleGraph& g, int v, const SimpleGraph& h);

SimpleGraph graph_surgery(const SimpleGraph& g, const SurgeryOp& op);

}  // namespace graphprod
