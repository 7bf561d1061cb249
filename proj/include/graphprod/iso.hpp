#pragma once

// Isomorphisms and automorphism groups of small graphs, optionally
// respecting vertex colours.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "graphprod/graph.hpp"
#include "graphprod/labels.hpp"

namespace graphprod {

using Permutation = std::vector<int>;

struct GraphIso {
  int source_n = 0;
  int target_n = 0;
  Permutation map;  // vertex v of the source goes to map[v]

  GraphIso inverse() const;
  friend bool operator==(const GraphIso&, const GraphIso&) = default;
};

// Exact check that map is a bijection preserving adjacency and non-adjacency.
bool is_isomorphism(const SimpleGraph& g, const SimpleGraph& h, std::span<const int> map);

// Necessary conditions: degree sequence, girth and triangle count.
bool invariants_match(const SimpleGraph& g, const SimpleGraph& h);

// Some isomorphism g -> h. Deterministic; identical inputs yield the identity.
std::optional<GraphIso> isomorphism(const SimpleGraph& g, const SimpleGraph& h);

// Isomorphism additionally sending each vertex to one of the same colour.
std::optional<GraphIso> colored_isomorphism(const SimpleGraph& g, std::span<const int> g_colors,
                                            const SimpleGraph& h, std::span<const int> h_colors);

std::optional<GraphIso> labeled_isomorphism(const LabeledGraph& g, const LabeledGraph& h,
                                            LabelEquivalence mode);

inline constexpr int kMaxAutomorphismVertices = 16;

struct AutGroup {
  int n = 0;
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
  std::vector<VertexSet> orbits;  // ordered by smallest member
};

// Colour-preserving automorphisms (all colours equal if colors is empty).
// Throws CapExceeded above kMaxAutomorphismVertices.
AutGroup automorphism_group(const SimpleGraph& g, std::span<const int> colors = {});
AutGroup automorphism_group(const LabeledGraph& lg, LabelEquivalence mode);

// Size of the group generated by gens, by explicit closure. Throws
// CapExceeded once more than cap elements appear.
std::uint64_t closure_order(const std::vector<Permutation>& gens, int n,
                            std::uint64_t cap = 1'000'000);

Permutation compose(std::span<const int> first, std::span<const int> then);

}  // namespace graphprod
