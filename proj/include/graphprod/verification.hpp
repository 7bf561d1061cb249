#pragma once

// Exhaustive small-graph catalogs, brute-force lemma checks, the
// Erdos-Renyi sampler and a Coxeter word oracle that shares no code with the
// normal-form engine.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graphprod/graph.hpp"

namespace graphprod {

inline constexpr int kMaxCatalogVertices = 8;

// Unlabeled graphs on n vertices, n = 0..8.
inline constexpr std::array<std::size_t, 9> kUnlabeledGraphCounts = {1,  1,   2,    4,    11,
                                                                     34, 156, 1044, 12346};

struct GraphCatalog {
  int n = 0;
  std::vector<SimpleGraph> graphs;  // sorted by canonical code
};

// Code of the lexicographically least relabeling consistent with a
// degree-refined vertex ordering. Equal codes <=> isomorphic graphs.
std::uint64_t canonical_code(const SimpleGraph& g);
SimpleGraph graph_from_code(int n, std::uint64_t code);

// One representative per isomorphism class, 1 <= n <= 8.
GraphCatalog enumerate_graphs(int n, int threads = 0);
// Catalogs for every size 1..max_n.
std::vector<GraphCatalog> enumerate_graphs_up_to(int max_n, int threads = 0);

enum class Lemma {
  GirthTransvection,          // girth >= 5 and min degree >= 2 => transvection-free
  StronglyReducedComponents,  // transvection-free and square-free => components strongly reduced
  CollapsibleComponents,      // components strongly reduced => collapsible sets are component unions
  ClassShape,                 // each ~-class is collapsible and complete or edgeless
  StarJoins,                  // transvection-free, square-free => maximal joins are the stars
  MapLemma,                   // compatible vertex-to-subset maps induce inverse class isomorphisms
};

std::string lemma_token(Lemma lemma);
Lemma parse_lemma(std::string_view token);
std::vector<Lemma> all_lemmas();

enum class LemmaVariant {
  Faithful,
  // Negative control: the check runs with one hypothesis removed and is
  // expected to find counterexamples.
  DropHypothesis,
};

struct Counterexample {
  SimpleGraph graph;
  std::string detail;
};

struct LemmaReport {
  std::string lemma;
  LemmaVariant variant = LemmaVariant::Faithful;
  std::size_t checked = 0;   // graphs examined
  std::size_t eligible = 0;  // graphs meeting the hypotheses
  std::vector<Counterexample> counterexamples;
};

// For the map lemma the relation search is exhaustive only on graphs with at
// most kMapLemmaRelationVertices vertices; larger graphs use the maps
// induced by automorphisms and by their action on classes.
inline constexpr int kMapLemmaRelationVertices = 4;

LemmaReport check_lemma(const GraphCatalog& catalog, Lemma lemma,
                        LemmaVariant variant = LemmaVariant::Faithful, int threads = 0);
LemmaReport check_lemma(std::span<const GraphCatalog> catalogs, Lemma lemma,
                        LemmaVariant variant = LemmaVariant::Faithful, int threads = 0);

// The map lemma's conditions on a relation r between the vertices of g and h,
// r[v] = alpha(v) as a mask over h. Returns an explanation if the
// conclusion fails for maps satisfying the conditions, nullopt otherwise.
std::optional<std::string> map_lemma_violation(const SimpleGraph& g, const SimpleGraph& h,
                                               std::span<const Mask> alpha);

struct SampleReport {
  int n = 0;
  double p = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::map<std::string, int> counts;  // predicate -> number of trials satisfying it
  std::map<std::string, double> fractions;
};

inline constexpr std::array<std::string_view, 6> kSamplePredicates = {
    "transvection_free", "girth_ge_5", "square_free", "min_degree_ge_2", "connected",
    "no_separating_star"};

std::uint64_t splitmix64(std::uint64_t x);
// The graph drawn for one trial; edge {i, j} is present iff its keyed uniform
// variate falls below p.
SimpleGraph sample_graph(int n, double p, std::uint64_t seed, std::uint64_t trial);
SampleReport sample_er(int n, double p, int trials, std::uint64_t seed, int threads = 0);

/// Cayley-ball oracle for a right-angled Coxeter group. Elements are found by
/// exhaustive rewriting of raw words (commuting swaps and deletion of equal
/// neighbours until nothing applies) and keyed by the least word of their
/// swap class.
class WordOracle {
 public:
  WordOracle(const SimpleGraph& g, int radius, std::size_t cap = 2'000'000);

  int radius() const { return radius_; }
  std::size_t size() const { return keys_.size(); }
  const std::vector<std::size_t>& strata() const { return strata_; }

  // State id of the element, or nullopt if it lies outside the ball.
  std::optional<int> locate(std::span<const int> raw) const;
  // Right multiplication by a generator; -1 outside the ball.
  int step(int state, int letter) const { return next_[static_cast<std::size_t>(state) * n_ + letter]; }
  int identity() const { return 0; }
  int length(int state) const { return lengths_[static_cast<std::size_t>(state)]; }
  const std::vector<int>& key(int state) const { return keys_[static_cast<std::size_t>(state)]; }

  bool equal(std::span<const int> a, std::span<const int> b) const;
  // Reachable from the identity using generators of s only, inside the ball.
  bool in_parabolic(std::span<const int> raw, Mask s) const;
  // Reachable through successive factor walks inside the ball.
  bool in_product(std::span<const int> raw, std::span<const Mask> factors) const;
  std::vector<char> product_states(std::span<const Mask> factors) const;

  // The rewriting normal key of any raw word, without the ball.
  std::vector<int> naive_key(std::span<const int> raw) const;

 private:
  SimpleGraph g_;
  int radius_;
  int n_;
  std::vector<std::vector<int>> keys_;
  std::vector<int> lengths_;
  std::vector<int> next_;
  std::vector<std::size_t> strata_;
  std::map<std::vector<int>, int> ids_;
};

}  // namespace graphprod
