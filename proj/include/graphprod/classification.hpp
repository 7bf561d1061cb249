#pragma once

// Hypothesis checks for the rigidity theorems, two-graph classification
// verdicts, symmetry descriptors and transvection obstructions.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "graphprod/iso.hpp"
#include "graphprod/labels.hpp"
#include "graphprod/structure.hpp"

namespace graphprod {

enum class Theorem {
  A,
  B,
  BGeneral,
  C,
  D,
  DMoreover,
  E,
  F,
  CorRAAG,
  CorHyperfinite,
  CorICC,
};

// Input tokens: "A", "B", "B-general", "C", "D", "D-moreover", "E", "F",
// "Cor-RAAG", "Cor-hyperfinite", "Cor-ICC".
std::string theorem_token(Theorem t);
Theorem parse_theorem(std::string_view token);
// Verdict tags: "Thm-A", ..., "Cor-RAAG", ...
std::string theorem_tag(Theorem t);
std::vector<Theorem> all_theorems();

struct HypothesisCheck {
  bool ok = true;
  std::vector<std::string> unmet_graph;
  std::vector<std::string> unmet_labels;

  std::vector<std::string> unmet() const;
};

// Only the graph conditions of the theorem.
HypothesisCheck check_graph_hypotheses(const SimpleGraph& g, Theorem t);
HypothesisCheck check_hypotheses(const LabeledGraph& lg, Theorem t);

enum class VerdictKind { IsomorphicCertified, DistinctCertified, EquivalentKnown, Undecided };
enum class ConclusionStrength { StrongIntertwining, StableIsomorphism, UnitaryConjugacy, SingleUnitary };

std::string to_string(VerdictKind k);
std::string to_string(ConclusionStrength s);

struct UnmetHypothesis {
  std::string theorem;     // tag
  std::string side;        // "left" or "right"
  std::string hypothesis;

  friend bool operator==(const UnmetHypothesis&, const UnmetHypothesis&) = default;
};

struct ClassificationVerdict {
  VerdictKind kind = VerdictKind::Undecided;
  std::string theorem_tag = "none";
  std::optional<std::string> derived_from;  // theorem behind a corollary tag
  std::optional<GraphIso> witness;
  std::optional<ConclusionStrength> strength;
  std::optional<std::string> amplification_note;  // "t=1 forced" or "stable (some t>0)"
  std::string reason;
  std::vector<UnmetHypothesis> unmet;
};

// Tries D-moreover, D, C, A, B, B-general in that order, then the
// complete-bipartite rule. A theorem whose hypotheses hold on both sides
// decides Distinct when its invariant differs and Isomorphic when a
// class-preserving isomorphism exists; otherwise the next theorem is tried.
ClassificationVerdict classify(const LabeledGraph& a, const LabeledGraph& b);

nlohmann::json verdict_to_json(const ClassificationVerdict& v);

// Whether a relation between the vertex sets, with every vertex related to
// something, can preserve adjacency and non-adjacency between related pairs.
// nullopt when the search exceeds its budget.
std::optional<bool> compatible_relation_exists(const SimpleGraph& g, const SimpleGraph& h,
                                              std::size_t budget = 2'000'000);

// (m, m') with m <= m' if g is K_{m,m'} with both sides of size >= 2.
std::optional<std::pair<int, int>> complete_bipartite_sides(const SimpleGraph& g);

struct OutDescriptor {
  bool certified = false;                   // D-moreover hypotheses hold
  bool fundamental_group_trivial = false;   // D hypotheses hold
  std::optional<std::string> amplification_note;
  std::vector<std::string> vertex_summands;  // "Aut(<class>)"
  AutGroup acting_group;                     // label-preserving automorphisms
  std::optional<std::string> wreath_form;    // when every class agrees
  std::vector<std::string> unmet;
};

OutDescriptor symmetry(const LabeledGraph& lg);
nlohmann::json out_descriptor_to_json(const OutDescriptor& d);

struct PrimeFactorization {
  JoinDecomposition parts;
  bool certified = false;
  std::vector<std::string> unmet;
};

PrimeFactorization prime_factorization_structure(const LabeledGraph& lg);

struct ObstructionWitness {
  int v = 0;
  int v_prime = 0;
  std::string condition;  // abelian-pair, central-quotient, free-product-nonadjacent, artin-transvection

  friend bool operator==(const ObstructionWitness&, const ObstructionWitness&) = default;
};

std::vector<ObstructionWitness> rigidity_obstructions(const LabeledGraph& lg);

}  // namespace graphprod
