#pragma once

// Per-vertex algebra-class labels and labeled graphs.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "graphprod/graph.hpp"

namespace graphprod {

enum class LabelEquivalence { StrictClass, StableClass, WstarClass };

std::string to_string(LabelEquivalence mode);
// Accepts "strict-class", "stable-class", "wstar-class"; throws InputError otherwise.
LabelEquivalence parse_label_equivalence(std::string_view token);

enum Capability : std::uint32_t {
  kDiffuseCenter = 1U << 0,
  kFreeProductSplit = 1U << 1,
  kTraceZeroUnitary = 1U << 2,
  kCrossedProductInfiniteAbelianQuotient = 1U << 3,
};

std::string capability_name(Capability c);
std::vector<std::string> capability_names(std::uint32_t caps);
Capability parse_capability(std::string_view token);

inline constexpr std::string_view kAbelianDiffuseToken = "L(Z)";
inline constexpr std::string_view kHyperfiniteToken = "R";

struct AlgebraLabel {
  std::string class_id;
  std::string stable_class_id;  // defaults to class_id
  std::string wstar_class_id;   // defaults to class_id
  bool diffuse = false;
  bool amenable = false;
  bool ii1_factor = false;
  std::optional<bool> icc_group;
  std::uint32_t caps = 0;

  bool has(Capability c) const { return (caps & c) != 0; }
  bool is_abelian_diffuse() const { return class_id == kAbelianDiffuseToken; }

  friend bool operator==(const AlgebraLabel&, const AlgebraLabel&) = default;
};

// The class token compared under a given equivalence.
const std::string& label_token(const AlgebraLabel& label, LabelEquivalence mode);

// Fills default class tokens, rejects ii1_factor without diffuse, and
// renames amenable II_1 factors to "R". A warning is appended when a
// user-supplied token is replaced.
AlgebraLabel normalize_label(AlgebraLabel label, int vertex, std::vector<std::string>* warnings);

AlgebraLabel abelian_diffuse_label();              // L(Z)
AlgebraLabel hyperfinite_label();                  // R
AlgebraLabel factor_label(std::string class_id);   // non-amenable II_1 factor

struct LabeledGraph {
  SimpleGraph graph;
  std::vector<AlgebraLabel> labels;

  LabeledGraph() = default;
  // Throws InputError if the label count differs from the vertex count.
  LabeledGraph(SimpleGraph g, std::vector<AlgebraLabel> l);

  int n() const { return graph.n(); }
  const AlgebraLabel& label(int v) const { return labels[static_cast<std::size_t>(v)]; }
};

LabeledGraph uniform_labels(const SimpleGraph& g, const AlgebraLabel& label);

struct LabeledGraphInput {
  LabeledGraph graph;
  std::vector<std::string> warnings;
};

// {"n", "edges", "names"?, "labels": [{"class", "diffuse", "amenable",
// "factor", "icc"?, "stable_class"?, "wstar_class"?, "caps"?}, ...]}
LabeledGraphInput labeled_graph_from_json(const nlohmann::json& doc);
LabeledGraphInput parse_labeled_json(std::string_view text);
nlohmann::json label_to_json(const AlgebraLabel& label);
nlohmann::json labeled_graph_to_json(const LabeledGraph& lg);

// Dense colour ids for the vertices of a and b under a shared token dictionary,
// so equal colours mean equivalent labels.
std::pair<std::vector<int>, std::vector<int>> joint_label_colors(const LabeledGraph& a,
                                                                 const LabeledGraph& b,
                                                                 LabelEquivalence mode);
std::vector<int> label_colors(const LabeledGraph& a, LabelEquivalence mode);

}  // namespace graphprod
