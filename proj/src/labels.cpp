#include "graphprod/labels.hpp"

#include <map>

#include "graphprod/error.hpp"
#include "graphprod/graph_io.hpp"

namespace graphprod {

using nlohmann::json;

std::string to_string(LabelEquivalence mode) {
  switch (mode) {
    case LabelEquivalence::StrictClass: return "strict-class";
    case LabelEquivalence::StableClass: return "stable-class";
    case LabelEquivalence::WstarClass: return "wstar-class";
  }
  return "strict-class";
}

LabelEquivalence parse_label_equivalence(std::string_view token) {
  if (token == "strict-class") return LabelEquivalence::StrictClass;
  if (token == "stable-class") return LabelEquivalence::StableClass;
  if (token == "wstar-class") return LabelEquivalence::WstarClass;
  throw InputError("unknown label equivalence mode: " + std::string(token));
}

namespace {

struct CapabilityEntry {
  Capability cap;
  const char* name;
};

constexpr CapabilityEntry kCapabilities[] = {
    {kDiffuseCenter, "diffuse_center"},
    {kFreeProductSplit, "free_product_split"},
    {kTraceZeroUnitary, "trace_zero_unitary"},
    {kCrossedProductInfiniteAbelianQuotient, "crossed_product_infinite_abelian_quotient"},
};

}  // namespace

std::string capability_name(Capability c) {
  for (const auto& e : kCapabilities) {
    if (e.cap == c) return e.name;
  }
  return "unknown";
}

std::vector<std::string> capability_names(std::uint32_t caps) {
  std::vector<std::string> out;
  for (const auto& e : kCapabilities) {
    if (caps & e.cap) out.emplace_back(e.name);
  }
  return out;
}

Capability parse_capability(std::string_view token) {
  for (const auto& e : kCapabilities) {
    if (token == e.name) return e.cap;
  }
  throw InputError("unknown capability: " + std::string(token));
}

const std::string& label_token(const AlgebraLabel& label, LabelEquivalence mode) {
  switch (mode) {
    case LabelEquivalence::StableClass: return label.stable_class_id;
    case LabelEquivalence::WstarClass: return label.wstar_class_id;
    case LabelEquivalence::StrictClass: break;
  }
  return label.class_id;
}

AlgebraLabel normalize_label(AlgebraLabel label, int vertex, std::vector<std::string>* warnings) {
  const std::string where = "vertex " + std::to_string(vertex);
  if (label.class_id.empty()) throw InputError(where + ": empty class token");
  if (label.ii1_factor && !label.diffuse) {
    throw InputError(where + ": a II_1 factor label must be diffuse");
  }
  if (label.stable_class_id.empty()) label.stable_class_id = label.class_id;
  if (label.wstar_class_id.empty()) label.wstar_class_id = label.class_id;
  if (label.amenable && label.ii1_factor) {
    const std::string r(kHyperfiniteToken);
    if (label.class_id != r && warnings != nullptr) {
      warnings->push_back(where + ": amenable II_1 factor class '" + label.class_id +
                          "' normalized to 'R'");
    }
    label.class_id = r;
    label.stable_class_id = r;
  }
  return label;
}

AlgebraLabel abelian_diffuse_label() {
  AlgebraLabel l;
  l.class_id = std::string(kAbelianDiffuseToken);
  l.diffuse = true;
  l.amenable = true;
  return normalize_label(l, 0, nullptr);
}

AlgebraLabel hyperfinite_label() {
  AlgebraLabel l;
  l.class_id = std::string(kHyperfiniteToken);
  l.diffuse = true;
  l.amenable = true;
  l.ii1_factor = true;
  return normalize_label(l, 0, nullptr);
}

AlgebraLabel factor_label(std::string class_id) {
  AlgebraLabel l;
  l.class_id = std::move(class_id);
  l.diffuse = true;
  l.ii1_factor = true;
  return normalize_label(l, 0, nullptr);
}

LabeledGraph::LabeledGraph(SimpleGraph g, std::vector<AlgebraLabel> l)
    : graph(std::move(g)), labels(std::move(l)) {
  if (static_cast<int>(labels.size()) != graph.n()) {
    throw InputError("label count " + std::to_string(labels.size()) +
                     " does not match vertex count " + std::to_string(graph.n()));
  }
}

LabeledGraph uniform_labels(const SimpleGraph& g, const AlgebraLabel& label) {
  return LabeledGraph(g, std::vector<AlgebraLabel>(static_cast<std::size_t>(g.n()), label));
}

namespace {

bool optional_bool(const json& obj, const char* key, bool fallback, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_boolean()) throw InputError(where + ": '" + key + "' must be a boolean");
  return it->get<bool>();
}

std::string optional_string(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) return {};
  if (!it->is_string()) throw InputError(where + ": '" + key + "' must be a string");
  return it->get<std::string>();
}

AlgebraLabel label_from_json(const json& obj, int vertex, std::vector<std::string>* warnings) {
  const std::string where = "label " + std::to_string(vertex);
  if (!obj.is_object()) throw InputError(where + ": must be an object");
  AlgebraLabel l;
  auto cls = obj.find("class");
  if (cls == obj.end() || !cls->is_string()) {
    throw InputError(where + ": 'class' must be a string");
  }
  l.class_id = cls->get<std::string>();
  l.ii1_factor = optional_bool(obj, "factor", false, where);
  l.diffuse = optional_bool(obj, "diffuse", l.ii1_factor, where);
  l.amenable = optional_bool(obj, "amenable", false, where);
  if (obj.contains("icc")) l.icc_group = optional_bool(obj, "icc", false, where);
  l.stable_class_id = optional_string(obj, "stable_class", where);
  l.wstar_class_id = optional_string(obj, "wstar_class", where);
  if (auto caps = obj.find("caps"); caps != obj.end()) {
    if (!caps->is_array()) throw InputError(where + ": 'caps' must be an array");
    for (const auto& c : *caps) {
      if (!c.is_string()) throw InputError(where + ": capability must be a string");
      l.caps |= parse_capability(c.get<std::string>());
    }
  }
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    static const char* known[] = {"class", "diffuse", "amenable", "factor", "icc",
                                  "stable_class", "wstar_class", "caps"};
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) throw InputError(where + ": unknown field '" + it.key() + "'");
  }
  return normalize_label(std::move(l), vertex, warnings);
}

}  // namespace

LabeledGraphInput labeled_graph_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("labeled graph must be a JSON object");
  json plain = doc;
  plain.erase("labels");
  SimpleGraph g = graph_from_json(plain);
  auto it = doc.find("labels");
  if (it == doc.end() || !it->is_array()) throw InputError("'labels' must be an array");
  LabeledGraphInput out;
  std::vector<AlgebraLabel> labels;
  int v = 0;
  for (const auto& entry : *it) labels.push_back(label_from_json(entry, v++, &out.warnings));
  out.graph = LabeledGraph(std::move(g), std::move(labels));
  return out;
}

LabeledGraphInput parse_labeled_json(std::string_view text) {
  return labeled_graph_from_json(parse_json_text(text));
}

json label_to_json(const AlgebraLabel& l) {
  json j = {{"class", l.class_id}, {"diffuse", l.diffuse}, {"amenable", l.amenable},
            {"factor", l.ii1_factor}};
  if (l.icc_group) j["icc"] = *l.icc_group;
  if (l.stable_class_id != l.class_id) j["stable_class"] = l.stable_class_id;
  if (l.wstar_class_id != l.class_id) j["wstar_class"] = l.wstar_class_id;
  if (l.caps != 0) j["caps"] = capability_names(l.caps);
  return j;
}

json labeled_graph_to_json(const LabeledGraph& lg) {
  json j = graph_to_json(lg.graph);
  j["labels"] = json::array();
  for (const auto& l : lg.labels) j["labels"].push_back(label_to_json(l));
  return j;
}

std::pair<std::vector<int>, std::vector<int>> joint_label_colors(const LabeledGraph& a,
                                                                 const LabeledGraph& b,
                                                                 LabelEquivalence mode) {
  std::map<std::string, int> ids;
  for (const auto* lg : {&a, &b}) {
    for (const auto& l : lg->labels) ids.emplace(label_token(l, mode), 0);
  }
  int next = 0;
  for (auto& [token, id] : ids) id = next++;
  auto colors = [&](const LabeledGraph& lg) {
    std::vector<int> out;
    for (const auto& l : lg.labels) out.push_back(ids.at(label_token(l, mode)));
    return out;
  };
  return {colors(a), colors(b)};
}

std::vector<int> label_colors(const LabeledGraph& a, LabelEquivalence mode) {
  return joint_label_colors(a, a, mode).first;
}

}  // namespace graphprod
