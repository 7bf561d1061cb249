#pragma once

// JSON documents shared by the command-line tool and the Python module.

#include <optional>

#include <json.hpp>

#include "graphprod/classification.hpp"
#include "graphprod/coxeter.hpp"
#include "graphprod/verification.hpp"

namespace graphprod {

nlohmann::json vertex_set_json(const VertexSet& s);

// Structural report; the labeled sections appear only when labels are given.
nlohmann::json analyze_report(const SimpleGraph& g, const LabeledGraph* labeled = nullptr);

// Vertices whose star separates the rest of the graph.
std::vector<int> separating_stars(const SimpleGraph& g);

nlohmann::json hypothesis_json(const HypothesisCheck& h);
nlohmann::json obstructions_json(const std::vector<ObstructionWitness>& obs);
nlohmann::json lemma_report_json(const LemmaReport& r);
nlohmann::json sample_report_json(const SampleReport& r);
nlohmann::json enumeration_json(const WordEnumeration& e, bool with_elements);
nlohmann::json iso_json(const std::optional<GraphIso>& iso);

}  // namespace graphprod
