// Extension module graphprod._core. Graph arguments are JSON documents
// (optionally labeled) or graph6 strings; results are JSON text decoded by
// the Python package.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphprod/classification.hpp"
#include "graphprod/coxeter.hpp"
#include "graphprod/error.hpp"
#include "graphprod/graph_io.hpp"
#include "graphprod/iso.hpp"
#include "graphprod/report.hpp"
#include "graphprod/verification.hpp"

namespace py = pybind11;
using namespace graphprod;
using nlohmann::json;

namespace {

struct Input {
  SimpleGraph graph;
  std::optional<LabeledGraph> labeled;
  std::vector<std::string> warnings;
};

Input load(const std::string& text) {
  Input in;
  if (text.empty() || text.front() != '{') {
    in.graph = parse_graph6(text);
    return in;
  }
  const json doc = parse_json_text(text);
  if (doc.contains("labels")) {
    auto parsed = labeled_graph_from_json(doc);
    in.graph = parsed.graph.graph;
    in.labeled = std::move(parsed.graph);
    in.warnings = std::move(parsed.warnings);
  } else {
    in.graph = graph_from_json(doc);
  }
  return in;
}

LabeledGraph load_labeled(const std::string& text) {
  auto in = load(text);
  if (!in.labeled) throw InputError("expected a labeled graph with a \"labels\" field");
  return std::move(*in.labeled);
}

CoxeterWord word(const GraphRef& g, const std::vector<int>& letters) {
  for (int a : letters) {
    if (a < 0 || a >= g->n()) throw InputError("letter " + std::to_string(a) + " is not a vertex");
  }
  return CoxeterWord::reduce(g, letters);
}

VertexSet subset(const SimpleGraph& g, const std::vector<int>& vs) {
  for (int v : vs) {
    if (v < 0 || v >= g.n()) throw InputError("vertex " + std::to_string(v) + " out of range");
  }
  return VertexSet::of(std::span<const int>(vs), g.n());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graph product rigidity toolkit (native core)";

  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<CapExceeded> cap_exceeded(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      std::string msg = e.what();
      if (e.byte_offset()) msg += " (byte offset " + std::to_string(*e.byte_offset()) + ")";
      py::set_error(input_error, msg.c_str());
    } catch (const CapExceeded& e) {
      py::set_error(cap_exceeded, e.what());
    }
  });

  m.def("parse", [](const std::string& text) {
    const auto in = load(text);
    json out = in.labeled ? labeled_graph_to_json(*in.labeled) : graph_to_json(in.graph);
    out["warnings"] = in.warnings;
    return out.dump();
  });
  m.def("to_graph6", [](const std::string& text) { return to_graph6(load(text).graph); });
  m.def("to_dot", [](const std::string& text) { return to_dot(load(text).graph); });

  m.def("analyze", [](const std::string& text) {
    const auto in = load(text);
    return analyze_report(in.graph, in.labeled ? &*in.labeled : nullptr).dump();
  });
  m.def("classify", [](const std::string& a, const std::string& b) {
    return verdict_to_json(classify(load_labeled(a), load_labeled(b))).dump();
  });
  m.def("isomorphism", [](const std::string& a, const std::string& b, const std::string& mode) {
    if (mode.empty()) return iso_json(isomorphism(load(a).graph, load(b).graph)).dump();
    return iso_json(labeled_isomorphism(load_labeled(a), load_labeled(b), parse_label_equivalence(mode))).dump();
  });

  m.def("reduce", [](const std::string& text, const std::vector<int>& letters) {
    return word(share(load(text).graph), letters).letters();
  });
  m.def("inverse", [](const std::string& text, const std::vector<int>& letters) {
    return invert(word(share(load(text).graph), letters)).letters();
  });
  m.def("multiply", [](const std::string& text, const std::vector<int>& a, const std::vector<int>& b) {
    const auto g = share(load(text).graph);
    return multiply(word(g, a), word(g, b)).letters();
  });
  m.def("boundary", [](const std::string& text, const std::vector<int>& letters) {
    const auto b = support_and_boundary(word(share(load(text).graph), letters));
    return json{{"support", vertex_set_json(b.support)},
                {"starts_with", vertex_set_json(b.starts_with)},
                {"ends_with", vertex_set_json(b.ends_with)},
                {"link", vertex_set_json(b.lk)}}
        .dump();
  });
  m.def("parabolic_member", [](const std::string& text, const std::vector<int>& letters, const std::vector<int>& s) {
    const auto in = load(text);
    return parabolic_membership(word(share(in.graph), letters), subset(in.graph, s));
  });
  m.def("product_member",
        [](const std::string& text, const std::vector<int>& letters, const std::vector<std::vector<int>>& factors) {
          const auto in = load(text);
          if (factors.empty()) throw InputError("product membership needs at least one factor");
          std::vector<VertexSet> fs;
          for (const auto& f : factors) fs.push_back(subset(in.graph, f));
          return product_set_membership(word(share(in.graph), letters), fs);
        });
  m.def("split", [](const std::string& text, const std::vector<int>& letters, const std::vector<int>& left,
                    const std::vector<int>& right) {
    const auto in = load(text);
    const auto d = split_lcr(word(share(in.graph), letters), subset(in.graph, left), subset(in.graph, right));
    return json{{"left", d.left.letters()}, {"core", d.core.letters()}, {"right", d.right.letters()}}.dump();
  });
  m.def("enumerate_words", [](const std::string& text, int max_len, std::optional<std::vector<int>> gens,
                              bool elements, std::size_t cap) {
    if (max_len < 0) throw InputError("max_len must be non-negative");
    const auto in = load(text);
    const VertexSet s = gens ? subset(in.graph, *gens) : VertexSet::all(in.graph.n());
    std::optional<WordEnumeration> e;
    {
      py::gil_scoped_release release;
      e = enumerate_words(share(in.graph), max_len, s, cap);
    }
    auto out = enumeration_json(*e, elements);
    out["max_len"] = max_len;
    out["generators"] = vertex_set_json(s);
    return out.dump();
  });

  m.def("catalog", [](int n, int threads) {
    if (n < 1 || n > 8) throw InputError("catalog supports 1..8 vertices");
    GraphCatalog c;
    {
      py::gil_scoped_release release;
      c = enumerate_graphs(n, threads);
    }
    std::vector<std::string> out;
    for (const auto& g : c.graphs) out.push_back(to_graph6(g));
    return out;
  });
  m.def("lemmas", [] {
    std::vector<std::string> out;
    for (Lemma l : all_lemmas()) out.push_back(lemma_token(l));
    return out;
  });
  m.def("verify", [](int max_n, std::optional<std::string> lemma, bool drop, int threads) {
    if (max_n < 1 || max_n > 8) throw InputError("max_n must be in 1..8");
    const std::vector<Lemma> lemmas = lemma ? std::vector<Lemma>{parse_lemma(*lemma)} : all_lemmas();
    json reports = json::array();
    std::size_t total = 0;
    {
      py::gil_scoped_release release;
      const auto cats = enumerate_graphs_up_to(max_n, threads);
      for (Lemma l : lemmas) {
        const auto r = check_lemma(cats, l, drop ? LemmaVariant::DropHypothesis : LemmaVariant::Faithful, threads);
        total += r.counterexamples.size();
        reports.push_back(lemma_report_json(r));
      }
    }
    return json{{"max_n", max_n}, {"reports", std::move(reports)}, {"total_counterexamples", total}}.dump();
  });
  m.def("sample", [](int n, double p, int trials, std::uint64_t seed, int threads) {
    SampleReport r;
    {
      py::gil_scoped_release release;
      r = sample_er(n, p, trials, seed, threads);
    }
    return sample_report_json(r).dump();
  });
}
