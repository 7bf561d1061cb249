// Command-line front end: analyze, classify, words, enumerate, verify,
// sample and iso. JSON goes to stdout, diagnostics to stderr.
//
// Exit codes: 0 success, 1 Undecided under --require-decision, 2 input
// error, 3 cap exceeded.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphprod/classification.hpp"
#include "graphprod/coxeter.hpp"
#include "graphprod/error.hpp"
#include "graphprod/graph_io.hpp"
#include "graphprod/iso.hpp"
#include "graphprod/report.hpp"
#include "graphprod/verification.hpp"

using namespace graphprod;
using nlohmann::json;

namespace {

constexpr int kExitUndecided = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct GraphInput {
  SimpleGraph graph;
  std::optional<LabeledGraph> labeled;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A JSON document, either inline (leading '{') or a file path.
GraphInput load_json_graph(const std::string& arg) {
  const std::string text = !arg.empty() && arg.front() == '{' ? arg : read_file(arg);
  const json doc = parse_json_text(text);
  GraphInput in;
  if (doc.is_object() && doc.contains("labels")) {
    auto parsed = labeled_graph_from_json(doc);
    for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << '\n';
    in.graph = parsed.graph.graph;
    in.labeled = std::move(parsed.graph);
  } else {
    in.graph = graph_from_json(doc);
  }
  return in;
}

std::vector<GraphInput> load_inputs(const std::vector<std::string>& graph6, const std::vector<std::string>& files) {
  std::vector<GraphInput> out;
  for (const auto& s : graph6) out.push_back({parse_graph6(s), std::nullopt});
  for (const auto& f : files) out.push_back(load_json_graph(f));
  return out;
}

GraphInput single_input(const std::vector<std::string>& graph6, const std::vector<std::string>& files) {
  auto all = load_inputs(graph6, files);
  if (all.size() != 1) throw InputError("expected exactly one graph (--graph6 or --graph)");
  return std::move(all.front());
}

int threads_from_env() {
  const char* raw = std::getenv("GRAPHPROD_THREADS");
  if (!raw || !*raw) return 0;
  const std::string_view s(raw);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0) {
    throw InputError("GRAPHPROD_THREADS must be a non-negative integer, got '" + std::string(s) + "'",
                     static_cast<std::size_t>(ptr - s.data()));
  }
  return value;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string join_args(const std::vector<std::string>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ' ';
    out += args[i];
  }
  return out;
}

VertexSet parse_subset(const std::string& text, int n) {
  return VertexSet::of(parse_letters(text, n), n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph product rigidity toolkit"};
  app.require_subcommand(1);

  std::vector<std::string> graph6, graph_files;
  auto add_graph_options = [&](CLI::App* sub) {
    sub->add_option("--graph6", graph6, "Inline graph6 string")->allow_extra_args(false);
    sub->add_option("--graph", graph_files, "Graph or labeled-graph JSON file (or inline JSON)")->allow_extra_args(false);
  };

  auto* analyze = app.add_subcommand("analyze", "Structural report for one graph");
  add_graph_options(analyze);
  bool dot = false;
  analyze->add_flag("--dot", dot, "Print DOT instead of JSON");

  auto* classify_cmd = app.add_subcommand("classify", "Classify two labeled graphs");
  std::vector<std::string> classify_files;
  bool require_decision = false;
  classify_cmd->add_option("files", classify_files, "Two labeled-graph JSON files")->expected(2)->required();
  classify_cmd->add_flag("--require-decision", require_decision, "Exit 1 on Undecided");

  auto* words = app.add_subcommand("words", "Coxeter word operations");
  add_graph_options(words);
  std::string op;
  std::vector<std::string> letters;
  std::string subset, left_s, right_s;
  std::vector<std::string> factors;
  bool words_json = false;
  words->add_option("op", op, "reduce | length | inverse | boundary | equal | member | product | split")
      ->required()
      ->check(CLI::IsMember({"reduce", "length", "inverse", "boundary", "equal", "member", "product", "split"}));
  words->add_option("letters", letters, "Vertex indices; 'equal' separates two words with '/'");
  words->add_option("--subset", subset, "Vertex indices of the parabolic subgroup (member)");
  words->add_option("--factor", factors, "Vertex indices of one factor (product, repeatable)")->allow_extra_args(false);
  words->add_option("--left", left_s, "Left subset (split)");
  words->add_option("--right", right_s, "Right subset (split)");
  words->add_flag("--json", words_json, "JSON output");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate Coxeter group elements or graph catalogs");
  add_graph_options(enumerate);
  int max_len = 4;
  int catalog = 0;
  bool elements = false;
  std::string gens;
  std::size_t cap = kDefaultEnumerationCap;
  enumerate->add_option("--max-len", max_len, "Maximum word length")->check(CLI::NonNegativeNumber);
  enumerate->add_option("--gens", gens, "Generating vertices (default all)");
  enumerate->add_flag("--elements", elements, "List the elements");
  enumerate->add_option("--cap", cap, "Element cap");
  enumerate->add_option("--catalog", catalog, "List isomorphism classes of graphs on this many vertices");

  auto* verify = app.add_subcommand("verify", "Exhaustive lemma checks");
  std::string lemma = "all";
  int max_n = 7;
  bool drop = false;
  verify->add_option("--lemma", lemma, "Lemma token or 'all'");
  verify->add_option("--max-n", max_n, "Largest vertex count (1..8)");
  verify->add_flag("--drop-hypothesis", drop, "Negative control variant");

  auto* sample = app.add_subcommand("sample", "Erdos-Renyi sampling report");
  int sample_n = 50, trials = 1000;
  double p = 0.5;
  std::uint64_t seed = 1;
  sample->add_option("--n", sample_n, "Vertices");
  sample->add_option("--p", p, "Edge probability");
  sample->add_option("--trials", trials, "Number of graphs");
  sample->add_option("--seed", seed, "Seed");

  auto* iso = app.add_subcommand("iso", "Isomorphism witness between two graphs");
  add_graph_options(iso);
  std::string mode;
  iso->add_option("--mode", mode, "Label equivalence for labeled inputs: strict-class, stable-class, wstar-class");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    const int threads = threads_from_env();

    if (analyze->parsed()) {
      const auto in = single_input(graph6, graph_files);
      if (dot) {
        std::cout << to_dot(in.graph);
        return 0;
      }
      emit(analyze_report(in.graph, in.labeled ? &*in.labeled : nullptr));
      return 0;
    }

    if (classify_cmd->parsed()) {
      const auto a = load_json_graph(classify_files[0]);
      const auto b = load_json_graph(classify_files[1]);
      if (!a.labeled || !b.labeled) throw InputError("classify needs labeled-graph JSON with a \"labels\" field");
      const auto v = classify(*a.labeled, *b.labeled);
      emit(verdict_to_json(v));
      return require_decision && v.kind == VerdictKind::Undecided ? kExitUndecided : 0;
    }

    if (words->parsed()) {
      const auto in = single_input(graph6, graph_files);
      const auto g = share(in.graph);
      const int n = in.graph.n();
      const auto format_word = [](const CoxeterWord& w) { return format_letters(w.letters()); };
      json out;
      std::string text;
      if (op == "equal") {
        const auto sep = std::find(letters.begin(), letters.end(), "/");
        if (sep == letters.end()) throw InputError("equal expects two words separated by '/'");
        const auto a = CoxeterWord::reduce(g, parse_letters(join_args({letters.begin(), sep}), n));
        const auto b = CoxeterWord::reduce(g, parse_letters(join_args({sep + 1, letters.end()}), n));
        out = {{"op", op}, {"left", a.letters()}, {"right", b.letters()}, {"equal", a == b}};
        text = a == b ? "true" : "false";
      } else {
        const auto w = CoxeterWord::reduce(g, parse_letters(join_args(letters), n));
        out = {{"op", op}, {"normal_form", w.letters()}, {"length", w.length()}};
        if (op == "reduce" || op == "length") {
          text = op == "reduce" ? format_word(w) + " length " + std::to_string(w.length())
                                : std::to_string(w.length());
        } else if (op == "inverse") {
          const auto inv = invert(w);
          out["inverse"] = inv.letters();
          text = format_word(inv);
        } else if (op == "boundary") {
          const auto b = support_and_boundary(w);
          out["support"] = vertex_set_json(b.support);
          out["starts_with"] = vertex_set_json(b.starts_with);
          out["ends_with"] = vertex_set_json(b.ends_with);
          out["link"] = vertex_set_json(b.lk);
          text = "support " + format_letters(b.support.to_vector()) + " starts_with " +
                 format_letters(b.starts_with.to_vector()) + " ends_with " +
                 format_letters(b.ends_with.to_vector()) + " link " + format_letters(b.lk.to_vector());
        } else if (op == "member") {
          const bool m = parabolic_membership(w, parse_subset(subset, n));
          out["member"] = m;
          text = m ? "true" : "false";
        } else if (op == "product") {
          if (factors.empty()) throw InputError("product needs at least one --factor");
          std::vector<VertexSet> fs;
          for (const auto& f : factors) fs.push_back(parse_subset(f, n));
          const bool m = product_set_membership(w, fs);
          out["member"] = m;
          text = m ? "true" : "false";
        } else {
          const auto d = split_lcr(w, parse_subset(left_s, n), parse_subset(right_s, n));
          out["left"] = d.left.letters();
          out["core"] = d.core.letters();
          out["right"] = d.right.letters();
          text = "left " + format_word(d.left) + " core " + format_word(d.core) + " right " + format_word(d.right);
        }
      }
      if (words_json) {
        emit(out);
      } else {
        std::cout << text << '\n';
      }
      return 0;
    }

    if (enumerate->parsed()) {
      if (catalog > 0) {
        const auto c = enumerate_graphs(catalog, threads);
        json list = json::array();
        for (const auto& g : c.graphs) list.push_back(to_graph6(g));
        emit({{"n", c.n}, {"count", c.graphs.size()}, {"graphs", std::move(list)}});
        return 0;
      }
      const auto in = single_input(graph6, graph_files);
      const auto g = share(in.graph);
      const VertexSet s = gens.empty() ? VertexSet::all(in.graph.n()) : parse_subset(gens, in.graph.n());
      const auto e = enumerate_words(g, max_len, s, cap);
      auto out = enumeration_json(e, elements);
      out["max_len"] = max_len;
      out["generators"] = vertex_set_json(s);
      emit(out);
      return 0;
    }

    if (verify->parsed()) {
      const auto cats = enumerate_graphs_up_to(max_n, threads);
      std::vector<Lemma> lemmas = lemma == "all" ? all_lemmas() : std::vector<Lemma>{parse_lemma(lemma)};
      json reports = json::array();
      std::size_t total = 0;
      for (Lemma l : lemmas) {
        const auto r = check_lemma(cats, l, drop ? LemmaVariant::DropHypothesis : LemmaVariant::Faithful, threads);
        total += r.counterexamples.size();
        reports.push_back(lemma_report_json(r));
      }
      emit({{"max_n", max_n}, {"reports", std::move(reports)}, {"total_counterexamples", total}});
      return 0;
    }

    if (sample->parsed()) {
      emit(sample_report_json(sample_er(sample_n, p, trials, seed, threads)));
      return 0;
    }

    if (iso->parsed()) {
      const auto in = load_inputs(graph6, graph_files);
      if (in.size() != 2) throw InputError("iso expects exactly two graphs");
      if (!mode.empty()) {
        if (!in[0].labeled || !in[1].labeled) throw InputError("--mode needs two labeled-graph JSON inputs");
        emit(iso_json(labeled_isomorphism(*in[0].labeled, *in[1].labeled, parse_label_equivalence(mode))));
      } else {
        emit(iso_json(isomorphism(in[0].graph, in[1].graph)));
      }
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what();
    if (e.byte_offset()) std::cerr << " (byte offset " << *e.byte_offset() << ")";
    std::cerr << '\n';
    return kExitInput;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  }
  return 0;
}
