// Acceptance run: one PASS/FAIL line per criterion AC1..AC8, followed by
// indented detail lines. Exit status 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graphprod/classification.hpp"
#include "graphprod/coxeter.hpp"
#include "graphprod/iso.hpp"
#include "graphprod/report.hpp"
#include "graphprod/structure.hpp"
#include "graphprod/verification.hpp"

using namespace graphprod;
namespace fam = graphprod::families;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  void fail(std::string why) {
    pass = false;
    details.push_back(std::move(why));
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

LabeledGraph raag(const SimpleGraph& g) { return uniform_labels(g, abelian_diffuse_label()); }
LabeledGraph hyper(const SimpleGraph& g) { return uniform_labels(g, hyperfinite_label()); }
LabeledGraph factors(const SimpleGraph& g) { return uniform_labels(g, factor_label("M")); }

SimpleGraph rotated_cycle(int n, int shift) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = (i + shift) % n;
  return fam::permuted(fam::cycle(n), p);
}

// Every raw word over n letters of length <= max_len.
void for_each_raw_word(int n, int max_len, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> w;
  std::function<void()> rec = [&] {
    f(w);
    if (static_cast<int>(w.size()) == max_len) return;
    for (int a = 0; a < n; ++a) {
      w.push_back(a);
      rec();
      w.pop_back();
    }
  };
  rec();
}

Outcome ac1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto cats = enumerate_graphs_up_to(7);
  std::size_t graphs = 0;
  for (const auto& c : cats) graphs += c.graphs.size();
  std::size_t total = 0;
  for (Lemma l : all_lemmas()) {
    const auto r = check_lemma(cats, l);
    total += r.counterexamples.size();
    o.details.push_back(r.lemma + ": checked " + std::to_string(r.checked) + ", eligible " +
                        std::to_string(r.eligible) + ", counterexamples " + std::to_string(r.counterexamples.size()));
    if (!r.counterexamples.empty()) o.pass = false;
    if (r.eligible == 0) o.fail(r.lemma + ": no eligible graphs");
  }
  const double secs = seconds_since(t0);
  if (graphs != 1252) o.fail("catalog size " + std::to_string(graphs) + ", expected 1252 for n = 1..7");
  if (secs >= 120) o.fail("runtime " + fixed(secs, 1) + " s exceeds 120 s");
  o.summary = std::to_string(all_lemmas().size()) + " lemmas over " + std::to_string(graphs) +
              " graphs (n <= 7), " + std::to_string(total) + " counterexamples, " + fixed(secs, 1) + " s";
  return o;
}

Outcome ac2() {
  Outcome o;
  const std::vector<std::pair<std::string, SimpleGraph>> graphs = {
      {"C5", fam::cycle(5)}, {"C6", fam::cycle(6)}, {"path-5", fam::path(5)}, {"K2,3", fam::complete_bipartite(2, 3)}};
  std::size_t words = 0;
  for (const auto& [name, g] : graphs) {
    const auto ref = share(g);
    const WordOracle oracle(g, 8);
    // Equality agrees on all pairs iff normal form and oracle state determine each other.
    std::map<std::vector<int>, int> nf_to_state;
    std::map<int, std::vector<int>> state_to_nf;
    std::size_t mismatches = 0;
    for_each_raw_word(g.n(), 8, [&](const std::vector<int>& raw) {
      ++words;
      const auto nf = CoxeterWord::reduce(ref, raw).letters();
      const auto state = oracle.locate(raw);
      if (!state) {
        ++mismatches;
        return;
      }
      auto [a, fa] = nf_to_state.emplace(nf, *state);
      auto [b, fb] = state_to_nf.emplace(*state, nf);
      if (a->second != *state || b->second != nf) ++mismatches;
    });
    o.details.push_back(name + ": " + std::to_string(nf_to_state.size()) + " elements, " +
                        std::to_string(mismatches) + " disagreements");
    if (mismatches) o.fail(name + " disagrees with the oracle");
  }
  const auto e2 = enumerate_words(share(fam::edgeless(2)), 8);
  if (e2.strata != std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 2, 2, 2}) o.fail("edgeless-2 strata wrong");
  const auto c5 = enumerate_words(share(fam::cycle(5)), 2);
  if (c5.size() != 21) o.fail("C5 ball of radius 2 has " + std::to_string(c5.size()) + " elements");
  o.details.push_back("edgeless-2 strata 1,2,2,...; C5 length <= 2 count " + std::to_string(c5.size()));
  o.summary = std::to_string(words) + " raw words of length <= 8 compared with the ball oracle";
  return o;
}

Outcome ac3() {
  Outcome o;
  const auto cats = enumerate_graphs_up_to(5);
  std::size_t pairs = 0, violations = 0, membership_mismatch = 0, graphs = 0;
  for (const auto& c : cats) {
    for (const auto& g : c.graphs) {
      ++graphs;
      const int n = g.n();
      const WordOracle oracle(g, 8);
      const auto ref = share(g);
      const std::size_t subsets = std::size_t{1} << n;
      std::vector<std::vector<char>> in(subsets);
      for (Mask s = 0; s < subsets; ++s) {
        const std::vector<Mask> f{s};
        in[s] = oracle.product_states(f);
        for (std::size_t st = 0; st < oracle.size(); ++st) {
          const auto w = CoxeterWord::from_normal_form(ref, CoxeterWord::reduce(ref, oracle.key(static_cast<int>(st))).letters());
          if (parabolic_membership(w, VertexSet(s, n)) != static_cast<bool>(in[s][st])) ++membership_mismatch;
        }
      }
      for (Mask s = 0; s < subsets; ++s) {
        for (Mask t = 0; t < subsets; ++t) {
          ++pairs;
          for (std::size_t st = 0; st < oracle.size(); ++st) {
            if ((in[s][st] && in[t][st]) != static_cast<bool>(in[s & t][st])) {
              ++violations;
              break;
            }
          }
        }
      }
    }
  }
  if (violations) o.fail(std::to_string(violations) + " subset pairs violate the intersection identity");
  if (membership_mismatch) o.fail(std::to_string(membership_mismatch) + " parabolic membership disagreements");
  o.summary = std::to_string(pairs) + " subset pairs over " + std::to_string(graphs) +
              " graphs (n <= 5), length <= 8, " + std::to_string(violations) + " violations";
  return o;
}

struct CycleCase {
  int n;
  std::vector<VertexSet> links;  // lk(v1) .. lk(v_{n-1})
  std::vector<VertexSet> ends;   // {v1}, {v_{n-1}}
  VertexSet lk0;
};

CycleCase cycle_case(int n) {
  const auto g = fam::cycle(n);
  CycleCase c{n, {}, {VertexSet::of({1}, n), VertexSet::of({n - 1}, n)}, link(g, 0)};
  for (int v = 1; v < n; ++v) c.links.push_back(link(g, v));
  return c;
}

Outcome ac4() {
  Outcome o;
  std::size_t checked = 0, violations = 0;
  for (int n : {5, 6, 7}) {
    const auto c = cycle_case(n);
    const auto ref = share(fam::cycle(n));
    const auto lk0 = enumerate_words(ref, 8, c.lk0);
    std::size_t in_product = 0;
    for (const auto& w : lk0.elements) {
      ++checked;
      if (!product_set_membership(w, c.links)) continue;
      ++in_product;
      if (!product_set_membership(w, c.ends)) {
        ++violations;
        o.fail("C" + std::to_string(n) + ": " + format_letters(w.letters()) + " escapes W_{v1} W_{v_{n-1}}");
      }
    }
    o.details.push_back("C" + std::to_string(n) + ": " + std::to_string(lk0.size()) + " elements of W_lk(v0), " +
                        std::to_string(in_product) + " in the link product, all in W_v1 W_v(n-1)");
  }
  o.summary = std::to_string(checked) + " elements checked, " + std::to_string(violations) + " violations";
  return o;
}

Outcome ac6() {
  Outcome o;
  std::size_t queries = 0, disagreements = 0, true_answers = 0;
  auto audit = [&](const std::string& name, const SimpleGraph& g, const std::vector<std::vector<VertexSet>>& products,
                   int query_len) {
    const WordOracle oracle(g, 8);
    const auto ref = share(g);
    for (const auto& factors : products) {
      std::vector<Mask> masks;
      for (const auto& f : factors) masks.push_back(f.mask());
      const auto reach = oracle.product_states(masks);
      for (std::size_t st = 0; st < oracle.size(); ++st) {
        if (oracle.length(static_cast<int>(st)) > query_len) continue;
        const auto w = CoxeterWord::reduce(ref, oracle.key(static_cast<int>(st)));
        const bool engine = product_set_membership(w, factors);
        ++queries;
        true_answers += engine;
        if (engine != static_cast<bool>(reach[st])) ++disagreements;
      }
    }
    o.details.push_back(name + ": " + std::to_string(products.size()) + " factor sequences");
  };
  for (int n : {5, 6, 7}) {
    const auto c = cycle_case(n);
    audit("C" + std::to_string(n) + " cycle products", fam::cycle(n), {c.links, c.ends, {c.lk0}}, n == 7 ? 6 : 8);
  }
  std::mt19937 rng(424242);
  for (const auto& [name, g] : std::vector<std::pair<std::string, SimpleGraph>>{
           {"C5", fam::cycle(5)}, {"path-5", fam::path(5)}, {"K2,3", fam::complete_bipartite(2, 3)}}) {
    std::vector<std::vector<VertexSet>> products;
    for (int k = 0; k < 40; ++k) {
      std::vector<VertexSet> fs;
      const int len = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < len; ++i) fs.emplace_back(static_cast<Mask>(1 + rng() % ((1U << g.n()) - 1)), g.n());
      products.push_back(std::move(fs));
    }
    audit(name + " random products", g, products, 6);
  }
  if (disagreements) o.fail(std::to_string(disagreements) + " disagreements with the enumeration oracle");
  o.summary = std::to_string(queries) + " membership queries (" + std::to_string(true_answers) + " members), " +
              std::to_string(disagreements) + " disagreements";
  return o;
}

Outcome ac5() {
  Outcome o;
  std::size_t subchecks = 0, failed = 0;
  auto expect = [&](const std::string& name, bool ok, const std::string& got) {
    ++subchecks;
    if (!ok) ++failed;
    o.details.push_back(std::string(ok ? "ok   " : "FAIL ") + name + ": " + got);
    if (!ok) o.pass = false;
  };
  auto describe = [](const ClassificationVerdict& v) {
    std::string s = to_string(v.kind) + " [" + v.theorem_tag + "]";
    if (!v.reason.empty()) s += " " + v.reason;
    return s;
  };

  {
    const auto v = classify(raag(fam::cycle(5)), raag(fam::cycle(6)));
    expect("C5 vs C6 RAAG", v.kind == VerdictKind::DistinctCertified, describe(v));
  }
  {
    const auto a = raag(fam::cycle(5));
    const auto b = raag(rotated_cycle(5, 2));
    const auto v = classify(a, b);
    const bool witness = v.witness && is_isomorphism(a.graph, b.graph, v.witness->map);
    expect("C5 vs rotated C5 RAAG", v.kind == VerdictKind::IsomorphicCertified && witness,
           describe(v) + (witness ? " witness valid" : " witness invalid"));
  }
  {
    const auto v = classify(raag(fam::complete_bipartite(3, 3)), raag(fam::complete_bipartite(2, 5)));
    expect("K3,3 vs K2,5 RAAG", v.kind == VerdictKind::EquivalentKnown && v.theorem_tag == "Radulescu", describe(v));
  }
  {
    std::vector<std::string> bad;
    int pairs = 0;
    for (int m = 3; m <= 8; ++m) {
      for (int n = 3; n <= 8; ++n) {
        ++pairs;
        const auto v = classify(raag(fam::path(m + 1)), raag(fam::path(n + 1)));
        const bool distinct = v.kind == VerdictKind::DistinctCertified;
        const bool iso = v.kind == VerdictKind::IsomorphicCertified;
        if ((m != n && !distinct) || (m == n && !iso && !(v.kind == VerdictKind::EquivalentKnown))) {
          bad.push_back("(" + std::to_string(m) + "," + std::to_string(n) + ") " + describe(v));
        }
      }
    }
    std::string got = std::to_string(pairs - static_cast<int>(bad.size())) + "/" + std::to_string(pairs) + " pairs as expected";
    for (const auto& b : bad) got += "; " + b;
    expect("paths P_m vs P_n, 3 <= m,n <= 8", bad.empty(), got);
  }
  {
    const auto v = classify(factors(fam::cycle(4)), factors(fam::cycle(4)));
    expect("C4 vs C4", v.kind == VerdictKind::Undecided && !v.unmet.empty(), describe(v));
  }
  {
    const auto v = classify(hyper(fam::cycle(5)), hyper(fam::cycle(6)));
    expect("all-R C5 vs all-R C6", v.kind == VerdictKind::DistinctCertified && v.theorem_tag == "Cor-hyperfinite",
           describe(v));
  }
  {
    const auto s = symmetry(factors(fam::petersen()));
    const bool ok = s.fundamental_group_trivial && s.certified && s.acting_group.order == 120 &&
                    s.amplification_note == std::optional<std::string>("t=1 forced");
    expect("Petersen symmetry", ok,
           std::string("F trivial ") + (s.fundamental_group_trivial ? "yes" : "no") + ", acting order " +
               std::to_string(s.acting_group.order) + ", note " + s.amplification_note.value_or("none"));
  }
  o.summary = std::to_string(subchecks - failed) + "/" + std::to_string(subchecks) + " fixtures as expected";
  return o;
}

Outcome ac7() {
  Outcome o;
  const std::uint64_t seed = 20260101;
  const auto a = sample_er(50, 0.5, 1000, seed, 1);
  const auto b = sample_er(50, 0.5, 1000, seed, 0);
  const std::string ja = sample_report_json(a).dump();
  const std::string jb = sample_report_json(b).dump();
  const double frac = a.fractions.at("transvection_free");
  if (frac < 0.99) o.fail("transvection-free fraction " + fixed(frac, 3) + " below 0.99");
  if (ja != jb) o.fail("reports differ between runs");
  o.summary = "G(50, 0.5), 1000 trials, seed " + std::to_string(seed) + ": transvection-free fraction " +
              fixed(frac, 3) + " (>= 0.99), reports " + (ja == jb ? "identical" : "different");
  return o;
}

Outcome ac8() {
  Outcome o;
  const auto cats = enumerate_graphs_up_to(7);
  const auto r = check_lemma(cats, Lemma::CollapsibleComponents, LemmaVariant::DropHypothesis);
  bool c4 = false;
  for (const auto& c : r.counterexamples) c4 = c4 || isomorphism(c.graph, fam::cycle(4)).has_value();
  if (!c4) o.fail("dropping the strongly-reduced hypothesis did not produce C4");
  o.details.push_back("control lemma: " + std::to_string(r.counterexamples.size()) + " counterexamples, C4 " +
                      (c4 ? "among them" : "missing"));

  const auto a = factors(fam::cycle(5));
  auto b = factors(rotated_cycle(5, 2));
  const auto before = classify(a, b);
  b.labels[3] = factor_label("N");
  const auto after = classify(a, b);
  const bool d_family = after.theorem_tag == "Thm-D-moreover" || after.theorem_tag == "Thm-D";
  if (before.kind != VerdictKind::IsomorphicCertified) o.fail("uncorrupted fixture not isomorphic");
  if (after.kind != VerdictKind::DistinctCertified || !d_family) o.fail("corrupted fixture not distinct under D");
  o.details.push_back("C5 factor fixture: " + to_string(before.kind) + " [" + before.theorem_tag + "] -> " +
                      to_string(after.kind) + " [" + after.theorem_tag + "]");
  o.summary = std::string("C4 ") + (c4 ? "found" : "missing") + "; corrupted label gives " + to_string(after.kind);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},
      {"AC5", ac5}, {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}};
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::cout << name << ' ' << (o.pass ? "PASS" : "FAIL") << ' ' << o.summary << " ("
              << fixed(seconds_since(t0), 1) << " s)\n";
    for (const auto& d : o.details) std::cout << "    " << d << '\n';
    std::cout.flush();
  }
  return all ? 0 : 1;
}
