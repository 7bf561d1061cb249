#include "graphprod/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "graphprod/error.hpp"

namespace graphprod {

namespace {

void check_letters(const SimpleGraph& g, std::span<const int> raw) {
  for (int a : raw) {
    if (a < 0 || a >= g.n()) {
      throw InputError("letter " + std::to_string(a) + " out of range for " +
                       std::to_string(g.n()) + " generators");
    }
  }
}

inline bool commute(const SimpleGraph& g, int a, int b) { return g.adjacent(a, b); }

void require_same_graph(const CoxeterWord& a, const CoxeterWord& b) {
  if (!a.same_graph(b)) throw InputError("words belong to different graphs");
}

}  // namespace

std::size_t LetterHash::operator()(const std::vector<int>& letters) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (int a : letters) {
    h ^= static_cast<std::uint64_t>(a) + 1;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::vector<int> reduced_letters(const SimpleGraph& g, std::span<const int> raw) {
  check_letters(g, raw);
  std::vector<int> out;
  out.reserve(raw.size());
  for (int a : raw) {
    bool cancelled = false;
    for (std::size_t i = out.size(); i-- > 0;) {
      if (out[i] == a) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        cancelled = true;
        break;
      }
      if (!commute(g, out[i], a)) break;
    }
    if (!cancelled) out.push_back(a);
  }
  return out;
}

std::vector<int> shortlex_form(const SimpleGraph& g, std::span<const int> reduced) {
  std::vector<int> rest(reduced.begin(), reduced.end());
  std::vector<int> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    // Among letters that can be moved to the front, take the smallest.
    std::size_t best = 0;
    for (std::size_t j = 1; j < rest.size(); ++j) {
      if (rest[j] >= rest[best]) continue;
      bool free = true;
      for (std::size_t i = 0; i < j && free; ++i) free = commute(g, rest[i], rest[j]);
      if (free) best = j;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

CoxeterWord::CoxeterWord(GraphRef graph) : graph_(std::move(graph)) {
  if (!graph_) throw InputError("word needs a graph");
}

CoxeterWord::CoxeterWord(GraphRef graph, std::vector<int> normal)
    : graph_(std::move(graph)), letters_(std::move(normal)) {}

CoxeterWord CoxeterWord::from_normal_form(GraphRef graph, std::vector<int> normal) {
  return CoxeterWord(std::move(graph), std::move(normal));
}

CoxeterWord CoxeterWord::reduce(GraphRef graph, std::span<const int> raw) {
  if (!graph) throw InputError("word needs a graph");
  std::vector<int> r = reduced_letters(*graph, raw);
  std::vector<int> nf = shortlex_form(*graph, r);
  return CoxeterWord(std::move(graph), std::move(nf));
}

CoxeterWord CoxeterWord::reduce(GraphRef graph, std::initializer_list<int> raw) {
  return reduce(std::move(graph), std::span<const int>(raw.begin(), raw.size()));
}

bool CoxeterWord::same_graph(const CoxeterWord& other) const {
  return graph_ == other.graph_ || *graph_ == *other.graph_;
}

CoxeterWord multiply(const CoxeterWord& a, const CoxeterWord& b) {
  require_same_graph(a, b);
  std::vector<int> raw = a.letters();
  raw.insert(raw.end(), b.letters().begin(), b.letters().end());
  return CoxeterWord::reduce(a.graph_ref(), raw);
}

CoxeterWord invert(const CoxeterWord& a) {
  std::vector<int> raw(a.letters().rbegin(), a.letters().rend());
  return CoxeterWord::reduce(a.graph_ref(), raw);
}

CoxeterWord generator(GraphRef graph, int v) {
  return CoxeterWord::reduce(std::move(graph), {v});
}

WordBoundary support_and_boundary(const CoxeterWord& w) {
  const SimpleGraph& g = w.graph();
  const auto& l = w.letters();
  const int n = g.n();
  Mask support = 0, starts = 0, ends = 0;
  for (int a : l) support |= bit(a);
  // A letter can be moved to the front (back) iff it commutes with every
  // letter before (after) it.
  for (std::size_t j = 0; j < l.size(); ++j) {
    bool front = true;
    for (std::size_t i = 0; i < j && front; ++i) front = commute(g, l[i], l[j]);
    if (front) starts |= bit(l[j]);
    bool back = true;
    for (std::size_t i = j + 1; i < l.size() && back; ++i) back = commute(g, l[i], l[j]);
    if (back) ends |= bit(l[j]);
  }
  Mask lk = low_bits(n);
  for (int a : VertexSet(support, n)) lk &= g.row(a);
  return {VertexSet(support, n), VertexSet(starts, n), VertexSet(ends, n), VertexSet(lk, n)};
}

bool parabolic_membership(const CoxeterWord& w, const VertexSet& s) {
  for (int a : w.letters()) {
    if (!s.contains(a)) return false;
  }
  return true;
}

WordEnumeration enumerate_words(const GraphRef& graph, int max_len, const VertexSet& gens,
                                std::size_t cap) {
  if (max_len < 0) throw InputError("max_len must be nonnegative");
  const SimpleGraph& g = *graph;
  WordEnumeration out;
  auto add = [&](CoxeterWord w) {
    if (out.elements.size() >= cap) {
      throw CapExceeded("word enumeration exceeds " + std::to_string(cap) + " elements");
    }
    out.index.emplace(w.letters(), out.elements.size());
    out.elements.push_back(std::move(w));
  };
  add(CoxeterWord(graph));
  out.strata.push_back(1);
  std::size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t end = out.elements.size();
    std::vector<std::vector<int>> layer;
    std::unordered_map<std::vector<int>, char, LetterHash> seen;
    for (std::size_t i = begin; i < end; ++i) {
      const CoxeterWord& w = out.elements[i];
      const Mask ends = support_and_boundary(w).ends_with.mask();
      for (int a : gens) {
        if ((ends >> a) & 1U) continue;
        std::vector<int> raw = w.letters();
        raw.push_back(a);
        std::vector<int> nf = shortlex_form(g, raw);
        if (seen.emplace(nf, 0).second) layer.push_back(std::move(nf));
      }
    }
    std::sort(layer.begin(), layer.end());
    for (auto& nf : layer) add(CoxeterWord::from_normal_form(graph, std::move(nf)));
    out.strata.push_back(layer.size());
    begin = end;
    if (layer.empty()) break;
  }
  while (static_cast<int>(out.strata.size()) <= max_len) out.strata.push_back(0);
  return out;
}

WordEnumeration enumerate_words(const GraphRef& graph, int max_len, std::size_t cap) {
  return enumerate_words(graph, max_len, graph->vertices(), cap);
}

bool product_set_membership(const CoxeterWord& w, std::span<const VertexSet> factors) {
  if (factors.empty()) throw InputError("product_set_membership needs at least one factor");
  const SimpleGraph& g = w.graph();
  const auto& l = w.letters();
  const std::size_t len = l.size();
  // Heap order: i precedes j when i < j and the letters do not commute.
  // A length-additive factorization is a chain of order ideals whose
  // successive differences use letters from the successive factors.
  // Adding every available element is never worse than adding fewer, so
  // one greedy ideal per factor index decides the dynamic program.
  std::vector<std::vector<std::size_t>> pred(len);
  for (std::size_t j = 0; j < len; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!commute(g, l[i], l[j])) pred[j].push_back(i);
  std::vector<char> in(len, 0);
  std::size_t taken = 0;
  for (const auto& s : factors) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t j = 0; j < len; ++j) {
        if (in[j] || !s.contains(l[j])) continue;
        bool ready = true;
        for (std::size_t i : pred[j]) ready = ready && in[i];
        if (!ready) continue;
        in[j] = 1;
        ++taken;
        changed = true;
      }
    }
  }
  return taken == len;
}

std::unordered_map<std::vector<int>, int, LetterHash> product_set_ball(
    const GraphRef& graph, std::span<const VertexSet> factors, int radius, std::size_t cap) {
  std::map<Mask, WordEnumeration> cache;
  std::unordered_map<std::vector<int>, int, LetterHash> current{{{}, 0}};
  for (const auto& s : factors) {
    auto it = cache.find(s.mask());
    if (it == cache.end()) it = cache.emplace(s.mask(), enumerate_words(graph, radius, s, cap)).first;
    const WordEnumeration& factor = it->second;
    std::unordered_map<std::vector<int>, int, LetterHash> next;
    for (const auto& [p, plen] : current) {
      for (const auto& u : factor.elements) {
        if (u.length() - plen > radius) break;
        std::vector<int> raw = p;
        raw.insert(raw.end(), u.letters().begin(), u.letters().end());
        std::vector<int> r = reduced_letters(*graph, raw);
        if (static_cast<int>(r.size()) > radius) continue;
        const int rl = static_cast<int>(r.size());
        next.emplace(shortlex_form(*graph, r), rl);
        if (next.size() > cap) throw CapExceeded("product set enumeration exceeds cap");
      }
    }
    current = std::move(next);
  }
  return current;
}

ProductSetCheck product_set_membership_checked(const CoxeterWord& w,
                                               std::span<const VertexSet> factors, int radius,
                                               std::size_t cap) {
  if (w.length() > radius) {
    throw InputError("verification radius " + std::to_string(radius) +
                     " is smaller than the word length " + std::to_string(w.length()));
  }
  ProductSetCheck out;
  out.factorization_member = product_set_membership(w, factors);
  out.enumeration_member = product_set_ball(w.graph_ref(), factors, radius, cap).count(w.letters()) != 0;
  out.agreed = out.factorization_member == out.enumeration_member;
  out.member = out.factorization_member;
  if (!out.agreed) {
    out.fallback_used = true;
    out.member = product_set_ball(w.graph_ref(), factors, 2 * radius, cap).count(w.letters()) != 0;
  }
  return out;
}

WordDecomposition split_lcr(const CoxeterWord& w, const VertexSet& left_s,
                            const VertexSet& right_s) {
  const GraphRef& graph = w.graph_ref();
  std::vector<int> left, right;
  CoxeterWord core = w;
  while (true) {
    const Mask m = support_and_boundary(core).starts_with.mask() & left_s.mask();
    if (m == 0) break;
    const int a = std::countr_zero(m);
    left.push_back(a);
    core = multiply(generator(graph, a), core);
  }
  while (true) {
    const Mask m = support_and_boundary(core).ends_with.mask() & right_s.mask();
    if (m == 0) break;
    const int a = std::countr_zero(m);
    right.insert(right.begin(), a);
    core = multiply(core, generator(graph, a));
  }
  return {CoxeterWord::reduce(graph, left), core, CoxeterWord::reduce(graph, right)};
}

bool parabolic_intersection_check(const GraphRef& graph, const VertexSet& s, const VertexSet& t,
                                  int max_len, std::size_t cap) {
  const WordEnumeration ws = enumerate_words(graph, max_len, s, cap);
  const WordEnumeration wt = enumerate_words(graph, max_len, t, cap);
  const WordEnumeration wst = enumerate_words(graph, max_len, s & t, cap);
  const WordEnumeration& small = ws.size() <= wt.size() ? ws : wt;
  const WordEnumeration& large = ws.size() <= wt.size() ? wt : ws;
  std::size_t common = 0;
  for (const auto& x : small.elements) {
    if (!large.contains(x)) continue;
    if (!wst.contains(x)) return false;
    ++common;
  }
  return common == wst.size();
}

std::vector<int> parse_letters(std::string_view text, int n) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    int v = 0;
    const char* first = text.data() + start;
    const char* last = text.data() + i;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
      throw InputError("word: expected a vertex index", start);
    }
    if (v < 0 || v >= n) {
      throw InputError("word: letter " + std::to_string(v) + " out of range for " +
                           std::to_string(n) + " generators",
                       start);
    }
    out.push_back(v);
  }
  return out;
}

std::string format_letters(std::span<const int> letters) {
  std::string s = "[";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(letters[i]);
  }
  return s + "]";
}

}  // namespace graphprod
