#include "graphprod/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "graphprod/error.hpp"

namespace graphprod {

GraphIso GraphIso::inverse() const {
  GraphIso out{target_n, source_n, Permutation(map.size())};
  for (std::size_t v = 0; v < map.size(); ++v) out.map[static_cast<std::size_t>(map[v])] = static_cast<int>(v);
  return out;
}

bool is_isomorphism(const SimpleGraph& g, const SimpleGraph& h, std::span<const int> map) {
  const int n = g.n();
  if (h.n() != n || static_cast<int>(map.size()) != n) return false;
  Mask seen = 0;
  for (int x : map) {
    if (x < 0 || x >= n || ((seen >> x) & 1U)) return false;
    seen |= bit(x);
  }
  for (int u = 0; u < n; ++u) {
    Mask image = 0;
    for (int w : VertexSet(g.row(u), n)) image |= bit(map[static_cast<std::size_t>(w)]);
    if (image != h.row(map[static_cast<std::size_t>(u)])) return false;
  }
  return true;
}

bool invariants_match(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
  auto degrees = [](const SimpleGraph& x) {
    std::vector<int> d;
    for (int v = 0; v < x.n(); ++v) d.push_back(x.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(g) != degrees(h)) return false;
  if (triangle_count(g) != triangle_count(h)) return false;
  return girth(g) == girth(h);
}

namespace {

// Joint colour refinement of g and h. Colours are renumbered through one
// shared signature table, so equal colours in g and h stay comparable.
// Returns false once the colour histograms of the two sides differ.
bool refine(const SimpleGraph& g, const SimpleGraph& h, std::vector<int>& cg,
            std::vector<int>& ch) {
  const int n = g.n();
  int classes = -1;
  while (true) {
    std::map<std::vector<int>, int> table;
    std::vector<std::vector<int>> sg(static_cast<std::size_t>(n)), sh(static_cast<std::size_t>(n));
    auto signature = [](const SimpleGraph& x, const std::vector<int>& c, int v) {
      std::vector<int> s{c[static_cast<std::size_t>(v)]};
      for (int w : VertexSet(x.row(v), x.n())) s.push_back(c[static_cast<std::size_t>(w)]);
      std::sort(s.begin() + 1, s.end());
      return s;
    };
    for (int v = 0; v < n; ++v) {
      sg[static_cast<std::size_t>(v)] = signature(g, cg, v);
      sh[static_cast<std::size_t>(v)] = signature(h, ch, v);
      table.emplace(sg[static_cast<std::size_t>(v)], 0);
      table.emplace(sh[static_cast<std::size_t>(v)], 0);
    }
    int next = 0;
    for (auto& [sig, id] : table) id = next++;
    std::vector<int> count(static_cast<std::size_t>(next), 0);
    for (int v = 0; v < n; ++v) {
      cg[static_cast<std::size_t>(v)] = table.at(sg[static_cast<std::size_t>(v)]);
      ch[static_cast<std::size_t>(v)] = table.at(sh[static_cast<std::size_t>(v)]);
      ++count[static_cast<std::size_t>(cg[static_cast<std::size_t>(v)])];
      --count[static_cast<std::size_t>(ch[static_cast<std::size_t>(v)])];
    }
    if (std::any_of(count.begin(), count.end(), [](int c) { return c != 0; })) return false;
    if (next == classes) return true;
    classes = next;
  }
}

// Smallest non-singleton colour class (ties by colour), or -1 if discrete.
int target_cell(const std::vector<int>& c) {
  std::map<int, int> size;
  for (int x : c) ++size[x];
  int best = -1, best_size = 0;
  for (auto [color, s] : size) {
    if (s > 1 && (best < 0 || s < best_size)) {
      best = color;
      best_size = s;
    }
  }
  return best;
}

int fresh_color(const std::vector<int>& a, const std::vector<int>& b) {
  int m = 0;
  for (int x : a) m = std::max(m, x);
  for (int x : b) m = std::max(m, x);
  return m + 1;
}

bool search(const SimpleGraph& g, const SimpleGraph& h, std::vector<int> cg, std::vector<int> ch,
            Permutation& out) {
  if (!refine(g, h, cg, ch)) return false;
  const int cell = target_cell(cg);
  const int n = g.n();
  if (cell < 0) {
    // After refinement colours are dense ids below 2n.
    std::vector<int> where(static_cast<std::size_t>(2 * n + 1), -1);
    for (int w = 0; w < n; ++w) where[static_cast<std::size_t>(ch[static_cast<std::size_t>(w)])] = w;
    out.assign(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = where[static_cast<std::size_t>(cg[static_cast<std::size_t>(v)])];
    return is_isomorphism(g, h, out);
  }
  int v = 0;
  while (cg[static_cast<std::size_t>(v)] != cell) ++v;
  const int fresh = fresh_color(cg, ch);
  for (int w = 0; w < n; ++w) {
    if (ch[static_cast<std::size_t>(w)] != cell) continue;
    std::vector<int> cg2 = cg, ch2 = ch;
    cg2[static_cast<std::size_t>(v)] = fresh;
    ch2[static_cast<std::size_t>(w)] = fresh;
    if (search(g, h, std::move(cg2), std::move(ch2), out)) return true;
  }
  return false;
}

}  // namespace

std::optional<GraphIso> colored_isomorphism(const SimpleGraph& g, std::span<const int> g_colors,
                                            const SimpleGraph& h, std::span<const int> h_colors) {
  const int n = g.n();
  if (h.n() != n) return std::nullopt;
  if (static_cast<int>(g_colors.size()) != n || static_cast<int>(h_colors.size()) != n) {
    throw InputError("colour list size does not match vertex count");
  }
  if (n == 0) return GraphIso{0, 0, {}};
  if (!invariants_match(g, h)) return std::nullopt;
  std::vector<int> cg(g_colors.begin(), g_colors.end()), ch(h_colors.begin(), h_colors.end());
  {
    std::vector<int> a = cg, b = ch;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  Permutation map;
  if (!search(g, h, std::move(cg), std::move(ch), map)) return std::nullopt;
  return GraphIso{n, n, std::move(map)};
}

std::optional<GraphIso> isomorphism(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.n() != h.n()) return std::nullopt;
  std::vector<int> zeros(static_cast<std::size_t>(g.n()), 0);
  return colored_isomorphism(g, zeros, h, zeros);
}

std::optional<GraphIso> labeled_isomorphism(const LabeledGraph& g, const LabeledGraph& h,
                                            LabelEquivalence mode) {
  if (g.n() != h.n()) return std::nullopt;
  auto [cg, ch] = joint_label_colors(g, h, mode);
  return colored_isomorphism(g.graph, cg, h.graph, ch);
}

Permutation compose(std::span<const int> first, std::span<const int> then) {
  Permutation out(first.size());
  for (std::size_t v = 0; v < first.size(); ++v) out[v] = then[static_cast<std::size_t>(first[v])];
  return out;
}

namespace {

Mask point_orbit(int v, const std::vector<Permutation>& gens) {
  Mask orbit = bit(v), frontier = bit(v);
  while (frontier != 0) {
    Mask next = 0;
    for (int x : VertexSet(frontier, kMaxVertices)) {
      for (const auto& p : gens) next |= bit(p[static_cast<std::size_t>(x)]);
    }
    frontier = next & ~orbit;
    orbit |= next;
  }
  return orbit;
}

}  // namespace

AutGroup automorphism_group(const SimpleGraph& g, std::span<const int> colors) {
  const int n = g.n();
  if (n > kMaxAutomorphismVertices) {
    throw CapExceeded("automorphism group computation is limited to " +
                      std::to_string(kMaxAutomorphismVertices) + " vertices");
  }
  if (!colors.empty() && static_cast<int>(colors.size()) != n) {
    throw InputError("colour list size does not match vertex count");
  }
  AutGroup out;
  out.n = n;
  std::vector<int> base(static_cast<std::size_t>(n), 0);
  if (!colors.empty()) base.assign(colors.begin(), colors.end());

  // Stabilizer chain: at each level, individualize one more base point and
  // collect a witness for every point of its orbit not yet reachable.
  while (n > 0) {
    std::vector<int> cg = base, ch = base;
    refine(g, g, cg, ch);
    const int cell = target_cell(cg);
    if (cell < 0) break;
    int v = 0;
    while (cg[static_cast<std::size_t>(v)] != cell) ++v;
    const int fresh = fresh_color(cg, cg);
    std::vector<Permutation> level;
    Mask orbit = bit(v);
    for (int w = v + 1; w < n; ++w) {
      if (cg[static_cast<std::size_t>(w)] != cell || ((orbit >> w) & 1U)) continue;
      std::vector<int> a = cg, b = cg;
      a[static_cast<std::size_t>(v)] = fresh;
      b[static_cast<std::size_t>(w)] = fresh;
      Permutation p;
      if (search(g, g, std::move(a), std::move(b), p)) {
        level.push_back(p);
        out.generators.push_back(std::move(p));
        orbit = point_orbit(v, level);
      }
    }
    out.order *= static_cast<std::uint64_t>(std::popcount(orbit));
    base = cg;
    base[static_cast<std::size_t>(v)] = fresh;
  }

  Mask assigned = 0;
  for (int v = 0; v < n; ++v) {
    if ((assigned >> v) & 1U) continue;
    const Mask o = point_orbit(v, out.generators);
    out.orbits.emplace_back(o, n);
    assigned |= o;
  }
  return out;
}

AutGroup automorphism_group(const LabeledGraph& lg, LabelEquivalence mode) {
  const std::vector<int> colors = label_colors(lg, mode);
  return automorphism_group(lg.graph, colors);
}

std::uint64_t closure_order(const std::vector<Permutation>& gens, int n, std::uint64_t cap) {
  if (n > kMaxAutomorphismVertices) throw CapExceeded("closure is limited to 16 points");
  auto encode = [n](const Permutation& p) {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i) code |= static_cast<std::uint64_t>(p[static_cast<std::size_t>(i)]) << (4 * i);
    return code;
  };
  Permutation id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  std::unordered_set<std::uint64_t> seen{encode(id)};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& s : gens) {
        Permutation q = compose(p, s);
        if (seen.insert(encode(q)).second) {
          if (seen.size() > cap) throw CapExceeded("group closure exceeds cap");
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace graphprod
