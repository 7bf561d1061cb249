#pragma once

// Elements of the right-angled Coxeter group of a graph: generators are the
// vertices, each an involution, and adjacent generators commute.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graphprod/graph.hpp"

namespace graphprod {

using GraphRef = std::shared_ptr<const SimpleGraph>;

inline GraphRef share(SimpleGraph g) { return std::make_shared<const SimpleGraph>(std::move(g)); }

/// A group element stored as its ShortLex normal form under the vertex order.
class CoxeterWord {
 public:
  explicit CoxeterWord(GraphRef graph);  // identity

  // Normal form of the product of the given generators.
  static CoxeterWord reduce(GraphRef graph, std::span<const int> raw);
  static CoxeterWord reduce(GraphRef graph, std::initializer_list<int> raw);
  // No checking: the caller guarantees letters are already in normal form.
  static CoxeterWord from_normal_form(GraphRef graph, std::vector<int> normal);

  const SimpleGraph& graph() const { return *graph_; }
  const GraphRef& graph_ref() const { return graph_; }
  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool is_identity() const { return letters_.empty(); }

  bool same_graph(const CoxeterWord& other) const;

  friend bool operator==(const CoxeterWord& a, const CoxeterWord& b) {
    return a.letters_ == b.letters_ && a.same_graph(b);
  }

 private:
  CoxeterWord(GraphRef graph, std::vector<int> normal);

  GraphRef graph_;
  std::vector<int> letters_;
};

struct LetterHash {
  std::size_t operator()(const std::vector<int>& letters) const noexcept;
};

struct WordHash {
  std::size_t operator()(const CoxeterWord& w) const noexcept { return LetterHash{}(w.letters()); }
};

// Reduced word for the product of raw, by right-to-left cancellation.
std::vector<int> reduced_letters(const SimpleGraph& g, std::span<const int> raw);
// Lexicographically least rearrangement of a reduced word by commutations.
std::vector<int> shortlex_form(const SimpleGraph& g, std::span<const int> reduced);

CoxeterWord multiply(const CoxeterWord& a, const CoxeterWord& b);
CoxeterWord invert(const CoxeterWord& a);
CoxeterWord generator(GraphRef graph, int v);

struct WordBoundary {
  VertexSet support;
  VertexSet starts_with;  // a with |a w| < |w|
  VertexSet ends_with;    // a with |w a| < |w|
  VertexSet lk;           // common link of the support; all vertices for the identity
};

WordBoundary support_and_boundary(const CoxeterWord& w);

bool parabolic_membership(const CoxeterWord& w, const VertexSet& s);

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

struct WordEnumeration {
  std::vector<CoxeterWord> elements;         // by length, then lexicographically
  std::vector<std::size_t> strata;           // strata[k] = number of elements of length k
  std::unordered_map<std::vector<int>, std::size_t, LetterHash> index;

  bool contains(const CoxeterWord& w) const { return index.count(w.letters()) != 0; }
  std::size_t size() const { return elements.size(); }
};

// Every element of length <= max_len of the subgroup generated by gens
// (all vertices if gens is the full set). Throws CapExceeded beyond cap.
WordEnumeration enumerate_words(const GraphRef& graph, int max_len, const VertexSet& gens,
                                std::size_t cap = kDefaultEnumerationCap);
WordEnumeration enumerate_words(const GraphRef& graph, int max_len,
                                std::size_t cap = kDefaultEnumerationCap);

// Whether w lies in the product W_{s1} W_{s2} ... of parabolic subgroups,
// assuming a factorization whose lengths add. Requires factors nonempty.
bool product_set_membership(const CoxeterWord& w, std::span<const VertexSet> factors);

struct ProductSetCheck {
  bool member = false;
  bool factorization_member = false;  // the length-additive search alone
  bool enumeration_member = false;    // ball enumeration within the radius
  bool agreed = true;
  bool fallback_used = false;         // answer taken from a doubled-radius enumeration
};

// Product membership cross-checked against enumeration of products whose
// partial products stay within radius. Throws InputError if |w| > radius.
ProductSetCheck product_set_membership_checked(const CoxeterWord& w,
                                               std::span<const VertexSet> factors, int radius,
                                               std::size_t cap = kDefaultEnumerationCap);

// Ball enumeration of W_{s1} ... W_{sk} restricted to partial products of
// length <= radius.
std::unordered_map<std::vector<int>, int, LetterHash> product_set_ball(
    const GraphRef& graph, std::span<const VertexSet> factors, int radius,
    std::size_t cap = kDefaultEnumerationCap);

struct WordDecomposition {
  CoxeterWord left;
  CoxeterWord core;
  CoxeterWord right;
};

// Strips starts_with letters in left_s (smallest first) and then ends_with
// letters in right_s. The three pieces multiply back to w with lengths adding.
WordDecomposition split_lcr(const CoxeterWord& w, const VertexSet& left_s,
                            const VertexSet& right_s);

// W_s intersect W_t == W_{s intersect t} on all elements of length <= max_len.
bool parabolic_intersection_check(const GraphRef& graph, const VertexSet& s, const VertexSet& t,
                                  int max_len, std::size_t cap = kDefaultEnumerationCap);

// Whitespace-separated vertex indices; errors carry the byte offset.
std::vector<int> parse_letters(std::string_view text, int n);
// "[a,b,c]"
std::string format_letters(std::span<const int> letters);

}  // namespace graphprod
