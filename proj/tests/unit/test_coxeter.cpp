#include <doctest.h>

#include <functional>
#include <random>

#include "graphprod/coxeter.hpp"
#include "graphprod/error.hpp"
#include "graphprod/verification.hpp"
#include "oracles.hpp"

using namespace graphprod;
namespace fam = graphprod::families;

namespace {

VertexSet vs(std::initializer_list<int> v, int n) { return VertexSet::of(v, n); }

std::vector<int> L(std::initializer_list<int> v) { return v; }

// Calls f on every raw word of length <= max_len over n letters.
template <class F>
void for_each_raw(int n, int max_len, F&& f) {
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

std::vector<int> random_word(std::mt19937_64& rng, int n, int len) {
  std::uniform_int_distribution<int> d(0, n - 1);
  std::vector<int> w(static_cast<std::size_t>(len));
  for (auto& a : w) a = d(rng);
  return w;
}

}  // namespace

TEST_CASE("reduce examples") {
  auto edge = share(SimpleGraph(2, {{0, 1}}));
  CHECK(CoxeterWord::reduce(edge, {0, 1, 0}).letters() == L({1}));
  auto c5 = share(fam::cycle(5));
  CHECK(CoxeterWord::reduce(c5, {1, 0}).letters() == L({0, 1}));
  CHECK(CoxeterWord::reduce(c5, {2, 1}).letters() == L({1, 2}));
  CHECK(CoxeterWord::reduce(c5, {2, 0}).letters() == L({2, 0}));
  CHECK(CoxeterWord::reduce(c5, {0, 0}).is_identity());
  CHECK(CoxeterWord::reduce(c5, {2, 4, 0}).letters() == L({2, 0, 4}));
  CHECK(CoxeterWord::reduce(c5, {4, 2, 0}).letters() == L({4, 2, 0}));
  CHECK(CoxeterWord::reduce(c5, {3, 0, 3}).letters() == L({3, 0, 3}));
  CHECK(CoxeterWord::reduce(c5, {3, 4, 3}).letters() == L({4}));
  CHECK(CoxeterWord::reduce(c5, {4, 3, 1, 3}).letters() == L({3, 4, 1, 3}));
  CHECK_THROWS_AS(CoxeterWord::reduce(c5, {5}), InputError);
}

TEST_CASE("normal form is the least word of the oracle class") {
  for (const auto& g : {fam::cycle(5), fam::path(5), fam::complete_bipartite(2, 3), fam::cycle(6),
                        fam::star_graph(3), fam::edgeless(3)}) {
    auto ref = share(g);
    WordOracle oracle(g, 0);
    for_each_raw(g.n(), 6, [&](const std::vector<int>& raw) {
      REQUIRE(CoxeterWord::reduce(ref, raw).letters() == oracle.naive_key(raw));
    });
  }
}

TEST_CASE("normal form is constant on rearrangements") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const auto g = oracle::labeled_graph(n, rng() % oracle::labeled_count(n));
    auto ref = share(g);
    std::vector<int> w = random_word(rng, n, static_cast<int>(rng() % 13));
    const auto nf = CoxeterWord::reduce(ref, w);
    CHECK(CoxeterWord::reduce(ref, nf.letters()) == nf);
    for (int k = 0; k < 20; ++k) {
      std::vector<int> x = w;
      const int op = static_cast<int>(rng() % 2);
      const std::size_t i = x.empty() ? 0 : rng() % (x.size() + 1);
      if (op == 0 && i + 1 < x.size() && g.adjacent(x[i], x[i + 1])) {
        std::swap(x[i], x[i + 1]);
      } else {
        const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        x.insert(x.begin() + static_cast<std::ptrdiff_t>(i), {a, a});
      }
      CHECK(CoxeterWord::reduce(ref, x) == nf);
      CHECK(support_and_boundary(CoxeterWord::reduce(ref, x)).support ==
            support_and_boundary(nf).support);
      w = x;
    }
  }
}

TEST_CASE("group operations") {
  auto e2 = share(fam::edgeless(2));
  CHECK(multiply(CoxeterWord::reduce(e2, {0, 1}), CoxeterWord::reduce(e2, {1, 0})).is_identity());
  auto edge = share(SimpleGraph(2, {{0, 1}}));
  CHECK(multiply(generator(edge, 0), generator(edge, 1)).letters() == L({0, 1}));
  CHECK_THROWS_AS(multiply(generator(edge, 0), generator(e2, 0)), InputError);

  std::mt19937_64 rng(3);
  auto c6 = share(fam::cycle(6));
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = CoxeterWord::reduce(c6, random_word(rng, 6, static_cast<int>(rng() % 10)));
    const auto b = CoxeterWord::reduce(c6, random_word(rng, 6, static_cast<int>(rng() % 10)));
    const auto ab = multiply(a, b);
    CHECK(ab.length() <= a.length() + b.length());
    CHECK((a.length() + b.length() - ab.length()) % 2 == 0);
    CHECK(multiply(a, invert(a)).is_identity());
    CHECK(invert(invert(a)) == a);
    CHECK(invert(a).length() == a.length());
    CHECK(invert(ab) == multiply(invert(b), invert(a)));
  }
}

TEST_CASE("support and boundary") {
  auto c5 = share(fam::cycle(5));
  CHECK(support_and_boundary(CoxeterWord::reduce(c5, {1, 3})).lk == vs({2}, 5));
  CHECK(support_and_boundary(CoxeterWord::reduce(c5, {0})).starts_with == vs({0}, 5));
  CHECK(support_and_boundary(CoxeterWord(c5)).lk == VertexSet::all(5));
  auto e2 = share(fam::edgeless(2));
  const auto b = support_and_boundary(CoxeterWord::reduce(e2, {0, 1, 0}));
  CHECK(b.starts_with == vs({0}, 2));
  CHECK(b.ends_with == vs({0}, 2));

  std::mt19937_64 rng(5);
  for (const auto& g : {fam::cycle(5), fam::path(5), fam::complete_bipartite(2, 3)}) {
    auto ref = share(g);
    for (int trial = 0; trial < 300; ++trial) {
      const auto w = CoxeterWord::reduce(ref, random_word(rng, g.n(), 8));
      const auto bd = support_and_boundary(w);
      for (int a = 0; a < g.n(); ++a) {
        CHECK(bd.starts_with.contains(a) == (multiply(generator(ref, a), w).length() < w.length()));
        CHECK(bd.ends_with.contains(a) == (multiply(w, generator(ref, a)).length() < w.length()));
      }
    }
  }
}

TEST_CASE("parabolic membership") {
  auto c5 = share(fam::cycle(5));
  CHECK(parabolic_membership(CoxeterWord::reduce(c5, {1, 3}), vs({1, 3}, 5)));
  CHECK_FALSE(parabolic_membership(CoxeterWord::reduce(c5, {1, 3}), vs({1}, 5)));
  CHECK(parabolic_membership(CoxeterWord(c5), VertexSet::empty(5)));

  const auto g = fam::path(5);
  auto ref = share(g);
  WordOracle oracle(g, 6);
  for_each_raw(5, 6, [&](const std::vector<int>& raw) {
    const auto w = CoxeterWord::reduce(ref, raw);
    for (Mask s : {Mask{0b00111}, Mask{0b10101}, Mask{0b01010}, Mask{0b11000}}) {
      REQUIRE(parabolic_membership(w, VertexSet(s, 5)) == oracle.in_parabolic(raw, s));
    }
  });
}

TEST_CASE("enumeration strata") {
  CHECK(enumerate_words(share(fam::edgeless(2)), 3).size() == 7);
  CHECK(enumerate_words(share(fam::edgeless(2)), 3).strata == std::vector<std::size_t>{1, 2, 2, 2});
  CHECK(enumerate_words(share(SimpleGraph(2, {{0, 1}})), 2).size() == 4);
  CHECK(enumerate_words(share(SimpleGraph(2, {{0, 1}})), 2).strata == std::vector<std::size_t>{1, 2, 1});
  CHECK(enumerate_words(share(fam::cycle(5)), 2).size() == 21);
  CHECK_THROWS_AS(enumerate_words(share(fam::edgeless(3)), 12, 1000), CapExceeded);

  for (const auto& g : {fam::cycle(5), fam::cycle(6), fam::path(5), fam::complete_bipartite(2, 3),
                        fam::petersen()}) {
    const int r = g.n() > 6 ? 4 : 7;
    const WordOracle oracle(g, r);
    const auto e = enumerate_words(share(g), r);
    CHECK(e.strata == oracle.strata());
    for (std::size_t i = 0; i < e.size(); ++i) {
      REQUIRE(e.elements[i].letters() == oracle.naive_key(e.elements[i].letters()));
      if (i > 0) {
        const auto& p = e.elements[i - 1];
        const auto& q = e.elements[i];
        CHECK((p.length() < q.length() || (p.length() == q.length() && p.letters() < q.letters())));
      }
    }
  }
}

TEST_CASE("product set membership") {
  auto c5 = share(fam::cycle(5));
  const std::vector<VertexSet> one{vs({0, 2}, 5)};
  CHECK(product_set_membership(generator(c5, 0), one));
  auto e2 = share(fam::edgeless(2));
  const std::vector<VertexSet> twice{vs({0}, 2), vs({0}, 2)};
  CHECK_FALSE(product_set_membership(CoxeterWord::reduce(e2, {0, 1}), twice));
  CHECK_THROWS_AS(product_set_membership(generator(c5, 0), std::span<const VertexSet>{}), InputError);
  CHECK_THROWS_AS(product_set_membership_checked(CoxeterWord::reduce(c5, {0, 2, 4}), one, 2), InputError);

  std::mt19937_64 rng(17);
  for (const auto& g : {fam::cycle(5), fam::path(5), fam::complete_bipartite(2, 3), fam::cycle(6)}) {
    auto ref = share(g);
    const int n = g.n();
    const WordOracle oracle(g, 6);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<VertexSet> factors;
      std::vector<Mask> masks;
      const int k = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < k; ++i) {
        const Mask m = rng() & low_bits(n);
        factors.emplace_back(m, n);
        masks.push_back(m);
      }
      const auto states = oracle.product_states(masks);
      for (std::size_t s = 0; s < oracle.size(); ++s) {
        const auto w = CoxeterWord::reduce(ref, oracle.key(static_cast<int>(s)));
        REQUIRE(product_set_membership(w, factors) == (states[s] != 0));
        if (k == 1) REQUIRE(product_set_membership(w, factors) == parabolic_membership(w, factors[0]));
      }
      const auto w = CoxeterWord::reduce(ref, random_word(rng, n, 5));
      const auto chk = product_set_membership_checked(w, factors, 6);
      CHECK(chk.agreed);
      CHECK_FALSE(chk.fallback_used);
      CHECK(chk.member == (states[static_cast<std::size_t>(*oracle.locate(w.letters()))] != 0));
    }
  }
}

TEST_CASE("link intersection lands in the two-vertex product") {
  const auto g = fam::cycle(5);
  auto ref = share(g);
  std::vector<VertexSet> tail;
  for (int v = 1; v < 5; ++v) tail.push_back(link(g, v));
  const auto ball = enumerate_words(ref, 6);
  std::size_t found = 0;
  const std::vector<VertexSet> ends{vs({1}, 5), vs({4}, 5)};
  for (const auto& w : ball.elements) {
    if (!parabolic_membership(w, link(g, 0)) || !product_set_membership(w, tail)) continue;
    ++found;
    CHECK(product_set_membership(w, ends));
  }
  CHECK(found == 4);
}

TEST_CASE("split_lcr") {
  auto c5 = share(fam::cycle(5));
  const auto d = split_lcr(CoxeterWord::reduce(c5, {1, 0, 3}), vs({1}, 5), vs({3}, 5));
  CHECK(d.left.letters() == L({1}));
  CHECK(d.core.letters() == L({0}));
  CHECK(d.right.letters() == L({3}));

  const auto core = CoxeterWord::reduce(c5, {0, 2});
  const auto same = split_lcr(core, vs({4}, 5), vs({3}, 5));
  CHECK(same.left.is_identity());
  CHECK(same.core == core);
  CHECK(same.right.is_identity());

  const auto w = CoxeterWord::reduce(c5, {0, 2, 0, 2});
  const auto sup = support_and_boundary(w).support;
  CHECK(split_lcr(w, sup, sup).core.is_identity());

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    auto ref = share(oracle::labeled_graph(n, rng() % oracle::labeled_count(n)));
    const auto x = CoxeterWord::reduce(ref, random_word(rng, n, 10));
    const VertexSet ls(rng() & low_bits(n), n), rs(rng() & low_bits(n), n);
    const auto p = split_lcr(x, ls, rs);
    CHECK(multiply(multiply(p.left, p.core), p.right) == x);
    CHECK(p.left.length() + p.core.length() + p.right.length() == x.length());
    CHECK(parabolic_membership(p.left, ls));
    CHECK(parabolic_membership(p.right, rs));
    const auto b = support_and_boundary(p.core);
    CHECK((b.starts_with & ls).is_empty());
    CHECK((b.ends_with & rs).is_empty());
  }
}

TEST_CASE("parabolic intersections") {
  auto c5 = share(fam::cycle(5));
  CHECK(parabolic_intersection_check(c5, vs({0, 1}, 5), vs({1, 2}, 5), 6));
  CHECK(parabolic_intersection_check(c5, vs({0}, 5), vs({0, 2}, 5), 6));
  CHECK(parabolic_intersection_check(c5, vs({0, 2}, 5), vs({1, 3}, 5), 6));
}

TEST_CASE("letter parsing") {
  CHECK(parse_letters(" 0 1  0", 2) == L({0, 1, 0}));
  CHECK(parse_letters("", 2).empty());
  try {
    parse_letters("0 1 x", 2);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(e.byte_offset() == std::optional<std::size_t>(4));
  }
  try {
    parse_letters("0 7", 2);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(e.byte_offset() == std::optional<std::size_t>(2));
  }
  CHECK(format_letters(L({1})) == "[1]");
  CHECK(format_letters(L({})) == "[]");
  CHECK(format_letters(L({0, 2, 1})) == "[0,2,1]");
}
