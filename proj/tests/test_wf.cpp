#include <doctest.h>

#include <functional>
#include <random>

#include "coind/bisim.hpp"
#include "coind/wf.hpp"

using namespace coind;

namespace {

const Symbol a{"a"}, b{"b"};

// Brute-force reachability: x reaches y through one or more edges.
std::set<std::pair<int, int>> paths(const std::set<std::pair<int, int>>& r, int n) {
  std::set<std::pair<int, int>> out;
  for (int s = 0; s < n; ++s) {
    std::vector<int> stack{s};
    std::set<int> seen;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& [x, y] : r)
        if (x == u && seen.insert(y).second) stack.push_back(y);
    }
    for (int y : seen) out.emplace(s, y);
  }
  return out;
}

}  // namespace

TEST_CASE("list encoding") {
  CHECK(list_encode({}).tree == nil_tree());
  CHECK(list_encode({a}).tree == cons_tree(leaf("a"), nil_tree()));
  CHECK(max_depth(list_encode({a, b}).tree) == 5);
  CHECK(list_decode(list_encode({a, b}).tree) == std::vector<Symbol>{a, b});
  CHECK(list_decode(nil_tree()).empty());
  CHECK_THROWS_AS(list_decode(leaf("a")), Error);
  CHECK_THROWS_AS(list_decode(in1(scons(numb(0), nil_tree()))), Error);
  CHECK_THROWS_AS(list_encode({Symbol{"q"}}, Alphabet({"a"})), Error);
  for (std::size_t n = 0; n < 6; ++n) {
    std::vector<Symbol> xs(n, b);
    CHECK(max_depth(list_encode(xs).tree) == (n == 0 ? 1 : 2 * n + 1));
  }
}

TEST_CASE("transitive closure") {
  CHECK(transitive_closure(PairSet<int>{{1, 2}, {2, 3}}) == PairSet<int>{{1, 2}, {2, 3}, {1, 3}});
  CHECK(transitive_closure(PairSet<int>{}).empty());
  PairSet<std::string> cyc{{"x", "y"}, {"y", "x"}};
  CHECK(transitive_closure(cyc).count({"x", "x"}));
  CHECK_THROWS_AS(WFRelation<std::string>{cyc}, Error);
  const PairSet<int> self_loop{{1, 1}};
  CHECK_THROWS_AS(WFRelation<int>{self_loop}, Error);
}

TEST_CASE("closure against a path oracle and well-foundedness preservation") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const bool dag = t % 2 == 0;
    PairSet<int> r;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (dag && i >= j) continue;
        if (rng() % 3 == 0) r.emplace(i, j);
      }
    auto tc = transitive_closure(r);
    CHECK(tc == paths(r, n));
    if (dag) {
      CHECK_NOTHROW(WFRelation<int>{tc});
      WFRelation<int> w(r);
      for (const auto& [x, y] : tc) CHECK(w.less(x, y));
    }
  }
}

TEST_CASE("wfrec: length and append") {
  const auto lst = list_encode({a, b}).tree;
  RecSpec<FiniteTree, int> length{list_suffix_relation(lst), [](const FiniteTree& t, const auto& rec) {
                                    return list_case(
                                        t, [] { return 0; },
                                        [&](const FiniteTree&, const FiniteTree& tl) { return 1 + rec(tl); });
                                  }};
  CHECK(wfrec(length, lst) == 2);
  CHECK(wfrec(length, lst) == wfrec(length, lst));

  const auto ys = list_encode({b}).tree;
  const auto xs = list_encode({a}).tree;
  RecSpec<FiniteTree, FiniteTree> app{list_suffix_relation(xs), [&](const FiniteTree& t, const auto& rec) {
                                        return list_case(
                                            t, [&] { return ys; },
                                            [&](const FiniteTree& h, const FiniteTree& tl) {
                                              return cons_tree(h, rec(tl));
                                            });
                                      }};
  CHECK(list_decode(wfrec(app, xs)) == std::vector<Symbol>{a, b});

  RecSpec<FiniteTree, int> loop{list_suffix_relation(lst),
                                [](const FiniteTree& t, const auto& rec) { return rec(t); }};
  try {
    wfrec(loop, lst);
    FAIL("expected IllFoundedCall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IllFoundedCall);
  }
}

TEST_CASE("wfrec only consults smaller elements") {
  auto sp = sexp_space(3, {"a"}, 2);
  std::size_t calls = 0;
  RecSpec<FiniteTree, std::size_t> size{sp.sub, [&](const FiniteTree& t, const auto& rec) -> std::size_t {
                                          auto shape = case_tree(t);
                                          if (std::holds_alternative<AtomShape>(shape)) return 1;
                                          const auto& s = std::get<SconsShape>(shape);
                                          ++calls;
                                          CHECK(sp.sub.less(s.left, t));
                                          return rec(s.left) + rec(s.right);
                                        }};
  for (const auto& t : sp.carrier) CHECK(wfrec(size, t) == t.size());
  CHECK(calls > 0);
}

TEST_CASE("sexp spaces") {
  auto one = sexp_space(1, {"a"}, 2);
  CHECK(one.carrier == TreeSet{leaf("a"), numb(0), numb(1)});
  CHECK(one.sub.pairs().empty());
  CHECK(sexp_space(2, {"a"}, 2).carrier.size() == 12);
  CHECK_THROWS_AS(sexp_space(5, {"a"}, 2), Error);
  CHECK_THROWS_AS(sexp_space(2, {"a", "b", "c", "d"}, 2), Error);
  CHECK_THROWS_AS(sexp_space(2, {"a"}, 3), Error);
}

TEST_CASE("least fixedpoints match enumeration") {
  for (std::size_t d = 1; d <= 3; ++d) {
    auto sp = sexp_space(d, {"a"}, 2);
    TreeCarrier tc(std::vector<FiniteTree>(sp.carrier.begin(), sp.carrier.end()));
    auto op = restrict_operator(tc, [](const TreeSet& z) { return sexp_fun({"a"}, 2, z); });
    CHECK(lfp(op, tc.carrier) == Subset::full(tc.trees.size()));
  }

  const TreeSet A{leaf("a")};
  std::vector<FiniteTree> carrier{nil_tree(), list_encode({a}).tree, list_encode({a, a}).tree, leaf("a")};
  TreeCarrier tc(carrier);
  auto op = restrict_operator(tc, [&](const TreeSet& z) { return list_fun(A, z); });
  CHECK(is_monotone(op, tc.carrier).monotone);
  CHECK(lfp(op, tc.carrier) == Subset::of(4, {0, 1, 2}));
  CHECK(verify_extremal(op, tc.carrier, Subset::of(4, {0, 1, 2}), Extremum::least).ok);

  std::vector<FiniteTree> five{nil_tree(), list_encode({a}).tree, list_encode({a, a}).tree, leaf("a"),
                               list_encode({a, a, a}).tree};
  TreeCarrier tc5(five);
  CHECK(is_monotone(restrict_operator(tc5, [&](const TreeSet& z) { return list_fun(A, z); }), tc5.carrier).monotone);
}

TEST_CASE("lists of Sexps are Sexps") {
  // Carrier membership via sexp_space while it is within bounds; beyond that
  // the recursive reading of the same definition.
  std::function<bool(const FiniteTree&, std::size_t)> in_sexp = [&](const FiniteTree& t, std::size_t d) {
    if (d == 0) return false;
    auto shape = case_tree(t);
    if (const auto* at = std::get_if<AtomShape>(&shape)) {
      if (const auto* n = std::get_if<Num>(&at->label)) return n->k < 2;
      return std::get<UserAtom>(at->label).symbol == "a";
    }
    const auto& s = std::get<SconsShape>(shape);
    return in_sexp(s.left, d - 1) && in_sexp(s.right, d - 1);
  };
  for (std::size_t d = 1; d <= 3; ++d)
    for (const auto& t : sexp_space(d, {"a"}, 2).carrier) CHECK(in_sexp(t, d));

  std::map<std::size_t, TreeSet> carriers;
  for (std::size_t d = 3; d <= kSexpMaxDepth; ++d) carriers[d] = enumerate_sexp(d, {"a"}, 2);
  for (std::size_t e = 1; e <= 2; ++e) {
    for (const auto& h : enumerate_sexp(e, {"a"}, 2)) {
      FiniteTree t = nil_tree();
      for (std::size_t len = 0; len <= 3; ++len) {
        const std::size_t d = 2 * len + e + 2;
        if (d <= kSexpMaxDepth) CHECK(carriers[d].count(t));
        CHECK(in_sexp(t, d));
        t = cons_tree(h, t);
      }
    }
  }
}

TEST_CASE("CONS M N differs from N, while lconst equals its own unfolding") {
  std::vector<FiniteTree> lists{nil_tree()};
  for (std::size_t i = 0; i < 2; ++i) {
    std::vector<FiniteTree> next = lists;
    for (const auto& t : lists)
      for (const char* s : {"a", "b"}) next.push_back(cons_tree(leaf(s), t));
    lists = next;
  }
  for (const auto& n : lists)
    for (const auto& m : enumerate_sexp(2, {"a", "b"}, 2)) {
      auto c = cons_tree(m, n);
      CHECK(c != n);
    }
  for (std::size_t k = 0; k <= 40; k += 8) CHECK(eq_upto(k, lconst(a), cons(a, lconst(a))).pass);
}
