// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "coind/bisim.hpp"
#include "coind/cli.hpp"
#include "coind/wf.hpp"
#include "support.hpp"

using namespace coind;
using namespace coind::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first failure; later checks keep running so that counts stay honest.
struct Tally {
  bool ok = true;
  std::string first_failure;
  std::size_t checks = 0;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
  Outcome done(const std::string& summary) const { return {ok, ok ? summary : first_failure}; }
};

std::vector<Subset> powerset(std::size_t n) {
  std::vector<Subset> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(Subset::from_mask(n, m));
  return out;
}

// 1 ------------------------------------------------------------------------

Outcome fixedpoints() {
  Tally t;
  std::mt19937_64 rng(101);
  std::size_t ops = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 5;
    std::vector<Subset> table;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
      table.push_back(Subset::from_mask(n, rng() & rng() & ((std::uint64_t{1} << n) - 1)));
    auto op = table_operator(monotone_closure(table, n));
    auto c = Carrier::indexed(n);
    if (!is_monotone(op, c).monotone) {
      t.expect(false, "generated operator not monotone");
      continue;
    }
    ++ops;
    const auto lo = lfp(op, c), hi = gfp(op, c);
    t.expect(op(lo) == lo && op(hi) == hi, "fixedpoint property");
    t.expect(verify_extremal(op, c, lo, Extremum::least).ok, "lfp extremality");
    t.expect(verify_extremal(op, c, hi, Extremum::greatest).ok, "gfp extremality");
    for (const auto& x : powerset(n)) {
      if (x.subset_of(op(x))) t.expect(x.subset_of(hi), "weak coinduction soundness");
      if (x.subset_of(op(x | hi))) t.expect(x.subset_of(hi), "strong coinduction soundness");
    }
  }
  t.expect(ops >= 100, "fewer than 100 operators");
  return t.done(std::to_string(ops) + " operators, " + std::to_string(t.checks) + " checks");
}

// 2 ------------------------------------------------------------------------

Outcome freeness() {
  Tally t;
  const auto trees = enumerate_sexp(3, {"a"}, 2);
  const std::vector<FiniteTree> v(trees.begin(), trees.end());
  TreeSet images;
  for (const auto& m : v)
    for (const auto& n : v) {
      auto s = scons(m, n);
      auto shape = case_tree(s);
      const auto* p = std::get_if<SconsShape>(&shape);
      t.expect(p && p->left == m && p->right == n, "scons components not recovered");
      images.insert(std::move(s));
      t.expect(in0(m) != in1(n), "In0 = In1");
      t.expect(cons_tree(m, n) != nil_tree(), "CONS = NIL");
    }
  t.expect(images.size() == v.size() * v.size(), "scons not injective");
  std::size_t atoms = 0;
  for (const auto& x : v) {
    if (!std::holds_alternative<AtomShape>(case_tree(x))) continue;
    ++atoms;
    t.expect(!images.count(x), "atom equals a scons");
  }
  return t.done(std::to_string(v.size()) + " trees, " + std::to_string(images.size()) + " distinct scons images, " +
                std::to_string(atoms) + " atoms");
}

// 3 ------------------------------------------------------------------------

Outcome truncation() {
  Tally t;
  const auto trees = enumerate_sexp(4, {"a"}, 2);
  std::set<std::vector<FiniteTree>> signatures;
  for (const auto& m : trees) {
    t.expect(ntrunc(0, m).empty(), "ntrunc 0");
    auto shape = case_tree(m);
    for (std::size_t k = 0; k <= 4; ++k) {
      if (std::holds_alternative<AtomShape>(shape)) {
        t.expect(ntrunc(k + 1, m) == m, "ntrunc of an atom");
      } else {
        const auto& s = std::get<SconsShape>(shape);
        t.expect(ntrunc(k + 1, m) == push_union(ntrunc(k, s.left), ntrunc(k, s.right)), "ntrunc of scons");
      }
      t.expect(ntrunc(k + 2, in0(m)) == push_union(numb(0), ntrunc(k + 1, m)), "ntrunc of In0");
      for (std::size_t j = 0; j <= 4; ++j)
        t.expect(ntrunc(j, ntrunc(k, m)) == ntrunc(std::min(j, k), m), "coherence");
    }
    t.expect(ntrunc(1, in0(m)).empty() && ntrunc(1, in1(m)).empty(), "ntrunc 1 of an injection");
    std::vector<FiniteTree> sig;
    for (std::size_t k = 0; k <= max_depth(m) + 1; ++k) sig.push_back(ntrunc(k, m));
    signatures.insert(std::move(sig));
  }
  // Distinct trees never share their truncation sequence: the sequences are
  // pairwise distinct iff there are as many as there are trees.
  t.expect(signatures.size() == trees.size(), "two trees share every truncation");
  return t.done(std::to_string(trees.size()) + " trees, " + std::to_string(t.checks) + " checks");
}

// 4 ------------------------------------------------------------------------

Outcome corecursion() {
  Tally t;
  std::mt19937_64 rng(404);
  std::size_t seeds_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n_sym = 1 + rng() % 3;
    auto m = random_machine(rng, "m", 1 + rng() % 6, n_sym);
    const Alphabet full(symbols(n_sym));
    for (const auto& s : m->seeds()) {
      ++seeds_seen;
      auto l = corec(s, m);
      auto o = observe(l);
      const auto& st = m->step(s);
      if (std::holds_alternative<Stop>(st)) {
        t.expect(std::holds_alternative<ObsNil>(o), "Stop must observe Nil");
      } else {
        const auto& e = std::get<Emit>(st);
        const auto* c = std::get_if<ObsCons>(&o);
        t.expect(c && c->head == e.atom && c->tail == corec(e.next, m), "Emit must observe Cons");
      }
      for (std::size_t k = 0; k < 12; ++k) t.expect(lcorf(k, s, *m).subset_of(lcorf(k + 1, s, *m)), "lcorf chain");
      for (std::size_t k = 0; k <= 12; ++k)
        for (std::size_t j = k; j <= 12; ++j)
          t.expect(ntrunc(k, lcorf(j, s, *m)) == ntrunc(k, lcorf(k, s, *m)), "fuel stability");
      t.expect(check_llist_upto(20, l, full).pass, "typing over the full alphabet");
    }
  }
  return t.done("200 machines, " + std::to_string(seeds_seen) + " seeds");
}

// 5 ------------------------------------------------------------------------

Outcome uniqueness() {
  Tally t;
  std::mt19937_64 rng(505);
  std::size_t proofs = 0, largest = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto m = random_machine(rng, "m", 1 + rng() % 6, 1 + rng() % 3);
    auto copy = renamed(*m, "m_copy", "r");
    const std::size_t n = m->seeds().size();
    for (const auto& s : m->seeds()) {
      auto l1 = corec(s, m), l2 = corec("r" + s, copy);
      auto res = find_bisimulation(l1, l2, kDefaultStateBound);
      const auto* c = std::get_if<Certificate>(&res);
      t.expect(c != nullptr, "renamed copy not proved equal");
      if (!c) continue;
      ++proofs;
      largest = std::max(largest, c->pairs.size());
      t.expect(c->pairs.size() <= n * n, "certificate larger than |seeds|^2");
      t.expect(verify_certificate(*c, l1, l2).pass, "certificate does not verify");
      t.expect(eq_upto(50, l1, l2).pass, "eq_upto(50) disagrees");
    }
  }
  return t.done(std::to_string(proofs) + " proofs, largest certificate " + std::to_string(largest));
}

// 6 ------------------------------------------------------------------------

Outcome gallery() {
  Tally t;
  const auto al = mod4();
  auto f = mod4_succ();
  auto g = f;
  auto h = std::make_shared<const AtomFun>(
      "dbl", std::map<std::string, std::string>{{"z0", "z0"}, {"z1", "z2"}, {"z2", "z0"}, {"z3", "z2"}}, al);
  auto gh = std::make_shared<const AtomFun>(AtomFun::compose(*g, *h, "succ_dbl"));

  std::vector<CoList> inputs{nil(),
                             cons(z(0), nil()),
                             cons(z(1), cons(z(2), nil())),
                             cons(z(3), cons(z(0), cons(z(1), nil()))),
                             lconst(z(2)),
                             iterates(f, z(1))};

  std::map<std::string, std::size_t> largest;
  std::map<std::string, std::size_t> count;
  auto prove = [&](const std::string& law, const CoList& l, const CoList& r) {
    auto res = find_bisimulation(l, r, kDefaultStateBound);
    const auto* c = std::get_if<Certificate>(&res);
    t.expect(c != nullptr, law + " not closed for " + l.key() + " vs " + r.key());
    if (!c) return;
    t.expect(c->pairs.size() <= 100, law + " certificate exceeds 100 pairs");
    t.expect(verify_certificate(*c, l, r).pass, law + " certificate fails verification");
    largest[law] = std::max(largest[law], c->pairs.size());
    ++count[law];
  };

  for (const auto& l : inputs) prove("map-composition", lmap(g, lmap(h, l)), lmap(gh, l));
  for (int x = 0; x < 4; ++x) prove("map-iterates", lmap(f, iterates(f, z(x))), iterates(f, (*f)(z(x))));
  for (const auto& l1 : inputs)
    for (const auto& l2 : inputs) prove("map-append", lmap(f, lappend(l1, l2)), lappend(lmap(f, l1), lmap(f, l2)));
  for (const auto& l : inputs) {
    prove("nil-left", lappend(nil(), l), l);
    prove("nil-right", lappend(l, nil()), l);
  }
  for (const auto& a : inputs)
    for (const auto& b : inputs)
      for (const auto& c : inputs) prove("assoc", lappend(lappend(a, b), c), lappend(a, lappend(b, c)));
  t.expect(count["assoc"] >= 27, "fewer than 27 associativity triples");

  std::string summary;
  for (const auto& [law, n] : count) {
    if (!summary.empty()) summary += ", ";
    summary += law + " " + std::to_string(n) + " (max " + std::to_string(largest[law]) + ")";
  }
  return t.done(summary);
}

// 7 ------------------------------------------------------------------------

std::string seed_name(int n, int x) { return "n" + std::to_string(n) + "_" + z(x).name; }

Outcome iterates_uniqueness() {
  Tally t;
  auto f = mod4_succ();
  // State (n, x) emits f^n(x) and moves to (n+1, x); n is kept mod 4 since
  // f^4 is the identity.
  std::vector<std::string> seeds;
  std::map<std::string, StepResult> table;
  for (int n = 0; n < 4; ++n)
    for (int x = 0; x < 4; ++x) {
      seeds.push_back(seed_name(n, x));
      table[seed_name(n, x)] = Emit{z(x + n), seed_name((n + 1) % 4, x)};
    }
  auto m = std::make_shared<const StepFn>("fpow", seeds, table);
  std::size_t largest = 0;
  for (int x = 0; x < 4; ++x) {
    auto res = find_bisimulation(corec(seed_name(0, x), m), iterates(f, z(x)), kDefaultStateBound);
    const auto* c = std::get_if<Certificate>(&res);
    t.expect(c != nullptr, "machine differs from iterates at " + z(x).name);
    if (c) largest = std::max(largest, c->pairs.size());
    // (Lmap f)^n (iterates f x) is the n-th state of the same family.
    CoList layered = iterates(f, z(x));
    for (int n = 0; n < 4; ++n) {
      auto r = find_bisimulation(corec(seed_name(n, x), m), layered, kDefaultStateBound);
      t.expect(std::holds_alternative<Certificate>(r), "state (" + std::to_string(n) + ", x) differs from Lmap^n");
      layered = lmap(f, layered);
    }
  }
  return t.done("4 symbols, largest certificate " + std::to_string(largest));
}

// 8 ------------------------------------------------------------------------

std::shared_ptr<const StepFn> perturbed(const StepFn& m, std::mt19937_64& rng, std::size_t n_sym) {
  std::map<std::string, StepResult> table;
  for (const auto& s : m.seeds()) table[s] = m.step(s);
  const auto& victim = m.seeds()[rng() % m.seeds().size()];
  table[victim] = Emit{Symbol{symbols(n_sym)[rng() % n_sym]}, m.seeds()[rng() % m.seeds().size()]};
  return std::make_shared<const StepFn>(m.name() + "_p", m.seeds(), table);
}

Outcome gfp_crosscheck() {
  Tally t;
  std::mt19937_64 rng(808);
  std::size_t equal = 0, different = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n_sym = 1 + rng() % 2;
    auto m1 = random_machine(rng, "p", 1 + rng() % 5, n_sym, "p");
    std::shared_ptr<const StepFn> m2;
    switch (trial % 3) {
      case 0: m2 = random_machine(rng, "q", 1 + rng() % 5, n_sym, "q"); break;
      case 1: m2 = renamed(*m1, "q", "q"); break;
      default: m2 = renamed(*perturbed(*m1, rng, n_sym), "q", "q"); break;
    }
    const auto s1 = m1->seeds()[rng() % m1->seeds().size()];
    const auto s2 = m2->seeds()[rng() % m2->seeds().size()];
    auto l1 = corec(s1, m1), l2 = corec(s2, m2);
    const bool in_gfp = bisimilarity_gfp(*m1, *m2, m1->seeds().size() * m2->seeds().size() <= kExhaustiveBound)
                            .count({s1, s2}) != 0;
    const bool certified = std::holds_alternative<Certificate>(find_bisimulation(l1, l2, kDefaultStateBound));
    const bool agree = eq_upto(2 * 25 + 1, l1, l2).pass;
    t.expect(in_gfp == certified && certified == agree,
             "disagreement on " + l1.key() + " vs " + l2.key());
    (certified ? equal : different)++;
  }
  t.expect(equal > 0 && different > 0, "cross-check saw only one outcome");
  return t.done("120 pairs, " + std::to_string(equal) + " equal, " + std::to_string(different) + " different");
}

// 9 ------------------------------------------------------------------------

Outcome wf_suite() {
  Tally t;
  // Every list tree N of depth <= 6 differs from CONS M N.
  const auto heads = enumerate_sexp(3, {"a"}, 2);
  std::vector<FiniteTree> lists{nil_tree()};
  for (std::size_t round = 0; round < 3; ++round) {
    std::vector<FiniteTree> next{nil_tree()};
    for (const auto& tail : lists)
      for (const auto& h : heads) {
        auto c = cons_tree(h, tail);
        if (max_depth(c) <= 6) next.push_back(std::move(c));
      }
    lists = std::move(next);
  }
  {
    TreeSet distinct(lists.begin(), lists.end());
    t.expect(distinct.size() == lists.size(), "list enumeration has duplicates");
  }
  for (const auto& n : lists)
    for (const auto& m : heads) t.expect(cons_tree(m, n) != n, "CONS M N = N");

  // Transitive closure against a path search.
  std::mt19937_64 rng(909);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    PairSet<int> r;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rng() % 4 == 0) r.emplace(i, j);
    PairSet<int> oracle;
    for (int s = 0; s < n; ++s) {
      std::vector<int> stack{s};
      std::set<int> seen;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const auto& [x, y] : r)
          if (x == u && seen.insert(y).second) stack.push_back(y);
      }
      for (int y : seen) oracle.emplace(s, y);
    }
    t.expect(transitive_closure(r) == oracle, "transitive closure differs from path search");
  }

  t.expect(sexp_space(2, {"a"}, 2).carrier.size() == 12, "sexp_space(2) carrier size");

  for (std::size_t d = 1; d <= 3; ++d) {
    auto sp = sexp_space(d, {"a"}, 2);
    TreeCarrier tc(std::vector<FiniteTree>(sp.carrier.begin(), sp.carrier.end()));
    auto op = restrict_operator(tc, [](const TreeSet& z) { return sexp_fun({"a"}, 2, z); });
    t.expect(lfp(op, tc.carrier) == Subset::full(tc.trees.size()), "Sexp lfp differs from enumeration");
  }

  // Restricted List_Fun: carrier of lists over {a,b} up to length 2 plus junk.
  std::vector<FiniteTree> carrier;
  TreeSet expected;
  std::vector<std::vector<Symbol>> words{{}};
  for (std::size_t len = 0; len < 2; ++len) {
    auto grown = words;
    for (const auto& w : words)
      if (w.size() == len)
        for (const char* s : {"a", "b"}) {
          auto x = w;
          x.push_back(Symbol{s});
          grown.push_back(x);
        }
    words = grown;
  }
  for (const auto& w : words) {
    carrier.push_back(list_encode(w).tree);
    expected.insert(carrier.back());
  }
  for (const auto& junk : {leaf("a"), numb(1), in1(scons(leaf("a"), leaf("b"))), in0(numb(1))}) carrier.push_back(junk);
  TreeCarrier tc(carrier);
  auto op = restrict_operator(tc, [](const TreeSet& z) { return list_fun({leaf("a"), leaf("b")}, z); });
  t.expect(tc.trees_of(lfp(op, tc.carrier)) == expected, "List_Fun lfp differs from list enumeration");
  t.expect(verify_extremal(op, tc.carrier, lfp(op, tc.carrier), Extremum::least).ok, "List_Fun lfp not least");

  return t.done(std::to_string(lists.size()) + " lists x " + std::to_string(heads.size()) + " heads");
}

// 10 -----------------------------------------------------------------------

Outcome cli_golden() {
  Tally t;
  const std::string defs = COIND_TEST_DATA "/defs.json";
  struct Golden {
    std::vector<std::string> args;
    int code;
    std::string out, err;
  };
  const std::vector<Golden> corpus{
      {{"eq", "--defs", defs, "--depth", "20", "lconst(a)", "cons(a,lconst(a))"}, 0, "EQUAL to depth 20\n", ""},
      {{"bisim", "--defs", defs, "map(g,map(h,lconst(a)))", "map(gh,lconst(a))"},
       0,
       "BISIMILAR (strong certificate, 1 pair)\n"
       "root MAP(g,MAP(h,CONST(a))) ~ MAP(gh,CONST(a))\n"
       "pair MAP(g,MAP(h,CONST(a))) ~ MAP(gh,CONST(a))\n",
       ""},
      {{"eval", "--defs", defs, "--depth", "4", "iterates(succ,x0)"}, 0, "[x0, x1, x2, x3, ...]\n", ""},
      {{"eval", "--defs", defs, "--depth", "4", "append(nil,"},
       2,
       "",
       "error: parse error at offset 11: expected expression\n"},
  };
  for (const auto& g : corpus) {
    std::ostringstream out, err;
    const int code = run_command(g.args, out, err);
    t.expect(code == g.code && out.str() == g.out && err.str() == g.err, "mismatch on `" + g.args[0] + " ... " +
                                                                              g.args.back() + "`");
  }
  return t.done("4 commands byte-identical");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"fixedpoints", fixedpoints},
      {"constructor freeness", freeness},
      {"ntrunc laws", truncation},
      {"corecursion", corecursion},
      {"uniqueness of corecursion", uniqueness},
      {"equation gallery", gallery},
      {"iterates uniqueness instance", iterates_uniqueness},
      {"equality as gfp", gfp_crosscheck},
      {"well-founded suite", wf_suite},
      {"cli golden", cli_golden},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): " << (o.ok ? "PASS" : "FAIL") << " - "
              << o.detail << " [" << ms << " ms]\n";
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
