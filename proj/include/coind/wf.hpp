#pragma once

// Well-founded side: finite lists inside the tree universe, depth-bounded
// S-expression carriers, transitive closure as a least fixedpoint and
// recursion along a well-founded relation.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coind/colist.hpp"
#include "coind/error.hpp"
#include "coind/lattice.hpp"
#include "coind/tree.hpp"

namespace coind {

struct FinList {
  FiniteTree tree;
  std::vector<Symbol> elems;
};

/// Right-nested CONS (Leaf x) ... NIL.
FinList list_encode(const std::vector<Symbol>& xs);
/// As above, rejecting atoms outside the alphabet (UnknownAtom).
FinList list_encode(const std::vector<Symbol>& xs, const Alphabet& alphabet);
/// Throws NotAList.
std::vector<Symbol> list_decode(const FiniteTree& t);

template <class T>
using PairSet = std::set<std::pair<T, T>>;

/// Least transitive relation containing r, as lfp of Z ↦ r ∪ (r ; Z) over
/// the pairs of the elements r mentions.
template <class T>
PairSet<T> transitive_closure(const PairSet<T>& r) {
  std::vector<T> elems;
  {
    std::set<T> seen;
    for (const auto& [x, y] : r) {
      seen.insert(x);
      seen.insert(y);
    }
    elems.assign(seen.begin(), seen.end());
  }
  const std::size_t n = elems.size();
  std::map<T, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(elems[i], i);
  std::vector<std::vector<std::size_t>> succ(n);
  Subset base(n * n);
  for (const auto& [x, y] : r) {
    succ[index.at(x)].push_back(index.at(y));
    base.insert(index.at(x) * n + index.at(y));
  }
  SubsetOperator step = [&](const Subset& z) {
    Subset out = base;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y : succ[x])
        for (std::size_t w = 0; w < n; ++w)
          if (z.contains(y * n + w)) out.insert(x * n + w);
    return out;
  };
  const Subset closed = lfp(step, Carrier::indexed(n * n));
  PairSet<T> out;
  for (auto k : closed.members()) out.emplace(elems[k / n], elems[k % n]);
  return out;
}

/// A finite relation with no cycles. `below(y)` is {x | x ≺⁺ y}.
template <class T>
class WFRelation {
 public:
  /// Throws NotWellFounded if the relation has a cycle.
  explicit WFRelation(PairSet<T> pairs) : pairs_(std::move(pairs)) {
    for (const auto& [x, y] : pairs_) preds_[y].push_back(x);
    for (const auto& [x, y] : pairs_) {
      (void)x;
      compute_below(y);
    }
  }

  const PairSet<T>& pairs() const { return pairs_; }

  const std::set<T>& below(const T& y) const {
    static const std::set<T> none;
    auto it = below_.find(y);
    return it == below_.end() ? none : it->second;
  }

  bool less(const T& x, const T& y) const { return below(y).count(x) != 0; }

 private:
  // Depth-first over predecessors, memoized; a node met again while still on
  // the stack closes a cycle.
  const std::set<T>& compute_below(const T& y) {
    if (auto it = below_.find(y); it != below_.end()) return it->second;
    if (!on_stack_.insert(y).second) throw Error(ErrorCode::NotWellFounded, "relation has a cycle");
    std::set<T> acc;
    if (auto it = preds_.find(y); it != preds_.end()) {
      for (const auto& x : it->second) {
        acc.insert(x);
        const auto& deeper = compute_below(x);
        acc.insert(deeper.begin(), deeper.end());
      }
    }
    on_stack_.erase(y);
    return below_.emplace(y, std::move(acc)).first->second;
  }

  PairSet<T> pairs_;
  std::map<T, std::vector<T>> preds_;
  std::map<T, std::set<T>> below_;
  std::set<T> on_stack_;
};

template <class T, class R>
struct RecSpec {
  WFRelation<T> relation;
  /// body(arg, recurse); recurse may only be called on elements below arg.
  std::function<R(const T&, const std::function<R(const T&)>&)> body;
};

/// Well-founded recursion with memoized evaluation. Throws IllFoundedCall if
/// the body asks for a value that is not strictly below its argument.
template <class T, class R>
R wfrec(const RecSpec<T, R>& spec, const T& arg) {
  std::map<T, R> memo;
  std::function<R(const T&)> eval = [&](const T& x) -> R {
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    std::function<R(const T&)> recurse = [&](const T& y) -> R {
      if (!spec.relation.less(y, x)) throw Error(ErrorCode::IllFoundedCall, "recursive call on an element not below the argument");
      return eval(y);
    };
    R value = spec.body(x, recurse);
    memo.emplace(x, value);
    return value;
  };
  return eval(arg);
}

/// The immediate-suffix relation (N, CONS M N) over all suffixes of a list
/// tree, the carrier structural list recursion runs on.
WFRelation<FiniteTree> list_suffix_relation(const FiniteTree& list);

inline constexpr std::size_t kSexpMaxDepth = 4;
inline constexpr std::size_t kSexpMaxAlphabet = 3;
inline constexpr std::uint64_t kSexpMaxNumerals = 2;

struct SexpSpace {
  TreeSet carrier;
  WFRelation<FiniteTree> sub;
};

/// Sexp trees of height <= d with their immediate-subexpression relation.
/// Throws SizeExceeded beyond the desk-scale bounds above.
SexpSpace sexp_space(std::size_t d, const std::vector<std::string>& alphabet, std::uint64_t numeral_bound);

/// A finite set of trees indexed as a lattice carrier.
struct TreeCarrier {
  Carrier carrier;
  std::vector<FiniteTree> trees;
  std::map<FiniteTree, std::size_t> index;

  explicit TreeCarrier(const std::vector<FiniteTree>& ordered);
  Subset subset(const TreeSet& s) const;
  TreeSet trees_of(const Subset& s) const;
};

/// f restricted to the carrier: Z ↦ f(Z) ∩ carrier.
SubsetOperator restrict_operator(const TreeCarrier& tc, std::function<TreeSet(const TreeSet&)> f);

/// Z ↦ {Numb 0} ⊕ (A ⊗ Z).
TreeSet list_fun(const TreeSet& a, const TreeSet& z);
/// Z ↦ range(Leaf) ∪ range(Numb) ∪ (Z ⊗ Z), with the ranges cut down to the
/// given symbols and numerals.
TreeSet sexp_fun(const std::vector<std::string>& symbols, std::uint64_t numeral_bound, const TreeSet& z);

}  // namespace coind
