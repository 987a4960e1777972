#pragma once

// The tree universe: nodes are (position word, label) pairs and every finite
// construction is a finite node set. Atom and scons are the two primitive
// constructors; everything else (Leaf, Numb, In0/In1, NIL, CONS) is derived.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coind/error.hpp"

namespace coind {

enum class BranchDigit : std::uint8_t { zero = 0, one = 1 };

BranchDigit branch_digit(int value);

struct Position {
  std::vector<BranchDigit> word;

  Position() = default;
  Position(std::initializer_list<int> digits);
  explicit Position(std::vector<BranchDigit> w) : word(std::move(w)) {}

  std::size_t size() const { return word.size(); }
  bool empty() const { return word.empty(); }

  Position pushed(BranchDigit d) const;

  friend auto operator<=>(const Position&, const Position&) = default;
  friend bool operator==(const Position&, const Position&) = default;
};

struct UserAtom {
  std::string symbol;
  friend auto operator<=>(const UserAtom&, const UserAtom&) = default;
  friend bool operator==(const UserAtom&, const UserAtom&) = default;
};

struct Num {
  std::uint64_t k = 0;
  friend auto operator<=>(const Num&, const Num&) = default;
  friend bool operator==(const Num&, const Num&) = default;
};

using Label = std::variant<UserAtom, Num>;

struct Node {
  Position pos;
  Label label;

  friend auto operator<=>(const Node&, const Node&) = default;
  friend bool operator==(const Node&, const Node&) = default;
};

/// Depth of a node: the length of its position word.
inline std::size_t ndepth(const Node& n) { return n.pos.size(); }

/// A finite node set kept sorted by (position, label), so that structural
/// equality is set equality. At most one node per position.
class FiniteTree {
 public:
  FiniteTree() = default;
  /// Validates the no-shared-position invariant; throws Malformed.
  FiniteTree(std::initializer_list<Node> nodes);
  static FiniteTree from_nodes(std::vector<Node> nodes);

  const std::vector<Node>& nodes() const { return nodes_; }
  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }

  auto begin() const { return nodes_.begin(); }
  auto end() const { return nodes_.end(); }

  bool contains(const Node& n) const;
  /// Node-set inclusion.
  bool subset_of(const FiniteTree& other) const;

  friend auto operator<=>(const FiniteTree&, const FiniteTree&) = default;
  friend bool operator==(const FiniteTree&, const FiniteTree&) = default;

 private:
  struct Sorted {};
  FiniteTree(Sorted, std::vector<Node> nodes) : nodes_(std::move(nodes)) {}
  friend FiniteTree push_union(const FiniteTree&, const FiniteTree&);
  friend FiniteTree ntrunc(std::size_t, const FiniteTree&);

  std::vector<Node> nodes_;
};

using TreeSet = std::set<FiniteTree>;

enum class Side { in0, in1 };

FiniteTree atom(Label label);
inline FiniteTree leaf(std::string symbol) { return atom(UserAtom{std::move(symbol)}); }
inline FiniteTree numb(std::uint64_t k) { return atom(Num{k}); }

/// The raw node-set pairing: branch 0 gets m, branch 1 gets n. Empty operands
/// are allowed; this is what truncations and approximants are built from.
FiniteTree push_union(const FiniteTree& m, const FiniteTree& n);

/// Checked pairing constructor; throws EmptyOperand.
FiniteTree scons(const FiniteTree& m, const FiniteTree& n);

FiniteTree inject(Side side, const FiniteTree& m);
inline FiniteTree in0(const FiniteTree& m) { return inject(Side::in0, m); }
inline FiniteTree in1(const FiniteTree& m) { return inject(Side::in1, m); }

FiniteTree nil_tree();
FiniteTree cons_tree(const FiniteTree& head, const FiniteTree& tail);

struct AtomShape {
  Label label;
};
struct SconsShape {
  FiniteTree left;
  FiniteTree right;
};
using TreeShape = std::variant<AtomShape, SconsShape>;

/// One-level decomposition; throws Malformed when t is neither an atom nor a
/// pairing with two nonempty branches.
TreeShape case_tree(const FiniteTree& t);

template <class F>
auto split(const FiniteTree& t, F&& c) {
  auto shape = case_tree(t);
  auto* s = std::get_if<SconsShape>(&shape);
  if (s == nullptr) throw Error(ErrorCode::Malformed, "split: tree is an atom");
  return std::invoke(std::forward<F>(c), s->left, s->right);
}

template <class C, class D>
auto sum_case(const FiniteTree& t, C&& c, D&& d) {
  return split(t, [&](const FiniteTree& tag, const FiniteTree& body) {
    if (tag == numb(0)) return std::invoke(c, body);
    if (tag == numb(1)) return std::invoke(d, body);
    throw Error(ErrorCode::Malformed, "sum_case: tag is neither Numb 0 nor Numb 1");
  });
}

/// List_case: c() on NIL, d(head, tail) on CONS head tail.
template <class C, class D>
auto list_case(const FiniteTree& t, C&& c, D&& d) {
  return sum_case(
      t,
      [&](const FiniteTree& body) {
        if (body != numb(0)) throw Error(ErrorCode::Malformed, "list_case: In0 body is not Numb 0");
        return std::invoke(c);
      },
      [&](const FiniteTree& body) {
        return split(body, [&](const FiniteTree& h, const FiniteTree& tl) { return std::invoke(d, h, tl); });
      });
}

TreeSet otimes(const TreeSet& a, const TreeSet& b);
TreeSet oplus(const TreeSet& a, const TreeSet& b);

FiniteTree ntrunc(std::size_t k, const FiniteTree& t);

/// Largest ndepth over the nodes; 0 for atoms and the empty tree.
std::size_t max_depth(const FiniteTree& t);
/// Number of levels: 0 for the empty tree, 1 for atoms.
std::size_t height(const FiniteTree& t);

std::string to_string(const Label& label);
std::string to_string(const Position& pos);
/// Compact term rendering: `atom:a`, `num:0`, `(l . r)`; anything that is
/// not a constructor image falls back to `{pos label; ...}`.
std::string show(const FiniteTree& t);
/// Canonical dump: one `digits label` line per node, ε rendered as `.`.
std::string dump(const FiniteTree& t);

/// All Sexp-shaped trees (atoms and scons of smaller ones) with height <= h,
/// over the given symbols and numerals 0..numeral_bound-1.
TreeSet enumerate_sexp(std::size_t h, const std::vector<std::string>& symbols,
                       std::uint64_t numeral_bound);

}  // namespace coind
