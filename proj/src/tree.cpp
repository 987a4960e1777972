#include "coind/tree.hpp"

#include <algorithm>
#include <sstream>

namespace coind {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyOperand: return "EmptyOperand";
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::UnknownSeed: return "UnknownSeed";
    case ErrorCode::UnknownAtom: return "UnknownAtom";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::UnknownFunction: return "UnknownFunction";
    case ErrorCode::UnknownMachine: return "UnknownMachine";
    case ErrorCode::StateSpaceExceeded: return "StateSpaceExceeded";
    case ErrorCode::RootMissing: return "RootMissing";
    case ErrorCode::UnresolvableKey: return "UnresolvableKey";
    case ErrorCode::NotAList: return "NotAList";
    case ErrorCode::NotWellFounded: return "NotWellFounded";
    case ErrorCode::IllFoundedCall: return "IllFoundedCall";
    case ErrorCode::SizeExceeded: return "SizeExceeded";
    case ErrorCode::InvalidDefinition: return "InvalidDefinition";
  }
  return "Unknown";
}

BranchDigit branch_digit(int value) {
  if (value == 0) return BranchDigit::zero;
  if (value == 1) return BranchDigit::one;
  throw Error(ErrorCode::Malformed, "branch digit must be 0 or 1, got " + std::to_string(value));
}

Position::Position(std::initializer_list<int> digits) {
  word.reserve(digits.size());
  for (int d : digits) word.push_back(branch_digit(d));
}

Position Position::pushed(BranchDigit d) const {
  std::vector<BranchDigit> w;
  w.reserve(word.size() + 1);
  w.push_back(d);
  w.insert(w.end(), word.begin(), word.end());
  return Position(std::move(w));
}

FiniteTree::FiniteTree(std::initializer_list<Node> nodes)
    : FiniteTree(from_nodes(std::vector<Node>(nodes))) {}

FiniteTree FiniteTree::from_nodes(std::vector<Node> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (nodes[i].pos == nodes[i - 1].pos)
      throw Error(ErrorCode::Malformed, "two nodes share position " + to_string(nodes[i].pos));
  }
  return FiniteTree(Sorted{}, std::move(nodes));
}

bool FiniteTree::contains(const Node& n) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), n);
}

bool FiniteTree::subset_of(const FiniteTree& other) const {
  return std::includes(other.nodes_.begin(), other.nodes_.end(), nodes_.begin(), nodes_.end());
}

FiniteTree atom(Label label) {
  return FiniteTree{Node{Position{}, std::move(label)}};
}

FiniteTree push_union(const FiniteTree& m, const FiniteTree& n) {
  // Every branch-0 position sorts before every branch-1 position, and pushing
  // a common digit preserves order, so the result is already canonical.
  std::vector<Node> out;
  out.reserve(m.size() + n.size());
  for (const auto& nd : m) out.push_back(Node{nd.pos.pushed(BranchDigit::zero), nd.label});
  for (const auto& nd : n) out.push_back(Node{nd.pos.pushed(BranchDigit::one), nd.label});
  return FiniteTree(FiniteTree::Sorted{}, std::move(out));
}

FiniteTree scons(const FiniteTree& m, const FiniteTree& n) {
  if (m.empty() || n.empty())
    throw Error(ErrorCode::EmptyOperand, "scons: operands must be nonempty trees");
  return push_union(m, n);
}

FiniteTree inject(Side side, const FiniteTree& m) {
  return scons(numb(side == Side::in0 ? 0 : 1), m);
}

FiniteTree nil_tree() { return in0(numb(0)); }

FiniteTree cons_tree(const FiniteTree& head, const FiniteTree& tail) {
  return in1(scons(head, tail));
}

TreeShape case_tree(const FiniteTree& t) {
  if (t.empty()) throw Error(ErrorCode::Malformed, "case_tree: empty tree");
  const auto& nodes = t.nodes();
  if (nodes.front().pos.empty()) {
    if (nodes.size() != 1)
      throw Error(ErrorCode::Malformed, "case_tree: root node present alongside other nodes");
    return AtomShape{nodes.front().label};
  }
  std::vector<Node> left, right;
  for (const auto& nd : nodes) {
    std::vector<BranchDigit> rest(nd.pos.word.begin() + 1, nd.pos.word.end());
    auto& dst = nd.pos.word.front() == BranchDigit::zero ? left : right;
    dst.push_back(Node{Position(std::move(rest)), nd.label});
  }
  if (left.empty() || right.empty())
    throw Error(ErrorCode::Malformed, "case_tree: one branch is empty");
  return SconsShape{FiniteTree::from_nodes(std::move(left)), FiniteTree::from_nodes(std::move(right))};
}

TreeSet otimes(const TreeSet& a, const TreeSet& b) {
  TreeSet out;
  for (const auto& x : a)
    for (const auto& y : b) out.insert(scons(x, y));
  return out;
}

TreeSet oplus(const TreeSet& a, const TreeSet& b) {
  TreeSet out;
  for (const auto& x : a) out.insert(in0(x));
  for (const auto& y : b) out.insert(in1(y));
  return out;
}

FiniteTree ntrunc(std::size_t k, const FiniteTree& t) {
  std::vector<Node> kept;
  for (const auto& nd : t)
    if (ndepth(nd) < k) kept.push_back(nd);
  return FiniteTree(FiniteTree::Sorted{}, std::move(kept));
}

std::size_t max_depth(const FiniteTree& t) {
  std::size_t d = 0;
  for (const auto& nd : t) d = std::max(d, ndepth(nd));
  return d;
}

std::size_t height(const FiniteTree& t) { return t.empty() ? 0 : max_depth(t) + 1; }

std::string to_string(const Label& label) {
  if (const auto* a = std::get_if<UserAtom>(&label)) return "atom:" + a->symbol;
  return "num:" + std::to_string(std::get<Num>(label).k);
}

std::string to_string(const Position& pos) {
  if (pos.empty()) return ".";
  std::string s;
  for (auto d : pos.word) s.push_back(d == BranchDigit::zero ? '0' : '1');
  return s;
}

std::string dump(const FiniteTree& t) {
  std::ostringstream os;
  for (const auto& nd : t) os << to_string(nd.pos) << ' ' << to_string(nd.label) << '\n';
  return os.str();
}

std::string show(const FiniteTree& t) {
  if (!t.empty()) {
    try {
      auto shape = case_tree(t);
      if (const auto* a = std::get_if<AtomShape>(&shape)) return to_string(a->label);
      const auto& s = std::get<SconsShape>(shape);
      return "(" + show(s.left) + " . " + show(s.right) + ")";
    } catch (const Error&) {
    }
  }
  std::string out = "{";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += "; ";
    out += to_string(t.nodes()[i].pos) + " " + to_string(t.nodes()[i].label);
  }
  return out + "}";
}

TreeSet enumerate_sexp(std::size_t h, const std::vector<std::string>& symbols,
                       std::uint64_t numeral_bound) {
  if (h == 0) return {};
  TreeSet atoms;
  for (const auto& s : symbols) atoms.insert(leaf(s));
  for (std::uint64_t k = 0; k < numeral_bound; ++k) atoms.insert(numb(k));
  TreeSet level = atoms;
  for (std::size_t i = 1; i < h; ++i) {
    TreeSet next = atoms;
    for (const auto& x : level)
      for (const auto& y : level) next.insert(scons(x, y));
    level = std::move(next);
  }
  return level;
}

}  // namespace coind
