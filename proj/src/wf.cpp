#include "coind/wf.hpp"

namespace coind {

FinList list_encode(const std::vector<Symbol>& xs) {
  FiniteTree t = nil_tree();
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) t = cons_tree(leaf(it->name), t);
  return {std::move(t), xs};
}

FinList list_encode(const std::vector<Symbol>& xs, const Alphabet& alphabet) {
  for (const auto& x : xs)
    if (!alphabet.contains(x)) throw Error(ErrorCode::UnknownAtom, "unknown atom '" + x.name + "'");
  return list_encode(xs);
}

std::vector<Symbol> list_decode(const FiniteTree& t) {
  std::vector<Symbol> out;
  FiniteTree cur = t;
  try {
    while (true) {
      bool done = list_case(
          cur, [] { return true; },
          [&](const FiniteTree& head, const FiniteTree& tail) {
            auto shape = case_tree(head);
            const auto* a = std::get_if<AtomShape>(&shape);
            const auto* user = a ? std::get_if<UserAtom>(&a->label) : nullptr;
            if (!user) throw Error(ErrorCode::Malformed, "list head is not a Leaf");
            out.push_back(Symbol{user->symbol});
            cur = tail;
            return false;
          });
      if (done) return out;
    }
  } catch (const Error& e) {
    throw Error(ErrorCode::NotAList, std::string("not a list: ") + e.what());
  }
}

WFRelation<FiniteTree> list_suffix_relation(const FiniteTree& list) {
  PairSet<FiniteTree> pairs;
  FiniteTree cur = list;
  while (true) {
    bool done = list_case(
        cur, [] { return true; },
        [&](const FiniteTree&, const FiniteTree& tail) {
          pairs.emplace(tail, cur);
          cur = tail;
          return false;
        });
    if (done) break;
  }
  return WFRelation<FiniteTree>(std::move(pairs));
}

SexpSpace sexp_space(std::size_t d, const std::vector<std::string>& alphabet, std::uint64_t numeral_bound) {
  if (d > kSexpMaxDepth || alphabet.size() > kSexpMaxAlphabet || numeral_bound > kSexpMaxNumerals) {
    throw Error(ErrorCode::SizeExceeded, "sexp_space: bounds are depth <= " + std::to_string(kSexpMaxDepth) +
                                             ", alphabet <= " + std::to_string(kSexpMaxAlphabet) +
                                             ", numerals <= " + std::to_string(kSexpMaxNumerals));
  }
  TreeSet carrier = enumerate_sexp(d, alphabet, numeral_bound);
  PairSet<FiniteTree> sub;
  for (const auto& t : carrier) {
    auto shape = case_tree(t);
    if (const auto* s = std::get_if<SconsShape>(&shape)) {
      sub.emplace(s->left, t);
      sub.emplace(s->right, t);
    }
  }
  return {std::move(carrier), WFRelation<FiniteTree>(std::move(sub))};
}

TreeCarrier::TreeCarrier(const std::vector<FiniteTree>& ordered) : trees(ordered) {
  std::vector<std::string> names;
  names.reserve(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (!index.emplace(trees[i], i).second) throw Error(ErrorCode::InvalidDefinition, "duplicate tree in carrier");
    names.push_back(show(trees[i]));
  }
  carrier = Carrier(std::move(names));
}

Subset TreeCarrier::subset(const TreeSet& s) const {
  Subset out(trees.size());
  for (const auto& t : s)
    if (auto it = index.find(t); it != index.end()) out.insert(it->second);
  return out;
}

TreeSet TreeCarrier::trees_of(const Subset& s) const {
  TreeSet out;
  for (auto i : s.members()) out.insert(trees[i]);
  return out;
}

SubsetOperator restrict_operator(const TreeCarrier& tc, std::function<TreeSet(const TreeSet&)> f) {
  return [&tc, f = std::move(f)](const Subset& z) { return tc.subset(f(tc.trees_of(z))); };
}

TreeSet list_fun(const TreeSet& a, const TreeSet& z) { return oplus({numb(0)}, otimes(a, z)); }

TreeSet sexp_fun(const std::vector<std::string>& symbols, std::uint64_t numeral_bound, const TreeSet& z) {
  TreeSet out = otimes(z, z);
  for (const auto& s : symbols) out.insert(leaf(s));
  for (std::uint64_t k = 0; k < numeral_bound; ++k) out.insert(numb(k));
  return out;
}

}  // namespace coind
