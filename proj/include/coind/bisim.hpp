#pragma once

// Equality of lazy lists by coinduction.
//
// A certificate is a finite relation on state keys closed under one step of
// unfolding (both sides Nil, or equal heads with related tails). Weak
// certificates must contain every tail pair; strong ones may also close a
// pair whose tails have identical keys.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coind/colist.hpp"
#include "coind/lattice.hpp"
#include "coind/tree.hpp"
#include "coind/verdict.hpp"

namespace coind {

using TreePair = std::pair<FiniteTree, FiniteTree>;
using TreePairRelation = std::set<TreePair>;

TreePairRelation diag_rel(const TreeSet& a);

enum class Combine { product, sum };

/// product: {(x·y, x'·y')}; sum: {(In0 x, In0 x')} ∪ {(In1 y, In1 y')}.
TreePairRelation rel_combine(Combine kind, const TreePairRelation& r, const TreePairRelation& s);

TreeSet fst_image(const TreePairRelation& r);

using KeyPair = std::pair<std::string, std::string>;
using Relation = std::set<KeyPair>;

enum class CoinductionKind { weak, strong };

std::string_view to_string(CoinductionKind kind);

struct Certificate {
  CoinductionKind kind = CoinductionKind::weak;
  KeyPair root;
  Relation pairs;
};

Verdict closure_check(const CoList& left, const CoList& right, const Relation& r, CoinductionKind kind);

/// Throws RootMissing if root ∉ pairs or root differs from the lists' keys;
/// UnresolvableKey if a key names no state reachable from l1 or l2.
Verdict verify_certificate(const Certificate& c, const CoList& l1, const CoList& l2,
                           std::size_t max_states = kDefaultStateBound);

struct Counterexample {
  std::size_t index = 0;
};
struct BoundExceeded {};
using SearchResult = std::variant<Certificate, Counterexample, BoundExceeded>;

/// Synchronized unfolding memoized on key pairs.
SearchResult find_bisimulation(const CoList& l1, const CoList& l2, std::size_t max_pairs,
                               CoinductionKind kind = CoinductionKind::weak);

/// Bounded take-lemma: k synchronized observations agree. The failing
/// verdict's `where` is the first differing index.
Verdict eq_upto(std::size_t k, const CoList& l1, const CoList& l2);

/// Largest bisimulation between the seeds of two machines, as seed pairs.
/// When verify is set the result is also checked by verify_extremal, which
/// needs |seeds1|·|seeds2| <= kExhaustiveBound (throws CarrierTooLarge).
Relation bisimilarity_gfp(const StepFn& m1, const StepFn& m2, bool verify = false);

std::string to_json(const Certificate& c);
/// Throws InvalidDefinition on schema errors.
Certificate certificate_from_json(const std::string& text);

}  // namespace coind
