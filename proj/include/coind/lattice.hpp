#pragma once

// Knaster-Tarski fixedpoints over the powerset of a finite carrier.
//
// lfp/gfp run Kleene iteration (upward from {} / downward from the full
// carrier). verify_extremal is the definitional check: it scans the whole
// powerset, so it is limited to kExhaustiveBound elements.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coind/error.hpp"

namespace coind {

inline constexpr std::size_t kExhaustiveBound = 12;

class Carrier {
 public:
  Carrier() = default;
  /// Throws InvalidDefinition on duplicates.
  explicit Carrier(std::vector<std::string> elements);
  /// Carrier named "0".."n-1".
  static Carrier indexed(std::size_t n);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& operator[](std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const std::string& e) const;

 private:
  std::vector<std::string> elements_;
  std::map<std::string, std::size_t> index_;
};

class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}
  static Subset full(std::size_t universe);
  static Subset from_mask(std::size_t universe, std::uint64_t mask);
  static Subset of(std::size_t universe, std::initializer_list<std::size_t> members);

  std::size_t universe() const { return n_; }
  bool contains(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void erase(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::size_t> members() const;
  /// Only meaningful for universes of at most 64 elements.
  std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

  bool subset_of(const Subset& other) const;
  Subset operator|(const Subset& o) const;
  Subset operator&(const Subset& o) const;
  Subset complement() const;

  friend bool operator==(const Subset&, const Subset&) = default;
  friend auto operator<=>(const Subset&, const Subset&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

std::string to_string(const Subset& s, const Carrier& carrier);

using SubsetOperator = std::function<Subset(const Subset&)>;

/// Operator given by an explicit table indexed by subset mask (size 2^n).
SubsetOperator table_operator(std::vector<Subset> table);

struct Exhaustive {};
struct Sampled {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
};
using MonotoneMode = std::variant<Exhaustive, Sampled>;

struct MonotoneVerdict {
  bool monotone = true;
  /// A ⊆ B with op(A) ⊄ op(B), when not monotone.
  std::optional<std::pair<Subset, Subset>> witness;
};

MonotoneVerdict is_monotone(const SubsetOperator& op, const Carrier& carrier, MonotoneMode mode = Exhaustive{});

struct FixpointRun {
  Subset value;
  std::size_t iterations = 0;
};

/// Throws NotMonotone if an iterate fails to grow (lfp) / shrink (gfp).
FixpointRun kleene_lfp(const SubsetOperator& op, const Carrier& carrier);
FixpointRun kleene_gfp(const SubsetOperator& op, const Carrier& carrier);
inline Subset lfp(const SubsetOperator& op, const Carrier& carrier) { return kleene_lfp(op, carrier).value; }
inline Subset gfp(const SubsetOperator& op, const Carrier& carrier) { return kleene_gfp(op, carrier).value; }

enum class Extremum { least, greatest };

struct ExtremalVerdict {
  bool ok = true;
  std::string reason;
  std::optional<Subset> witness;
};

ExtremalVerdict verify_extremal(const SubsetOperator& op, const Carrier& carrier, const Subset& candidate,
                                Extremum kind);

/// op*(Z) = complement(op(complement Z)).
SubsetOperator dual(SubsetOperator op);

/// Smallest monotone operator above an arbitrary table: op'(A) = ⋃_{B ⊆ A} t(B).
std::vector<Subset> monotone_closure(const std::vector<Subset>& table, std::size_t universe);

}  // namespace coind
