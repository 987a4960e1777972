#pragma once

// Lazy lists as corecursive machines.
//
// A CoList is an immutable state. Raw machine states (a StepFn plus a seed)
// unfold by the corecursion equation; the derived combinators (cons, lconst,
// iterates, lmap, lappend) are states of their own that unfold by their
// recursion equations. Every state has a canonical key:
//
//   M(<machine>,<seed>)  CONS(<sym>,<key>)  MAP(<fn>,<key>)  APP(<key>,<key>)
//   ITER(<fn>,<sym>)     CONST(<sym>)       NIL
//
// Keys are injective on states as long as symbol, function, machine and seed
// names are drawn from [A-Za-z0-9_]+ and names are unique per kind.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coind/error.hpp"
#include "coind/tree.hpp"
#include "coind/verdict.hpp"

namespace coind {

inline constexpr std::size_t kDefaultStateBound = 10000;

struct Symbol {
  std::string name;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

class Alphabet {
 public:
  Alphabet() = default;
  /// Throws InvalidDefinition if empty or duplicated.
  explicit Alphabet(std::vector<std::string> symbols);

  bool contains(const Symbol& s) const;
  bool contains(const std::string& s) const;
  /// Throws UnknownAtom.
  Symbol operator[](const std::string& name) const;

  const std::vector<std::string>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }

 private:
  std::vector<std::string> symbols_;
};

/// A total function on a finite alphabet, given by its table.
class AtomFun {
 public:
  /// Throws InvalidDefinition if the table is not total on the alphabet or
  /// maps outside it.
  AtomFun(std::string name, std::map<std::string, std::string> table, const Alphabet& alphabet);

  static AtomFun identity(const Alphabet& alphabet, std::string name = "id");
  /// (g ∘ h)(x) = g(h(x)).
  static AtomFun compose(const AtomFun& g, const AtomFun& h, std::string name);

  const std::string& name() const { return name_; }
  const std::map<std::string, std::string>& table() const { return table_; }
  /// Throws UnknownAtom outside the domain.
  Symbol operator()(const Symbol& x) const;

 private:
  AtomFun() = default;
  std::string name_;
  std::map<std::string, std::string> table_;
};

struct Stop {
  friend bool operator==(const Stop&, const Stop&) = default;
};
struct Emit {
  Symbol atom;
  std::string next;
  friend bool operator==(const Emit&, const Emit&) = default;
};
using StepResult = std::variant<Stop, Emit>;

/// Finite-seed step function: each seed either stops or emits an atom and
/// moves to another declared seed.
class StepFn {
 public:
  /// Throws InvalidDefinition unless the table is total on seeds and closed.
  StepFn(std::string name, std::vector<std::string> seeds, std::map<std::string, StepResult> table);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& seeds() const { return seeds_; }
  bool has_seed(const std::string& s) const { return table_.count(s) != 0; }
  /// Throws UnknownSeed.
  const StepResult& step(const std::string& seed) const;

 private:
  std::string name_;
  std::vector<std::string> seeds_;
  std::map<std::string, StepResult> table_;
};

namespace detail {
struct State;
}

class CoList {
 public:
  const std::string& key() const;
  const detail::State& state() const { return *state_; }

  friend bool operator==(const CoList& a, const CoList& b) { return a.key() == b.key(); }

 private:
  explicit CoList(std::shared_ptr<const detail::State> s) : state_(std::move(s)) {}
  friend CoList make_colist(detail::State);

  std::shared_ptr<const detail::State> state_;
};

namespace detail {
struct MachineState {
  std::shared_ptr<const StepFn> machine;
  std::string seed;
};
struct NilState {};
struct ConsState {
  Symbol head;
  CoList tail;
};
struct ConstState {
  Symbol atom;
};
struct IterState {
  std::shared_ptr<const AtomFun> fn;
  Symbol atom;
};
struct MapState {
  std::shared_ptr<const AtomFun> fn;
  CoList inner;
};
struct AppendState {
  CoList first;
  CoList second;
};

struct State {
  std::variant<MachineState, NilState, ConsState, ConstState, IterState, MapState, AppendState> form;
  std::string key;
};
}  // namespace detail

struct ObsNil {};
struct ObsCons {
  Symbol head;
  CoList tail;
};
using Observation = std::variant<ObsNil, ObsCons>;

/// One unfolding step.
Observation observe(const CoList& l);

/// Throws UnknownSeed.
CoList corec(const std::string& seed, std::shared_ptr<const StepFn> step);
CoList corec(const std::string& seed, const StepFn& step);
CoList nil();
CoList cons(Symbol x, CoList l);
CoList lconst(Symbol m);
CoList iterates(const AtomFun& f, Symbol m);
CoList iterates(std::shared_ptr<const AtomFun> f, Symbol m);
CoList lmap(const AtomFun& g, CoList l);
CoList lmap(std::shared_ptr<const AtomFun> g, CoList l);
CoList lappend(CoList l1, CoList l2);

struct TakeResult {
  std::vector<Symbol> elements;
  bool ended = false;
};

/// Performs exactly min(k, length) observations. take(0, l) reports
/// ended = false without looking at l.
TakeResult take(std::size_t k, const CoList& l);

/// The k-th finite approximant of corec(seed, step) as a node set.
FiniteTree lcorf(std::size_t k, const std::string& seed, const StepFn& step);

/// Flat step function equivalent to a CoList, obtained by reachability
/// closure. Seeds are state keys.
struct CompiledMachine {
  std::shared_ptr<const StepFn> machine;
  std::string root;
  std::map<std::string, CoList> states;
};

/// Throws StateSpaceExceeded past max_states distinct states.
CompiledMachine compile(const CoList& l, std::size_t max_states = kDefaultStateBound);
CompiledMachine compile(const std::vector<CoList>& roots, std::size_t max_states = kDefaultStateBound);

/// ntrunc k of the k-th approximant of the compiled machine.
FiniteTree tree_trunc(std::size_t k, const CoList& l, std::size_t max_states = kDefaultStateBound);

/// k-step membership check for LList A: every head seen within k
/// observations must lie in the alphabet.
Verdict check_llist_upto(std::size_t k, const CoList& l, const Alphabet& a);

}  // namespace coind
