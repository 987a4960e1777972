#include "coind/colist.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace coind {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string key_of(const detail::State& s) {
  return std::visit(
      overloaded{
          [](const detail::MachineState& m) { return "M(" + m.machine->name() + "," + m.seed + ")"; },
          [](const detail::NilState&) { return std::string("NIL"); },
          [](const detail::ConsState& c) { return "CONS(" + c.head.name + "," + c.tail.key() + ")"; },
          [](const detail::ConstState& c) { return "CONST(" + c.atom.name + ")"; },
          [](const detail::IterState& i) { return "ITER(" + i.fn->name() + "," + i.atom.name + ")"; },
          [](const detail::MapState& m) { return "MAP(" + m.fn->name() + "," + m.inner.key() + ")"; },
          [](const detail::AppendState& a) { return "APP(" + a.first.key() + "," + a.second.key() + ")"; },
      },
      s.form);
}

FiniteTree cons_layer(const Symbol& x, const FiniteTree& tail) {
  return push_union(numb(1), push_union(leaf(x.name), tail));
}

}  // namespace

CoList make_colist(detail::State s) {
  s.key = key_of(s);
  return CoList(std::make_shared<const detail::State>(std::move(s)));
}

const std::string& CoList::key() const { return state_->key; }

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw Error(ErrorCode::InvalidDefinition, "alphabet must be nonempty");
  std::set<std::string> seen;
  for (const auto& s : symbols_)
    if (!seen.insert(s).second) throw Error(ErrorCode::InvalidDefinition, "duplicate alphabet symbol '" + s + "'");
}

bool Alphabet::contains(const std::string& s) const {
  return std::find(symbols_.begin(), symbols_.end(), s) != symbols_.end();
}

bool Alphabet::contains(const Symbol& s) const { return contains(s.name); }

Symbol Alphabet::operator[](const std::string& name) const {
  if (!contains(name)) throw Error(ErrorCode::UnknownAtom, "unknown atom '" + name + "'");
  return Symbol{name};
}

AtomFun::AtomFun(std::string name, std::map<std::string, std::string> table, const Alphabet& alphabet)
    : name_(std::move(name)), table_(std::move(table)) {
  for (const auto& s : alphabet.symbols())
    if (!table_.count(s))
      throw Error(ErrorCode::InvalidDefinition, "function '" + name_ + "' is not total: missing '" + s + "'");
  for (const auto& [x, y] : table_) {
    if (!alphabet.contains(x))
      throw Error(ErrorCode::InvalidDefinition, "function '" + name_ + "': '" + x + "' is not in the alphabet");
    if (!alphabet.contains(y))
      throw Error(ErrorCode::InvalidDefinition, "function '" + name_ + "': image '" + y + "' is not in the alphabet");
  }
}

AtomFun AtomFun::identity(const Alphabet& alphabet, std::string name) {
  std::map<std::string, std::string> t;
  for (const auto& s : alphabet.symbols()) t[s] = s;
  return AtomFun(std::move(name), std::move(t), alphabet);
}

AtomFun AtomFun::compose(const AtomFun& g, const AtomFun& h, std::string name) {
  AtomFun out;
  out.name_ = std::move(name);
  for (const auto& [x, hx] : h.table_) out.table_[x] = g(Symbol{hx}).name;
  return out;
}

Symbol AtomFun::operator()(const Symbol& x) const {
  auto it = table_.find(x.name);
  if (it == table_.end()) throw Error(ErrorCode::UnknownAtom, "function '" + name_ + "' undefined at '" + x.name + "'");
  return Symbol{it->second};
}

StepFn::StepFn(std::string name, std::vector<std::string> seeds, std::map<std::string, StepResult> table)
    : name_(std::move(name)), seeds_(std::move(seeds)), table_(std::move(table)) {
  if (seeds_.empty()) throw Error(ErrorCode::InvalidDefinition, "machine '" + name_ + "' has no seeds");
  std::set<std::string> declared(seeds_.begin(), seeds_.end());
  if (declared.size() != seeds_.size())
    throw Error(ErrorCode::InvalidDefinition, "machine '" + name_ + "' declares a seed twice");
  for (const auto& s : seeds_)
    if (!table_.count(s))
      throw Error(ErrorCode::InvalidDefinition, "machine '" + name_ + "': no step for seed '" + s + "'");
  for (const auto& [s, r] : table_) {
    if (!declared.count(s))
      throw Error(ErrorCode::InvalidDefinition, "machine '" + name_ + "': step for undeclared seed '" + s + "'");
    if (const auto* e = std::get_if<Emit>(&r); e && !declared.count(e->next))
      throw Error(ErrorCode::InvalidDefinition,
                  "machine '" + name_ + "': seed '" + s + "' steps to undeclared seed '" + e->next + "'");
  }
}

const StepResult& StepFn::step(const std::string& seed) const {
  auto it = table_.find(seed);
  if (it == table_.end()) throw Error(ErrorCode::UnknownSeed, "machine '" + name_ + "' has no seed '" + seed + "'");
  return it->second;
}

CoList corec(const std::string& seed, std::shared_ptr<const StepFn> step) {
  if (!step->has_seed(seed))
    throw Error(ErrorCode::UnknownSeed, "machine '" + step->name() + "' has no seed '" + seed + "'");
  return make_colist({detail::MachineState{std::move(step), seed}, {}});
}

CoList corec(const std::string& seed, const StepFn& step) { return corec(seed, std::make_shared<const StepFn>(step)); }

CoList nil() { return make_colist({detail::NilState{}, {}}); }

CoList cons(Symbol x, CoList l) { return make_colist({detail::ConsState{std::move(x), std::move(l)}, {}}); }

CoList lconst(Symbol m) { return make_colist({detail::ConstState{std::move(m)}, {}}); }

CoList iterates(std::shared_ptr<const AtomFun> f, Symbol m) {
  return make_colist({detail::IterState{std::move(f), std::move(m)}, {}});
}

CoList iterates(const AtomFun& f, Symbol m) { return iterates(std::make_shared<const AtomFun>(f), std::move(m)); }

CoList lmap(std::shared_ptr<const AtomFun> g, CoList l) {
  return make_colist({detail::MapState{std::move(g), std::move(l)}, {}});
}

CoList lmap(const AtomFun& g, CoList l) { return lmap(std::make_shared<const AtomFun>(g), std::move(l)); }

CoList lappend(CoList l1, CoList l2) { return make_colist({detail::AppendState{std::move(l1), std::move(l2)}, {}}); }

Observation observe(const CoList& l) {
  return std::visit(
      overloaded{
          [](const detail::MachineState& m) -> Observation {
            const auto& r = m.machine->step(m.seed);
            if (std::holds_alternative<Stop>(r)) return ObsNil{};
            const auto& e = std::get<Emit>(r);
            return ObsCons{e.atom, corec(e.next, m.machine)};
          },
          [](const detail::NilState&) -> Observation { return ObsNil{}; },
          [](const detail::ConsState& c) -> Observation { return ObsCons{c.head, c.tail}; },
          [&l](const detail::ConstState& c) -> Observation { return ObsCons{c.atom, l}; },
          [](const detail::IterState& i) -> Observation {
            return ObsCons{i.atom, iterates(i.fn, (*i.fn)(i.atom))};
          },
          [](const detail::MapState& m) -> Observation {
            auto inner = observe(m.inner);
            if (std::holds_alternative<ObsNil>(inner)) return ObsNil{};
            auto& c = std::get<ObsCons>(inner);
            return ObsCons{(*m.fn)(c.head), lmap(m.fn, std::move(c.tail))};
          },
          [](const detail::AppendState& a) -> Observation {
            auto first = observe(a.first);
            if (auto* c = std::get_if<ObsCons>(&first)) return ObsCons{c->head, lappend(std::move(c->tail), a.second)};
            auto second = observe(a.second);
            if (std::holds_alternative<ObsNil>(second)) return ObsNil{};
            auto& c = std::get<ObsCons>(second);
            return ObsCons{c.head, lappend(nil(), std::move(c.tail))};
          },
      },
      l.state().form);
}

TakeResult take(std::size_t k, const CoList& l) {
  TakeResult out;
  CoList cur = l;
  for (std::size_t i = 0; i < k; ++i) {
    auto o = observe(cur);
    if (std::holds_alternative<ObsNil>(o)) {
      out.ended = true;
      break;
    }
    auto& c = std::get<ObsCons>(o);
    out.elements.push_back(std::move(c.head));
    cur = std::move(c.tail);
  }
  return out;
}

FiniteTree lcorf(std::size_t k, const std::string& seed, const StepFn& step) {
  std::vector<Symbol> heads;
  bool stopped = false;
  std::string cur = seed;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& r = step.step(cur);
    if (std::holds_alternative<Stop>(r)) {
      stopped = true;
      break;
    }
    const auto& e = std::get<Emit>(r);
    heads.push_back(e.atom);
    cur = e.next;
  }
  if (k == 0) step.step(seed);  // still reports UnknownSeed
  FiniteTree t = stopped ? nil_tree() : FiniteTree{};
  for (auto it = heads.rbegin(); it != heads.rend(); ++it) t = cons_layer(*it, t);
  return t;
}

CompiledMachine compile(const std::vector<CoList>& roots, std::size_t max_states) {
  CompiledMachine out;
  std::map<std::string, StepResult> table;
  std::vector<std::string> seeds;
  std::deque<CoList> work;
  auto visit = [&](const CoList& l) {
    if (out.states.count(l.key())) return;
    if (out.states.size() >= max_states)
      throw Error(ErrorCode::StateSpaceExceeded,
                  "machine compilation exceeded " + std::to_string(max_states) + " states");
    out.states.emplace(l.key(), l);
    seeds.push_back(l.key());
    work.push_back(l);
  };
  for (const auto& r : roots) visit(r);
  while (!work.empty()) {
    CoList cur = std::move(work.front());
    work.pop_front();
    auto o = observe(cur);
    if (std::holds_alternative<ObsNil>(o)) {
      table.emplace(cur.key(), Stop{});
    } else {
      auto& c = std::get<ObsCons>(o);
      table.emplace(cur.key(), Emit{c.head, c.tail.key()});
      visit(c.tail);
    }
  }
  if (!roots.empty()) out.root = roots.front().key();
  out.machine = std::make_shared<const StepFn>("compiled", std::move(seeds), std::move(table));
  return out;
}

CompiledMachine compile(const CoList& l, std::size_t max_states) {
  return compile(std::vector<CoList>{l}, max_states);
}

FiniteTree tree_trunc(std::size_t k, const CoList& l, std::size_t max_states) {
  auto compiled = compile(l, max_states);
  return ntrunc(k, lcorf(k, compiled.root, *compiled.machine));
}

Verdict check_llist_upto(std::size_t k, const CoList& l, const Alphabet& a) {
  CoList cur = l;
  for (std::size_t i = 0; i < k; ++i) {
    auto o = observe(cur);
    if (std::holds_alternative<ObsNil>(o)) return Verdict::ok();
    auto& c = std::get<ObsCons>(o);
    if (!a.contains(c.head)) return Verdict::fail("head '" + c.head.name + "' outside alphabet", std::to_string(i));
    cur = std::move(c.tail);
  }
  return Verdict::ok();
}

}  // namespace coind
