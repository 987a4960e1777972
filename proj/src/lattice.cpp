#include "coind/lattice.hpp"

#include <bit>
#include <random>
#include <sstream>

namespace coind {

namespace {

void require_exhaustive(const Carrier& carrier, const char* what) {
  if (carrier.size() > kExhaustiveBound) {
    throw Error(ErrorCode::CarrierTooLarge, std::string(what) + ": carrier has " + std::to_string(carrier.size()) +
                                                " elements, exhaustive bound is " +
                                                std::to_string(kExhaustiveBound));
  }
}

std::vector<Subset> tabulate(const SubsetOperator& op, std::size_t n) {
  std::vector<Subset> table;
  table.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) table.push_back(op(Subset::from_mask(n, m)));
  return table;
}

}  // namespace

Carrier::Carrier(std::vector<std::string> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second)
      throw Error(ErrorCode::InvalidDefinition, "duplicate carrier element '" + elements_[i] + "'");
  }
}

Carrier Carrier::indexed(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return Carrier(std::move(names));
}

std::optional<std::size_t> Carrier::index_of(const std::string& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Subset Subset::full(std::size_t universe) { return Subset(universe).complement(); }

Subset Subset::from_mask(std::size_t universe, std::uint64_t mask) {
  Subset s(universe);
  for (std::size_t i = 0; i < universe && i < 64; ++i)
    if ((mask >> i) & 1u) s.insert(i);
  return s;
}

Subset Subset::of(std::size_t universe, std::initializer_list<std::size_t> members) {
  Subset s(universe);
  for (auto i : members) s.insert(i);
  return s;
}

std::size_t Subset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::size_t> Subset::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

bool Subset::subset_of(const Subset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

Subset Subset::operator|(const Subset& o) const {
  Subset r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
  return r;
}

Subset Subset::operator&(const Subset& o) const {
  Subset r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
  return r;
}

Subset Subset::complement() const {
  Subset r = *this;
  for (auto& w : r.words_) w = ~w;
  if (n_ % 64 != 0) r.words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  return r;
}

std::string to_string(const Subset& s, const Carrier& carrier) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto i : s.members()) {
    if (!first) os << ", ";
    os << carrier[i];
    first = false;
  }
  os << '}';
  return os.str();
}

SubsetOperator table_operator(std::vector<Subset> table) {
  return [table = std::move(table)](const Subset& a) { return table.at(a.mask()); };
}

MonotoneVerdict is_monotone(const SubsetOperator& op, const Carrier& carrier, MonotoneMode mode) {
  const std::size_t n = carrier.size();
  if (std::holds_alternative<Exhaustive>(mode)) {
    require_exhaustive(carrier, "is_monotone");
    const auto table = tabulate(op, n);
    for (std::uint64_t b = 0; b < table.size(); ++b) {
      // Ascending submasks of b, starting from the empty set.
      std::uint64_t a = 0;
      while (true) {
        if (!table[a].subset_of(table[b]))
          return {false, std::pair{Subset::from_mask(n, a), Subset::from_mask(n, b)}};
        if (a == b) break;
        a = (a - b) & b;
      }
    }
    return {};
  }

  const auto& sampled = std::get<Sampled>(mode);
  std::mt19937_64 rng(sampled.seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t s = 0; s < sampled.samples; ++s) {
    Subset a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (coin(rng)) {
        b.insert(i);
        if (coin(rng)) a.insert(i);
      }
    }
    if (!op(a).subset_of(op(b))) return {false, std::pair{a, b}};
  }
  return {};
}

FixpointRun kleene_lfp(const SubsetOperator& op, const Carrier& carrier) {
  FixpointRun run{Subset(carrier.size()), 0};
  while (true) {
    Subset next = op(run.value);
    ++run.iterations;
    if (next == run.value) return run;
    if (!run.value.subset_of(next))
      throw Error(ErrorCode::NotMonotone, "lfp: iterate shrank after " + std::to_string(run.iterations) + " steps");
    run.value = std::move(next);
  }
}

FixpointRun kleene_gfp(const SubsetOperator& op, const Carrier& carrier) {
  FixpointRun run{Subset::full(carrier.size()), 0};
  while (true) {
    Subset next = op(run.value);
    ++run.iterations;
    if (next == run.value) return run;
    if (!next.subset_of(run.value))
      throw Error(ErrorCode::NotMonotone, "gfp: iterate grew after " + std::to_string(run.iterations) + " steps");
    run.value = std::move(next);
  }
}

ExtremalVerdict verify_extremal(const SubsetOperator& op, const Carrier& carrier, const Subset& candidate,
                                Extremum kind) {
  require_exhaustive(carrier, "verify_extremal");
  const std::size_t n = carrier.size();
  if (op(candidate) != candidate) return {false, "not a fixedpoint", candidate};
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const Subset a = Subset::from_mask(n, m);
    const Subset fa = op(a);
    if (kind == Extremum::least) {
      if (fa.subset_of(a) && !candidate.subset_of(a)) return {false, "pre-fixedpoint below candidate", a};
    } else {
      if (a.subset_of(fa) && !a.subset_of(candidate)) return {false, "post-fixedpoint above candidate", a};
    }
  }
  return {};
}

SubsetOperator dual(SubsetOperator op) {
  return [op = std::move(op)](const Subset& z) { return op(z.complement()).complement(); };
}

std::vector<Subset> monotone_closure(const std::vector<Subset>& table, std::size_t universe) {
  std::vector<Subset> out(table.size(), Subset(universe));
  // Subset-sum (zeta) transform: out[a] = union of table[b] over b ⊆ a.
  for (std::size_t m = 0; m < table.size(); ++m) out[m] = table[m];
  for (std::size_t bit = 0; bit < universe; ++bit)
    for (std::size_t m = 0; m < table.size(); ++m)
      if (m & (std::size_t{1} << bit)) out[m] = out[m] | out[m ^ (std::size_t{1} << bit)];
  return out;
}

}  // namespace coind
