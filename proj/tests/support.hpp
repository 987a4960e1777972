#pragma once

// Shared generators for the property tests.

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "coind/colist.hpp"

namespace coind::testing {

inline std::vector<std::string> symbols(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

/// Random finite machine. Stops are rare so that most runs are infinite.
inline std::shared_ptr<const StepFn> random_machine(std::mt19937_64& rng, const std::string& name,
                                                    std::size_t n_seeds, std::size_t n_symbols,
                                                    const std::string& prefix = "s") {
  std::vector<std::string> seeds;
  for (std::size_t i = 0; i < n_seeds; ++i) seeds.push_back(prefix + std::to_string(i));
  const auto syms = symbols(n_symbols);
  std::map<std::string, StepResult> table;
  for (const auto& s : seeds) {
    if (rng() % 6 == 0) {
      table[s] = Stop{};
    } else {
      table[s] = Emit{Symbol{syms[rng() % syms.size()]}, seeds[rng() % seeds.size()]};
    }
  }
  return std::make_shared<const StepFn>(name, seeds, table);
}

/// Same machine with every seed renamed (and the seed order reversed).
inline std::shared_ptr<const StepFn> renamed(const StepFn& m, const std::string& name, const std::string& tag) {
  std::vector<std::string> seeds;
  for (auto it = m.seeds().rbegin(); it != m.seeds().rend(); ++it) seeds.push_back(tag + *it);
  std::map<std::string, StepResult> table;
  for (const auto& s : m.seeds()) {
    const auto& r = m.step(s);
    if (const auto* e = std::get_if<Emit>(&r)) table[tag + s] = Emit{e->atom, tag + e->next};
    else table[tag + s] = Stop{};
  }
  return std::make_shared<const StepFn>(name, seeds, table);
}

/// Alphabet z0..z3 with f = successor mod 4.
inline Alphabet mod4() { return Alphabet({"z0", "z1", "z2", "z3"}); }
inline std::shared_ptr<const AtomFun> mod4_succ() {
  return std::make_shared<const AtomFun>(
      "succ", std::map<std::string, std::string>{{"z0", "z1"}, {"z1", "z2"}, {"z2", "z3"}, {"z3", "z0"}}, mod4());
}
inline Symbol z(int i) { return Symbol{"z" + std::to_string(((i % 4) + 4) % 4)}; }

}  // namespace coind::testing
