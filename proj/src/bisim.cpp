#include "coind/bisim.hpp"

#include <json.hpp>

namespace coind {

namespace {

std::string pair_text(const KeyPair& p) { return "(" + p.first + ", " + p.second + ")"; }

}  // namespace

TreePairRelation diag_rel(const TreeSet& a) {
  TreePairRelation out;
  for (const auto& x : a) out.emplace(x, x);
  return out;
}

TreePairRelation rel_combine(Combine kind, const TreePairRelation& r, const TreePairRelation& s) {
  TreePairRelation out;
  if (kind == Combine::product) {
    for (const auto& [x, x2] : r)
      for (const auto& [y, y2] : s) out.emplace(scons(x, y), scons(x2, y2));
  } else {
    for (const auto& [x, x2] : r) out.emplace(in0(x), in0(x2));
    for (const auto& [y, y2] : s) out.emplace(in1(y), in1(y2));
  }
  return out;
}

TreeSet fst_image(const TreePairRelation& r) {
  TreeSet out;
  for (const auto& p : r) out.insert(p.first);
  return out;
}

std::string_view to_string(CoinductionKind kind) { return kind == CoinductionKind::weak ? "weak" : "strong"; }

Verdict closure_check(const CoList& left, const CoList& right, const Relation& r, CoinductionKind kind) {
  const KeyPair here{left.key(), right.key()};
  auto a = observe(left);
  auto b = observe(right);
  const bool a_nil = std::holds_alternative<ObsNil>(a);
  const bool b_nil = std::holds_alternative<ObsNil>(b);
  if (a_nil && b_nil) return Verdict::ok();
  if (a_nil != b_nil) return Verdict::fail("nil/cons mismatch", pair_text(here));
  const auto& ca = std::get<ObsCons>(a);
  const auto& cb = std::get<ObsCons>(b);
  if (ca.head != cb.head) return Verdict::fail("heads differ (" + ca.head.name + " vs " + cb.head.name + ")", pair_text(here));
  if (kind == CoinductionKind::strong && ca.tail.key() == cb.tail.key()) return Verdict::ok();
  if (!r.count({ca.tail.key(), cb.tail.key()}))
    return Verdict::fail("tail pair " + pair_text({ca.tail.key(), cb.tail.key()}) + " not in relation", pair_text(here));
  return Verdict::ok();
}

Verdict verify_certificate(const Certificate& c, const CoList& l1, const CoList& l2, std::size_t max_states) {
  if (!c.pairs.count(c.root)) throw Error(ErrorCode::RootMissing, "certificate root " + pair_text(c.root) + " is not among its pairs");
  if (c.root != KeyPair{l1.key(), l2.key()})
    throw Error(ErrorCode::RootMissing, "certificate root " + pair_text(c.root) + " does not name the given lists " +
                                            pair_text({l1.key(), l2.key()}));
  const auto reach = compile(std::vector<CoList>{l1, l2}, max_states);
  auto resolve = [&](const std::string& key) -> const CoList& {
    auto it = reach.states.find(key);
    if (it == reach.states.end()) throw Error(ErrorCode::UnresolvableKey, "key '" + key + "' names no reachable state");
    return it->second;
  };
  for (const auto& p : c.pairs) {
    auto v = closure_check(resolve(p.first), resolve(p.second), c.pairs, c.kind);
    if (!v) return v;
  }
  return Verdict::ok();
}

SearchResult find_bisimulation(const CoList& l1, const CoList& l2, std::size_t max_pairs, CoinductionKind kind) {
  Certificate cert{kind, {l1.key(), l2.key()}, {}};
  // Both lists are deterministic, so the synchronized unfolding is a single
  // path; it closes as soon as a pair repeats.
  CoList a = l1;
  CoList b = l2;
  for (std::size_t index = 0;; ++index) {
    KeyPair here{a.key(), b.key()};
    if (cert.pairs.count(here)) return cert;
    if (cert.pairs.size() >= max_pairs) return BoundExceeded{};
    auto oa = observe(a);
    auto ob = observe(b);
    const bool a_nil = std::holds_alternative<ObsNil>(oa);
    const bool b_nil = std::holds_alternative<ObsNil>(ob);
    if (a_nil != b_nil) return Counterexample{index};
    cert.pairs.insert(here);
    if (a_nil) return cert;
    auto& ca = std::get<ObsCons>(oa);
    auto& cb = std::get<ObsCons>(ob);
    if (ca.head != cb.head) return Counterexample{index};
    if (kind == CoinductionKind::strong && ca.tail.key() == cb.tail.key()) return cert;
    a = std::move(ca.tail);
    b = std::move(cb.tail);
  }
}

Verdict eq_upto(std::size_t k, const CoList& l1, const CoList& l2) {
  CoList a = l1;
  CoList b = l2;
  for (std::size_t i = 0; i < k; ++i) {
    auto oa = observe(a);
    auto ob = observe(b);
    const bool a_nil = std::holds_alternative<ObsNil>(oa);
    const bool b_nil = std::holds_alternative<ObsNil>(ob);
    if (a_nil && b_nil) return Verdict::ok();
    if (a_nil != b_nil) return Verdict::fail("nil/cons mismatch", std::to_string(i));
    auto& ca = std::get<ObsCons>(oa);
    auto& cb = std::get<ObsCons>(ob);
    if (ca.head != cb.head) return Verdict::fail("heads differ (" + ca.head.name + " vs " + cb.head.name + ")", std::to_string(i));
    a = std::move(ca.tail);
    b = std::move(cb.tail);
  }
  return Verdict::ok();
}

Relation bisimilarity_gfp(const StepFn& m1, const StepFn& m2, bool verify) {
  const auto& s1 = m1.seeds();
  const auto& s2 = m2.seeds();
  const Carrier carrier = Carrier::indexed(s1.size() * s2.size());
  auto index = [&](std::size_t i, std::size_t j) { return i * s2.size() + j; };
  std::map<std::string, std::size_t> pos1, pos2;
  for (std::size_t i = 0; i < s1.size(); ++i) pos1[s1[i]] = i;
  for (std::size_t j = 0; j < s2.size(); ++j) pos2[s2[j]] = j;

  // One-step closure: a pair survives if both stop, or both emit the same
  // atom and the successor pair is in Z.
  SubsetOperator op = [&](const Subset& z) {
    Subset out(carrier.size());
    for (std::size_t i = 0; i < s1.size(); ++i) {
      for (std::size_t j = 0; j < s2.size(); ++j) {
        const auto& r1 = m1.step(s1[i]);
        const auto& r2 = m2.step(s2[j]);
        const auto* e1 = std::get_if<Emit>(&r1);
        const auto* e2 = std::get_if<Emit>(&r2);
        if (!e1 && !e2) {
          out.insert(index(i, j));
        } else if (e1 && e2 && e1->atom == e2->atom && z.contains(index(pos1.at(e1->next), pos2.at(e2->next)))) {
          out.insert(index(i, j));
        }
      }
    }
    return out;
  };

  const Subset result = gfp(op, carrier);
  if (verify) {
    auto v = verify_extremal(op, carrier, result, Extremum::greatest);
    if (!v.ok) throw Error(ErrorCode::NotMonotone, "bisimilarity gfp failed verification: " + v.reason);
  }
  Relation out;
  for (auto k : result.members()) out.emplace(s1[k / s2.size()], s2[k % s2.size()]);
  return out;
}

std::string to_json(const Certificate& c) {
  nlohmann::json j;
  j["kind"] = std::string(to_string(c.kind));
  j["root"] = {c.root.first, c.root.second};
  j["pairs"] = nlohmann::json::array();
  for (const auto& p : c.pairs) j["pairs"].push_back({p.first, p.second});
  return j.dump(2);
}

Certificate certificate_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::InvalidDefinition, std::string("certificate: ") + e.what());
  }
  auto key_pair = [](const nlohmann::json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
      throw Error(ErrorCode::InvalidDefinition, "certificate: " + where + " must be a [key, key] array");
    return KeyPair{v[0].get<std::string>(), v[1].get<std::string>()};
  };
  if (!j.is_object()) throw Error(ErrorCode::InvalidDefinition, "certificate: top level must be an object");
  Certificate c;
  if (!j.contains("kind") || !j["kind"].is_string())
    throw Error(ErrorCode::InvalidDefinition, "certificate: missing string field 'kind'");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "weak") c.kind = CoinductionKind::weak;
  else if (kind == "strong") c.kind = CoinductionKind::strong;
  else throw Error(ErrorCode::InvalidDefinition, "certificate: 'kind' must be \"weak\" or \"strong\"");
  if (!j.contains("root")) throw Error(ErrorCode::InvalidDefinition, "certificate: missing field 'root'");
  c.root = key_pair(j["root"], "'root'");
  if (!j.contains("pairs") || !j["pairs"].is_array())
    throw Error(ErrorCode::InvalidDefinition, "certificate: missing array field 'pairs'");
  for (std::size_t i = 0; i < j["pairs"].size(); ++i)
    c.pairs.insert(key_pair(j["pairs"][i], "'pairs[" + std::to_string(i) + "]'"));
  return c;
}

}  // namespace coind
