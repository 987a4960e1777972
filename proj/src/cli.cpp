#include "coind/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "coind/bisim.hpp"
#include "coind/dsl.hpp"
#include "coind/wf.hpp"

namespace coind {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidDefinition, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::string render_prefix(const TakeResult& r) {
  std::string s = "[";
  for (std::size_t i = 0; i < r.elements.size(); ++i) {
    if (i) s += ", ";
    s += r.elements[i].name;
  }
  if (!r.ended) s += r.elements.empty() ? "..." : ", ...";
  return s + "]";
}

// Lattice demo helpers.

std::set<std::string> parse_brace_set(const std::string& s) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw Error(ErrorCode::InvalidDefinition, "fin: carrier element '" + s + "' is not of the form {x,y,...}");
  std::set<std::string> out;
  for (auto& m : split_csv(s.substr(1, s.size() - 2))) {
    if (m.empty()) throw Error(ErrorCode::InvalidDefinition, "fin: empty member in '" + s + "'");
    out.insert(m);
  }
  return out;
}

FiniteTree parse_tree_element(const std::string& s) {
  if (s.rfind("atom:", 0) == 0) return leaf(s.substr(5));
  if (s.rfind("num:", 0) == 0) {
    try {
      return numb(std::stoull(s.substr(4)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidDefinition, "list_fun: bad numeral in '" + s + "'");
    }
  }
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') {
    std::vector<Symbol> xs;
    for (auto& m : split_csv(s.substr(1, s.size() - 2))) {
      if (m.empty()) throw Error(ErrorCode::InvalidDefinition, "list_fun: empty element in '" + s + "'");
      xs.push_back(Symbol{m});
    }
    return list_encode(xs).tree;
  }
  throw Error(ErrorCode::InvalidDefinition,
              "list_fun: carrier element '" + s + "' is not [x,...], atom:<sym> or num:<k>");
}

std::vector<std::string> atoms_param(const nlohmann::json& j) {
  if (!j.contains("params") || !j["params"].contains("atoms") || !j["params"]["atoms"].is_array())
    throw Error(ErrorCode::InvalidDefinition, "lattice: operator needs params.atoms (array of strings)");
  std::vector<std::string> out;
  for (const auto& a : j["params"]["atoms"]) {
    if (!a.is_string()) throw Error(ErrorCode::InvalidDefinition, "lattice: params.atoms must hold strings");
    out.push_back(a.get<std::string>());
  }
  return out;
}

int usage_error(std::ostream& err, const std::string& msg) {
  err << "error: " << msg << '\n';
  return kExitUsage;
}

}  // namespace

LatticeSpec lattice_spec_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::InvalidDefinition, std::string("lattice: ") + e.what());
  }
  if (!j.is_object() || !j.contains("carrier") || !j["carrier"].is_array())
    throw Error(ErrorCode::InvalidDefinition, "lattice: missing array field 'carrier'");
  std::vector<std::string> elems;
  for (const auto& e : j["carrier"]) {
    if (!e.is_string()) throw Error(ErrorCode::InvalidDefinition, "lattice: carrier elements must be strings");
    elems.push_back(e.get<std::string>());
  }
  LatticeSpec spec;
  spec.carrier = Carrier(elems);
  const std::size_t n = elems.size();

  if (!j.contains("mode") || !j["mode"].is_string())
    throw Error(ErrorCode::InvalidDefinition, "lattice: missing string field 'mode'");
  const auto mode = j["mode"].get<std::string>();
  if (mode == "lfp") spec.mode = Extremum::least;
  else if (mode == "gfp") spec.mode = Extremum::greatest;
  else throw Error(ErrorCode::InvalidDefinition, "lattice: 'mode' must be \"lfp\" or \"gfp\"");

  if (!j.contains("operator") || !j["operator"].is_string())
    throw Error(ErrorCode::InvalidDefinition, "lattice: missing string field 'operator'");
  spec.operator_name = j["operator"].get<std::string>();
  const Carrier& carrier = spec.carrier;

  if (spec.operator_name == "identity") {
    spec.op = [](const Subset& z) { return z; };
  } else if (spec.operator_name == "complement") {
    spec.op = [](const Subset& z) { return z.complement(); };
  } else if (spec.operator_name == "table") {
    if (n > kExhaustiveBound)
      throw Error(ErrorCode::CarrierTooLarge, "lattice: table operators need at most " +
                                                  std::to_string(kExhaustiveBound) + " carrier elements");
    if (!j.contains("table") || !j["table"].is_object())
      throw Error(ErrorCode::InvalidDefinition, "lattice: operator \"table\" needs an object field 'table'");
    auto to_subset = [&](const std::vector<std::string>& names, const std::string& where) {
      Subset s(n);
      for (const auto& m : names) {
        auto i = carrier.index_of(m);
        if (!i) throw Error(ErrorCode::InvalidDefinition, "lattice: " + where + ": '" + m + "' is not in the carrier");
        s.insert(*i);
      }
      return s;
    };
    std::vector<std::optional<Subset>> table(std::size_t{1} << n);
    for (const auto& [key, value] : j["table"].items()) {
      const std::string where = "table[\"" + key + "\"]";
      if (!value.is_array()) throw Error(ErrorCode::InvalidDefinition, "lattice: " + where + " must be an array");
      std::vector<std::string> image;
      for (const auto& v : value) {
        if (!v.is_string()) throw Error(ErrorCode::InvalidDefinition, "lattice: " + where + " must hold strings");
        image.push_back(v.get<std::string>());
      }
      auto arg = split_csv(key);
      if (arg.size() == 1 && arg[0].empty()) arg.clear();
      table[to_subset(arg, where).mask()] = to_subset(image, where);
    }
    std::vector<Subset> full;
    for (std::uint64_t m = 0; m < table.size(); ++m) {
      if (!table[m])
        throw Error(ErrorCode::InvalidDefinition,
                    "lattice: table has no entry for " + to_string(Subset::from_mask(n, m), carrier));
      full.push_back(*table[m]);
    }
    spec.op = table_operator(std::move(full));
  } else if (spec.operator_name == "fin") {
    const auto atoms = atoms_param(j);
    std::map<std::set<std::string>, std::size_t> index;
    std::vector<std::set<std::string>> sets;
    for (std::size_t i = 0; i < n; ++i) {
      sets.push_back(parse_brace_set(elems[i]));
      index[sets.back()] = i;
    }
    // Z ↦ {{}} ∪ {insert x y | y ∈ Z, x ∈ atoms}, restricted to the carrier.
    spec.op = [sets, index, atoms, n](const Subset& z) {
      Subset out(n);
      if (auto it = index.find({}); it != index.end()) out.insert(it->second);
      for (auto y : z.members()) {
        for (const auto& x : atoms) {
          auto s = sets[y];
          s.insert(x);
          if (auto it = index.find(s); it != index.end()) out.insert(it->second);
        }
      }
      return out;
    };
  } else if (spec.operator_name == "list_fun") {
    TreeSet a;
    for (const auto& x : atoms_param(j)) a.insert(leaf(x));
    std::vector<FiniteTree> trees;
    for (const auto& e : elems) trees.push_back(parse_tree_element(e));
    auto tc = std::make_shared<const TreeCarrier>(trees);
    spec.op = [tc, a](const Subset& z) { return tc->subset(list_fun(a, tc->trees_of(z))); };
  } else {
    throw Error(ErrorCode::InvalidDefinition, "lattice: unknown operator '" + spec.operator_name + "'");
  }
  return spec;
}

int run_lattice(const LatticeSpec& spec, std::ostream& out) {
  const bool exhaustive = spec.carrier.size() <= kExhaustiveBound;
  out << "carrier: " << spec.carrier.size() << " elements\n";
  out << "operator: " << spec.operator_name << '\n';
  MonotoneMode mode = Exhaustive{};
  if (!exhaustive) mode = Sampled{};
  auto mono = is_monotone(spec.op, spec.carrier, mode);
  if (!mono.monotone) {
    out << "monotone: FAIL not monotone @ (" << to_string(mono.witness->first, spec.carrier) << ", "
        << to_string(mono.witness->second, spec.carrier) << ")\n";
    return kExitFail;
  }
  out << "monotone: PASS" << (exhaustive ? "" : " (sampled)") << '\n';
  const bool least = spec.mode == Extremum::least;
  auto run = least ? kleene_lfp(spec.op, spec.carrier) : kleene_gfp(spec.op, spec.carrier);
  out << (least ? "lfp" : "gfp") << " = " << to_string(run.value, spec.carrier) << '\n';
  out << "iterations: " << run.iterations << '\n';
  if (!exhaustive) {
    out << "extremal: skipped (carrier exceeds " << kExhaustiveBound << ")\n";
    return kExitPass;
  }
  auto v = verify_extremal(spec.op, spec.carrier, run.value, spec.mode);
  if (!v.ok) {
    out << "extremal: FAIL " << v.reason << " @ " << to_string(*v.witness, spec.carrier) << '\n';
    return kExitFail;
  }
  out << "extremal: PASS\n";
  return kExitPass;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"coind: lazy lists, corecursion and bisimulation"};
  app.require_subcommand(1);

  std::string defs_path, cert_path, spec_path, atoms_csv, kind_name = "strong", cert_out;
  std::size_t depth = 20, max_pairs = kDefaultStateBound;
  std::vector<std::string> exprs;

  auto* eval = app.add_subcommand("eval", "print the first K elements of a list");
  auto* trunc = app.add_subcommand("trunc", "dump the depth-K truncation of a list's tree");
  auto* eq = app.add_subcommand("eq", "compare two lists up to K observations");
  auto* bisim = app.add_subcommand("bisim", "search for a bisimulation certificate");
  auto* cert = app.add_subcommand("cert", "certificate tools");
  auto* verify = cert->add_subcommand("verify", "check a certificate file");
  cert->require_subcommand(1);
  auto* check = app.add_subcommand("check", "k-step membership check against an alphabet");
  auto* lattice = app.add_subcommand("lattice", "least/greatest fixedpoint of a lattice demo");

  for (auto* sub : {eval, trunc, check}) {
    sub->add_option("--defs", defs_path, "definitions file")->required();
    sub->add_option("--depth", depth, "observation depth");
    sub->add_option("expr", exprs, "list expression")->required()->expected(1);
  }
  check->add_option("--atoms", atoms_csv, "comma-separated alphabet subset");
  eq->add_option("--defs", defs_path, "definitions file")->required();
  eq->add_option("--depth", depth, "observation depth");
  eq->add_option("exprs", exprs, "two list expressions")->required()->expected(2);
  bisim->add_option("--defs", defs_path, "definitions file")->required();
  bisim->add_option("--kind", kind_name, "weak or strong")->check(CLI::IsMember({"weak", "strong"}));
  bisim->add_option("--max-pairs", max_pairs, "search bound");
  bisim->add_option("--out", cert_out, "write the certificate as JSON");
  bisim->add_option("exprs", exprs, "two list expressions")->required()->expected(2);
  verify->add_option("--defs", defs_path, "definitions file")->required();
  verify->add_option("--cert", cert_path, "certificate file")->required();
  verify->add_option("exprs", exprs, "two list expressions")->required()->expected(2);
  lattice->add_option("--spec", spec_path, "lattice demo file")->required();

  std::vector<const char*> argv{"coind"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (lattice->parsed()) return run_lattice(lattice_spec_from_json(read_file(spec_path)), out);

    const Defs defs = Defs::from_json(read_file(defs_path));
    std::vector<CoList> lists;
    for (const auto& e : exprs) lists.push_back(elaborate(*parse_expr(e), defs));

    if (eval->parsed()) {
      out << render_prefix(take(depth, lists[0])) << '\n';
      return kExitPass;
    }
    if (trunc->parsed()) {
      out << dump(tree_trunc(depth, lists[0]));
      return kExitPass;
    }
    if (check->parsed()) {
      Alphabet a = defs.alphabet;
      if (!atoms_csv.empty()) a = Alphabet(split_csv(atoms_csv));
      auto v = check_llist_upto(depth, lists[0], a);
      out << v.to_string() << '\n';
      return v ? kExitPass : kExitFail;
    }
    if (eq->parsed()) {
      auto v = eq_upto(depth, lists[0], lists[1]);
      if (v) out << "EQUAL to depth " << depth << '\n';
      else out << v.to_string() << '\n';
      return v ? kExitPass : kExitFail;
    }
    if (bisim->parsed()) {
      const auto kind = kind_name == "weak" ? CoinductionKind::weak : CoinductionKind::strong;
      auto result = find_bisimulation(lists[0], lists[1], max_pairs, kind);
      if (std::holds_alternative<BoundExceeded>(result)) {
        out << "BOUND\n";
        return kExitBound;
      }
      if (const auto* cx = std::get_if<Counterexample>(&result)) {
        out << "FAIL counterexample @ " << cx->index << '\n';
        return kExitFail;
      }
      const auto& c = std::get<Certificate>(result);
      out << "BISIMILAR (" << to_string(c.kind) << " certificate, " << c.pairs.size()
          << (c.pairs.size() == 1 ? " pair)\n" : " pairs)\n");
      out << "root " << c.root.first << " ~ " << c.root.second << '\n';
      for (const auto& p : c.pairs) out << "pair " << p.first << " ~ " << p.second << '\n';
      if (!cert_out.empty()) {
        std::ofstream f(cert_out);
        if (!f) return usage_error(err, "cannot write '" + cert_out + "'");
        f << to_json(c) << '\n';
      }
      return kExitPass;
    }
    if (verify->parsed()) {
      const auto c = certificate_from_json(read_file(cert_path));
      Verdict v;
      try {
        v = verify_certificate(c, lists[0], lists[1]);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::RootMissing && e.code() != ErrorCode::UnresolvableKey) throw;
        v = Verdict::fail(std::string(to_string(e.code())), e.what());
      }
      out << v.to_string() << '\n';
      return v ? kExitPass : kExitFail;
    }
  } catch (const ParseError& e) {
    return usage_error(err, e.what());
  } catch (const Error& e) {
    return usage_error(err, e.what());
  }
  return usage_error(err, "no command");
}

}  // namespace coind
