// keymesh: build, check and instantiate key predistribution schemes over a
// communication graph.
//
// Exit codes: 0 success, 1 domain error (insecure scheme, infeasible
// request), 2 usage or format error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "keymesh/balanced_orientation.hpp"
#include "keymesh/errors.hpp"
#include "keymesh/graph.hpp"
#include "keymesh/independent_set.hpp"
#include "keymesh/keyring.hpp"
#include "keymesh/mmo.hpp"
#include "keymesh/optimizer.hpp"
#include "keymesh/oracle.hpp"
#include "keymesh/scheme.hpp"
#include "keymesh/scheme_io.hpp"

namespace {

using namespace keymesh;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

int exact_cap_from_env() {
  const char* raw = std::getenv("KEYMESH_EXACT_CAP");
  if (!raw || !*raw) return kDefaultExactCap;
  char* end = nullptr;
  long cap = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || cap < 1)
    throw ParseError("invalid KEYMESH_EXACT_CAP value: " + std::string(raw));
  return static_cast<int>(cap);
}

std::string format_vertex_set(const VertexSet& set) {
  std::string out = "{";
  for (size_t i = 0; i < set.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(set[i]);
  }
  return out + "}";
}

struct GenArgs {
  std::string graph_path;
  std::string objective = "total";
  std::string out_path;
};

int run_gen(const GenArgs& args) {
  Graph g = parse_edge_list(slurp(args.graph_path));
  std::optional<OptimizationReport> report;
  if (args.objective == "total") {
    int cap = exact_cap_from_env();
    if (g.vertex_count() > cap)
      throw DomainError("graph has " + std::to_string(g.vertex_count()) +
                        " vertices, above the exact independent-set cap of " + std::to_string(cap) +
                        "; set KEYMESH_EXACT_CAP to raise it");
    report = min_total_storage_scheme(g, cap);
    const auto& cert = std::get<TotalCertificate>(report->certificate);
    std::cout << "S* = " << report->value << "\n";
    std::cout << "certificate: independent set " << format_vertex_set(cert.independent_set)
              << " (alpha = " << cert.independent_set.size() << ")\n";
  } else if (args.objective == "max") {
    report = min_max_storage_scheme(g);
    const auto& cert = std::get<MaxCertificate>(report->certificate);
    std::cout << "S_max* = " << report->value << "\n";
    std::cout << "certificate: MMO(G) = " << cert.mmo_g << ", W = " << format_vertex_set(cert.w)
              << ", MMO(H) = " << cert.mmo_h << ", branch: "
              << (cert.equality ? "MMO" : "MMO+1") << "\n";
  } else {
    report = euler_upper_bound_scheme(g);
    const auto& cert = std::get<EulerCertificate>(report->certificate);
    std::cout << "max storage <= " << cert.bound << " (achieved " << report->value
              << ", max degree " << cert.max_degree << ")\n";
  }
  if (!args.out_path.empty()) {
    spill(args.out_path, write_scheme_with_report(*report));
    std::cout << "wrote " << args.out_path << "\n";
  }
  return 0;
}

int run_verify(const std::string& scheme_path) {
  IosScheme scheme = read_scheme(slurp(scheme_path));
  SecurityVerdict verdict = verify_secure(scheme);
  if (verdict.secure()) {
    std::cout << "SECURE\n";
    return 0;
  }
  for (const Violation& v : verdict.violations) std::cout << v.message() << "\n";
  return 1;
}

int run_storage(const std::string& scheme_path) {
  IosScheme scheme = read_scheme(slurp(scheme_path));
  StorageProfile profile = storage_profile(scheme);
  if (profile.star_ios) {
    std::cout << "user c l s\n";
    for (int u = 1; u <= scheme.graph().vertex_count(); ++u)
      std::cout << u << ' ' << profile.centres(u) << ' ' << profile.leaves(u) << ' '
                << profile.storage(u) << "\n";
  } else {
    std::cout << "user s\n";
    for (int u = 1; u <= scheme.graph().vertex_count(); ++u)
      std::cout << u << ' ' << profile.storage(u) << "\n";
  }
  std::cout << "total " << profile.total << "\n";
  std::cout << "max " << profile.max << "\n";
  return 0;
}

int run_mmo(const std::string& graph_path, bool oracle, const std::string& out_path) {
  Graph g = parse_edge_list(slurp(graph_path));
  if (oracle) {
    std::cout << "MMO = " << brute_mmo(g) << "\n";
    return 0;
  }
  MmoResult result = mmo(g);
  std::cout << "MMO = " << result.value << "\n";
  if (!out_path.empty()) {
    std::ostringstream doc;
    doc << "{\n  \"mmo\": " << result.value << ",\n  \"orientation\": [";
    for (int i = 0; i < g.edge_count(); ++i)
      doc << (i ? ", " : "") << "[" << result.witness.tail(i) << ", " << result.witness.head(i)
          << "]";
    doc << "]\n}\n";
    spill(out_path, doc.str());
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

int run_alpha(const std::string& graph_path, bool greedy, bool oracle) {
  Graph g = parse_edge_list(slurp(graph_path));
  if (oracle) {
    std::cout << "alpha = " << brute_alpha(g) << "\n";
    return 0;
  }
  if (greedy) {
    IndependentSet set = max_independent_set(g, MisMode::Greedy);
    std::cout << "alpha >= " << set.members.size() << " (greedy lower bound, set "
              << format_vertex_set(set.members) << ")\n";
    return 0;
  }
  IndependentSet set = max_independent_set(g, MisMode::Exact, exact_cap_from_env());
  std::cout << "alpha = " << set.members.size() << " (set " << format_vertex_set(set.members)
            << ")\n";
  return 0;
}

int run_attack(const std::string& scheme_path, const std::vector<int>& coalition) {
  IosScheme scheme = read_scheme(slurp(scheme_path));
  VertexSet members = coalition;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<Edge> derivable = coalition_derivable(scheme, members);

  std::cout << "coalition: " << format_vertex_set(members) << "\n";
  std::cout << "derivable (" << derivable.size() << "):";
  for (const Edge& e : derivable) std::cout << ' ' << to_string(e);
  std::cout << "\n";
  size_t hidden = scheme.graph().edge_count() - derivable.size();
  std::cout << "not derivable (" << hidden << "):";
  size_t next = 0;
  for (const Edge& e : scheme.graph().edges()) {
    if (next < derivable.size() && derivable[next] == e)
      ++next;
    else
      std::cout << ' ' << to_string(e);
  }
  std::cout << "\n";
  return 0;
}

struct KeysArgs {
  std::string scheme_path;
  std::optional<std::uint64_t> seed;
  int sigma = 128;
  int user = 0;
  std::vector<int> edge;
  std::string out_path;
};

void print_keyring(const SchemeInstance& inst, int u) {
  UserKeyring ring = user_keyring(inst, u);
  for (const auto& [j, secret] : ring.held_secrets)
    std::cout << "R " << j << ' ' << to_hex(secret) << "\n";
  for (const PairwiseKey& key : ring.held_keys)
    std::cout << "L " << key.edge.u << ' ' << key.edge.v << ' ' << to_hex(key.value) << "\n";
}

int run_keys(const KeysArgs& args) {
  IosScheme scheme = read_scheme(slurp(args.scheme_path));
  std::uint64_t seed;
  if (args.seed) {
    seed = *args.seed;
  } else {
    std::random_device entropy;
    seed = (static_cast<std::uint64_t>(entropy()) << 32) | entropy();
    std::cerr << "note: using seed " << seed << "\n";
  }
  SchemeInstance inst = instantiate(scheme, seed, args.sigma);

  if (!args.edge.empty()) {
    PairwiseKey key = derive_key(inst, args.edge[0], args.edge[1]);
    std::cout << to_hex(key.value) << "\n";
  } else if (args.user != 0) {
    print_keyring(inst, args.user);
  } else if (args.out_path.empty()) {
    for (int u = 1; u <= scheme.graph().vertex_count(); ++u) {
      std::cout << "user " << u << ":\n";
      print_keyring(inst, u);
    }
  }
  if (!args.out_path.empty()) {
    // --user exports that keyring; otherwise the whole instance.
    spill(args.out_path,
          args.user != 0 ? write_keyring(user_keyring(inst, args.user)) : write_instance(inst));
    std::cout << "wrote " << args.out_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"key predistribution schemes over communication graphs"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "construct a storage-optimal scheme for a graph");
  gen->add_option("graph", gen_args.graph_path, "edge-list file")->required();
  gen->add_option("--objective", gen_args.objective, "total | max | euler")
      ->check(CLI::IsMember({"total", "max", "euler"}));
  gen->add_option("--out", gen_args.out_path, "write scheme + report here");

  std::string verify_path;
  CLI::App* verify = app.add_subcommand("verify", "check a scheme document for security");
  verify->add_option("scheme", verify_path, "scheme document")->required();

  std::string storage_path;
  CLI::App* storage = app.add_subcommand("storage", "per-user storage table");
  storage->add_option("scheme", storage_path, "scheme document")->required();

  std::string mmo_path, mmo_out;
  bool mmo_oracle = false;
  CLI::App* mmo_cmd = app.add_subcommand("mmo", "minimum maximum outdegree of a graph");
  mmo_cmd->add_option("graph", mmo_path, "edge-list file")->required();
  mmo_cmd->add_option("--out", mmo_out, "write value + witness orientation here");
  mmo_cmd->add_flag("--oracle", mmo_oracle)->group("");  // brute-force cross-check, hidden

  std::string alpha_path;
  bool alpha_greedy = false, alpha_oracle = false;
  CLI::App* alpha = app.add_subcommand("alpha", "maximum independent set size");
  alpha->add_option("graph", alpha_path, "edge-list file")->required();
  alpha->add_flag("--greedy", alpha_greedy, "maximal set only (lower bound)");
  alpha->add_flag("--oracle", alpha_oracle)->group("");

  std::string attack_path;
  std::vector<int> attack_coalition;
  CLI::App* attack = app.add_subcommand("attack", "keys a coalition can derive");
  attack->add_option("scheme", attack_path, "scheme document")->required();
  attack->add_option("--coalition", attack_coalition, "comma-separated vertex list")
      ->required()
      ->delimiter(',');

  KeysArgs keys_args;
  std::uint64_t seed_value = 0;
  CLI::App* keys = app.add_subcommand("keys", "instantiate secrets and derive keys");
  keys->add_option("scheme", keys_args.scheme_path, "scheme document")->required();
  CLI::Option* seed_opt = keys->add_option("--seed", seed_value, "deterministic RNG seed");
  keys->add_option("--sigma", keys_args.sigma, "key length in bits")
      ->check(CLI::IsMember({128, 256}));
  CLI::Option* user_opt = keys->add_option("--user", keys_args.user, "print one user's keyring");
  keys->add_option("--edge", keys_args.edge, "print one pairwise key")
      ->expected(2)
      ->excludes(user_opt);
  keys->add_option("--out", keys_args.out_path, "write the full instance here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (verify->parsed()) return run_verify(verify_path);
    if (storage->parsed()) return run_storage(storage_path);
    if (mmo_cmd->parsed()) return run_mmo(mmo_path, mmo_oracle, mmo_out);
    if (alpha->parsed()) return run_alpha(alpha_path, alpha_greedy, alpha_oracle);
    if (attack->parsed()) return run_attack(attack_path, attack_coalition);
    if (keys->parsed()) {
      if (seed_opt->count() > 0) keys_args.seed = seed_value;
      return run_keys(keys_args);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
