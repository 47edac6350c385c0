#include "keymesh/keyring.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "keymesh/errors.hpp"

namespace keymesh {

namespace {

constexpr std::string_view kSecretLabel = "keymesh.secret.v1";

std::vector<std::uint8_t> sha256(std::span<const std::uint8_t> data) {
  std::vector<std::uint8_t> digest(EVP_MAX_MD_SIZE);
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  digest.resize(length);
  return digest;
}

void append_be32(std::vector<std::uint8_t>& out, std::uint32_t x) {
  for (int shift = 24; shift >= 0; shift -= 8)
    out.push_back(static_cast<std::uint8_t>(x >> shift));
}

void append_be64(std::vector<std::uint8_t>& out, std::uint64_t x) {
  for (int shift = 56; shift >= 0; shift -= 8)
    out.push_back(static_cast<std::uint8_t>(x >> shift));
}

std::vector<std::uint8_t> expand_secret(std::uint64_t seed, int j, int sigma_bits) {
  std::vector<std::uint8_t> input(kSecretLabel.begin(), kSecretLabel.end());
  append_be64(input, seed);
  append_be32(input, static_cast<std::uint32_t>(j));
  std::vector<std::uint8_t> digest = sha256(input);
  digest.resize(sigma_bits / 8);
  return digest;
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

SchemeInstance::SchemeInstance(IosScheme scheme, int sigma_bits,
                               std::vector<std::vector<std::uint8_t>> secrets,
                               std::vector<std::string> ids)
    : scheme_(std::move(scheme)),
      sigma_bits_(sigma_bits),
      secrets_(std::move(secrets)),
      ids_(std::move(ids)) {
  if (sigma_bits_ != 128 && sigma_bits_ != 256)
    throw DomainError("unsupported sigma " + std::to_string(sigma_bits_) + ": expected 128 or 256");
  if (!verify_secure(scheme_).secure()) throw DomainError("refusing to instantiate insecure scheme");
  if (static_cast<int>(secrets_.size()) != scheme_.t())
    throw std::invalid_argument("expected one secret per key graph");
  for (const auto& secret : secrets_)
    if (static_cast<int>(secret.size()) != sigma_bits_ / 8)
      throw std::invalid_argument("secret length does not match sigma");
  if (static_cast<int>(ids_.size()) != scheme_.graph().vertex_count())
    throw std::invalid_argument("expected one ID per vertex");
  std::set<std::string_view> distinct(ids_.begin(), ids_.end());
  if (distinct.size() != ids_.size()) throw DomainError("user IDs must be injective");
}

SchemeInstance instantiate(const IosScheme& scheme, std::uint64_t seed, int sigma_bits,
                           std::vector<std::string> ids) {
  if (ids.empty()) {
    ids.reserve(scheme.graph().vertex_count());
    for (int u = 1; u <= scheme.graph().vertex_count(); ++u) ids.push_back(std::to_string(u));
  }
  if (sigma_bits != 128 && sigma_bits != 256)
    throw DomainError("unsupported sigma " + std::to_string(sigma_bits) + ": expected 128 or 256");
  std::vector<std::vector<std::uint8_t>> secrets;
  secrets.reserve(scheme.t());
  for (int j = 1; j <= scheme.t(); ++j) secrets.push_back(expand_secret(seed, j, sigma_bits));
  return SchemeInstance(scheme, sigma_bits, std::move(secrets), std::move(ids));
}

PairwiseKey derive_key(const SchemeInstance& inst, int u, int v) {
  auto index = inst.scheme().graph().edge_index(u, v);
  if (!index)
    throw DomainError("no edge {" + std::to_string(u) + "," + std::to_string(v) +
                      "} in the communication graph");
  int a = std::min(u, v), b = std::max(u, v);
  int j = inst.scheme().f_of(*index);

  std::vector<std::uint8_t> input = inst.secret(j);
  for (int vertex : {a, b}) {
    const std::string& id = inst.id(vertex);
    append_be32(input, static_cast<std::uint32_t>(id.size()));
    input.insert(input.end(), id.begin(), id.end());
  }
  std::vector<std::uint8_t> digest = sha256(input);
  digest.resize(inst.sigma_bits() / 8);
  return {Edge{a, b}, std::move(digest)};
}

UserKeyring user_keyring(const SchemeInstance& inst, int u) {
  const Graph& g = inst.scheme().graph();
  if (u < 1 || u > g.vertex_count())
    throw DomainError("vertex " + std::to_string(u) + " out of range 1.." +
                      std::to_string(g.vertex_count()));
  UserKeyring ring{u, {}, {}};
  for (int j = 1; j <= inst.scheme().t(); ++j)
    if (inst.scheme().holds_secret(u, j)) ring.held_secrets.emplace_back(j, inst.secret(j));
  for (const Graph::Incidence& inc : g.incident(u))
    if (!inst.scheme().holds_secret(u, inst.scheme().f_of(inc.edge)))
      ring.held_keys.push_back(derive_key(inst, u, inc.neighbor));
  return ring;
}

std::vector<Edge> coalition_derivable(const IosScheme& scheme, const VertexSet& coalition) {
  const Graph& g = scheme.graph();
  std::vector<bool> member(g.vertex_count() + 1, false);
  for (int v : coalition) {
    if (v < 1 || v > g.vertex_count())
      throw DomainError("unknown vertex " + std::to_string(v) + " in coalition");
    member[v] = true;
  }
  std::vector<bool> secret_known(scheme.t() + 1, false);
  for (int j = 1; j <= scheme.t(); ++j)
    for (int v : scheme.w(j))
      if (member[v]) secret_known[j] = true;

  std::vector<Edge> derivable;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (member[e.u] || member[e.v] || secret_known[scheme.f_of(i)]) derivable.push_back(e);
  }
  return derivable;
}

}  // namespace keymesh
