#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "keymesh/scheme.hpp"

namespace keymesh {

std::string to_hex(std::span<const std::uint8_t> bytes);

// A secure scheme bound to sigma-bit secrets and public per-user IDs.
class SchemeInstance {
public:
  SchemeInstance(IosScheme scheme, int sigma_bits,
                 std::vector<std::vector<std::uint8_t>> secrets, std::vector<std::string> ids);

  const IosScheme& scheme() const { return scheme_; }
  int sigma_bits() const { return sigma_bits_; }
  const std::vector<std::uint8_t>& secret(int j) const { return secrets_[j - 1]; }
  const std::string& id(int u) const { return ids_[u - 1]; }

private:
  IosScheme scheme_;
  int sigma_bits_;
  std::vector<std::vector<std::uint8_t>> secrets_;
  std::vector<std::string> ids_;
};

// Binds a secure scheme to concrete keying material. Secrets are expanded
// from the seed with a hash counter (SHA-256 over a fixed label, the seed
// and the index), so equal inputs give bitwise-equal instances in any
// process. IDs default to the decimal vertex ids and must be injective.
// sigma_bits must be 128 or 256. Refuses insecure schemes.
SchemeInstance instantiate(const IosScheme& scheme, std::uint64_t seed, int sigma_bits = 128,
                           std::vector<std::string> ids = {});

struct PairwiseKey {
  Edge edge;
  std::vector<std::uint8_t> value;
};

// First sigma bits of SHA-256 over the secret of the edge's key graph and
// the two length-prefixed IDs in ascending vertex order; symmetric in u, v.
PairwiseKey derive_key(const SchemeInstance& inst, int u, int v);

struct UserKeyring {
  int user;
  // (j, R_j) for every key graph the user holds the secret of, ascending j.
  std::vector<std::pair<int, std::vector<std::uint8_t>>> held_secrets;
  // Derived keys for the remaining incident edges, ascending edge order.
  std::vector<PairwiseKey> held_keys;
};

UserKeyring user_keyring(const SchemeInstance& inst, int u);

// Symbolic knowledge closure over the scheme alone: an edge's key is
// derivable when some coalition member holds the key graph's secret or is
// an endpoint of the edge. Returns the derivable edges in canonical order.
std::vector<Edge> coalition_derivable(const IosScheme& scheme, const VertexSet& coalition);

}  // namespace keymesh
