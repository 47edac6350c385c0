#!/usr/bin/env python3
"""Independent reference for secret expansion and pairwise-key derivation.

Recomputes, with hashlib only, every secret and every pairwise key of a
scheme document, printing one line per item:

    R <j> <hex>
    L <u> <v> <hex>

Usage: reference_keys.py <scheme.json> <seed> <sigma>
"""

import hashlib
import json
import struct
import sys

LABEL = b"keymesh.secret.v1"


def expand_secret(seed: int, j: int, sigma: int) -> bytes:
    material = LABEL + struct.pack(">Q", seed) + struct.pack(">I", j)
    return hashlib.sha256(material).digest()[: sigma // 8]


def derive_key(secret: bytes, id_u: str, id_v: str, sigma: int) -> bytes:
    material = secret
    for ident in (id_u, id_v):
        raw = ident.encode("utf-8")
        material += struct.pack(">I", len(raw)) + raw
    return hashlib.sha256(material).digest()[: sigma // 8]


def main() -> int:
    path, seed, sigma = sys.argv[1], int(sys.argv[2]), int(sys.argv[3])
    with open(path, "rb") as handle:
        doc = json.load(handle)

    ids = {u: str(u) for u in range(1, doc["n"] + 1)}
    secrets = {j: expand_secret(seed, j, sigma) for j in range(1, doc["t"] + 1)}
    f = {(u, v): j for u, v, j in doc["f"]}

    for j in sorted(secrets):
        print(f"R {j} {secrets[j].hex()}")
    for u, v in sorted(tuple(e) for e in doc["edges"]):
        key = derive_key(secrets[f[(u, v)]], ids[u], ids[v], sigma)
        print(f"L {u} {v} {key.hex()}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
