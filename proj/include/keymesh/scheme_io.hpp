#pragma once

#include <string>
#include <string_view>

#include "keymesh/keyring.hpp"
#include "keymesh/optimizer.hpp"
#include "keymesh/scheme.hpp"

namespace keymesh {

// Scheme documents are JSON with top-level fields n, edges ([u,v] pairs,
// u < v), t, f ([u,v,j] triples covering every edge) and w (t vertex
// lists). Writing is canonical: edges and f in lexicographic edge order, w
// sets ascending. Readers accept any order and ignore unknown fields.
std::string write_scheme(const IosScheme& scheme);
IosScheme read_scheme(std::string_view text);  // throws ParseError

// Scheme document plus a "report" object carrying the objective, the
// attained value and the optimizer's certificate.
std::string write_scheme_with_report(const OptimizationReport& report);

// Scheme document plus "sigma", "ids" and "secrets" (lowercase hex).
std::string write_instance(const SchemeInstance& inst);

// {"user": u, "entries": [["R", j, hex], ["L", u, v, hex], ...]}
std::string write_keyring(const UserKeyring& ring);

}  // namespace keymesh
