#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "rackhopf/deform.hpp"
#include "rackhopf/grouprealize.hpp"

namespace rackhopf::io {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;

json load_json_file(const std::string& path);

// Fractions are exchanged as strings ("-3/2"); plain JSON integers are accepted on input.
Rational rational_from_json(const json& j);
std::vector<Rational> rationals_from_json(const json& j);
json rationals_to_json(const std::vector<Rational>& v);

// Named racks: o2<n> (transpositions of S_n, 3 <= n <= 7), o44, d<m> (dihedral), t<n> (trivial).
Rack named_rack(const std::string& name, std::vector<Perm>* perms = nullptr);

// {"table": [[..]], "labels": [..]} or {"group": "S<n>", "seed": "(12)"}.
Rack rack_from_json(const json& j, std::vector<Perm>* perms = nullptr);
json rack_to_json(const Rack& r);

// {"spec": "const:-1" | "chi"} or {"values": [[..]]}.
Cocycle2 cocycle_from_json(const Rack& r, const json& j);
json cocycle_to_json(const Cocycle2& q);

// {"family": "Eminus", "params": {"n": 4, "alpha": [..], "mu1": "..", "mu2": ".."}}; Echi uses "mu",
// Etilde "beta", GenericLambda "lambda" with "rack", "cocycle" and "flavor".
DeformParams params_from_json(const json& j);
json params_to_json(const DeformParams& p);

// Polynomials over named generators, e.g. "x0*x1 - 3/2*x1*x0 + 1". Names match greedily (longest
// first) so they may contain parentheses.
FreePoly parse_free_poly(const std::string& text, const std::vector<std::string>& names);

struct IdealSpec {
  std::vector<std::string> names;
  std::vector<FreePoly> generators;
};

// {"names": [..], "generators": [".."]}.
IdealSpec ideal_from_json(const json& j);

// {"group": "S<n>", "rack": <rack json or name>, "g": [perm per x], "chi": "sgn" | "ms-chi" | [[..]]}.
// The action is conjugation of the g images, which must be distinct.
PrincipalRealization realization_from_json(const json& j);

json quotient_dim_to_json(const QuotientDim& d);

}  // namespace rackhopf::io
