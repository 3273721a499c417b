#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "oidforge/algebroid.hpp"
#include "oidforge/brackets.hpp"
#include "oidforge/isotropy.hpp"

namespace oidforge {

using Json = nlohmann::json;

// Rings: {"vars": [...], "order": "grevlex", "ideal": [...]}; ideal entries are base-ring strings.
Json ring_to_json(const RingPtr& r);
RingPtr ring_from_json(const Json& j);

// Matrices are stored as lists of columns of polynomial strings.
Json resolution_to_json(const FreeResolution& res);
FreeResolution resolution_from_json(const Json& j);

Json algebroid_to_json(const LieInftyAlgebroid& alg);
LieInftyAlgebroid algebroid_from_json(const Json& j);

// Inverse of gen_name / word_str: "e[1,2]" or "e[1,1]⊙f[2,3]" (the empty word is "1").
Gen parse_gen(const std::string& s);
Word parse_word(const std::string& s);

Json report_to_json(const CheckReport& r);
Json isotropy_to_json(const IsotropyAlgebra& g, bool regular);

// A session names a ring and a module of vector fields, given either as explicit generators
// ("generators": [[coeff, ...], ...]), as I*X(R^d) ("vanishing": [poly, ...]) or as the fields
// tangent to a zero set ("tangent": [poly, ...]).
struct Session {
  RingPtr ring;
  std::vector<VectorField> generators;
};
Session session_from_json(const Json& j, const std::string& order_override = "");

Json read_json_file(const std::string& path);
// Sorted keys, two-space indent, trailing newline.
void write_json_file(const std::string& path, const Json& j);
std::string dump(const Json& j);

std::vector<Q> parse_point(const std::string& text);

}  // namespace oidforge
