#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "z4forms/f2.hpp"
#include "z4forms/forms.hpp"
#include "z4forms/fourmanifold.hpp"

namespace z4::io {

using nlohmann::json;

// Field names are part of the file format:
//   form         {"dim": n, "gram": [[0/1, ...], ...]}
//   enhancement  {"form": <form>, "values": [v0, ..., v(n-1)]}
//   vector       [0/1, ...]
//   integer form {"dim": n, "gram": [[int, ...], ...]}
//   char vector  {"char": [int, ...]}
// Malformed documents raise ContractViolation.

json to_json(const F2Vector& v);
json to_json(const BilinearForm& form);
json to_json(const Enhancement& q);
json to_json(const UnimodularForm& m);

F2Vector vector_from_json(const json& j);
BilinearForm form_from_json(const json& j);
/// Accepts a bare enhancement or an object carrying one under "enhancement".
Enhancement enhancement_from_json(const json& j);
UnimodularForm unimodular_from_json(const json& j);
IntVector char_from_json(const json& j);

json read_json_file(const std::string& path);

/// Parses "1,0,1", "101" or "[1,0,1]" into a bit vector.
F2Vector parse_bits(const std::string& text);
/// Parses "3,-1,0" or "[3,-1,0]" into integers.
IntVector parse_ints(const std::string& text);

/// "(1,3)" style rendering of basis values.
std::string format_values(const std::vector<Z4>& values);
/// "[1000, 0010]" rendering of a subspace basis.
std::string format_basis(const Subspace& s);

}  // namespace z4::io
