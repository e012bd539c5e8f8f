#pragma once

#include <string>

#include <json.hpp>

#include "coideal/cocycle.hpp"
#include "coideal/error.hpp"
#include "coideal/rack.hpp"

namespace coideal {

// Rack by name: trans<n> (or transpositions<n>), tetrahedron (tetra), cube,
// trivial<k>, point, dihedral<n>; anything ending in .json is read as a file
// holding {"table": [[...]], "labels": [...]}. Errors UnknownRack, ParseError.
Rack parse_rack(const std::string& spec);
Rack rack_from_json(const nlohmann::json& j);
nlohmann::json rack_to_json(const Rack& r);

// Cocycle expression on r: const(c), chi(n), t3(t), tn(n,t,l), tetra(t,l),
// cube(t,l). Arguments are positional or named (t=, l= or lambda=, n=, c=).
// Scalars are rational expressions in zeta<m> or one free variable, parsed
// over one domain inferred from all arguments together. A .json path is read
// as {"q": [["-1", ...], ...]}. Errors ParseError (with column), RackMismatch
// when a model family lives on a different rack, plus validation errors.
Cocycle parse_cocycle(const Rack& r, const std::string& spec);
Cocycle cocycle_from_json(const Rack& r, const nlohmann::json& j);
nlohmann::json cocycle_to_json(const Cocycle& q);

nlohmann::json read_json_file(const std::string& path);  // Errors IOError, ParseError

}  // namespace coideal
