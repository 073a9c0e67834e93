#ifndef SCHUB_JSON_IO_HPP
#define SCHUB_JSON_IO_HPP

#include <json.hpp>

#include "schub/diagram.hpp"
#include "schub/polynomial.hpp"
#include "schub/polytope.hpp"
#include "schub/verify.hpp"

namespace schub {

// Fixed key order keeps serialization byte-identical across runs.
using Json = nlohmann::ordered_json;

// {"n": int, "terms": [{"exp": [...], "coeff": "..."}]} in graded-lex
// order.  Coefficients travel as decimal strings so consumers are not
// forced into 64-bit arithmetic.
Json polynomial_to_json(const Polynomial& f);
Polynomial polynomial_from_json(const Json& j);

// {"n": int, "columns": [[rows of column 1], ...], "cells": [[i,j], ...]}.
// The column-set form is canonical; "cells" is a convenience copy and
// is ignored on input.
Json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);

// {"n": int, "z": [{"I": [...], "z": int}, ...]} over all nonempty
// subsets, sorted by size then lexicographically.
Json polytope_to_json(const GeneralizedPermutahedron& p);
GeneralizedPermutahedron polytope_from_json(const Json& j);

// {"n": int, "points": [...]} with the points sorted lexicographically.
Json lattice_points_to_json(const LatticePointSet& s);
LatticePointSet lattice_points_from_json(const Json& j);

Json report_to_json(const SweepReport& report);

// Parses a JSON document, mapping parse failures to MalformedInput.
Json parse_json_text(const std::string& text);

}  // namespace schub

#endif
