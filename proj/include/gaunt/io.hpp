#pragma once

#include <string>

#include "json.hpp"

#include "gaunt/cells.hpp"
#include "gaunt/complex.hpp"
#include "gaunt/nerve.hpp"
#include "gaunt/poset.hpp"

namespace gaunt {

using Json = nlohmann::json;

/// {"name", "generators": [[names per degree]], "differential": {gen: [[coeff, gen], ...]},
///  "endpoints": [bottom, top] (optional)}. Coefficients beyond 64 bits are strings.
Json to_json(const Complex& x);
Complex complex_from_json(const Json& j);

/// {"elements": [labels], "leq": [[i, j], ...]} with the full relation.
Json to_json(const Poset& p);
Poset poset_from_json(const Json& j);

/// [[minus, plus], ...] per degree, chains in textual form.
Json to_json(const Complex& x, const CellTable& t);
CellTable table_from_json(const Complex& x, const Json& j);

/// {"dimension", "simplices": [{"faces", "degeneracies", "thin", "degenerate"}] per dimension}.
Json to_json(const StratifiedSimplicialSet& s);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace gaunt
