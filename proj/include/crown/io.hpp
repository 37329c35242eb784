#pragma once

#include <string>

#include "json.hpp"

#include "crown/geometry.hpp"
#include "crown/group.hpp"
#include "crown/kernels.hpp"

namespace crown {

/// Points serialize to JSON arrays of [re, im] pairs.
nlohmann::json point_to_json(const CPoint& z);
CPoint point_from_json(const nlohmann::json& j);

/// Lorentz elements serialize as the real matrix L, row-major.
nlohmann::json element_to_json(const LorentzElement& g);
LorentzElement element_from_json(const nlohmann::json& j, int n);

/// Point syntax for the CLI: comma-separated re:im pairs
/// ("1:0,0:0,0:1.5"), or the named points e0, en, xi0 (dimension n given
/// separately).
CPoint parse_point(const std::string& text, int n);

/// Generator words: comma-separated "rot:i,j,angle", "boost:t",
/// "horo:v1,...,v_{n-1}" (a token with ':' starts a generator, bare numbers
/// extend the current one).
LorentzElement parse_word(const std::string& text, int n);

nlohmann::json complex_to_json(Cx v);

}  // namespace crown
