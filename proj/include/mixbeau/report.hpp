#pragma once

#include <string>

#include "json.hpp"
#include "mixbeau/band.hpp"
#include "mixbeau/beauville.hpp"

namespace mixbeau {

/// Flat form: [[A,B,C], ...] with one triple per diagonal, k triples.
nlohmann::json element_to_json(const GroupElement& g);
GroupElement element_from_json(const nlohmann::json& j);

nlohmann::json triple_to_json(const DiagTriple& t);

/// Two 2x2 squares side by side, edges labelled with the conjugator.
std::string scheme_to_text(const ConjScheme& s);
/// {label, a1, vanish, nodes: [...], edges: [{from, to, label}]}
nlohmann::json scheme_to_json(const ConjScheme& s);

}  // namespace mixbeau
