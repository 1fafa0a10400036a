#pragma once

#include <string>

#include "json.hpp"
#include "vassiliev/combing.hpp"
#include "vassiliev/coset_split.hpp"
#include "vassiliev/diagram_algebra.hpp"

namespace vb {

// Coefficients that fit in 64 bits are emitted as JSON numbers, larger
// ones as decimal strings.
nlohmann::json coeff_to_json(const Int& c);

nlohmann::json h_to_json(const HElem& h);
nlohmann::json chord_to_json(const Chord& c);

// {"N": ..., "terms": [{"coeff": ..., "chords": [...], "h": {...}}, ...]}
// with terms ordered by (degree, chords, h).
nlohmann::json u_to_json(const UElem& u, int N);

// Line-oriented rendering of the same data; empty loops print as "1".
std::string u_to_text(const UElem& u, int N);

std::string format_kdecomp(const KDecomp& levels);

}  // namespace vb
