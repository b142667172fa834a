#pragma once

#include <json.hpp>

#include "orbits/classifier.hpp"
#include "orbits/cohomology.hpp"
#include "orbits/quantum.hpp"

namespace orbits {

using Json = nlohmann::ordered_json;

Json group_type_json(const GroupType& g);
Json ring_json(const QuotientRing& ring);
Json quantum_ring_json(const QuantumRing& ring);
Json quintuple_json(const Quintuple& q);
Json sphere_action_json(const SphereAction& row);
Json upoly_json(const UPoly& p);

// Parses group tokens like "A2", "SU3", "SO(5)", "Sp3", "Spin7", "G2".
// Returns a simple-type (series, rank) pair suitable for root data.
std::pair<Series, int> parse_simple_group(const std::string& token);

// Parses compact-type expressions: "S(U2xU1)", "SU2xT1", "SO5xT2", "T3",
// "U2", "Z_p".
GroupType parse_group_type(const std::string& expr);

}  // namespace orbits
