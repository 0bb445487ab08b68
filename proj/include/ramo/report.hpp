#pragma once

#include <json.hpp>

#include "ramo/lattice.hpp"
#include "ramo/map_monoid.hpp"

namespace ramo {

// deterministic JSON documents (nlohmann::json orders keys, and every array
// below is emitted in a fixed order)
nlohmann::json lattice_report(const IdealLattice& lattice);
nlohmann::json monoid_report(const MapMonoid& monoid);

// combined analysis: ring summary, lattice, monoid, the named relations of
// the figure monoids, and the catalog classification
nlohmann::json analysis_report(const IdealLattice& lattice, const MapMonoid& monoid);

} // namespace ramo
