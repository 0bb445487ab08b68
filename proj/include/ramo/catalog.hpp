#pragma once

#include <string>
#include <vector>

#include "ramo/ordered_monoid.hpp"

namespace ramo {

// The nine built-in figure monoids, in fixed order:
// KURA-14, LOCDUAL-i, LOCDUAL-ii, EX1-7, SEMIPRIME-max, FULLSEMIPRIME,
// ZD-b, ZD-c, ZDR-16. Tables come from their presentations; orders are the
// figures' Hasse data.
const std::vector<OrderedMonoid>& catalog();

// catalog entry by name, or the "field" alias (the 2-element discrete type,
// not one of the nine entries); nullptr when unknown
const OrderedMonoid* catalog_lookup(const std::string& name);

// name of the catalog entry (or "field") generator-pinned-isomorphic to m,
// empty string when none matches
std::string catalog_classify(const OrderedMonoid& m);

} // namespace ramo
