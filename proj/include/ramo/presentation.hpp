#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ramo/ordered_monoid.hpp"

namespace ramo {

// Monoid presentation on two generator symbols. The first symbol denotes the
// monotone ("r-like") generator, the second the antitone one. Rules are
// length-nonincreasing equations lhs = rhs; "1" (or "") denotes the empty
// word. Order axioms are word pairs lhs <= rhs.
struct RewritingPresentation {
    std::string alphabet; // exactly two symbols, monotone first
    std::vector<std::pair<std::string, std::string>> rules;
    std::vector<std::pair<std::string, std::string>> order_axioms;
    size_t max_word_len = 16;
};

// Realizes the presented monoid by closing the rule congruence over all
// words up to max_word_len and keeping the classes whose shortest member
// appears below the stabilization length. The order is the smallest relation
// containing the axioms that is transitive and stable under multiplication
// (monotone elements preserve it on the left, antitone ones reverse it;
// right multiplication always preserves it).
//
// Throws std::runtime_error when the class count has not stabilized within
// the budget or the derived order violates antisymmetry.
OrderedMonoid from_presentation(const RewritingPresentation& pres, std::string name = "");

} // namespace ramo
