#pragma once

#include <stdexcept>
#include <string>

namespace ramo {

// Malformed input: ring description documents, polynomial strings,
// monoid interchange files. Carries a character position when one is known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg, long pos = -1)
        : std::runtime_error(pos >= 0 ? msg + " (at position " + std::to_string(pos) + ")" : msg),
          position(pos) {}
    long position;
};

// A configured budget (ring size, ideal count, monoid size, word length)
// was exceeded. `required` is the size that would have been needed, when
// known, otherwise 0.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg, unsigned long long req = 0)
        : std::runtime_error(msg), required(req) {}
    unsigned long long required;
};

} // namespace ramo
