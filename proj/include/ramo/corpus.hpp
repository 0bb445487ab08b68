#pragma once

#include <string>
#include <vector>

namespace ramo {

struct CorpusEntry {
    std::string name;
    std::string description; // ring description document (JSON text)
};

// the built-in verification corpus of 18 rings
const std::vector<CorpusEntry>& builtin_corpus();

} // namespace ramo
