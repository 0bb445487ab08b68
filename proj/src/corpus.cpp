#include "ramo/corpus.hpp"

namespace ramo {

const std::vector<CorpusEntry>& builtin_corpus() {
    static const std::vector<CorpusEntry> corpus = {
        {"gf2", R"({"type":"cyclic","n":2})"},
        {"gf3", R"({"type":"cyclic","n":3})"},
        {"gf4", R"({"type":"poly_quotient","p":2,"vars":["x"],"caps":{"x":"x^2 = x + 1"}})"},
        {"z4", R"({"type":"cyclic","n":4})"},
        {"z6", R"({"type":"cyclic","n":6})"},
        {"z8", R"({"type":"cyclic","n":8})"},
        {"z12", R"({"type":"cyclic","n":12})"},
        {"z36", R"({"type":"cyclic","n":36})"},
        {"f2x2", R"({"type":"poly_quotient","p":2,"vars":["x"],"caps":{"x":"x^2 = 0"}})"},
        {"f2x3", R"({"type":"poly_quotient","p":2,"vars":["x"],"caps":{"x":"x^3 = 0"}})"},
        {"f2x4", R"({"type":"poly_quotient","p":2,"vars":["x"],"caps":{"x":"x^4 = 0"}})"},
        {"f3x3", R"({"type":"poly_quotient","p":3,"vars":["x"],"caps":{"x":"x^3 = 0"}})"},
        {"f2xy_sq",
         R"({"type":"poly_quotient","p":2,"vars":["x","y"],)"
         R"("caps":{"x":"x^2 = 0","y":"y^2 = 0"},"extra_relations":["x*y"]})"},
        {"f2xy_cube",
         R"({"type":"poly_quotient","p":2,"vars":["x","y"],)"
         R"("caps":{"x":"x^3 = 0","y":"y^3 = 0"},)"
         R"("extra_relations":["x^2*y","x*y^2"]})"},
        {"te_z4", R"({"type":"trivial_extension","base":{"type":"cyclic","n":4}})"},
        {"f2x3_x_gf2",
         R"({"type":"product","factors":[)"
         R"({"type":"poly_quotient","p":2,"vars":["x"],"caps":{"x":"x^3 = 0"}},)"
         R"({"type":"cyclic","n":2}]})"},
        {"f2x2_x_gf2",
         R"({"type":"product","factors":[)"
         R"({"type":"poly_quotient","p":2,"vars":["x"],"caps":{"x":"x^2 = 0"}},)"
         R"({"type":"cyclic","n":2}]})"},
        {"gf2_x_gf3",
         R"({"type":"product","factors":[{"type":"cyclic","n":2},{"type":"cyclic","n":3}]})"},
    };
    return corpus;
}

} // namespace ramo
