#include "ramo/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramo/catalog.hpp"
#include "ramo/corpus.hpp"
#include "ramo/errors.hpp"
#include "ramo/map_monoid.hpp"
#include "ramo/report.hpp"
#include "ramo/ring_description.hpp"
#include "ramo/verify.hpp"

namespace ramo {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

struct AnalyzeConfig {
    std::string ring_path;
    std::string maps = "ra";
    std::string json_path, dot_path;
    uint64_t max_elements = FiniteRing::kDefaultBudget;
    uint64_t max_ideals = IdealLattice::kDefaultMaxIdeals;
    uint64_t max_monoid = MapMonoid::kDefaultBudget;
};

int cmd_analyze(const AnalyzeConfig& cfg) {
    auto desc = parse_ring_description(read_file(cfg.ring_path));
    auto ring = build_ring(desc, cfg.max_elements);
    auto lat = IdealLattice::enumerate(ring, cfg.max_ideals);
    auto monoid = MapMonoid::generate(lat, cfg.maps, cfg.max_monoid);
    auto report = analysis_report(lat, monoid);

    auto k = monoid.k_numbers();
    std::cout << "ring: " << ring->display_name() << " (" << ring->size() << " elements)\n";
    std::cout << "ideals: " << lat.size() << " (spectrum size " << lat.spectrum().size()
              << ")\n";
    std::cout << "generators: " << monoid.generator_symbols() << "\n";
    std::cout << "K-number: " << k.K << ", ring k-number: " << k.ring_k << "\n";
    std::string cat = report["catalog"].get<std::string>();
    std::cout << "catalog: " << (cat.empty() ? "(no match)" : cat) << "\n";
    std::cout << "relations:";
    for (auto& [rel, holds] : report["relations"].items())
        if (holds.get<bool>()) std::cout << " " << rel;
    std::cout << "\n";

    if (!cfg.json_path.empty()) write_file(cfg.json_path, report.dump(2) + "\n");
    if (!cfg.dot_path.empty()) write_file(cfg.dot_path, monoid.to_dot());
    return 0;
}

OrderedMonoid resolve_monoid(const std::string& arg) {
    if (const OrderedMonoid* m = catalog_lookup(arg)) return *m;
    if (std::filesystem::exists(arg))
        return OrderedMonoid::from_json(nlohmann::json::parse(read_file(arg)));
    throw ParseError("unknown catalog name or missing file: " + arg);
}

int cmd_odot(const std::vector<std::string>& inputs, const std::string& json_path) {
    std::vector<OrderedMonoid> ms;
    for (const auto& arg : inputs) ms.push_back(resolve_monoid(arg));
    OrderedMonoid prod = odot(ms);
    std::cout << "elements: " << prod.size() << "\n";
    for (size_t i = 0; i < prod.size(); ++i)
        std::cout << (i ? " " : "") << prod.labels[i];
    std::cout << "\n";
    std::string cat = catalog_classify(prod);
    if (!cat.empty()) std::cout << "catalog: " << cat << "\n";
    if (!json_path.empty()) write_file(json_path, prod.to_json().dump(2) + "\n");
    return 0;
}

int cmd_catalog(const std::string& name) {
    if (name.empty()) {
        for (const auto& m : catalog())
            std::cout << m.name << " (" << m.size() << " elements)\n";
        return 0;
    }
    const OrderedMonoid* m = catalog_lookup(name);
    if (!m) throw ParseError("unknown catalog name: " + name);
    std::cout << m->to_json().dump(2) << "\n" << m->to_dot();
    return 0;
}

int cmd_verify(const std::string& corpus_dir, bool slow) {
    std::vector<CheckResult> results = run_acceptance(slow);
    if (!corpus_dir.empty()) {
        std::vector<std::filesystem::path> files;
        for (const auto& e : std::filesystem::directory_iterator(corpus_dir))
            if (e.path().extension() == ".json") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            auto ring = build_ring(parse_ring_description(read_file(f.string())));
            auto lat = IdealLattice::enumerate(ring);
            for (auto& r : property_suite(f.stem().string(), lat))
                results.push_back(std::move(r));
        }
    }
    bool all = true;
    for (const auto& r : results) {
        all &= r.pass;
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
    }
    return all ? 0 : 3;
}

} // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"finite commutative rings, ideal lattices, and their "
                 "radical-annihilator monoids"};
    app.require_subcommand(1);

    AnalyzeConfig cfg;
    auto* analyze = app.add_subcommand("analyze", "analyze a ring description file");
    analyze->add_option("ring", cfg.ring_path, "ring description (JSON)")->required();
    analyze->add_option("--maps", cfg.maps, "generator set")
        ->check(CLI::IsMember({"ra", "rd", "rad"}));
    analyze->add_option("--json", cfg.json_path, "write the JSON report here");
    analyze->add_option("--dot", cfg.dot_path, "write the monoid Hasse diagram here");
    analyze->add_option("--max-elements", cfg.max_elements, "ring element budget");
    analyze->add_option("--max-ideals", cfg.max_ideals, "ideal budget");
    analyze->add_option("--max-monoid", cfg.max_monoid, "monoid element budget");

    std::vector<std::string> odot_inputs;
    std::string odot_json;
    auto* od = app.add_subcommand("odot", "odot product of catalog names or monoid files");
    od->add_option("inputs", odot_inputs, "catalog names or monoid JSON files")
        ->required()
        ->expected(-1);
    od->add_option("--json", odot_json, "write the product monoid here");

    std::string cat_name;
    auto* cat = app.add_subcommand("catalog", "list catalog entries or dump one");
    cat->add_option("name", cat_name, "entry to dump");

    std::string corpus_dir;
    bool slow = false;
    auto* ver = app.add_subcommand("verify", "run the verification suite");
    ver->add_option("--corpus", corpus_dir, "directory of extra ring descriptions");
    ver->add_flag("--slow", slow, "include the F2[x,y]/(x,y)^5 run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*analyze) return cmd_analyze(cfg);
        if (*od) return cmd_odot(odot_inputs, odot_json);
        if (*cat) return cmd_catalog(cat_name);
        if (*ver) return cmd_verify(corpus_dir, slow);
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace ramo
