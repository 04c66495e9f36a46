// boxfree: explicit box-free r-partite hypergraphs from polynomial zero sets
// over finite fields, with exact verification tooling.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "boxfree/bounds.hpp"
#include "boxfree/construction.hpp"
#include "boxfree/field.hpp"
#include "boxfree/hypergraph.hpp"
#include "boxfree/io.hpp"
#include "boxfree/selftest.hpp"

namespace {

using namespace boxfree;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudgetSkipped = 3;

struct RunConfig {
    std::uint64_t p = 0;
    std::uint32_t r = 0;
    std::uint32_t rmax = 0;
    std::string mode = "fast";
    std::string out;
    std::string format = "text";
    std::uint64_t seed = 0;
    std::uint64_t eval_budget = kDefaultEvalBudget;
    std::uint64_t pair_budget = kDefaultPairBudget;
    std::uint64_t max_field = kDefaultMaxFieldOrder;
    std::string edge_list_path;
};

void print_witness(std::ostream& os, const Hypergraph& h, const BoxWitness& w) {
    os << "box witness:\n";
    for (std::size_t i = 0; i < w.part_vertices.size(); ++i) {
        os << "  part " << (i + 1) << " labels:";
        for (std::uint32_t v : w.part_vertices[i]) {
            os << " " << h.label(i, v);
        }
        os << "\n";
    }
    os << "  edges:";
    for (const auto& e : w.edges) {
        os << " (";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i > 0) os << ",";
            os << h.label(i, e[i]);
        }
        os << ")";
    }
    os << "\n";
}

int cmd_gen(const RunConfig& cfg) {
    BuildOptions opts;
    opts.mode = cfg.mode == "naive" ? BuildMode::kNaive : BuildMode::kFast;
    opts.max_field_order = cfg.max_field;
    opts.eval_budget = cfg.eval_budget;
    opts.pair_budget = cfg.pair_budget;

    const BoxInstance instance = build_instance(cfg.p, cfg.r, opts);

    const std::string base = cfg.out.empty()
                                 ? "box_p" + std::to_string(cfg.p) + "_r" + std::to_string(cfg.r)
                                 : cfg.out;
    {
        std::ofstream edges(base + ".edges");
        if (!edges) throw std::runtime_error("cannot write " + base + ".edges");
        write_edge_list(edges, instance.graph);
    }
    const auto report = to_json(instance.report);
    {
        std::ofstream json_out(base + ".json");
        if (!json_out) throw std::runtime_error("cannot write " + base + ".json");
        json_out << report.dump(2) << "\n";
    }

    if (cfg.format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "field: " << instance.report.field << "\n"
                  << "n per part: " << instance.report.n_per_part << "\n"
                  << "vertices: " << instance.report.num_vertices << "\n"
                  << "edges: " << instance.report.num_edges << " (expected "
                  << instance.report.expected_edges << ")\n"
                  << "box_free: "
                  << (instance.report.box_free == BoxVerdict::kFree
                          ? "true"
                          : instance.report.box_free == BoxVerdict::kWitnessFound
                                ? "false"
                                : "skipped-budget")
                  << "\n"
                  << "density_ok: " << (instance.report.density_ok ? "true" : "false")
                  << " (ratio " << instance.report.density_ratio << ")\n"
                  << "wrote " << base << ".edges, " << base << ".json\n";
    }
    if (instance.witness) {
        print_witness(std::cout, instance.graph, *instance.witness);
        return kExitCheckFailed;  // a box in generated output is a hard failure
    }
    return kExitPass;
}

int cmd_verify(const RunConfig& cfg) {
    std::ifstream in(cfg.edge_list_path);
    if (!in) {
        std::cerr << "error: cannot open " << cfg.edge_list_path << "\n";
        return kExitUsage;
    }
    const EdgeListFile file = read_edge_list(in);
    const Hypergraph& h = file.graph;
    const std::size_t r = h.arity();

    bool failed = false;
    bool skipped = false;

    std::cout << "edges: " << h.num_edges() << "\n";

    // Box scan. A part with fewer than two used vertices cannot host one.
    bool parts_can_host = true;
    for (std::size_t i = 0; i < r; ++i) {
        if (h.part_size(i) < 2) parts_can_host = false;
    }
    if (!parts_can_host) {
        std::cout << "box_free: true (no part has two used vertices)\n";
    } else {
        try {
            const std::vector<std::uint32_t> twos(r, 2);
            const auto witness = find_complete_rpartite(h, twos, cfg.pair_budget);
            if (witness) {
                std::cout << "box_free: false\n";
                print_witness(std::cout, h, *witness);
                failed = true;
            } else {
                std::cout << "box_free: true\n";
            }
        } catch (const budget_error& e) {
            std::cout << "box_free: skipped (" << e.what() << ")\n";
            skipped = true;
        }
    }

    if (cfg.p != 0 && cfg.r != 0) {
        auto field = make_field(cfg.p, cfg.r, cfg.max_field);
        const std::uint64_t n = field->order() - 1;
        std::uint64_t expected = 1;
        for (std::uint32_t i = 0; i + 1 < cfg.r; ++i) expected *= cfg.p;
        for (std::uint32_t i = 0; i + 1 < cfg.r; ++i) expected *= n;
        const bool count_ok = h.num_edges() == expected;
        const bool sizes_ok = [&] {
            if (file.declared_sizes.size() != cfg.r) return false;
            for (auto s : file.declared_sizes) {
                if (s != n) return false;
            }
            return true;
        }();
        std::cout << "edge count vs expected: " << h.num_edges() << " / " << expected
                  << (count_ok ? " OK" : " MISMATCH") << "\n";
        if (!sizes_ok) std::cout << "declared part sizes do not match p^r - 1\n";
        failed = failed || !count_ok || !sizes_ok;
    }

    // Density on the declared sizes when all parts are equal. Without the
    // --p/--r context this is informational: arbitrary edge lists make no
    // density promise.
    const bool expect_instance = cfg.p != 0 && cfg.r != 0;
    const bool equal_parts = [&] {
        for (auto s : file.declared_sizes) {
            if (s != file.declared_sizes[0]) return false;
        }
        return !file.declared_sizes.empty();
    }();
    if (equal_parts && file.declared_sizes[0] > 0) {
        const std::uint64_t n = file.declared_sizes[0];
        const bool ok = density_ok_exact(h.num_edges(), n, static_cast<std::uint32_t>(r));
        std::cout << "density m >= n^(r-1/r): " << (ok ? "ok" : "below") << " (ratio "
                  << density_ratio(h.num_edges(), n, static_cast<std::uint32_t>(r)) << ")\n";
        if (!ok && expect_instance) failed = true;
    } else {
        std::cout << "density: skipped (unequal or empty parts)\n";
    }

    if (failed) {
        std::cout << "RESULT: FAIL\n";
        return kExitCheckFailed;
    }
    if (skipped) {
        std::cout << "RESULT: SKIPPED\n";
        return kExitBudgetSkipped;
    }
    std::cout << "RESULT: PASS\n";
    return kExitPass;
}

int cmd_bounds(const RunConfig& cfg) {
    const auto table = comparison_table(cfg.rmax);
    if (cfg.format == "json") {
        std::cout << to_json(table).dump(2) << "\n";
    } else {
        std::cout << render_bounds_table(table);
    }
    return kExitPass;
}

int cmd_rote(const RunConfig& cfg) {
    const RoteReport rep = rote_instance_report(cfg.p, cfg.max_field);
    if (cfg.format == "json") {
        std::cout << to_json(rep).dump(2) << "\n";
    } else {
        std::cout << "additive-shape polynomial x*y + P(x) + Q(y) over GF(" << rep.p << "^2)\n"
                  << "P = Q = t^" << rep.univariate_degree
                  << (rep.shape_ok ? " (shape verified)" : " (SHAPE CHECK FAILED)") << "\n"
                  << "n = " << rep.n << " per side\n"
                  << "zeros: " << rep.zero_count << " (expected " << rep.expected_zero_count
                  << ")\n"
                  << "zeros / n^(3/2): " << rep.ratio << "\n";
    }
    return rep.shape_ok && rep.zero_count == rep.expected_zero_count ? kExitPass
                                                                     : kExitCheckFailed;
}

int cmd_selftest(const RunConfig& cfg) {
    SelftestOptions opts;
    opts.seed = cfg.seed;
    opts.max_field = cfg.max_field;
    opts.eval_budget = cfg.eval_budget;
    opts.pair_budget = cfg.pair_budget;

    const auto results = run_selftest(opts);
    std::size_t passed = 0;
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["seed"] = opts.seed;
        j["max_field"] = opts.max_field;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& s : results) {
            passed += s.passed ? 1 : 0;
            arr.push_back({{"suite", s.name},
                           {"passed", s.passed},
                           {"checks", s.checks},
                           {"detail", s.detail}});
        }
        j["suites"] = std::move(arr);
        j["all_passed"] = passed == results.size();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "seed: " << opts.seed << "\n";
        for (const auto& s : results) {
            passed += s.passed ? 1 : 0;
            std::cout << (s.passed ? "[PASS] " : "[FAIL] ") << s.name << " (" << s.checks
                      << " checks) " << s.detail << "\n";
        }
        std::cout << "RESULT: " << (passed == results.size() ? "PASS" : "FAIL") << " (" << passed
                  << "/" << results.size() << " suites)\n";
    }
    return passed == results.size() ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"box-free hypergraph constructions over finite fields"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--budget-evals", cfg.eval_budget, "grid evaluation budget")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--budget-pairs", cfg.pair_budget, "membership-check budget")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--max-field", cfg.max_field, "largest allowed field order")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* gen = app.add_subcommand("gen", "generate an instance and its report");
    gen->add_option("--p", cfg.p, "prime characteristic")->required();
    gen->add_option("--r", cfg.r, "extension degree / arity")->required();
    gen->add_option("--mode", cfg.mode, "edge enumeration mode")
        ->check(CLI::IsMember({"fast", "naive"}));
    gen->add_option("--out", cfg.out, "output basename (writes .edges and .json)");
    add_common(gen);

    CLI::App* verify = app.add_subcommand("verify", "verify an edge-list file");
    verify->add_option("edge-list", cfg.edge_list_path, "edge-list file")->required();
    verify->add_option("--p", cfg.p, "expected prime characteristic");
    verify->add_option("--r", cfg.r, "expected extension degree");
    add_common(verify);

    CLI::App* bounds = app.add_subcommand("bounds", "exponent comparison table");
    bounds->add_option("--rmax", cfg.rmax, "largest r")->required();
    add_common(bounds);

    CLI::App* rote = app.add_subcommand("rote", "r = 2 additive-shape zero-count report");
    rote->add_option("--p", cfg.p, "prime characteristic")->required();
    add_common(rote);

    CLI::App* selftest = app.add_subcommand("selftest", "run the invariant battery");
    selftest->add_option("--seed", cfg.seed, "PRNG seed for the randomized suites");
    add_common(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(gen)) return cmd_gen(cfg);
        if (app.got_subcommand(verify)) return cmd_verify(cfg);
        if (app.got_subcommand(bounds)) {
            if (cfg.rmax < 2) {
                std::cerr << "error: --rmax must be >= 2\n";
                return kExitUsage;
            }
            return cmd_bounds(cfg);
        }
        if (app.got_subcommand(rote)) return cmd_rote(cfg);
        if (app.got_subcommand(selftest)) {
            // The battery defaults to exhaustive fiber checks up to 2^16.
            if (selftest->count("--max-field") == 0) cfg.max_field = std::uint64_t{1} << 16;
            return cmd_selftest(cfg);
        }
    } catch (const budget_error& e) {
        std::cerr << "skipped: " << e.what() << "\n";
        return kExitBudgetSkipped;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
