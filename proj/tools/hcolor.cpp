// hcolor: command-line driver for the Glauber-dynamics experiments.
//
//   hcolor generate --n 100 --k 3 --max-deg 5 --seed 1 --out h.txt
//   hcolor mix --graph h.txt --q 2 --delta 0.1 --replicas 1000000
//   hcolor llcheck --graph h.txt --qs 3,4,5,6
//
// Reports are JSON on stdout, or in --report / $HCOLOR_OUTPUT_DIR/<command>.json.
// Exit codes: 0 success, 1 usage or input error, 2 an oracle check found a broken invariant.

#include "hcolor/experiments.hpp"
#include "hcolor/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
namespace ex = hcolor::experiments;
using nlohmann::json;

namespace {

struct Common {
    std::string graph;
    unsigned q = 2;
    std::string eps;
    double c_k = 0;
    double c = 1.0;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::uint64_t budget = 100'000'000;
    std::string report;
    std::string trace;

    ex::CommonConfig config() const {
        ex::CommonConfig cfg;
        cfg.q = q;
        if (!eps.empty()) cfg.eps = hcolor::parse_rational(eps);
        if (c_k > 0) cfg.c_k = c_k;
        cfg.c = c;
        cfg.seed = seed;
        cfg.threads = threads;
        cfg.budget = budget;
        return cfg;
    }
};

void add_common(CLI::App* cmd, Common& o, bool needs_graph = true) {
    auto* g = cmd->add_option("--graph", o.graph, "Hypergraph file");
    if (needs_graph) g->required()->check(CLI::ExistingFile);
    cmd->add_option("--q", o.q, "Number of colors")->check(CLI::PositiveNumber);
    cmd->add_option("--eps", o.eps, "Override eps (e.g. 0.125 or 1/8); default 1/(50k^2)");
    cmd->add_option("--c-k", o.c_k, "Constant C_k in the log n threshold; default 200k^2");
    cmd->add_option("--c", o.c, "Constant c in t* = exp(c mu_1 / 2)");
    cmd->add_option("--seed", o.seed, "64-bit seed");
    cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
    cmd->add_option("--budget", o.budget, "Max |Omega| for exact enumeration");
    cmd->add_option("--report", o.report, "Write the JSON report here instead of stdout");
    cmd->add_option("--trace", o.trace, "Write a CSV trace here");
}

void emit(const std::string& command, const json& report, const Common& o) {
    fs::path target;
    if (!o.report.empty()) {
        target = o.report;
    } else if (const char* dir = std::getenv("HCOLOR_OUTPUT_DIR"); dir && *dir) {
        fs::create_directories(dir);
        target = fs::path(dir) / (command + ".json");
    }
    if (target.empty()) {
        std::cout << report.dump(2) << '\n';
        return;
    }
    std::ofstream out(target);
    if (!out) throw hcolor::Error("cannot write " + target.string());
    out << report.dump(2) << '\n';
}

void emit_trace(const std::string& csv, const Common& o) {
    if (o.trace.empty()) return;
    std::ofstream out(o.trace);
    if (!out) throw hcolor::Error("cannot write " + o.trace);
    out << csv;
}

int finish(const std::string& command, const ex::Report& r, const Common& o) {
    emit(command, r.json, o);
    emit_trace(r.csv, o);
    return r.violation ? 2 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Glauber dynamics on proper colorings of simple k-uniform hypergraphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", ex::version());

    // generate
    Common gen_o;
    std::size_t gen_n = 0, gen_k = 3, gen_deg = 1, gen_edges = 0, gen_rejections = 0, gen_sunflower = 0;
    std::string gen_out;
    auto* gen = app.add_subcommand("generate", "Generate a simple k-uniform hypergraph");
    gen->add_option("--n", gen_n, "Vertex count");
    gen->add_option("--k", gen_k, "Uniformity")->check(CLI::Range(2, 64));
    gen->add_option("--max-deg", gen_deg, "Target maximum degree")->check(CLI::PositiveNumber);
    gen->add_option("--edges", gen_edges, "Stop at this many edges (0 = saturate)");
    gen->add_option("--max-rejections", gen_rejections, "Consecutive rejection cap (0 = default)");
    gen->add_option("--sunflower", gen_sunflower, "Build the d-petal sunflower instead of sampling");
    gen->add_option("--q", gen_o.q, "Colors, for the regime verdict");
    gen->add_option("--seed", gen_o.seed, "64-bit seed");
    gen->add_option("--out", gen_out, "Hypergraph output file")->required();
    gen->add_option("--report", gen_o.report, "Write the JSON report here instead of stdout");

    // experiments
    Common mix_o, good_o, con_o, cpl_o, per_o, lll_o, enu_o;
    ex::MixConfig mix_cfg;
    ex::GoodnessConfig good_cfg;
    ex::ContractConfig con_cfg;
    ex::CoupleConfig cpl_cfg;
    ex::PersistConfig per_cfg;
    std::vector<unsigned> lll_qs;

    auto* mix = app.add_subcommand("mix", "Run replicas for t_delta steps and measure TVD to uniform on Q");
    add_common(mix, mix_o);
    mix->add_option("--delta", mix_cfg.delta, "Target distance delta in (0,1)")->check(CLI::Range(0.0, 1.0));
    mix->add_option("--replicas", mix_cfg.replicas, "Independent chains");

    auto* good = app.add_subcommand("goodness", "Fraction of eps-bad colorings under Omega and Q");
    add_common(good, good_o);
    good->add_option("--samples", good_cfg.samples, "Samples from Omega");
    good->add_option("--chain-steps", good_cfg.chain_steps, "Chain length for approximate Q samples");

    auto* con = app.add_subcommand("contract", "Estimate one-step Hamming contraction of the coupling");
    add_common(con, con_o);
    con->add_option("--pairs", con_cfg.pairs, "Qualifying starting pairs");
    con->add_option("--steps-per-pair", con_cfg.steps_per_pair, "Consecutive coupled steps per pair");
    con->add_option("--max-attempts", con_cfg.max_attempts, "Pair draws before giving up (0 = 100*pairs)");

    auto* cpl = app.add_subcommand("couple", "Coalescence times of the coupled chains");
    add_common(cpl, cpl_o);
    cpl->add_option("--replicas", cpl_cfg.replicas, "Coupled pairs");
    cpl->add_option("--max-steps", cpl_cfg.max_steps, "Step limit per pair (0 = 10*t_delta)");

    auto* per = app.add_subcommand("persist", "Persistence of goodness along trajectories");
    add_common(per, per_o);
    per->add_option("--replicas", per_cfg.replicas, "Runs from eps-good starts");
    per->add_option("--cap", per_cfg.cap, "Cap on t*");
    per->add_option("--checkpoint-every", per_cfg.checkpoint_every, "Checkpoint spacing (0 = n)");

    auto* lll = app.add_subcommand("llcheck", "LLL premise, exact transfer inequality, and tail bounds");
    add_common(lll, lll_o);
    lll->add_option("--qs", lll_qs, "Color counts to sweep")->delimiter(',');

    std::string dump_path;
    auto* enu = app.add_subcommand("enumerate", "Count proper colorings exactly");
    add_common(enu, enu_o);
    enu->add_option("--dump", dump_path, "Write proper colorings as sorted base-q codes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*gen) {
            json spec;
            hcolor::GeneratedHypergraph g;
            if (gen_sunflower) {
                spec = {{"kind", "sunflower"}, {"d", gen_sunflower}, {"k", gen_k}};
                g.graph = hcolor::sunflower(gen_sunflower, gen_k);
            } else {
                if (gen_k > gen_n) throw hcolor::DomainError("k must not exceed n");
                spec = {{"kind", "random_simple"}, {"n", gen_n}, {"k", gen_k}, {"max_degree", gen_deg},
                        {"seed", gen_o.seed}, {"edges", gen_edges}, {"max_rejections", gen_rejections}};
                hcolor::GeneratorOptions opts{.max_degree = gen_deg};
                if (gen_edges) opts.target_edges = gen_edges;
                opts.max_consecutive_rejections = gen_rejections;
                g = hcolor::generate_random_simple(gen_n, gen_k, opts, gen_o.seed);
            }
            hcolor::write_hypergraph(fs::path(gen_out), g.graph);
            std::optional<hcolor::Color> q;
            if (gen->count("--q")) q = gen_o.q;
            auto report = ex::generate_report(g.graph, g.stats, spec, q);
            report["output"] = gen_out;
            std::cerr << "n=" << g.graph.vertex_count() << " m=" << g.graph.edge_count() << " k="
                      << g.graph.uniformity() << " max_degree=" << g.graph.max_degree()
                      << " paper_regime: " << (report["paper_regime"].get<bool>() ? "true" : "false") << '\n';
            emit("generate", report, gen_o);
            return 0;
        }

        auto load = [](const Common& o) { return hcolor::read_hypergraph(fs::path(o.graph)); };

        if (*mix) {
            mix_cfg.common = mix_o.config();
            return finish("mix", ex::run_mix(load(mix_o), mix_cfg), mix_o);
        }
        if (*good) {
            good_cfg.common = good_o.config();
            return finish("goodness", ex::run_goodness(load(good_o), good_cfg), good_o);
        }
        if (*con) {
            con_cfg.common = con_o.config();
            return finish("contract", ex::run_contract(load(con_o), con_cfg), con_o);
        }
        if (*cpl) {
            cpl_cfg.common = cpl_o.config();
            cpl_cfg.trace = !cpl_o.trace.empty();
            return finish("couple", ex::run_couple(load(cpl_o), cpl_cfg), cpl_o);
        }
        if (*per) {
            per_cfg.common = per_o.config();
            per_cfg.trace = !per_o.trace.empty();
            return finish("persist", ex::run_persist(load(per_o), per_cfg), per_o);
        }
        if (*lll) {
            ex::LlcheckConfig cfg;
            cfg.common = lll_o.config();
            cfg.qs.assign(lll_qs.begin(), lll_qs.end());
            return finish("llcheck", ex::run_llcheck(load(lll_o), cfg), lll_o);
        }
        if (*enu) {
            const auto h = load(enu_o);
            const auto cfg = enu_o.config();
            const auto params = ex::make_params(h, cfg);
            const auto graph = hcolor::move_graph(h, cfg.q, &params, {cfg.budget, cfg.threads});
            json j = ex::report_header("enumerate", h, params, cfg.seed);
            j["omega_size"] = hcolor::state_space_size(h.vertex_count(), cfg.q, cfg.budget);
            j["proper_count"] = graph.nodes.size();
            j["components"] = graph.component_sizes.size();
            j["giant_size"] = graph.giant_size();
            j["giant_fraction"] = graph.giant_fraction();
            j["good_total"] = *graph.good_total;
            j["good_in_giant"] = *graph.good_in_giant;
            j["symmetric"] = graph.symmetric();
            j["closure_violations"] = graph.closure_violations;
            if (!dump_path.empty()) {
                std::ofstream out(dump_path);
                hcolor::write_codes(out, graph.nodes);
            }
            emit("enumerate", j, enu_o);
            return graph.closure_violations || !graph.symmetric() ? 2 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
