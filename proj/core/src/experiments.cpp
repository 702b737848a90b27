#include "hcolor/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <sstream>
#include <thread>

#ifndef HCOLOR_VERSION
#define HCOLOR_VERSION "dev"
#endif

namespace hcolor::experiments {

using nlohmann::json;

namespace {

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

unsigned workers(const CommonConfig& c, std::uint64_t jobs) {
    unsigned t = c.threads ? c.threads : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::clamp<std::uint64_t>(jobs, 1, t));
}

// Replica r in [0, total) goes to worker r % w; fn(worker, replica).
template <class Fn>
void parallel_replicas(std::uint64_t total, unsigned w, Fn fn) {
    if (w <= 1) {
        for (std::uint64_t r = 0; r < total; ++r) fn(0u, r);
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < w; ++i)
        pool.emplace_back([=, &fn] {
            for (std::uint64_t r = i; r < total; r += w) fn(i, r);
        });
}

json common_json(const CommonConfig& c) {
    json j{{"q", c.q}, {"seed", c.seed}, {"c", c.c}, {"budget", c.budget}};
    j["eps_override"] = c.eps ? json(to_string(*c.eps)) : json(nullptr);
    j["c_k_override"] = c.c_k ? json(*c.c_k) : json(nullptr);
    return j;
}

json regime_json(const RegimeReport& r) {
    return {{"verdict", to_string(r.verdict)},
            {"jerrum_cutoff", r.jerrum_cutoff},
            {"log_threshold", r.log_threshold},
            {"degree_coefficient", to_string(r.degree_coefficient)},
            {"degree_threshold", r.degree_threshold}};
}

json interval_json(std::uint64_t hits, std::uint64_t trials) {
    auto [lo, hi] = wilson_interval(hits, trials);
    return {{"count", hits},
            {"trials", trials},
            {"fraction", trials ? static_cast<double>(hits) / static_cast<double>(trials) : 0.0},
            {"ci95", {lo, hi}}};
}

bool enumerable(const Hypergraph& h, Color q, std::uint64_t budget) {
    try {
        state_space_size(h.vertex_count(), q, budget);
        return true;
    } catch (const BudgetExceeded&) {
        return false;
    }
}

} // namespace

std::string version() { return HCOLOR_VERSION; }

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) return {0.0, 1.0};
    const double z = 1.959963984540054;
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double denom = 1 + z * z / n;
    const double centre = (p + z * z / (2 * n)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

GoodnessParams make_params(const Hypergraph& h, const CommonConfig& config) {
    GoodnessOptions o;
    o.eps = config.eps;
    o.c_k = config.c_k;
    o.c = config.c;
    return GoodnessParams(h, config.q, o);
}

json describe(const Hypergraph& h) {
    return {{"n", h.vertex_count()}, {"m", h.edge_count()}, {"k", h.uniformity()}, {"max_degree", h.max_degree()}};
}

json report_header(const std::string& command, const Hypergraph& h, const GoodnessParams& params, std::uint64_t seed) {
    json j;
    j["command"] = command;
    j["version"] = version();
    j["timestamp"] = utc_timestamp();
    j["rng"] = {{"algorithm", std::string(Rng::algorithm)}, {"seed", seed}};
    j["instance"] = describe(h);
    j["eps"] = {{"value", to_string(params.eps())},
                {"decimal", to_double(params.eps())},
                {"overridden", params.eps_overridden()},
                {"default", to_string(GoodnessParams::default_eps(params.k()))}};
    j["mu"] = params.mu_vector();
    j["mu_2eps"] = params.with_scale(2).mu_vector();
    j["c_k"] = params.c_k();
    j["c"] = params.c();
    j["regime"] = regime_json(regime_check(params));
    return j;
}

json strip_volatile(json report) {
    if (report.is_object()) report.erase("timestamp");
    return report;
}

json generate_report(const Hypergraph& h, const GeneratorStats& stats, const json& spec, std::optional<Color> q) {
    json j;
    j["command"] = "generate";
    j["version"] = version();
    j["timestamp"] = utc_timestamp();
    j["spec"] = spec;
    j["instance"] = describe(h);
    j["generator"] = {{"draws", stats.draws},
                      {"rejected_simplicity", stats.rejected_simplicity},
                      {"rejected_degree", stats.rejected_degree},
                      {"rejection_cap", stats.rejection_cap},
                      {"accepted", stats.accepted}};
    j["valid"] = validate(h).ok();
    if (q) {
        const GoodnessParams params(h, *q);
        j["q"] = *q;
        j["regime"] = regime_json(regime_check(params));
        j["paper_regime"] = regime_check(params).verdict == Regime::paper;
    } else {
        j["q"] = nullptr;
        j["paper_regime"] = false;
        j["regime"] = {{"verdict", "unknown: q not given"}};
    }
    return j;
}

Report run_mix(const Hypergraph& h, const MixConfig& config) {
    const auto& c = config.common;
    const auto params = make_params(h, c);
    Report rep;
    auto& j = rep.json;
    j = report_header("mix", h, params, c.seed);
    j["config"] = common_json(c);
    j["config"]["delta"] = config.delta;
    j["config"]["replicas"] = config.replicas;

    const auto n = h.vertex_count();
    const auto t_delta = mixing_horizon(n, config.delta);
    j["t_delta"] = t_delta;
    if (config.replicas == 0) throw DomainError("mix needs at least one replica");

    const bool exact = enumerable(h, c.q, c.budget);
    const unsigned w = workers(c, config.replicas);
    const auto base = params.with_scale(1);

    auto run_replica = [&](std::uint64_t r) {
        ChainState s{Coloring{}, 0, Rng(derive_seed(c.seed, r))};
        s.coloring = random_initial(n, c.q, s.rng);
        while (s.step < t_delta) step(h, s);
        return s.coloring;
    };

    if (exact) {
        const auto q_set = enumerate_proper(h, c.q, nullptr, {c.budget, c.threads});
        std::vector<std::vector<std::uint64_t>> counts(w, std::vector<std::uint64_t>(q_set.omega_size, 0));
        parallel_replicas(config.replicas, w, [&](unsigned i, std::uint64_t r) { ++counts[i][encode(run_replica(r))]; });
        for (unsigned i = 1; i < w; ++i)
            for (std::size_t x = 0; x < counts[0].size(); ++x) counts[0][x] += counts[i][x];

        std::uint64_t proper_mass = 0;
        for (Code x : q_set.proper) proper_mass += counts[0][x];
        const double tvd = to_double(exact_tvd_counts(q_set, counts[0]));
        const double floor = 0.5 * std::sqrt(static_cast<double>(q_set.omega_size) / static_cast<double>(config.replicas));
        j["mode"] = "exact";
        j["omega_size"] = q_set.omega_size;
        j["proper_count"] = q_set.count();
        j["tvd"] = tvd;
        j["noise_floor"] = floor;
        j["within_bound"] = tvd <= config.delta + floor;
        j["end_proper_fraction"] = static_cast<double>(proper_mass) / static_cast<double>(config.replicas);
        if (config.replicas < q_set.omega_size)
            j["warning"] = "replicas < |Omega|: the empirical law is dominated by sampling noise";
    } else {
        std::vector<std::uint64_t> proper(w, 0), good(w, 0);
        parallel_replicas(config.replicas, w, [&](unsigned i, std::uint64_t r) {
            const auto x = run_replica(r);
            proper[i] += is_proper(h, x);
            good[i] += is_good(h, x, base);
        });
        std::uint64_t p = 0, g = 0;
        for (unsigned i = 0; i < w; ++i) {
            p += proper[i];
            g += good[i];
        }
        j["mode"] = "empirical";
        j["note"] = "state space exceeds the enumeration budget; TVD to uniform on Q is not computed";
        j["end_proper"] = interval_json(p, config.replicas);
        j["end_good"] = interval_json(g, config.replicas);
    }
    return rep;
}

Report run_goodness(const Hypergraph& h, const GoodnessConfig& config) {
    const auto& c = config.common;
    const auto params = make_params(h, c);
    Report rep;
    auto& j = rep.json;
    j = report_header("goodness", h, params, c.seed);
    j["config"] = common_json(c);
    j["config"]["samples"] = config.samples;

    const auto n = h.vertex_count();
    Rng rng(c.seed);
    std::uint64_t bad = 0, availability_failures = 0;
    for (std::uint64_t s = 0; s < config.samples; ++s) {
        const auto x = random_initial(n, c.q, rng);
        if (!is_good(h, x, params)) {
            ++bad;
        } else if (!goodness_implies_available(h, x, params).ok()) {
            ++availability_failures;
        }
    }
    j["omega"] = interval_json(bad, config.samples);
    j["availability_failures"] = availability_failures;
    rep.violation = availability_failures > 0;

    const double eps_q = to_double(params.eps() * params.q());
    const auto lll = lll_premise_check(h, c.q);
    std::size_t max_nv = 0;
    for (Vertex v = 0; v < n; ++v) max_nv = std::max(max_nv, neighborhood(h, v).size());
    const double theta = to_double(lll.theta);
    j["bounds"] = {{"per_vertex_omega", std::exp(-eps_q)},
                   {"union_omega", static_cast<double>(n) * std::exp(-eps_q)},
                   {"union_q", theta < 1 ? static_cast<double>(n) * std::exp(-eps_q) * std::pow(1 - theta, -double(max_nv))
                                         : std::numeric_limits<double>::infinity()},
                   {"lll_premise", lll.holds}};

    if (enumerable(h, c.q, c.budget)) {
        const auto q_set = enumerate_proper(h, c.q, &params, {c.budget, c.threads});
        const auto good = static_cast<std::uint64_t>(std::count(q_set.good.begin(), q_set.good.end(), true));
        j["q_set"] = {{"mode", "exact"},
                      {"proper_count", q_set.count()},
                      {"bad_count", q_set.count() - good},
                      {"bad_fraction", q_set.count() ? double(q_set.count() - good) / double(q_set.count()) : 0.0}};
    } else {
        const auto steps = config.chain_steps ? config.chain_steps : mixing_horizon(std::max<std::size_t>(n, 1), 0.1);
        std::uint64_t proper = 0, proper_bad = 0;
        for (std::uint64_t s = 0; s < config.samples; ++s) {
            ChainState st{Coloring{}, 0, Rng(derive_seed(c.seed, s + 1))};
            st.coloring = random_initial(n, c.q, st.rng);
            while (st.step < steps) step(h, st);
            if (!is_proper(h, st.coloring)) continue;
            ++proper;
            proper_bad += !is_good(h, st.coloring, params);
        }
        j["q_set"] = interval_json(proper_bad, proper);
        j["q_set"]["mode"] = "approximate";
        j["q_set"]["chain_steps"] = steps;
        j["q_set"]["note"] = "end states of chains from uniform starts; proper end states only";
    }
    return rep;
}

Report run_contract(const Hypergraph& h, const ContractConfig& config) {
    const auto& c = config.common;
    const auto params = make_params(h, c);
    Report rep;
    auto& j = rep.json;
    j = report_header("contract", h, params, c.seed);
    j["config"] = common_json(c);
    j["config"]["pairs"] = config.pairs;
    j["config"]["steps_per_pair"] = config.steps_per_pair;

    const auto r = contraction_estimate(h, params, config.pairs, config.steps_per_pair, c.seed, config.max_attempts);
    j["n"] = r.n;
    j["q"] = r.q;
    j["bound"] = r.bound;
    j["mean_ratio"] = r.mean_ratio;
    j["se"] = r.se;
    j["samples"] = r.samples;
    j["discarded"] = r.discarded;
    j["attempts"] = r.attempts;
    j["qualifying_pairs"] = r.pairs;
    j["sufficient"] = r.sufficient;
    j["within_bound"] = r.sufficient && r.mean_ratio <= r.bound + 3 * r.se;
    j["coupling"] = "maximal: shared vertex, common colors first, one shared uniform";
    j["qualification"] = "both states 2eps-good";
    if (!r.sufficient) j["error"] = "insufficient qualifying samples";
    return rep;
}

Report run_couple(const Hypergraph& h, const CoupleConfig& config) {
    const auto& c = config.common;
    const auto params = make_params(h, c);
    Report rep;
    auto& j = rep.json;
    j = report_header("couple", h, params, c.seed);
    j["config"] = common_json(c);
    const auto n = h.vertex_count();
    const auto max_steps = config.max_steps ? config.max_steps : 10 * mixing_horizon(std::max<std::size_t>(n, 1), 0.1);
    j["config"]["replicas"] = config.replicas;
    j["config"]["max_steps"] = max_steps;

    std::vector<std::uint64_t> times;
    std::uint64_t timeouts = 0;
    double final_distance_sum = 0;
    for (std::uint64_t r = 0; r < config.replicas; ++r) {
        Rng init(derive_seed(c.seed, 2 * r));
        const auto x0 = random_initial(n, c.q, init);
        const auto y0 = random_initial(n, c.q, init);
        const bool trace = config.trace && r == 0;
        const auto seed = derive_seed(c.seed, 2 * r + 1);
        auto res = coalescence_run(h, x0, y0, max_steps, seed, trace);
        if (trace) {
            std::ostringstream os;
            write_coupling_csv(os, res.trace, seed);
            rep.csv = os.str();
        }
        if (res.coalesced)
            times.push_back(res.time);
        else {
            ++timeouts;
            final_distance_sum += static_cast<double>(res.final_distance);
        }
    }
    std::sort(times.begin(), times.end());
    j["coalesced"] = times.size();
    j["timeouts"] = timeouts;
    if (!times.empty()) {
        double sum = 0;
        for (auto t : times) sum += static_cast<double>(t);
        j["mean_time"] = sum / static_cast<double>(times.size());
        j["median_time"] = times[times.size() / 2];
        j["max_time"] = times.back();
    }
    if (timeouts) j["mean_final_distance_on_timeout"] = final_distance_sum / static_cast<double>(timeouts);
    j["t_delta_0.1"] = mixing_horizon(std::max<std::size_t>(n, 1), 0.1);
    return rep;
}

Report run_persist(const Hypergraph& h, const PersistConfig& config) {
    const auto& c = config.common;
    const auto params = make_params(h, c);
    Report rep;
    auto& j = rep.json;
    j = report_header("persist", h, params, c.seed);
    j["config"] = common_json(c);
    j["config"]["replicas"] = config.replicas;
    j["config"]["cap"] = config.cap;

    const auto n = h.vertex_count();
    const auto t0 = persistence_horizon(n, h.uniformity());
    const double mu1 = h.uniformity() >= 3 ? params.mu(1) : 0.0;
    const double t_star = std::exp(c.c * mu1 / 2);
    const std::uint64_t t_star_capped =
        t_star >= static_cast<double>(config.cap) ? config.cap : static_cast<std::uint64_t>(std::ceil(t_star));
    const std::uint64_t steps = t0 * t_star_capped;
    j["schedule"] = {{"t0", t0},
                     {"t_star", t_star},
                     {"t_star_capped", t_star_capped},
                     {"capped", t_star >= static_cast<double>(config.cap)},
                     {"steps", steps}};
    j["predicted_bounds"] = {{"persist_2eps", 1 - std::pow(2.0, -mu1 / 2)}, {"return_eps", 1 - std::exp(-c.c * mu1)}};

    Rng starts(c.seed);
    std::uint64_t rejected = 0, runs = 0, through_t0 = 0, good_at_t0 = 0, throughout = 0;
    const std::uint64_t max_rejections = 1000 * std::max<std::uint64_t>(config.replicas, 1);
    for (std::uint64_t r = 0; r < config.replicas && rejected < max_rejections;) {
        auto x0 = random_initial(n, c.q, starts);
        if (!is_good(h, x0, params)) {
            ++rejected;
            continue;
        }
        const auto seed = derive_seed(c.seed, r);
        auto res = run(h, x0, steps, seed, params, config.checkpoint_every);
        const auto& d = res.diagnostics;
        ++runs;
        through_t0 += d.good_s2_through_t0;
        throughout += d.good_s2_throughout;
        auto at = std::find_if(d.checkpoints.begin(), d.checkpoints.end(), [&](const Checkpoint& cp) { return cp.t == t0; });
        good_at_t0 += at != d.checkpoints.end() && at->good_s1;
        if (config.trace && r == 0) {
            std::ostringstream os;
            write_trajectory_csv(os, d, seed);
            rep.csv = os.str();
        }
        ++r;
    }
    j["runs"] = runs;
    j["rejected_starts"] = rejected;
    j["good_2eps_through_t0"] = interval_json(through_t0, runs);
    j["good_eps_at_t0"] = interval_json(good_at_t0, runs);
    j["good_2eps_throughout"] = interval_json(throughout, runs);
    if (runs < config.replicas) j["warning"] = "too few eps-good starting colorings found";
    return rep;
}

Report run_llcheck(const Hypergraph& h, const LlcheckConfig& config) {
    auto qs = config.qs;
    if (qs.empty()) qs.push_back(config.common.q);
    const auto& c = config.common;
    Report rep;
    auto& j = rep.json;
    j = report_header("llcheck", h, make_params(h, c), c.seed);
    j["config"] = common_json(c);
    j["config"]["qs"] = qs;

    std::uint64_t violations = 0;
    json rows = json::array();
    for (Color q : qs) {
        CommonConfig cq = c;
        cq.q = q;
        const auto params = make_params(h, cq);
        json row;
        row["q"] = q;
        row["mu"] = params.mu_vector();

        const auto lll = lll_premise_check(h, q);
        double min_weight = 1;
        for (const auto& e : lll.edges) min_weight = std::min(min_weight, e.weight);
        row["lll"] = {{"p", to_string(lll.p)},
                      {"theta", to_string(lll.theta)},
                      {"theta_at_most_half", lll.theta_at_most_half},
                      {"k_delta_theta", lll.k_delta_theta},
                      {"exp_chain", lll.exp_chain},
                      {"exp_chain_holds", lll.exp_chain_holds},
                      {"min_edge_weight", h.edge_count() ? json(min_weight) : json(nullptr)},
                      {"holds", lll.holds}};

        if (enumerable(h, q, c.budget)) {
            const auto sweep = hss_transfer_sweep(h, params, {c.budget, c.threads});
            std::uint64_t v_bad = 0;
            double max_ratio = 0;
            json per_vertex = json::array();
            for (const auto& s : sweep) {
                v_bad += s.violation();
                if (s.ratio) max_ratio = std::max(max_ratio, *s.ratio);
                per_vertex.push_back({{"v", s.vertex},
                                      {"neighborhood", s.neighborhood_size},
                                      {"pr_q", to_string(s.lhs)},
                                      {"rhs", to_string(s.rhs)},
                                      {"holds", s.holds},
                                      {"q_empty", s.q_empty}});
            }
            violations += v_bad;
            row["hss"] = {{"checked", lll.holds},
                          {"violations", v_bad},
                          {"max_ratio", max_ratio},
                          {"vertices", per_vertex}};
        } else {
            row["hss"] = {{"checked", false}, {"note", "state space exceeds the enumeration budget"}};
        }

        json tails = json::array();
        for (std::size_t i = 1; i + 2 <= h.uniformity(); ++i) {
            const auto b = appendix_b_bound(params, i);
            tails.push_back({{"i", i},
                             {"mu", b.mu},
                             {"value", b.value},
                             {"log10_value", b.log10_value},
                             {"vacuous", b.vacuous},
                             {"pow10_mu", b.pow10_mu},
                             {"pow10_eps", b.pow10_eps},
                             {"union_bound", b.union_bound},
                             {"exp_eps", b.exp_eps}});
        }
        row["tail_bounds"] = tails;
        rows.push_back(row);
    }
    j["results"] = rows;
    j["hss_violations"] = violations;
    rep.violation = violations > 0;
    return rep;
}

} // namespace hcolor::experiments
