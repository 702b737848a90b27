#pragma once

#include "hcolor/coupling.hpp"
#include "hcolor/oracle.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hcolor::experiments {

/// Settings shared by every experiment. Everything here is echoed into the report.
struct CommonConfig {
    Color q = 2;
    std::optional<Rational> eps;
    std::optional<double> c_k;
    double c = 1.0;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::uint64_t budget = 100'000'000;
};

struct Report {
    nlohmann::json json;
    /// An oracle check detected a broken invariant (CLI exit code 2).
    bool violation = false;
    /// Optional CSV trace; empty when none was requested.
    std::string csv;
};

std::string version();

/// Resolved ε (exact and decimal, override flag), μ vector, regime verdict,
/// seed, RNG algorithm, code version, and timestamp.
nlohmann::json report_header(const std::string& command, const Hypergraph& h, const GoodnessParams& params,
                             std::uint64_t seed);

/// Removes volatile fields (the timestamp) so two reports can be compared byte for byte.
nlohmann::json strip_volatile(nlohmann::json report);

GoodnessParams make_params(const Hypergraph& h, const CommonConfig& config);

nlohmann::json describe(const Hypergraph& h);

/// Summary for a freshly generated instance; the regime verdict needs q.
nlohmann::json generate_report(const Hypergraph& h, const GeneratorStats& stats, const nlohmann::json& spec,
                               std::optional<Color> q);

struct MixConfig {
    CommonConfig common;
    double delta = 0.1;
    std::uint64_t replicas = 1000;
};
/// Runs `replicas` chains from independent uniform starts for t_δ steps and
/// measures the end-state law against uniform on Q. Falls back to an empirical
/// summary when Ω exceeds the enumeration budget.
Report run_mix(const Hypergraph& h, const MixConfig& config);

struct GoodnessConfig {
    CommonConfig common;
    std::uint64_t samples = 10000;
    /// Chain length for approximate samples from Q when Q cannot be enumerated; 0 selects t_δ at δ = 0.1.
    std::uint64_t chain_steps = 0;
};
Report run_goodness(const Hypergraph& h, const GoodnessConfig& config);

struct ContractConfig {
    CommonConfig common;
    std::uint64_t pairs = 10000;
    std::uint64_t steps_per_pair = 1;
    std::uint64_t max_attempts = 0;
};
Report run_contract(const Hypergraph& h, const ContractConfig& config);

struct CoupleConfig {
    CommonConfig common;
    std::uint64_t replicas = 100;
    std::uint64_t max_steps = 0;  // 0 selects 10·t_δ at δ = 0.1
    bool trace = false;           // CSV of the first replica
};
Report run_couple(const Hypergraph& h, const CoupleConfig& config);

struct PersistConfig {
    CommonConfig common;
    std::uint64_t replicas = 100;
    std::uint64_t cap = 1'000'000;  // upper limit on t*
    std::uint64_t checkpoint_every = 0;
    bool trace = false;
};
Report run_persist(const Hypergraph& h, const PersistConfig& config);

struct LlcheckConfig {
    CommonConfig common;
    std::vector<Color> qs;  // empty: just common.q
};
Report run_llcheck(const Hypergraph& h, const LlcheckConfig& config);

/// Wilson score interval at ~95% confidence.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials);

} // namespace hcolor::experiments
