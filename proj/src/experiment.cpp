#include "ebp/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <ctime>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ebp/blaschke.hpp"
#include "ebp/boundary.hpp"
#include "ebp/io.hpp"
#include "ebp/logmean.hpp"
#include "ebp/modelspace.hpp"
#include "ebp/sweep.hpp"

namespace ebp {

namespace {

const std::vector<std::string> kExperiments = {"thm1",   "thm2",    "thm3",        "frostman",
                                               "lemma1", "claim",   "observation", "protas"};

[[noreturn]] void config_error(const std::string& field, const std::string& what) {
    throw std::invalid_argument("config: field '" + field + "' " + what);
}

double require_number(const nlohmann::json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_number()) config_error(field, "must be a number");
    return j[field].get<double>();
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

std::vector<std::string> provenance(const ExperimentConfig& config) {
    return {"config_hash=" + config.hash(), "seed=" + std::to_string(config.generator.seed),
            "experiment=" + config.experiment};
}

/// Random coefficients in the complex unit square; the draws are seeded, so
/// reruns see the same model functions.
std::vector<std::complex<double>> random_coefficients(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::complex<double>> beta(n);
    for (auto& b : beta) {
        const double re = 2.0 * (static_cast<double>(rng() >> 11) * 0x1p-53) - 1.0;
        const double im = 2.0 * (static_cast<double>(rng() >> 11) * 0x1p-53) - 1.0;
        b = {re, im};
    }
    return beta;
}

double max_min_ratio(const std::vector<double>& values) {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return *hi / *lo;
}

struct SummaryBuilder {
    nlohmann::json columns = nlohmann::json::array();
    nlohmann::json rows = nlohmann::json::array();
    nlohmann::json observed = nlohmann::json::object();
    bool pass = true;

    void require(bool ok) { pass = pass && ok; }
};

nlohmann::json finish_summary(const ExperimentConfig& config, SummaryBuilder&& b) {
    nlohmann::json summary;
    summary["experiment"] = config.experiment;
    summary["config_hash"] = config.hash();
    summary["seed"] = config.generator.seed;
    summary["columns"] = std::move(b.columns);
    summary["rows"] = std::move(b.rows);
    summary["observed"] = std::move(b.observed);
    summary["thresholds"] = config.thresholds;
    summary["pass"] = b.pass;
    summary["metadata"] = {{"timestamp", timestamp_utc()}};
    return summary;
}

// ---- experiment bodies ------------------------------------------------ //

SummaryBuilder run_thm1(const ExperimentConfig& config,
                        std::vector<std::pair<std::string, std::string>>& outputs) {
    SummaryBuilder b;
    b.columns = {"N", "weak_l1_quasinorm", "argmax_lambda", "census_max"};
    const ZeroSequence full = config.generator.build();
    const double p = config.params.value("p", 1.0);

    std::vector<double> quasinorms;
    for (int n : config.n_list) {
        const ZeroSequence head = full.prefix(static_cast<std::size_t>(n));
        const BlaschkeProduct product{head};
        const BoundaryGrid grid = make_grid(head, config.grid_base_count, config.grid_refine_factor);
        const auto samples = boundary_derivative_sweep(product, grid);
        const DistributionProfile profile =
            weak_quasinorm(samples, grid, p, config.lambda_points_per_decade);
        quasinorms.push_back(profile.quasinorm);
        // per-truncation census maximum: flat for exponential-type gaps,
        // growing alongside the quasinorm otherwise
        b.rows.push_back({n, profile.quasinorm, profile.argmax_lambda,
                          is_exponential(head).m_observed});
        outputs.emplace_back("profile_N" + std::to_string(n) + ".csv",
                             io::profile_to_csv(profile, provenance(config)));
    }

    b.observed["max_min_ratio"] = max_min_ratio(quasinorms);
    b.observed["growth_ratio"] = quasinorms.back() / quasinorms.front();
    if (config.thresholds.contains("max_min_ratio"))
        b.require(max_min_ratio(quasinorms) <= config.thresholds["max_min_ratio"].get<double>());
    if (config.thresholds.contains("growth_min_ratio"))
        b.require(quasinorms.back() / quasinorms.front() >=
                  config.thresholds["growth_min_ratio"].get<double>());
    return b;
}

SummaryBuilder run_thm2(const ExperimentConfig& config,
                        std::vector<std::pair<std::string, std::string>>& outputs) {
    SummaryBuilder b;
    b.columns = {"N", "increment"};
    const int n_max = static_cast<int>(require_number(config.params, "n_max"));
    const BlaschkeProduct product{config.generator.build()};
    const LogMeanCurve curve = dyadic_increments(product, n_max);

    for (std::size_t i = 0; i < curve.increments.size(); ++i)
        b.rows.push_back({static_cast<int>(i) + 1, curve.increments[i]});
    outputs.emplace_back("tmean.csv", io::logmean_to_csv(curve, provenance(config)));
    outputs.emplace_back("increments.csv", io::increments_to_csv(curve, provenance(config)));

    b.observed["m_observed"] = curve.m_observed;
    b.observed["nudge_count"] = curve.nudge_count;
    if (config.thresholds.contains("m_max"))
        b.require(curve.m_observed <= config.thresholds["m_max"].get<double>());
    if (config.thresholds.contains("increment_ratio")) {
        const auto& spec = config.thresholds["increment_ratio"];
        const auto at = spec.at("at").get<std::size_t>();
        const auto base = spec.at("base").get<std::size_t>();
        const double ratio = curve.increments.at(at - 1) / curve.increments.at(base - 1);
        b.observed["increment_ratio"] = ratio;
        b.require(ratio >= spec.at("min_ratio").get<double>());
    }
    return b;
}

SummaryBuilder run_thm3(const ExperimentConfig& config,
                        std::vector<std::pair<std::string, std::string>>& outputs) {
    SummaryBuilder b;
    b.columns = {"M", "trial", "weak23_statistic"};
    const ZeroSequence full = config.generator.build();
    const int trials = static_cast<int>(require_number(config.params, "trials"));
    std::mt19937_64 rng(config.generator.seed ^ 0x9e3779b97f4a7c15ull);

    std::vector<double> stats;
    std::ostringstream csv;
    for (const auto& c : provenance(config)) csv << "# " << c << "\n";
    csv << "M,trial,weak23_statistic\n";
    for (int m : config.n_list) {
        const ZeroSequence head = full.prefix(static_cast<std::size_t>(m));
        const BoundaryGrid grid = make_grid(head, config.grid_base_count, config.grid_refine_factor);
        for (int trial = 0; trial < trials; ++trial) {
            auto beta = random_coefficients(rng, head.size());
            ModelFunction f{head, std::move(beta)};
            const double norm = l2_norm(f);
            std::vector<std::complex<double>> unit_beta = f.coefficients();
            for (auto& x : unit_beta) x /= norm;
            const ModelFunction unit{head, std::move(unit_beta)};
            const double stat = weak23_statistic(unit, 1.0, grid);
            stats.push_back(stat);
            b.rows.push_back({m, trial, stat});
            csv << m << "," << trial << "," << io::format_double(stat) << "\n";
        }
    }
    outputs.emplace_back("weak23_statistics.csv", csv.str());

    b.observed["max_min_ratio"] = max_min_ratio(stats);
    if (config.thresholds.contains("max_min_ratio"))
        b.require(max_min_ratio(stats) <= config.thresholds["max_min_ratio"].get<double>());
    return b;
}

SummaryBuilder run_frostman(const ExperimentConfig& config,
                            std::vector<std::pair<std::string, std::string>>& outputs) {
    SummaryBuilder b;
    b.columns = {"N", "a", "quasinorm", "ratio_to_unshifted"};
    if (!config.params.contains("shifts") || !config.params["shifts"].is_array())
        config_error("params.shifts", "must be an array of [re, im] pairs");
    const ZeroSequence full = config.generator.build();
    const double p = config.params.value("p", 1.0);

    double worst = 1.0;
    std::ostringstream csv;
    for (const auto& c : provenance(config)) csv << "# " << c << "\n";
    csv << "N,a_re,a_im,quasinorm,ratio_to_unshifted\n";
    for (int n : config.n_list) {
        const ZeroSequence head = full.prefix(static_cast<std::size_t>(n));
        const BlaschkeProduct product{head};
        const BoundaryGrid grid = make_grid(head, config.grid_base_count, config.grid_refine_factor);
        const auto bdm = boundary_derivative_sweep(product, grid);
        const auto values = boundary_value_sweep(product, grid);
        const double base =
            weak_quasinorm(bdm, grid, p, config.lambda_points_per_decade).quasinorm;

        for (const auto& shift : config.params["shifts"]) {
            const std::complex<double> a{shift.at(0).get<double>(), shift.at(1).get<double>()};
            const auto shifted = frostman_from_samples(bdm, values, a);
            const double q =
                weak_quasinorm(shifted, grid, p, config.lambda_points_per_decade).quasinorm;
            const double ratio = q > base ? q / base : base / q;
            worst = std::max(worst, ratio);
            const std::string label =
                io::format_double(a.real()) + (a.imag() < 0 ? "-" : "+") +
                io::format_double(std::abs(a.imag())) + "i";
            b.rows.push_back({n, label, q, ratio});
            csv << n << "," << io::format_double(a.real()) << "," << io::format_double(a.imag())
                << "," << io::format_double(q) << "," << io::format_double(ratio) << "\n";
        }
    }
    outputs.emplace_back("frostman.csv", csv.str());

    b.observed["worst_shift_ratio"] = worst;
    if (config.thresholds.contains("shift_factor"))
        b.require(worst <= config.thresholds["shift_factor"].get<double>());
    return b;
}

SummaryBuilder run_lemma1(const ExperimentConfig& config,
                          std::vector<std::pair<std::string, std::string>>& outputs) {
    SummaryBuilder b;
    b.columns = {"k", "n_k"};
    const double mu = require_number(config.params, "mu");
    const ZeroSequence seq = config.generator.build();
    const Lemma1Result result = lemma1_construct(seq, mu);

    for (std::size_t i = 0; i < result.exponents.size(); ++i)
        b.rows.push_back({static_cast<int>(i) + 1, result.exponents[i]});
    b.observed["s_c"] = result.s_c;
    b.observed["s_d"] = result.s_d;
    b.observed["mu"] = result.mu;
    b.observed["k_constant"] = result.s_c * result.mu;
    b.require(result.s_d <= mu);

    nlohmann::json out{{"mu", result.mu},
                       {"exponents", result.exponents},
                       {"s_c", result.s_c},
                       {"s_d", result.s_d},
                       {"config_hash", config.hash()},
                       {"seed", config.generator.seed}};
    outputs.emplace_back("lemma1.json", out.dump(2) + "\n");
    return b;
}

SummaryBuilder run_claim(const ExperimentConfig& config,
                         std::vector<std::pair<std::string, std::string>>& outputs) {
    SummaryBuilder b;
    b.columns = {"N", "quasinorm", "h_norm", "ratio"};
    const ZeroSequence full = config.generator.build();

    std::vector<double> ratios;
    std::ostringstream csv;
    for (const auto& c : provenance(config)) csv << "# " << c << "\n";
    csv << "N,quasinorm,h_norm,ratio\n";
    for (int n : config.n_list) {
        const ZeroSequence head = full.prefix(static_cast<std::size_t>(n));
        const BlaschkeProduct product{head};
        const BoundaryGrid grid = make_grid(head, config.grid_base_count, config.grid_refine_factor);
        // kernel at the deepest zero of the truncation
        ZeroSequence deepest = ZeroSequence::from_entries({head[head.size() - 1]});
        const ModelFunction h{std::move(deepest), {1.0}};
        const ClaimStatistic stat = claim_statistic(product, h, grid);
        ratios.push_back(stat.ratio);
        b.rows.push_back({n, stat.quasinorm, stat.h_norm, stat.ratio});
        csv << n << "," << io::format_double(stat.quasinorm) << ","
            << io::format_double(stat.h_norm) << "," << io::format_double(stat.ratio) << "\n";
    }
    outputs.emplace_back("claim.csv", csv.str());

    b.observed["max_min_ratio"] = max_min_ratio(ratios);
    if (config.thresholds.contains("max_min_ratio"))
        b.require(max_min_ratio(ratios) <= config.thresholds["max_min_ratio"].get<double>());
    return b;
}

SummaryBuilder run_observation(const ExperimentConfig& config,
                               std::vector<std::pair<std::string, std::string>>& outputs) {
    SummaryBuilder b;
    b.columns = {"weight", "M", "h23_quasinorm", "condition"};
    const ZeroSequence full = config.generator.build();
    const std::vector<int>& m_list = config.n_list;

    std::ostringstream csv;
    for (const auto& c : provenance(config)) csv << "# " << c << "\n";
    csv << "weight,M,h23_quasinorm,condition\n";

    const auto divergent = divergence_witness(full, m_list, WitnessWeight::Divergent,
                                              config.grid_base_count, config.grid_refine_factor);
    const auto control = divergence_witness(full, m_list, WitnessWeight::Control,
                                            config.grid_base_count, config.grid_refine_factor);
    std::vector<double> divergent_q, control_q;
    for (const auto& row : divergent) {
        divergent_q.push_back(row.h23_quasinorm);
        b.rows.push_back({"divergent", row.m, row.h23_quasinorm, row.condition});
        csv << "divergent," << row.m << "," << io::format_double(row.h23_quasinorm) << ","
            << io::format_double(row.condition) << "\n";
    }
    for (const auto& row : control) {
        control_q.push_back(row.h23_quasinorm);
        b.rows.push_back({"control", row.m, row.h23_quasinorm, row.condition});
        csv << "control," << row.m << "," << io::format_double(row.h23_quasinorm) << ","
            << io::format_double(row.condition) << "\n";
    }
    outputs.emplace_back("observation.csv", csv.str());

    const bool increasing = std::is_sorted(divergent_q.begin(), divergent_q.end()) &&
                            std::adjacent_find(divergent_q.begin(), divergent_q.end()) ==
                                divergent_q.end();
    b.observed["divergent_increasing"] = increasing;
    b.observed["divergent_growth"] = divergent_q.back() / divergent_q.front();
    b.observed["control_max_min_ratio"] = max_min_ratio(control_q);
    {
        const BlaschkeProduct product{full.prefix(static_cast<std::size_t>(m_list.back()))};
        b.observed["min_derivative_gap_product"] = min_derivative_gap_product(product);
    }
    b.require(increasing);
    if (config.thresholds.contains("control_max_min_ratio"))
        b.require(max_min_ratio(control_q) <=
                  config.thresholds["control_max_min_ratio"].get<double>());
    return b;
}

SummaryBuilder run_protas(const ExperimentConfig& config,
                          std::vector<std::pair<std::string, std::string>>& outputs) {
    SummaryBuilder b;
    b.columns = {"N", "hardy_quasinorm"};
    const double p = require_number(config.params, "p");
    const ZeroSequence full = config.generator.build();

    std::vector<double> values;
    std::ostringstream csv;
    for (const auto& c : provenance(config)) csv << "# " << c << "\n";
    csv << "N,hardy_quasinorm\n";
    for (int n : config.n_list) {
        const ZeroSequence head = full.prefix(static_cast<std::size_t>(n));
        const BlaschkeProduct product{head};
        const BoundaryGrid grid = make_grid(head, config.grid_base_count, config.grid_refine_factor);
        const auto samples = boundary_derivative_sweep(product, grid);
        const double value = hardy_quasinorm(samples, grid, p);
        values.push_back(value);
        b.rows.push_back({n, value});
        csv << n << "," << io::format_double(value) << "\n";
    }
    outputs.emplace_back("protas.csv", csv.str());

    b.observed["max_min_ratio"] = max_min_ratio(values);
    b.observed["growth_ratio"] = values.back() / values.front();
    if (config.thresholds.contains("max_min_ratio"))
        b.require(max_min_ratio(values) <= config.thresholds["max_min_ratio"].get<double>());
    if (config.thresholds.contains("growth_min_ratio"))
        b.require(values.back() / values.front() >=
                  config.thresholds["growth_min_ratio"].get<double>());
    return b;
}

}  // namespace

ZeroSequence GeneratorSpec::build(int count_override) const {
    const int n = count_override > 0 ? count_override : count;
    AngleRule rule = AngleRule::equispaced();
    if (angle_rule == "uniform-random")
        rule = AngleRule::uniform_random(seed);
    else if (angle_rule == "fixed-list")
        rule = AngleRule::fixed_list(angles);
    else if (angle_rule != "equispaced")
        config_error("generator.angle_rule", "must be uniform-random, equispaced or fixed-list");
    return kind == Kind::Geometric ? generate_geometric(c, delta, n, rule)
                                   : generate_power(q, n, rule);
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
    ExperimentConfig config;
    if (!j.contains("experiment") || !j["experiment"].is_string())
        config_error("experiment", "must be a string");
    config.experiment = j["experiment"].get<std::string>();
    if (std::find(kExperiments.begin(), kExperiments.end(), config.experiment) ==
        kExperiments.end())
        config_error("experiment", "unknown kind '" + config.experiment + "'");

    if (!j.contains("generator") || !j["generator"].is_object())
        config_error("generator", "must be an object");
    const auto& gen = j["generator"];
    const std::string kind = gen.value("kind", "");
    if (kind == "geometric") {
        config.generator.kind = GeneratorSpec::Kind::Geometric;
        config.generator.c = require_number(gen, "c");
        config.generator.delta = require_number(gen, "delta");
        if (!(config.generator.delta > 0.0 && config.generator.delta < 1.0))
            config_error("generator.delta", "must lie in (0,1)");
        if (!(config.generator.c > 0.0)) config_error("generator.c", "must be positive");
        if (!(config.generator.c * config.generator.delta < 1.0))
            config_error("generator.c", "c*delta must stay below 1");
    } else if (kind == "power") {
        config.generator.kind = GeneratorSpec::Kind::Power;
        config.generator.q = require_number(gen, "q");
        if (!(config.generator.q > 1.0)) config_error("generator.q", "must exceed 1");
    } else {
        config_error("generator.kind", "must be 'geometric' or 'power'");
    }
    config.generator.count = static_cast<int>(require_number(gen, "count"));
    if (config.generator.count < 1) config_error("generator.count", "must be >= 1");
    config.generator.angle_rule = gen.value("angle_rule", "uniform-random");
    if (gen.contains("seed")) {
        if (!gen["seed"].is_number_unsigned() && !gen["seed"].is_number_integer())
            config_error("generator.seed", "must be an integer");
        config.generator.seed = gen["seed"].get<std::uint64_t>();
    }
    if (gen.contains("angles")) config.generator.angles = gen["angles"].get<std::vector<double>>();

    if (j.contains("n_list")) {
        if (!j["n_list"].is_array() || j["n_list"].empty())
            config_error("n_list", "must be a nonempty array");
        config.n_list = j["n_list"].get<std::vector<int>>();
        for (int n : config.n_list) {
            if (n < 1) config_error("n_list", "entries must be >= 1");
            if (n > config.generator.count)
                config_error("n_list", "entry exceeds generator.count");
        }
    }

    if (j.contains("grid")) {
        const auto& grid = j["grid"];
        config.grid_base_count = static_cast<int>(require_number(grid, "base_count"));
        config.grid_refine_factor = static_cast<int>(require_number(grid, "refine_factor"));
        if (config.grid_base_count < 64) config_error("grid.base_count", "must be >= 64");
        if (config.grid_refine_factor < 1) config_error("grid.refine_factor", "must be >= 1");
    }
    if (j.contains("lambda_grid")) {
        config.lambda_points_per_decade =
            static_cast<int>(require_number(j["lambda_grid"], "points_per_decade"));
        if (config.lambda_points_per_decade < 1)
            config_error("lambda_grid.points_per_decade", "must be >= 1");
    }
    if (j.contains("thresholds")) {
        if (!j["thresholds"].is_object()) config_error("thresholds", "must be an object");
        config.thresholds = j["thresholds"];
    }
    if (j.contains("params")) {
        if (!j["params"].is_object()) config_error("params", "must be an object");
        config.params = j["params"];
    }
    if (!j.contains("output_dir") || !j["output_dir"].is_string())
        config_error("output_dir", "must be a string");
    config.output_dir = j["output_dir"].get<std::string>();

    // experiment-specific requirements, checked before any computation
    const bool needs_n_list = config.experiment != "thm2" && config.experiment != "lemma1";
    if (needs_n_list && config.n_list.empty()) config_error("n_list", "required");
    if (config.experiment == "thm2") require_number(config.params, "n_max");
    if (config.experiment == "thm3") require_number(config.params, "trials");
    if (config.experiment == "lemma1") require_number(config.params, "mu");
    if (config.experiment == "protas") require_number(config.params, "p");
    if (config.experiment == "frostman" &&
        (!config.params.contains("shifts") || !config.params["shifts"].is_array()))
        config_error("params.shifts", "must be an array of [re, im] pairs");
    return config;
}

nlohmann::json ExperimentConfig::to_json() const {
    nlohmann::json gen;
    if (generator.kind == GeneratorSpec::Kind::Geometric) {
        gen["kind"] = "geometric";
        gen["c"] = generator.c;
        gen["delta"] = generator.delta;
    } else {
        gen["kind"] = "power";
        gen["q"] = generator.q;
    }
    gen["count"] = generator.count;
    gen["angle_rule"] = generator.angle_rule;
    gen["seed"] = generator.seed;
    if (!generator.angles.empty()) gen["angles"] = generator.angles;

    nlohmann::json j;
    j["experiment"] = experiment;
    j["generator"] = gen;
    if (!n_list.empty()) j["n_list"] = n_list;
    j["grid"] = {{"base_count", grid_base_count}, {"refine_factor", grid_refine_factor}};
    j["lambda_grid"] = {{"points_per_decade", lambda_points_per_decade}};
    j["thresholds"] = thresholds;
    j["params"] = params;
    j["output_dir"] = output_dir.string();
    return j;
}

std::string ExperimentConfig::hash() const {
    // output_dir names where results land, not what the experiment is
    nlohmann::json doc = to_json();
    doc.erase("output_dir");
    const std::string canonical = doc.dump();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : canonical) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    std::vector<std::pair<std::string, std::string>> outputs;
    SummaryBuilder b;
    if (config.experiment == "thm1")
        b = run_thm1(config, outputs);
    else if (config.experiment == "thm2")
        b = run_thm2(config, outputs);
    else if (config.experiment == "thm3")
        b = run_thm3(config, outputs);
    else if (config.experiment == "frostman")
        b = run_frostman(config, outputs);
    else if (config.experiment == "lemma1")
        b = run_lemma1(config, outputs);
    else if (config.experiment == "claim")
        b = run_claim(config, outputs);
    else if (config.experiment == "observation")
        b = run_observation(config, outputs);
    else if (config.experiment == "protas")
        b = run_protas(config, outputs);
    else
        config_error("experiment", "unknown kind '" + config.experiment + "'");

    ExperimentReport report;
    report.pass = b.pass;
    report.summary = finish_summary(config, std::move(b));

    std::filesystem::create_directories(config.output_dir);
    for (const auto& [name, content] : outputs) {
        const auto path = config.output_dir / name;
        io::write_file(path, content);
        report.files.push_back(path);
    }
    const auto summary_path = config.output_dir / "summary.json";
    io::write_file(summary_path, report.summary.dump(2) + "\n");
    report.files.push_back(summary_path);
    return report;
}

std::string render_report(const nlohmann::json& summary) {
    std::ostringstream out;
    const auto field = [&](const std::string& key, const std::string& value) {
        out << key;
        for (std::size_t i = key.size(); i < 12; ++i) out << ' ';
        out << ' ' << value << "\n";
    };

    field("experiment", summary.value("experiment", std::string{}));
    field("config_hash", summary.value("config_hash", std::string{}));
    field("seed", std::to_string(summary.value("seed", std::uint64_t{0})));

    const nlohmann::json column_list = summary.value("columns", nlohmann::json::array());
    std::string columns;
    for (const auto& c : column_list) columns += (columns.empty() ? "" : " ") + c.get<std::string>();
    field("columns", columns);

    const nlohmann::json rows = summary.value("rows", nlohmann::json::array());
    for (const auto& row : rows) {
        std::string cells;
        for (const auto& cell : row) cells += (cells.empty() ? "" : " ") + cell.dump();
        field("row", cells);
    }
    const nlohmann::json observed = summary.value("observed", nlohmann::json::object());
    for (const auto& [key, value] : observed.items()) field("observed", key + " " + value.dump());
    const nlohmann::json thresholds = summary.value("thresholds", nlohmann::json::object());
    for (const auto& [key, value] : thresholds.items()) field("threshold", key + " " + value.dump());
    field("verdict", summary.value("pass", false) ? "PASS" : "FAIL");
    return out.str();
}

nlohmann::json parse_report(const std::string& table) {
    nlohmann::json summary;
    summary["columns"] = nlohmann::json::array();
    summary["rows"] = nlohmann::json::array();
    summary["observed"] = nlohmann::json::object();
    summary["thresholds"] = nlohmann::json::object();

    std::istringstream in(table);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string key;
        if (!(fields >> key)) continue;
        if (key == "experiment") {
            std::string v;
            fields >> v;
            summary["experiment"] = v;
        } else if (key == "config_hash") {
            std::string v;
            fields >> v;
            summary["config_hash"] = v;
        } else if (key == "seed") {
            std::uint64_t v = 0;
            fields >> v;
            summary["seed"] = v;
        } else if (key == "columns") {
            std::string v;
            while (fields >> v) summary["columns"].push_back(v);
        } else if (key == "row") {
            nlohmann::json row = nlohmann::json::array();
            std::string v;
            while (fields >> v) row.push_back(nlohmann::json::parse(v));
            summary["rows"].push_back(row);
        } else if (key == "observed" || key == "threshold") {
            std::string name, v;
            fields >> name >> v;
            summary[key == "observed" ? "observed" : "thresholds"][name] =
                nlohmann::json::parse(v);
        } else if (key == "verdict") {
            std::string v;
            fields >> v;
            summary["pass"] = (v == "PASS");
        }
    }
    return summary;
}

}  // namespace ebp
