// ebp: generate Blaschke zero sequences, evaluate products and their
// boundary statistics, and run the packaged experiment sweeps.
//
// Exit codes: 0 success / thresholds met, 2 threshold failure from `run`,
// 1 any error.

#include <complex>
#include <iostream>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ebp/blaschke.hpp"
#include "ebp/boundary.hpp"
#include "ebp/experiment.hpp"
#include "ebp/io.hpp"
#include "ebp/logmean.hpp"
#include "ebp/modelspace.hpp"
#include "ebp/sweep.hpp"
#include "ebp/zeroseq.hpp"

namespace {

using ebp::io::format_double;

ebp::ZeroSequence load_sequence(const std::string& path, bool allow_origin) {
    const std::string text = ebp::io::read_file(path);
    if (!text.empty() && text.front() == '{')
        return ebp::io::sequence_from_json(nlohmann::json::parse(text));
    return ebp::io::sequence_from_text(text, allow_origin);
}

struct GenOptions {
    std::string kind = "geometric";
    double c = 1.0, delta = 0.5, q = 2.0;
    int count = 20;
    std::string angles = "uniform-random";
    std::vector<double> angle_list;
    std::uint64_t seed = 0;
    std::string output;
    std::string json_output;
};

int cmd_gen(const GenOptions& opt) {
    ebp::AngleRule rule = ebp::AngleRule::equispaced();
    if (!opt.angle_list.empty()) rule = ebp::AngleRule::fixed_list(opt.angle_list);
    else if (opt.angles == "uniform-random") rule = ebp::AngleRule::uniform_random(opt.seed);
    else if (opt.angles != "equispaced")
        throw std::invalid_argument("gen: --angles must be uniform-random or equispaced");
    const ebp::ZeroSequence seq = opt.kind == "geometric"
                                      ? ebp::generate_geometric(opt.c, opt.delta, opt.count, rule)
                                      : ebp::generate_power(opt.q, opt.count, rule);
    const std::vector<std::string> comments{"generator=" + opt.kind,
                                            "seed=" + std::to_string(opt.seed)};
    if (!opt.output.empty())
        ebp::io::write_file(opt.output, ebp::io::sequence_to_text(seq, comments));
    else
        std::cout << ebp::io::sequence_to_text(seq, comments);
    if (!opt.json_output.empty())
        ebp::io::write_file(opt.json_output, ebp::io::sequence_to_json(seq).dump(2) + "\n");

    const auto census = ebp::dyadic_census(seq);
    std::cerr << "generated " << seq.size() << " zeros, gap sum " << format_double(seq.eps_sum())
              << ", census max " << census.max_count << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exponential Blaschke product laboratory"};
    app.require_subcommand(1);

    // --- gen ---
    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a zero sequence");
    gen_cmd->add_option("--kind", gen.kind, "geometric | power")
        ->check(CLI::IsMember({"geometric", "power"}));
    gen_cmd->add_option("--c", gen.c, "geometric scale");
    gen_cmd->add_option("--delta", gen.delta, "geometric ratio in (0,1)");
    gen_cmd->add_option("--q", gen.q, "power exponent > 1");
    gen_cmd->add_option("--count", gen.count, "number of zeros")->required();
    gen_cmd->add_option("--angles", gen.angles, "uniform-random | equispaced");
    gen_cmd->add_option("--angle-list", gen.angle_list, "explicit angles (overrides --angles)");
    gen_cmd->add_option("--seed", gen.seed, "angle seed");
    gen_cmd->add_option("-o,--output", gen.output, "output text file (stdout if omitted)");
    gen_cmd->add_option("--json", gen.json_output, "also write the JSON mirror");

    // --- eval ---
    std::string eval_zeros;
    bool eval_allow_origin = false;
    double eval_theta = 0.0, eval_r = -1.0;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate B, B' and |B'| at a point");
    eval_cmd->add_option("--zeros", eval_zeros, "sequence file")->required();
    eval_cmd->add_flag("--allow-origin", eval_allow_origin, "admit eps=1 entries");
    eval_cmd->add_option("--theta", eval_theta, "angle (radians)")->required();
    eval_cmd->add_option("--r", eval_r, "radius in [0,1); omit for the boundary");

    // --- dist ---
    std::string dist_zeros, dist_output;
    int dist_base = 16384, dist_refine = 64, dist_ppd = 200;
    double dist_p = 1.0;
    auto* dist_cmd = app.add_subcommand("dist", "weak-L^p profile of |B'| on the boundary");
    dist_cmd->add_option("--zeros", dist_zeros, "sequence file")->required();
    dist_cmd->add_option("--base", dist_base, "base grid count");
    dist_cmd->add_option("--refine", dist_refine, "window refinement factor");
    dist_cmd->add_option("--p", dist_p, "weak exponent in (0,2]");
    dist_cmd->add_option("--points-per-decade", dist_ppd, "lambda grid resolution");
    dist_cmd->add_option("-o,--output", dist_output, "profile CSV path");

    // --- tmean ---
    std::string tmean_zeros, tmean_output, tmean_inc_output;
    int tmean_nmax = 20;
    bool tmean_quad = false;
    auto* tmean_cmd = app.add_subcommand("tmean", "logarithmic mean along dyadic radii");
    tmean_cmd->add_option("--zeros", tmean_zeros, "sequence file")->required();
    tmean_cmd->add_option("--nmax", tmean_nmax, "deepest dyadic level");
    tmean_cmd->add_flag("--quad", tmean_quad, "cross-check with quadrature where safe");
    tmean_cmd->add_option("-o,--output", tmean_output, "curve CSV path");
    tmean_cmd->add_option("--increments-output", tmean_inc_output, "increment CSV path");

    // --- frostman ---
    std::string fr_zeros;
    double fr_are = 0.0, fr_aim = 0.0, fr_p = 1.0;
    int fr_base = 16384, fr_refine = 64;
    auto* fr_cmd = app.add_subcommand("frostman", "weak-L^p statistic of a shifted product");
    fr_cmd->add_option("--zeros", fr_zeros, "sequence file")->required();
    fr_cmd->add_option("--a-re", fr_are, "shift, real part");
    fr_cmd->add_option("--a-im", fr_aim, "shift, imaginary part");
    fr_cmd->add_option("--p", fr_p, "weak exponent");
    fr_cmd->add_option("--base", fr_base, "base grid count");
    fr_cmd->add_option("--refine", fr_refine, "window refinement factor");

    // --- modelspace ---
    std::string ms_zeros, ms_model, ms_op = "weak23", ms_weight = "divergent";
    std::vector<int> ms_mlist;
    int ms_base = 4096, ms_refine = 32, ms_kernels = 0;
    std::uint64_t ms_seed = 0;
    auto* ms_cmd = app.add_subcommand("modelspace", "model-space derivative statistics");
    ms_cmd->add_option("--zeros", ms_zeros, "sequence file")->required();
    ms_cmd->add_option("--model", ms_model, "model function JSON (weak23; overrides --kernels)");
    ms_cmd->add_option("--op", ms_op, "weak23 | claim | witness")
        ->check(CLI::IsMember({"weak23", "claim", "witness"}));
    ms_cmd->add_option("--kernels", ms_kernels, "kernel count (weak23; default all zeros)");
    ms_cmd->add_option("--seed", ms_seed, "coefficient seed (weak23)");
    ms_cmd->add_option("--m-list", ms_mlist, "witness truncation list");
    ms_cmd->add_option("--weight", ms_weight, "witness weight: divergent | control")
        ->check(CLI::IsMember({"divergent", "control"}));
    ms_cmd->add_option("--base", ms_base, "base grid count");
    ms_cmd->add_option("--refine", ms_refine, "window refinement factor");

    // --- lemma1 ---
    std::string l1_zeros, l1_output;
    double l1_mu = 16.0;
    auto* l1_cmd = app.add_subcommand("lemma1", "constructive exponent sequence");
    l1_cmd->add_option("--zeros", l1_zeros, "sequence file")->required();
    l1_cmd->add_option("--mu", l1_mu, "parameter mu > 10")->required();
    l1_cmd->add_option("-o,--output", l1_output, "result JSON path");

    // --- run ---
    std::string run_config, run_outdir;
    auto* run_cmd = app.add_subcommand("run", "run an experiment from a config file");
    run_cmd->add_option("--config", run_config, "experiment config JSON")->required();
    run_cmd->add_option("--out", run_outdir, "override output_dir");

    // --- report ---
    std::string report_summary;
    auto* report_cmd = app.add_subcommand("report", "render a summary JSON as a table");
    report_cmd->add_option("--summary", report_summary, "summary.json path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_cmd->parsed()) return cmd_gen(gen);

        if (eval_cmd->parsed()) {
            const auto seq = load_sequence(eval_zeros, eval_allow_origin);
            const ebp::BlaschkeProduct b{seq};
            if (eval_r < 0.0) {
                const auto value = ebp::evaluate_boundary(b, eval_theta);
                std::cout << "B(e^{i theta})      = " << format_double(value.real()) << " + "
                          << format_double(value.imag()) << "i\n"
                          << "|B(e^{i theta})|    = " << format_double(std::abs(value)) << "\n"
                          << "|B'(e^{i theta})|   = "
                          << format_double(ebp::boundary_derivative_modulus(b, eval_theta)) << "\n";
            } else {
                const std::complex<double> z = std::polar(eval_r, eval_theta);
                const auto value = ebp::evaluate(b, z);
                const auto deriv = ebp::derivative(b, z);
                std::cout << "B(z)  = " << format_double(value.real()) << " + "
                          << format_double(value.imag()) << "i\n"
                          << "B'(z) = " << format_double(deriv.real()) << " + "
                          << format_double(deriv.imag()) << "i\n";
            }
            return 0;
        }

        if (dist_cmd->parsed()) {
            const auto seq = load_sequence(dist_zeros, false);
            const ebp::BlaschkeProduct b{seq};
            const auto grid = ebp::make_grid(seq, dist_base, dist_refine);
            const auto samples = ebp::boundary_derivative_sweep(b, grid);
            const auto profile = ebp::weak_quasinorm(samples, grid, dist_p, dist_ppd);
            if (!dist_output.empty())
                ebp::io::write_file(dist_output, ebp::io::profile_to_csv(profile));
            std::cout << "nodes         " << grid.size() << "\n"
                      << "quasinorm     " << format_double(profile.quasinorm) << "\n"
                      << "argmax_lambda " << format_double(profile.argmax_lambda) << "\n";
            return 0;
        }

        if (tmean_cmd->parsed()) {
            const auto seq = load_sequence(tmean_zeros, false);
            const ebp::BlaschkeProduct b{seq};
            ebp::LogMeanCurve curve = ebp::dyadic_increments(b, tmean_nmax);
            if (tmean_quad) {
                const auto grid = ebp::make_grid(seq, 16384, 64);
                for (double r : curve.radii) {
                    bool safe = true;
                    for (const auto& z : seq)
                        if (std::abs((1.0 - z.eps) - r) < 1e-9) safe = false;
                    curve.t_quad.push_back(safe ? ebp::t_quadrature(b, r, grid)
                                                : std::numeric_limits<double>::quiet_NaN());
                }
            }
            if (!tmean_output.empty())
                ebp::io::write_file(tmean_output, ebp::io::logmean_to_csv(curve));
            if (!tmean_inc_output.empty())
                ebp::io::write_file(tmean_inc_output, ebp::io::increments_to_csv(curve));
            std::cout << "m_observed " << format_double(curve.m_observed) << "\n"
                      << "nudges     " << curve.nudge_count << "\n";
            return 0;
        }

        if (fr_cmd->parsed()) {
            const auto seq = load_sequence(fr_zeros, false);
            const ebp::BlaschkeProduct b{seq};
            const auto grid = ebp::make_grid(seq, fr_base, fr_refine);
            const auto bdm = ebp::boundary_derivative_sweep(b, grid);
            const auto values = ebp::boundary_value_sweep(b, grid);
            const std::complex<double> a{fr_are, fr_aim};
            const auto shifted = ebp::frostman_from_samples(bdm, values, a);
            const double base = ebp::weak_quasinorm(bdm, grid, fr_p).quasinorm;
            const double q = ebp::weak_quasinorm(shifted, grid, fr_p).quasinorm;
            std::cout << "unshifted quasinorm " << format_double(base) << "\n"
                      << "shifted quasinorm   " << format_double(q) << "\n"
                      << "ratio               " << format_double(q > base ? q / base : base / q)
                      << "\n";
            return 0;
        }

        if (ms_cmd->parsed()) {
            const auto seq = load_sequence(ms_zeros, false);
            if (ms_op == "weak23") {
                if (!ms_model.empty()) {
                    const auto f = ebp::io::model_from_json(
                        nlohmann::json::parse(ebp::io::read_file(ms_model)));
                    const auto grid = ebp::make_grid(f.zeros(), ms_base, ms_refine);
                    std::cout << "weak23_statistic "
                              << format_double(ebp::weak23_statistic(f, 1.0, grid)) << "\n";
                    return 0;
                }
                const std::size_t m =
                    ms_kernels > 0 ? static_cast<std::size_t>(ms_kernels) : seq.size();
                const auto head = seq.prefix(m);
                std::mt19937_64 rng(ms_seed);
                std::vector<std::complex<double>> beta(head.size());
                for (auto& x : beta)
                    x = {2.0 * (static_cast<double>(rng() >> 11) * 0x1p-53) - 1.0,
                         2.0 * (static_cast<double>(rng() >> 11) * 0x1p-53) - 1.0};
                const ebp::ModelFunction f{head, std::move(beta)};
                const auto grid = ebp::make_grid(head, ms_base, ms_refine);
                std::cout << "weak23_statistic " << format_double(ebp::weak23_statistic(f, 1.0, grid))
                          << "\n";
            } else if (ms_op == "claim") {
                const ebp::BlaschkeProduct b{seq};
                auto deepest = ebp::ZeroSequence::from_entries({seq[seq.size() - 1]});
                const ebp::ModelFunction h{std::move(deepest), {1.0}};
                const auto grid = ebp::make_grid(seq, ms_base, ms_refine);
                const auto stat = ebp::claim_statistic(b, h, grid);
                std::cout << "quasinorm " << format_double(stat.quasinorm) << "\n"
                          << "h_norm    " << format_double(stat.h_norm) << "\n"
                          << "ratio     " << format_double(stat.ratio) << "\n";
            } else {
                if (ms_mlist.empty()) throw std::invalid_argument("witness: --m-list required");
                const auto weight = ms_weight == "divergent" ? ebp::WitnessWeight::Divergent
                                                             : ebp::WitnessWeight::Control;
                const auto rows =
                    ebp::divergence_witness(seq, ms_mlist, weight, ms_base, ms_refine);
                std::cout << "M,h23_quasinorm,condition\n";
                for (const auto& row : rows)
                    std::cout << row.m << "," << format_double(row.h23_quasinorm) << ","
                              << format_double(row.condition) << "\n";
            }
            return 0;
        }

        if (l1_cmd->parsed()) {
            const auto seq = load_sequence(l1_zeros, false);
            const auto result = ebp::lemma1_construct(seq, l1_mu);
            nlohmann::json out{{"mu", result.mu},
                               {"exponents", result.exponents},
                               {"s_c", result.s_c},
                               {"s_d", result.s_d}};
            if (!l1_output.empty()) ebp::io::write_file(l1_output, out.dump(2) + "\n");
            std::cout << "s_c " << format_double(result.s_c) << "\n"
                      << "s_d " << format_double(result.s_d) << " (mu " << format_double(result.mu)
                      << ")\n";
            return 0;
        }

        if (run_cmd->parsed()) {
            auto doc = nlohmann::json::parse(ebp::io::read_file(run_config));
            if (!run_outdir.empty()) doc["output_dir"] = run_outdir;
            const auto config = ebp::ExperimentConfig::from_json(doc);
            const auto report = ebp::run_experiment(config);
            std::cout << ebp::render_report(report.summary);
            return report.pass ? 0 : 2;
        }

        if (report_cmd->parsed()) {
            const auto summary = nlohmann::json::parse(ebp::io::read_file(report_summary));
            std::cout << ebp::render_report(summary);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
