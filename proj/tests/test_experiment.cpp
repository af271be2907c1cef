#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "ebp/experiment.hpp"
#include "ebp/io.hpp"

using namespace ebp;
namespace fs = std::filesystem;

namespace {

nlohmann::json tiny_thm1_config(const std::string& outdir) {
    return {
        {"experiment", "thm1"},
        {"generator",
         {{"kind", "geometric"}, {"c", 1.0}, {"delta", 0.5}, {"count", 12},
          {"angle_rule", "uniform-random"}, {"seed", 7}}},
        {"n_list", {6, 12}},
        {"grid", {{"base_count", 1024}, {"refine_factor", 8}}},
        {"lambda_grid", {{"points_per_decade", 200}}},
        {"thresholds", {{"max_min_ratio", 2.0}}},
        {"output_dir", outdir},
    };
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("config validation names the failing field") {
    auto base = tiny_thm1_config("/tmp/x");
    CHECK_NOTHROW(ExperimentConfig::from_json(base));

    auto bad = base;
    bad.erase("experiment");
    CHECK_THROWS_WITH_AS(ExperimentConfig::from_json(bad), doctest::Contains("'experiment'"),
                         std::invalid_argument);

    bad = base;
    bad["experiment"] = "thm9";
    CHECK_THROWS_WITH_AS(ExperimentConfig::from_json(bad), doctest::Contains("'experiment'"),
                         std::invalid_argument);

    bad = base;
    bad["generator"].erase("delta");
    CHECK_THROWS_WITH_AS(ExperimentConfig::from_json(bad), doctest::Contains("'delta'"),
                         std::invalid_argument);

    bad = base;
    bad["generator"]["delta"] = 1.5;
    CHECK_THROWS_WITH_AS(ExperimentConfig::from_json(bad),
                         doctest::Contains("'generator.delta'"), std::invalid_argument);

    bad = base;
    bad["n_list"] = {6, 200};
    CHECK_THROWS_WITH_AS(ExperimentConfig::from_json(bad), doctest::Contains("'n_list'"),
                         std::invalid_argument);

    bad = base;
    bad.erase("output_dir");
    CHECK_THROWS_WITH_AS(ExperimentConfig::from_json(bad), doctest::Contains("'output_dir'"),
                         std::invalid_argument);

    bad = base;
    bad["grid"]["base_count"] = 8;
    CHECK_THROWS_WITH_AS(ExperimentConfig::from_json(bad),
                         doctest::Contains("'grid.base_count'"), std::invalid_argument);
}

TEST_CASE("experiment-specific parameters are validated up front") {
    auto cfg = tiny_thm1_config("/tmp/x");
    cfg["experiment"] = "thm2";
    CHECK_THROWS_WITH_AS(ExperimentConfig::from_json(cfg), doctest::Contains("'n_max'"),
                         std::invalid_argument);
    cfg["params"] = {{"n_max", 10}};
    CHECK_NOTHROW(ExperimentConfig::from_json(cfg));

    cfg["experiment"] = "lemma1";
    CHECK_THROWS_WITH_AS(ExperimentConfig::from_json(cfg), doctest::Contains("'mu'"),
                         std::invalid_argument);

    cfg["experiment"] = "frostman";
    cfg["params"] = {{"mu", 16.0}};
    CHECK_THROWS_WITH_AS(ExperimentConfig::from_json(cfg), doctest::Contains("'params.shifts'"),
                         std::invalid_argument);
}

TEST_CASE("config hash is stable and sensitive") {
    const auto a = ExperimentConfig::from_json(tiny_thm1_config("/tmp/x"));
    const auto b = ExperimentConfig::from_json(tiny_thm1_config("/tmp/x"));
    CHECK(a.hash() == b.hash());
    auto other = tiny_thm1_config("/tmp/x");
    other["generator"]["seed"] = 8;
    CHECK(ExperimentConfig::from_json(other).hash() != a.hash());
    CHECK(a.hash().size() == 16);
}

TEST_CASE("thm1 run produces deterministic summary and embeds provenance") {
    TempDir dir("ebp_test_thm1");
    const auto config = ExperimentConfig::from_json(tiny_thm1_config(dir.path.string()));

    auto first = run_experiment(config);
    CHECK(first.pass);
    auto second = run_experiment(config);

    first.summary.erase("metadata");
    second.summary.erase("metadata");
    CHECK(first.summary.dump() == second.summary.dump());

    // files exist and carry the config hash
    bool saw_profile = false;
    for (const auto& file : first.files) {
        CHECK(fs::exists(file));
        if (file.filename().string().rfind("profile_", 0) == 0) {
            saw_profile = true;
            const std::string content = io::read_file(file);
            CHECK(content.find("config_hash=" + config.hash()) != std::string::npos);
            CHECK(content.find("seed=7") != std::string::npos);
        }
    }
    CHECK(saw_profile);

    const auto summary =
        nlohmann::json::parse(io::read_file(dir.path / "summary.json"));
    CHECK(summary["config_hash"] == config.hash());
    CHECK(summary["pass"] == true);
    CHECK(summary.contains("metadata"));
}

TEST_CASE("thresholds decide the verdict") {
    TempDir dir("ebp_test_verdict");
    auto doc = tiny_thm1_config(dir.path.string());
    doc["thresholds"] = {{"max_min_ratio", 1.0000001}};  // unreachable
    const auto report = run_experiment(ExperimentConfig::from_json(doc));
    CHECK_FALSE(report.pass);
}

TEST_CASE("lemma1 experiment") {
    TempDir dir("ebp_test_lemma1");
    nlohmann::json doc{
        {"experiment", "lemma1"},
        {"generator",
         {{"kind", "geometric"}, {"c", 0.03125}, {"delta", 0.5}, {"count", 30},
          {"angle_rule", "equispaced"}, {"seed", 0}}},
        {"params", {{"mu", 16.0}}},
        {"output_dir", dir.path.string()},
    };
    const auto report = run_experiment(ExperimentConfig::from_json(doc));
    CHECK(report.pass);
    CHECK(report.summary["observed"]["s_d"].get<double>() <= 16.0);
    CHECK(fs::exists(dir.path / "lemma1.json"));
}

TEST_CASE("every experiment kind runs end to end on a small config") {
    TempDir dir("ebp_test_kinds");
    const nlohmann::json geometric{{"kind", "geometric"}, {"c", 1.0},   {"delta", 0.5},
                                   {"count", 12},         {"angle_rule", "uniform-random"},
                                   {"seed", 3}};
    const nlohmann::json quarter{{"kind", "geometric"}, {"c", 1.0},   {"delta", 0.25},
                                 {"count", 10},         {"angle_rule", "uniform-random"},
                                 {"seed", 3}};

    std::vector<nlohmann::json> docs;
    docs.push_back({{"experiment", "thm2"},
                    {"generator", geometric},
                    {"params", {{"n_max", 10}}},
                    {"thresholds", {{"m_max", 4.0}}},
                    {"output_dir", (dir.path / "thm2").string()}});
    docs.push_back({{"experiment", "thm3"},
                    {"generator", quarter},
                    {"n_list", {3, 6}},
                    {"grid", {{"base_count", 512}, {"refine_factor", 4}}},
                    {"params", {{"trials", 3}}},
                    {"thresholds", {{"max_min_ratio", 10.0}}},
                    {"output_dir", (dir.path / "thm3").string()}});
    docs.push_back({{"experiment", "frostman"},
                    {"generator", geometric},
                    {"n_list", {6, 12}},
                    {"grid", {{"base_count", 1024}, {"refine_factor", 8}}},
                    {"params", {{"shifts", {{0.0, 0.0}, {0.0, 0.4}}}}},
                    {"thresholds", {{"shift_factor", 4.0}}},
                    {"output_dir", (dir.path / "frostman").string()}});
    docs.push_back({{"experiment", "claim"},
                    {"generator", geometric},
                    {"n_list", {8, 10, 12}},
                    {"grid", {{"base_count", 1024}, {"refine_factor", 8}}},
                    {"thresholds", {{"max_min_ratio", 6.0}}},
                    {"output_dir", (dir.path / "claim").string()}});
    docs.push_back({{"experiment", "observation"},
                    {"generator", quarter},
                    {"n_list", {2, 4, 8}},
                    {"grid", {{"base_count", 512}, {"refine_factor", 4}}},
                    {"thresholds", {{"control_max_min_ratio", 3.0}}},
                    {"output_dir", (dir.path / "observation").string()}});
    docs.push_back({{"experiment", "protas"},
                    {"generator", geometric},
                    {"n_list", {6, 12}},
                    {"grid", {{"base_count", 512}, {"refine_factor", 4}}},
                    {"params", {{"p", 0.9}}},
                    {"output_dir", (dir.path / "protas").string()}});

    for (const auto& doc : docs) {
        CAPTURE(doc["experiment"].get<std::string>());
        const auto report = run_experiment(ExperimentConfig::from_json(doc));
        CHECK(report.pass);
        CHECK(fs::exists(fs::path(doc["output_dir"].get<std::string>()) / "summary.json"));
        CHECK(report.summary["rows"].size() > 0);
        // the rendered table parses back to the same text
        const std::string table = render_report(report.summary);
        CHECK(render_report(parse_report(table)) == table);
    }
}

TEST_CASE("report rendering and parsing are mutually stable") {
    TempDir dir("ebp_test_report");
    const auto config = ExperimentConfig::from_json(tiny_thm1_config(dir.path.string()));
    const auto report = run_experiment(config);

    const std::string table = render_report(report.summary);
    CHECK(table.find("experiment") == 0);
    CHECK(table.find("verdict") != std::string::npos);

    const auto parsed = parse_report(table);
    CHECK(render_report(parsed) == table);

    // empty summary renders a header-only table
    const std::string empty_table = render_report(nlohmann::json::object());
    CHECK(empty_table.find("experiment") == 0);
    CHECK(parse_report(empty_table).value("pass", true) == false);
}
