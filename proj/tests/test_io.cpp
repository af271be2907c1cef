#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <filesystem>

#include "ebp/io.hpp"

using namespace ebp;

TEST_CASE("double formatting round-trips") {
    for (double x : {0.5, 1.0 / 3.0, 6.283185307179586, 1e-300, 0x1p-40, -2.75}) {
        const std::string s = io::format_double(x);
        CHECK(std::stod(s) == x);
    }
}

TEST_CASE("sequence text round trip") {
    const auto seq = generate_geometric(1.0, 0.5, 12, AngleRule::uniform_random(100));
    const std::string text = io::sequence_to_text(seq, {"config_hash=deadbeef"});
    CHECK(text.find("# config_hash=deadbeef") == 0);
    const auto back = io::sequence_from_text(text);
    REQUIRE(back.size() == seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(back[i].eps == seq[i].eps);
        CHECK(back[i].theta == seq[i].theta);
    }
    CHECK_THROWS_AS(io::sequence_from_text("0.5 zzz\n"), std::invalid_argument);
}

TEST_CASE("sequence json round trip") {
    const auto seq = generate_power(2.0, 6, AngleRule::equispaced());
    const auto back = io::sequence_from_json(io::sequence_to_json(seq));
    REQUIRE(back.size() == seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) CHECK(back[i].eps == seq[i].eps);
    CHECK_THROWS_AS(io::sequence_from_json(nlohmann::json{{"nope", 1}}), std::invalid_argument);
}

TEST_CASE("model function json round trip") {
    const auto zeros = ZeroSequence::from_entries({{0.5, 0.1}, {0.25, 2.0}});
    const ModelFunction f{zeros, {{1.5, -2.0}, {0.0, 3.25}}};
    const auto back = io::model_from_json(io::model_to_json(f));
    REQUIRE(back.terms() == 2);
    CHECK(back.coefficients()[0] == f.coefficients()[0]);
    CHECK(back.coefficients()[1] == f.coefficients()[1]);
    CHECK(back.zeros()[1].eps == 0.25);
}

TEST_CASE("file round trip preserves every bit") {
    const auto path = std::filesystem::temp_directory_path() / "ebp_io_roundtrip.txt";
    const auto seq = generate_geometric(0.7, 0.31, 20, AngleRule::uniform_random(55));
    io::write_file(path, io::sequence_to_text(seq));
    const auto back = io::sequence_from_text(io::read_file(path));
    REQUIRE(back.size() == seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(back[i].eps == seq[i].eps);
        CHECK(back[i].theta == seq[i].theta);
    }
    std::filesystem::remove(path);
    CHECK_THROWS_AS(io::read_file("/no/such/dir/file.txt"), std::runtime_error);
}

TEST_CASE("profile csv layout") {
    DistributionProfile profile;
    profile.lambda_grid = {1.0, 2.0};
    profile.measure = {3.0, 0.5};
    profile.p = 1.0;
    const std::string csv = io::profile_to_csv(profile, {"seed=7"});
    CHECK(csv.find("# seed=7\n") == 0);
    CHECK(csv.find("lambda,measure,lambda_times_measure_pow_p\n") != std::string::npos);
    CHECK(csv.find("1,3,3\n") != std::string::npos);
    CHECK(csv.find("2,0.5,1\n") != std::string::npos);
}

TEST_CASE("logmean csv layout") {
    LogMeanCurve curve;
    curve.radii = {0.5, 0.75};
    curve.t_exact = {1.0, 2.0};
    curve.increments = {1.0};
    const std::string csv = io::logmean_to_csv(curve);
    CHECK(csv.find("r,t_exact,t_quad\n") == 0);
    CHECK(csv.find("0.5,1,\n") != std::string::npos);
    const std::string inc = io::increments_to_csv(curve);
    CHECK(inc.find("N,increment\n") == 0);
    CHECK(inc.find("1,1\n") != std::string::npos);
}
