#include "ebp/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ebp::io {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    // trim to the shortest representation that still round-trips
    for (int prec = 1; prec < 17; ++prec) {
        char shorter[40];
        std::snprintf(shorter, sizeof(shorter), "%.*g", prec, x);
        double back = 0.0;
        std::sscanf(shorter, "%lf", &back);
        if (back == x) return shorter;
    }
    return buf;
}

std::string sequence_to_text(const ZeroSequence& seq, const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << "\n";
    for (const Zero& z : seq) out << format_double(z.eps) << " " << format_double(z.theta) << "\n";
    return out.str();
}

ZeroSequence sequence_from_text(const std::string& text, bool allow_origin) {
    std::istringstream in(text);
    std::vector<Zero> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        Zero z{};
        if (!(fields >> z.eps >> z.theta))
            throw std::invalid_argument("sequence: malformed line " + std::to_string(line_no));
        entries.push_back(z);
    }
    return ZeroSequence::from_entries(std::move(entries), allow_origin);
}

nlohmann::json sequence_to_json(const ZeroSequence& seq) {
    nlohmann::json entries = nlohmann::json::array();
    for (const Zero& z : seq) entries.push_back({{"eps", z.eps}, {"theta", z.theta}});
    return {{"entries", entries}, {"allow_origin", seq.allows_origin()}};
}

ZeroSequence sequence_from_json(const nlohmann::json& j) {
    if (!j.contains("entries") || !j["entries"].is_array())
        throw std::invalid_argument("sequence json: missing 'entries' array");
    std::vector<Zero> entries;
    for (const auto& e : j["entries"])
        entries.push_back({e.at("eps").get<double>(), e.at("theta").get<double>()});
    const bool allow_origin = j.value("allow_origin", false);
    return ZeroSequence::from_entries(std::move(entries), allow_origin);
}

nlohmann::json model_to_json(const ModelFunction& f) {
    nlohmann::json zeros = nlohmann::json::array();
    for (const Zero& z : f.zeros()) zeros.push_back({{"eps", z.eps}, {"theta", z.theta}});
    nlohmann::json coef = nlohmann::json::array();
    for (const auto& b : f.coefficients()) coef.push_back({{"re", b.real()}, {"im", b.imag()}});
    return {{"zeros", zeros},
            {"allow_origin", f.zeros().allows_origin()},
            {"coefficients", coef}};
}

ModelFunction model_from_json(const nlohmann::json& j) {
    if (!j.contains("zeros") || !j.contains("coefficients"))
        throw std::invalid_argument("model json: needs 'zeros' and 'coefficients'");
    std::vector<Zero> zeros;
    for (const auto& e : j["zeros"])
        zeros.push_back({e.at("eps").get<double>(), e.at("theta").get<double>()});
    std::vector<std::complex<double>> coef;
    for (const auto& e : j["coefficients"])
        coef.emplace_back(e.at("re").get<double>(), e.at("im").get<double>());
    return ModelFunction(
        ZeroSequence::from_entries(std::move(zeros), j.value("allow_origin", false)),
        std::move(coef));
}

std::string profile_to_csv(const DistributionProfile& profile,
                           const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "lambda,measure,lambda_times_measure_pow_p\n";
    for (std::size_t i = 0; i < profile.lambda_grid.size(); ++i) {
        const double weighted =
            std::pow(profile.lambda_grid[i], profile.p) * profile.measure[i];
        out << format_double(profile.lambda_grid[i]) << "," << format_double(profile.measure[i])
            << "," << format_double(weighted) << "\n";
    }
    return out.str();
}

std::string logmean_to_csv(const LogMeanCurve& curve, const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "r,t_exact,t_quad\n";
    for (std::size_t i = 0; i < curve.radii.size(); ++i) {
        out << format_double(curve.radii[i]) << "," << format_double(curve.t_exact[i]) << ",";
        if (i < curve.t_quad.size()) out << format_double(curve.t_quad[i]);
        out << "\n";
    }
    return out.str();
}

std::string increments_to_csv(const LogMeanCurve& curve,
                              const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "N,increment\n";
    for (std::size_t i = 0; i < curve.increments.size(); ++i)
        out << (i + 1) << "," << format_double(curve.increments[i]) << "\n";
    return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace ebp::io
