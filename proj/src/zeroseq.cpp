#include "ebp/zeroseq.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace ebp {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kMinEps = 0x1p-500;  // generator underflow cutoff

std::vector<double> make_angles(const AngleRule& rule, int count) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    switch (rule.kind) {
        case AngleRule::Kind::Equispaced:
            for (int n = 0; n < count; ++n)
                out.push_back(kTwoPi * static_cast<double>(n) / static_cast<double>(count));
            break;
        case AngleRule::Kind::UniformRandom: {
            std::mt19937_64 rng(rule.seed);
            for (int n = 0; n < count; ++n) {
                // top 53 bits -> uniform in [0,1); portable across library implementations
                const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
                out.push_back(u * kTwoPi);
            }
            break;
        }
        case AngleRule::Kind::FixedList:
            if (static_cast<int>(rule.angles.size()) != count)
                throw std::invalid_argument("angle_rule: fixed list has " +
                                            std::to_string(rule.angles.size()) +
                                            " angles, need " + std::to_string(count));
            out = rule.angles;
            break;
    }
    return out;
}

}  // namespace

AngleRule AngleRule::uniform_random(std::uint64_t seed) {
    AngleRule r;
    r.kind = Kind::UniformRandom;
    r.seed = seed;
    return r;
}

AngleRule AngleRule::equispaced() {
    AngleRule r;
    r.kind = Kind::Equispaced;
    return r;
}

AngleRule AngleRule::fixed_list(std::vector<double> angles) {
    AngleRule r;
    r.kind = Kind::FixedList;
    r.angles = std::move(angles);
    return r;
}

ZeroSequence ZeroSequence::from_entries(std::vector<Zero> entries, bool allow_origin) {
    ZeroSequence seq;
    double sum = 0.0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const double eps = entries[i].eps;
        const bool origin_ok = allow_origin && eps == 1.0;
        if (!(eps > 0.0) || (!(eps < 1.0) && !origin_ok))
            throw std::invalid_argument("zero " + std::to_string(i + 1) +
                                        ": gap must lie in (0,1), got " + std::to_string(eps));
        if (i > 0 && entries[i - 1].eps < eps)
            throw std::invalid_argument("zero " + std::to_string(i + 1) +
                                        ": gaps must be nonincreasing (moduli nondecreasing)");
        if (!std::isfinite(entries[i].theta))
            throw std::invalid_argument("zero " + std::to_string(i + 1) + ": angle not finite");
        sum += eps;
    }
    seq.entries_ = std::move(entries);
    seq.eps_sum_ = sum;
    seq.allow_origin_ = allow_origin;
    return seq;
}

ZeroSequence ZeroSequence::prefix(std::size_t n) const {
    std::vector<Zero> head(entries_.begin(),
                           entries_.begin() + static_cast<std::ptrdiff_t>(std::min(n, entries_.size())));
    return from_entries(std::move(head), allow_origin_);
}

ZeroSequence generate_geometric(double c, double delta, int count, const AngleRule& rule) {
    if (!(c > 0.0)) throw std::invalid_argument("generate_geometric: c must be positive");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("generate_geometric: delta must lie in (0,1)");
    if (count < 1) throw std::invalid_argument("generate_geometric: count must be >= 1");
    if (!(c * delta < 1.0))
        throw std::invalid_argument("generate_geometric: c*delta >= 1 puts the first zero outside the disc");

    const auto angles = make_angles(rule, count);
    std::vector<Zero> entries;
    entries.reserve(static_cast<std::size_t>(count));
    double eps = c;
    for (int n = 1; n <= count; ++n) {
        eps *= delta;
        if (eps < kMinEps)
            throw std::invalid_argument("generate_geometric: gap underflows below 2^-500 at n=" +
                                        std::to_string(n) + "; reduce count");
        entries.push_back({eps, angles[static_cast<std::size_t>(n - 1)]});
    }
    return ZeroSequence::from_entries(std::move(entries));
}

ZeroSequence generate_power(double q, int count, const AngleRule& rule) {
    if (!(q > 1.0)) throw std::invalid_argument("generate_power: q must exceed 1");
    if (count < 1) throw std::invalid_argument("generate_power: count must be >= 1");

    const auto angles = make_angles(rule, count);
    std::vector<Zero> entries;
    entries.reserve(static_cast<std::size_t>(count));
    for (int n = 1; n <= count; ++n) {
        const double eps = std::pow(static_cast<double>(n + 1), -q);
        if (eps < kMinEps)
            throw std::invalid_argument("generate_power: gap underflows below 2^-500 at n=" +
                                        std::to_string(n) + "; reduce count");
        entries.push_back({eps, angles[static_cast<std::size_t>(n - 1)]});
    }
    return ZeroSequence::from_entries(std::move(entries));
}

DyadicCensus dyadic_census(const ZeroSequence& seq) {
    if (seq.empty()) throw std::invalid_argument("dyadic_census: empty sequence");

    DyadicCensus census;
    for (const Zero& z : seq) {
        // Annulus test against exact powers of two; the rounded log2 only
        // seeds the candidate range.
        const int k0 = static_cast<int>(std::floor(std::log2(1.0 / z.eps)));
        for (int k = std::max(0, k0 - 1); k <= k0 + 1; ++k) {
            if (std::ldexp(1.0, -k - 1) <= z.eps && z.eps <= std::ldexp(1.0, -k))
                ++census.counts[k];
        }
    }
    for (const auto& [k, n] : census.counts) census.max_count = std::max(census.max_count, n);
    return census;
}

ExponentialCheck is_exponential(const ZeroSequence& seq, std::optional<long> m_bound) {
    const DyadicCensus census = dyadic_census(seq);
    ExponentialCheck check;
    check.m_observed = census.max_count;
    check.flag = !m_bound || census.max_count <= *m_bound;
    return check;
}

GeometricEnvelope fit_geometric_envelope(const ZeroSequence& seq) {
    if (seq.size() < 2) throw std::invalid_argument("fit_geometric_envelope: need length >= 2");

    const std::size_t n = seq.size();
    GeometricEnvelope env;
    const std::size_t k_max = std::min<std::size_t>(10, n - 1);
    for (std::size_t k = 1; k <= k_max; ++k) {
        double worst = 0.0;
        for (std::size_t i = 0; i + k < n; ++i)
            worst = std::max(worst, seq[i + k].eps / seq[i].eps);
        env.alpha.push_back(worst);
    }

    // Minimal one-step contraction rate, then lift c until the envelope
    // dominates pointwise. Exact-geometric inputs recover (c, delta) exactly.
    env.delta = env.alpha[0];
    double c = 0.0;
    double dn = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        dn *= env.delta;
        c = std::max(c, seq[i].eps / dn);
    }
    env.c = c;
    return env;
}

long lemma1_exponent(long k, double mu, double eps) {
    const double ratio = 100.0 * static_cast<double>(k) * static_cast<double>(k) / (mu * eps);
    if (ratio <= 1.0) return 0;
    return static_cast<long>(std::ceil(std::log2(ratio) / 2.0));
}

Lemma1Result lemma1_construct(const ZeroSequence& seq, double mu) {
    if (!(mu > 10.0)) throw std::invalid_argument("lemma1_construct: mu must exceed 10");
    if (seq.empty()) throw std::invalid_argument("lemma1_construct: empty sequence");
    if (!(seq[0].eps <= 1.0 / mu))
        throw std::invalid_argument("lemma1_construct: condition (a) fails, 1-|w_1| > 1/mu");
    if (seq.size() >= 2) {
        const GeometricEnvelope env = fit_geometric_envelope(seq);
        const bool contracting =
            std::any_of(env.alpha.begin(), env.alpha.end(), [](double a) { return a < 1.0; });
        if (!contracting)
            throw std::invalid_argument(
                "lemma1_construct: condition (b) fails, no lag K <= 10 with ratio alpha(K) < 1");
    }

    Lemma1Result result;
    result.mu = mu;
    result.exponents.reserve(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const long k = static_cast<long>(i) + 1;
        const long nk = lemma1_exponent(k, mu, seq[i].eps);
        result.exponents.push_back(nk);
        result.s_c += std::ldexp(seq[i].eps, static_cast<int>(nk));
        result.s_d += std::ldexp(1.0 / seq[i].eps, static_cast<int>(-2 * nk));
    }
    return result;
}

}  // namespace ebp
