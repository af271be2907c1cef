#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ebp {

/// One zero of a Blaschke product, stored as (gap, angle):
/// the point is z = (1 - eps) * e^{i*theta}.
///
/// Keeping the gap 1-|z| as the primary datum (instead of Cartesian
/// coordinates) lets downstream code form 1-|z|^2 = eps*(2-eps) and
/// |e^{i t} - z|^2 = eps^2 + 4*(1-eps)*sin^2((t-theta)/2) without
/// cancellation, even for gaps near machine epsilon.
struct Zero {
    double eps;    // 1 - |z|, in (0,1); eps == 1 encodes a zero at the origin
    double theta;  // argument of z, radians
};

/// Ordered zero list with the Blaschke bookkeeping attached.
///
/// Invariants enforced at construction:
///  - eps in (0,1) for every entry (eps == 1, a zero at the origin, is
///    admitted only when allow_origin is set),
///  - eps nonincreasing, i.e. moduli nondecreasing,
///  - the gap sum (the Blaschke sum) is finite and recorded.
class ZeroSequence {
public:
    ZeroSequence() = default;

    static ZeroSequence from_entries(std::vector<Zero> entries, bool allow_origin = false);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const Zero& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Zero>& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    /// Recorded Blaschke sum, sum of all gaps.
    double eps_sum() const { return eps_sum_; }
    bool allows_origin() const { return allow_origin_; }

    /// Modulus |z_i| = 1 - eps_i.
    double modulus(std::size_t i) const { return 1.0 - entries_[i].eps; }

    /// First n entries as a sequence of their own.
    ZeroSequence prefix(std::size_t n) const;

private:
    std::vector<Zero> entries_;
    double eps_sum_ = 0.0;
    bool allow_origin_ = false;
};

/// How angles are assigned by the generators.
struct AngleRule {
    enum class Kind { UniformRandom, Equispaced, FixedList };

    Kind kind = Kind::Equispaced;
    std::uint64_t seed = 0;
    std::vector<double> angles;  // FixedList only

    static AngleRule uniform_random(std::uint64_t seed);
    static AngleRule equispaced();
    static AngleRule fixed_list(std::vector<double> angles);
};

/// Geometric-gap generator: eps_n = c * delta^n, n = 1..count.
/// Rejects c*delta >= 1 (first zero would leave the disc) and truncations
/// deep enough that the gap underflows below 2^-500.
ZeroSequence generate_geometric(double c, double delta, int count, const AngleRule& rule);

/// Power-law generator: eps_n = (n+1)^{-q}, n = 1..count.
/// The index shift keeps eps_1 = 2^{-q} < 1; with eps_n = n^{-q} the first
/// gap would be 1 and be rejected. Requires q > 1 so the gap sum converges
/// along the full (untruncated) sequence.
ZeroSequence generate_power(double q, int count, const AngleRule& rule);

/// Zero counts per dyadic annulus 2^{-k-1} <= eps <= 2^{-k}, k >= 0.
///
/// Annuli are closed on both ends, so a gap equal to a dyadic power of two
/// is counted in both adjacent annuli. The double count changes max_count
/// by at most a factor 2 and none of the statistics built on top are
/// sensitive to it; sum of counts >= sequence length, with equality exactly
/// when no gap hits an endpoint.
struct DyadicCensus {
    std::map<int, long> counts;
    long max_count = 0;
};

DyadicCensus dyadic_census(const ZeroSequence& seq);

struct ExponentialCheck {
    bool flag = true;
    long m_observed = 0;
};

/// Reports the observed per-annulus maximum M. Finite sequences are always
/// exponential; when m_bound is given the flag says whether the observed M
/// stays within it, otherwise the flag is true and callers interpret growth
/// of m_observed across truncation lengths.
ExponentialCheck is_exponential(const ZeroSequence& seq, std::optional<long> m_bound = std::nullopt);

/// Fitted envelope eps_n <= c * delta^n together with the lag-K ratio table
/// alpha(K) = max_n eps_{n+K} / eps_n, K = 1..min(10, length-1).
struct GeometricEnvelope {
    double c = 0.0;
    double delta = 0.0;
    std::vector<double> alpha;  // alpha[K-1] holds alpha(K)

    double alpha_at(int k) const { return alpha.at(static_cast<std::size_t>(k) - 1); }
};

GeometricEnvelope fit_geometric_envelope(const ZeroSequence& seq);

/// Output of the constructive exponent choice: exponents n_k plus the two
/// sums they control, S_c = sum 2^{n_k} eps_k and S_d = sum 2^{-2 n_k}/eps_k.
/// The construction guarantees S_d <= mu.
struct Lemma1Result {
    std::vector<long> exponents;
    double s_c = 0.0;
    double s_d = 0.0;
    double mu = 0.0;
};

/// Exponent formula behind lemma1_construct: the least integer n >= 0 with
/// 2^{-2n}/eps <= mu/(100 k^2). Exposed for direct testing of the clamp.
long lemma1_exponent(long k, double mu, double eps);

/// Constructive sequence of exponents for mu > 10.
/// Preconditions mirror the hypotheses: (a) eps_1 <= 1/mu, (b) some lag
/// K <= 10 has alpha(K) < 1. Violations throw with the failing condition
/// named. Rounding the exact real exponent up to an integer only shrinks
/// each S_d term, so S_d <= (mu/100) * sum k^{-2} <= mu holds exactly.
Lemma1Result lemma1_construct(const ZeroSequence& seq, double mu);

}  // namespace ebp
