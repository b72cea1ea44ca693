#ifndef EXITKIT_EXIT_HPP
#define EXITKIT_EXIT_HPP

#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "exitkit/codes.hpp"

// Exact EXIT analysis: weight enumerators of the unrecoverable-pattern sets
// and their pivotal boundaries, EXIT polynomials, influences, the area
// theorem (exact rationals), Margulis-Russo, duality, inverse EXIT and the
// closed-form width/erasure bounds.

namespace exitkit {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

BigInt binomial_big(unsigned n, unsigned k);

// Counts of a pattern set over {0,1}^M by Hamming weight.
struct WeightEnumerator {
    std::size_t ambient = 0;            // M
    std::vector<std::uint64_t> counts;  // size M + 1

    std::uint64_t total() const;
};

// mu_p of the counted set: sum_w c_w p^w (1-p)^{M-w}, and d/dp of it.
double enum_eval(const WeightEnumerator& e, double p);
double enum_derivative(const WeightEnumerator& e, double p);

// Exact integral over p in [0,1]: sum_w c_w / ((M+1) C(M,w)).
Rational enum_area(const WeightEnumerator& e);

// Dense indicator over {0,1}^M, bit-packed; M <= 31.
class PatternIndicator {
public:
    explicit PatternIndicator(std::size_t M);

    std::size_t ambient() const { return M_; }
    bool get(std::uint64_t idx) const { return (w_[idx >> 6] >> (idx & 63)) & 1u; }
    void set(std::uint64_t idx) { w_[idx >> 6] |= std::uint64_t{1} << (idx & 63); }

    // Superset closure: marks every superset of a marked pattern.
    void up_close();

    WeightEnumerator counts_by_weight() const;
    // Both-sided pivotal set of coordinate j (Definition-16 style).
    WeightEnumerator pivotal_counts(std::size_t j) const;

private:
    std::size_t M_;
    std::vector<std::uint64_t> w_;
};

// The set Omega'_i of erasure patterns (length N-1, position i removed)
// that prevent indirect recovery of bit i.  Stored either directly or as
// the complement-reflected recoverability set, depending on which side of
// the code was cheaper to enumerate.
class OmegaSet {
public:
    std::size_t ambient() const { return ind_.ambient(); }
    bool contains(std::uint64_t idx) const;
    WeightEnumerator weight_counts() const;
    WeightEnumerator pivotal_counts(std::size_t j_m) const;  // j in M-space

    static OmegaSet direct(PatternIndicator ind);
    static OmegaSet reflected(PatternIndicator recoverable);

private:
    PatternIndicator ind_{0};
    bool reflected_ = false;
};

// Compress an N-bit pattern mask to M-space by deleting bit i.
std::uint64_t compress_index(std::uint64_t mask, std::size_t i);
std::uint64_t expand_index(std::uint64_t idx, std::size_t i);

// Omega'_i via up-closure of codeword supports (primal or dual side,
// whichever enumerates fewer words).  Requires N - 1 <= 31 and N <= cap.
OmegaSet omega_set(const LinearCode& c, std::size_t i, std::size_t cap = 22);

// Same set computed by sweeping all 2^{N-1} patterns through the erasure
// decoder; independent route kept for cross-checks.  N <= 18.
OmegaSet omega_set_via_decoder(const LinearCode& c, std::size_t i);

WeightEnumerator omega_enumerator(const LinearCode& c, std::size_t i, std::size_t cap = 22);
// j is a code position distinct from i.
WeightEnumerator boundary_enumerator(const LinearCode& c, std::size_t i, std::size_t j,
                                     std::size_t cap = 22);

// Per-bit EXIT data: the Omega enumerator and all N-1 boundary enumerators.
struct BitExit {
    std::size_t N = 0;
    std::size_t i = 0;
    WeightEnumerator omega;
    std::vector<WeightEnumerator> boundary;  // indexed by M-space coordinate
};
BitExit bit_exit_full(const LinearCode& c, std::size_t i, std::size_t cap = 22);

// Average EXIT function, kept as per-bit enumerators so that the area
// computation stays an exact rational.
class ExitCurve {
public:
    ExitCurve(std::size_t N, std::size_t K, std::vector<WeightEnumerator> per_bit);

    double eval(double p) const;
    double derivative(double p) const;
    Rational area() const;
    double inverse(double t) const;          // p_t = h^{-1}(t)
    double width(double eps) const;          // p_{1-eps} - p_eps

    std::size_t blocklength() const { return N_; }
    std::size_t dimension() const { return K_; }
    const std::vector<WeightEnumerator>& per_bit() const { return bits_; }

private:
    std::size_t N_, K_;
    std::vector<WeightEnumerator> bits_;
};

ExitCurve average_exit(const LinearCode& c, std::size_t cap = 22);
// h_i alone; equals the average exactly when the code is transitive.
ExitCurve single_bit_exit(const LinearCode& c, std::size_t i, std::size_t cap = 22);

// inf{p : h(p) >= t} by bisection on a strictly increasing h.
double inverse_increasing(const std::function<double(double)>& h, double t);

// |dh_i/dp - sum_j influence_j(p)|.
double margulis_russo_residual(const BitExit& be, double p);

// Closed-form bounds.
double width_bound_log(std::size_t M, double eps, double C);  // 2 log((1-eps)/eps)/(C log M)
double width_bound_general(double a, double b, double w, double eps1, double eps2);
double tail_bound_exp(double a, double b, double w, double p_half, double gamma);

struct ErasureBounds {
    double Pb = 0.0;       // p * h(p)
    double PB_union = 0.0; // N * Pb
    double PB_dmin = 0.0;  // (N / dmin) * Pb
};
ErasureBounds erasure_prob_bounds(std::size_t N, std::size_t dmin, double p, double h_at_p);

enum class CertificateMode { BchStyle, RmStyle };
struct CapacityCertificate {
    double eps_n = 0.0;
    double pB_bound = 0.0;
    double p_eps = 0.0;
};
// Finite-n values of the block-erasure certificate chains: eps_n and the
// induced P_B bound, plus the threshold location from the supplied inverse.
CapacityCertificate block_capacity_certificate(
    double N, double dmin, const std::function<double(double)>& inverse_exit,
    CertificateMode mode);

// delta_n = eps/(1-eps) + 2 log(1/eps) / (r log(N-1)).
double low_rate_gap(double rate, double N, double eps);
// the recommended eps_n = 1/log(r log N); requires r log N > e.
double low_rate_recommended_eps(double rate, double N);

// Slack of h <= ((N-l)/N) h_hat + l/N at one p; nonnegative when the
// puncturing bound holds.
double puncture_bound_slack(double h, double h_hat, std::size_t N, std::size_t ell);

// Multivariate EXIT function h_i(p_1, ..., p_N) by direct pattern
// summation; N <= 13.  Entry i of pvec is ignored.
double multivariate_exit(const LinearCode& c, std::size_t i, const std::vector<double>& pvec);
// H(X | Y(pvec)), the block conditional entropy; N <= 13.
double block_entropy(const LinearCode& c, const std::vector<double>& pvec);

}  // namespace exitkit

#endif
