#ifndef EXITKIT_SIMULATE_HPP
#define EXITKIT_SIMULATE_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "exitkit/decode.hpp"

// Monte Carlo estimation of h(p), P_b, P_B for blocklengths beyond exact
// enumeration, transition-width estimation, and the sharpening experiment
// over the rate-1/2 Reed-Muller family.
//
// Determinism contract: every trial is a pure function of
// (seed, stream, point index, trial index) through a counter-based
// generator, so results are independent of worker count and run order.

namespace exitkit {

// splitmix64 finalizer-style mixer.
std::uint64_t mix64(std::uint64_t x);

// Counter-based per-trial stream.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t point,
             std::uint64_t trial);
    std::uint64_t next_u64();
    double next_u01();  // uniform in [0, 1)
    bool bernoulli(double p) { return next_u01() < p; }

private:
    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
};

struct McEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

struct PbPbEstimate {
    McEstimate pb;  // average bit erasure probability
    McEstimate pB;  // block erasure probability
};

// h(p) estimate: each trial draws an i.i.d. erasure pattern, treats the
// probed bit as erased regardless, and records indirect-recovery failure.
// With single_bit set, bit 0 is probed every trial (valid for transitive
// codes); otherwise the probed bit cycles round-robin over positions.
McEstimate estimate_exit(const LinearCode& c, double p, std::uint64_t trials,
                         std::uint64_t seed, bool single_bit = false,
                         std::uint64_t point_index = 0);

// Joint P_b / P_B estimates from one pattern stream.  Per trial P_b gains
// (undetermined bits)/N and P_B the any-failure indicator, so the sample
// ordering P_b <= P_B holds trial by trial.
PbPbEstimate estimate_pb_pB(const LinearCode& c, double p, std::uint64_t trials,
                            std::uint64_t seed, std::uint64_t point_index = 0);

struct GridSpec {
    double start = 0.0;
    double stop = 1.0;
    double step = 0.01;

    std::vector<double> points() const;  // inclusive of both ends
};

struct CurvePoint {
    double p = 0.0;
    McEstimate h;
};

struct CurveEstimate {
    std::vector<CurvePoint> raw;
    std::vector<double> fit;  // isotonic (nondecreasing) fit of the means
};

CurveEstimate estimate_curve(const LinearCode& c, const GridSpec& grid,
                             std::uint64_t trials_per_point, std::uint64_t seed,
                             bool single_bit = false);

// Pool-adjacent-violators projection onto nondecreasing sequences.
std::vector<double> isotonic_fit(const std::vector<double>& y);

struct WidthEstimate {
    double p_lo = 0.0;     // estimated p_eps
    double p_hi = 0.0;     // estimated p_{1-eps}
    double width = 0.0;
    double uncertainty = 0.0;  // one grid step plus stderr-induced slack
    CurveEstimate curve;
};

// Estimates the transition width p_{1-eps} - p_eps by inverting the
// isotonic fit with linear interpolation.  Throws std::range_error when a
// crossing falls outside the grid or the two crossings cannot be separated
// at the grid resolution.
WidthEstimate estimate_width(const LinearCode& c, double eps, const GridSpec& grid,
                             std::uint64_t trials_per_point, std::uint64_t seed,
                             bool single_bit = false);

struct Figure1Row {
    int n = 0;
    std::size_t N = 0;
    double rate = 0.0;
    double p = 0.0;
    McEstimate h, pb, pB;
};

struct Figure1Result {
    std::vector<Figure1Row> rows;
    std::vector<int> n_list;
    std::vector<double> p_half;  // estimated p_{1/2} per n
    std::vector<double> width;   // estimated width at eps = 0.1 per n
};

// The rate-1/2 Reed-Muller sharpening experiment: for each odd n builds
// RM(floor(n/2), n) and estimates h, P_b, P_B on the grid.
Figure1Result figure1_experiment(const std::vector<int>& n_list, const GridSpec& grid,
                                 std::uint64_t trials_per_point, std::uint64_t seed);

// CSV with header n,N,rate,p,h_mean,h_stderr,pb_mean,pb_stderr,pB_mean,
// pB_stderr,trials,seed; floats at 10 significant digits, locale-free.
void write_figure1_csv(std::ostream& os, const Figure1Result& r,
                       std::uint64_t trials_per_point, std::uint64_t seed);

}  // namespace exitkit

#endif
