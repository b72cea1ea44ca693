#ifndef EXITKIT_CODES_HPP
#define EXITKIT_CODES_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "exitkit/gf2.hpp"

// Code families (Reed-Muller, BCH/eBCH, quadratic residue) plus the code
// transforms dual / puncture / extend and rate-selection rules.
//
// Position conventions (0-based throughout):
//  - RM(v,n): position t < N-1 evaluates at the n-bit point with value t+1,
//    position N-1 evaluates at the all-zero point.
//  - BCH(v,n): position t is the coefficient of x^t in the cyclic code.
//  - Extended codes: the appended parity bit is the last position.

namespace exitkit {

struct DminInfo {
    std::size_t value = 0;
    bool exact = false;
    std::string source;  // "enumeration", "rm-formula", "designed-distance", ...
};

struct LinearCode {
    std::size_t N = 0;  // blocklength
    std::size_t K = 0;  // dimension
    BitMatrix G;        // K x N generator
    BitMatrix H;        // (N-K) x N parity check
    std::string label;
    DminInfo dmin;

    double rate() const { return double(K) / double(N); }
};

// Wraps a generator matrix as a LinearCode, checking rank(G) = rows,
// G H^T = 0, properness (no all-zero generator column) and 0 < K < N.
LinearCode make_code(BitMatrix generator, std::string label, DminInfo dmin = {});

LinearCode rm_code(int v, int n);
LinearCode bch_code(int v, int n);
LinearCode ebch_code(int v, int n);
Gf2Poly bch_generator(int v, int n);  // f(n, v)
LinearCode qr_code(int N);
LinearCode extended_qr_code(int N);

// Small stock codes used all over the test and analysis surface.
LinearCode repetition_code(std::size_t N);
LinearCode single_parity_check_code(std::size_t N);
LinearCode direct_sum(const LinearCode& a, const LinearCode& b);

LinearCode dual(const LinearCode& c);
LinearCode puncture(const LinearCode& c, const std::vector<std::size_t>& positions);
LinearCode extend_parity(const LinearCode& c);

// Exact by codeword enumeration when K <= cap, otherwise the family bound
// recorded at construction.
DminInfo min_distance(const LinearCode& c, int enumeration_cap = 24);

// Gaussian upper-tail Q and its inverse (bisection to 1e-10 on [-40, 40]).
double q_func(double t);
double q_inv(double y);

struct RateChoice {
    int v = 0;
    double rate = 0.0;
};

// v_n = max{ floor(n/2 + sqrt(n)/2 * Qinv(1-r)), 0 } and the resulting rate.
RateChoice rm_rate_sequence(double target_rate, int n);

// Smallest v whose generator degree lands in [N(1-r), N(1-r) + n].
RateChoice bch_rate_select(double target_rate, int n);

std::uint64_t binomial(unsigned n, unsigned k);

// Text code format: line 1 "N K label", then K generator rows of N chars.
void write_code(std::ostream& os, const LinearCode& c);
LinearCode read_code(std::istream& is);

}  // namespace exitkit

#endif
