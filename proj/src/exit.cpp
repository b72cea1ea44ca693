#include "exitkit/exit.hpp"

#include "exitkit/decode.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace exitkit {

BigInt binomial_big(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::uint64_t WeightEnumerator::total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

double enum_eval(const WeightEnumerator& e, double p) {
    const std::size_t M = e.ambient;
    double sum = 0.0;
    for (std::size_t w = 0; w <= M; ++w) {
        if (e.counts[w] == 0) continue;
        sum += double(e.counts[w]) * std::pow(p, double(w)) * std::pow(1.0 - p, double(M - w));
    }
    return sum;
}

double enum_derivative(const WeightEnumerator& e, double p) {
    const std::size_t M = e.ambient;
    double sum = 0.0;
    for (std::size_t w = 0; w <= M; ++w) {
        if (e.counts[w] == 0) continue;
        const double c = double(e.counts[w]);
        if (w > 0)
            sum += c * double(w) * std::pow(p, double(w - 1)) * std::pow(1.0 - p, double(M - w));
        if (w < M)
            sum -= c * double(M - w) * std::pow(p, double(w)) * std::pow(1.0 - p, double(M - w - 1));
    }
    return sum;
}

Rational enum_area(const WeightEnumerator& e) {
    // integral of p^w (1-p)^{M-w} over [0,1] is 1 / ((M+1) C(M,w))
    const unsigned M = unsigned(e.ambient);
    Rational area = 0;
    for (unsigned w = 0; w <= M; ++w) {
        if (e.counts[w] == 0) continue;
        area += Rational(BigInt(e.counts[w]), BigInt(M + 1) * binomial_big(M, w));
    }
    return area;
}

namespace {

constexpr std::uint64_t kLowMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull,
};

}  // namespace

PatternIndicator::PatternIndicator(std::size_t M) : M_(M) {
    if (M > 31) throw std::runtime_error("PatternIndicator: ambient dimension above cap");
    const std::uint64_t n = std::uint64_t{1} << M;
    w_.assign(std::size_t(std::max<std::uint64_t>(n / 64, 1)), 0);
}

void PatternIndicator::up_close() {
    for (std::size_t j = 0; j < M_; ++j) {
        if (j < 6) {
            const std::uint64_t mask = kLowMask[j];
            const int s = 1 << j;
            for (auto& w : w_) w |= (w & mask) << s;
        } else {
            const std::size_t stride = std::size_t{1} << (j - 6);
            for (std::size_t base = 0; base < w_.size(); base += 2 * stride)
                for (std::size_t k = 0; k < stride; ++k)
                    w_[base + stride + k] |= w_[base + k];
        }
    }
}

WeightEnumerator PatternIndicator::counts_by_weight() const {
    // class masks: bits b in [0,64) grouped by popcount(b)
    static const auto kClass = [] {
        std::array<std::uint64_t, 7> cls{};
        for (int b = 0; b < 64; ++b) cls[std::size_t(std::popcount(unsigned(b)))] |= std::uint64_t{1} << b;
        return cls;
    }();
    WeightEnumerator e{M_, std::vector<std::uint64_t>(M_ + 1, 0)};
    if (M_ < 6) {
        const std::uint64_t w = w_[0];
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << M_); ++b)
            if ((w >> b) & 1) ++e.counts[std::size_t(std::popcount(b))];
        return e;
    }
    for (std::size_t k = 0; k < w_.size(); ++k) {
        const std::uint64_t w = w_[k];
        if (!w) continue;
        const int base = std::popcount(std::uint64_t(k));
        for (int c = 0; c <= 6; ++c) {
            const int n = std::popcount(w & kClass[std::size_t(c)]);
            if (n) e.counts[std::size_t(base + c)] += std::uint64_t(n);
        }
    }
    return e;
}

WeightEnumerator PatternIndicator::pivotal_counts(std::size_t j) const {
    if (j >= M_) throw std::invalid_argument("pivotal_counts: coordinate out of range");
    PatternIndicator piv(M_);
    if (j < 6) {
        const std::uint64_t mask = kLowMask[j];
        const int s = 1 << j;
        for (std::size_t k = 0; k < w_.size(); ++k) {
            const std::uint64_t w = w_[k];
            const std::uint64_t swapped = ((w & mask) << s) | ((w >> s) & mask);
            piv.w_[k] = w ^ swapped;
        }
    } else {
        const std::size_t stride = std::size_t{1} << (j - 6);
        for (std::size_t base = 0; base < w_.size(); base += 2 * stride)
            for (std::size_t k = 0; k < stride; ++k) {
                const std::uint64_t x = w_[base + k] ^ w_[base + stride + k];
                piv.w_[base + k] = x;
                piv.w_[base + stride + k] = x;
            }
    }
    return piv.counts_by_weight();
}

OmegaSet OmegaSet::direct(PatternIndicator ind) {
    OmegaSet s;
    s.ind_ = std::move(ind);
    s.reflected_ = false;
    return s;
}

OmegaSet OmegaSet::reflected(PatternIndicator recoverable) {
    OmegaSet s;
    s.ind_ = std::move(recoverable);
    s.reflected_ = true;
    return s;
}

bool OmegaSet::contains(std::uint64_t idx) const {
    if (!reflected_) return ind_.get(idx);
    const std::uint64_t full = (std::uint64_t{1} << ind_.ambient()) - 1;
    return !ind_.get(full ^ idx);
}

WeightEnumerator OmegaSet::weight_counts() const {
    const std::size_t M = ind_.ambient();
    WeightEnumerator inner = ind_.counts_by_weight();
    if (!reflected_) return inner;
    WeightEnumerator e{M, std::vector<std::uint64_t>(M + 1, 0)};
    for (std::size_t w = 0; w <= M; ++w)
        e.counts[w] = binomial(unsigned(M), unsigned(w)) - inner.counts[M - w];
    return e;
}

WeightEnumerator OmegaSet::pivotal_counts(std::size_t j_m) const {
    WeightEnumerator inner = ind_.pivotal_counts(j_m);
    if (!reflected_) return inner;
    const std::size_t M = ind_.ambient();
    WeightEnumerator e{M, std::vector<std::uint64_t>(M + 1, 0)};
    for (std::size_t w = 0; w <= M; ++w) e.counts[w] = inner.counts[M - w];
    return e;
}

std::uint64_t compress_index(std::uint64_t mask, std::size_t i) {
    const std::uint64_t low = mask & ((std::uint64_t{1} << i) - 1);
    return low | ((mask >> (i + 1)) << i);
}

std::uint64_t expand_index(std::uint64_t idx, std::size_t i) {
    const std::uint64_t low = idx & ((std::uint64_t{1} << i) - 1);
    return low | ((idx >> i) << (i + 1));
}

namespace {

std::vector<std::uint64_t> row_masks(const BitMatrix& m) {
    if (m.cols() > 64) throw std::runtime_error("row_masks: blocklength above 64");
    std::vector<std::uint64_t> out(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) out[r] = m.row(r).word(0);
    return out;
}

}  // namespace

OmegaSet omega_set(const LinearCode& c, std::size_t i, std::size_t cap) {
    if (i >= c.N) throw std::invalid_argument("omega_set: bit index out of range");
    if (c.N > cap) throw std::runtime_error("omega_set: blocklength above enumeration cap");
    if (c.N - 1 > 31) throw std::runtime_error("omega_set: pattern space above 2^31");
    const bool primal = c.K <= c.N - c.K;
    const auto rows = row_masks(primal ? c.G : c.H);
    const std::size_t dim = rows.size();

    PatternIndicator ind(c.N - 1);
    std::uint64_t cur = 0;
    const std::uint64_t bit_i = std::uint64_t{1} << i;
    const std::uint64_t total = std::uint64_t{1} << dim;
    for (std::uint64_t w = 1; w < total; ++w) {
        cur ^= rows[std::size_t(std::countr_zero(w))];
        if (cur & bit_i) ind.set(compress_index(cur & ~bit_i, i));
    }
    ind.up_close();
    return primal ? OmegaSet::direct(std::move(ind)) : OmegaSet::reflected(std::move(ind));
}

OmegaSet omega_set_via_decoder(const LinearCode& c, std::size_t i) {
    if (c.N > 18) throw std::runtime_error("omega_set_via_decoder: blocklength above cap");
    PatternIndicator ind(c.N - 1);
    const std::uint64_t total = std::uint64_t{1} << (c.N - 1);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        const std::uint64_t mask = expand_index(idx, i) | (std::uint64_t{1} << i);
        BitVec erased(c.N);
        for (std::size_t t = 0; t < c.N; ++t)
            if ((mask >> t) & 1) erased.set(t, true);
        if (bit_unrecoverable(c, erased, i)) ind.set(idx);
    }
    return OmegaSet::direct(std::move(ind));
}

WeightEnumerator omega_enumerator(const LinearCode& c, std::size_t i, std::size_t cap) {
    return omega_set(c, i, cap).weight_counts();
}

WeightEnumerator boundary_enumerator(const LinearCode& c, std::size_t i, std::size_t j,
                                     std::size_t cap) {
    if (j == i || j >= c.N) throw std::invalid_argument("boundary_enumerator: bad j");
    const std::size_t j_m = j < i ? j : j - 1;
    return omega_set(c, i, cap).pivotal_counts(j_m);
}

BitExit bit_exit_full(const LinearCode& c, std::size_t i, std::size_t cap) {
    OmegaSet om = omega_set(c, i, cap);
    BitExit be;
    be.N = c.N;
    be.i = i;
    be.omega = om.weight_counts();
    be.boundary.reserve(c.N - 1);
    for (std::size_t j_m = 0; j_m + 1 < c.N; ++j_m)
        be.boundary.push_back(om.pivotal_counts(j_m));
    return be;
}

ExitCurve::ExitCurve(std::size_t N, std::size_t K, std::vector<WeightEnumerator> per_bit)
    : N_(N), K_(K), bits_(std::move(per_bit)) {
    if (bits_.empty()) throw std::invalid_argument("ExitCurve: no enumerators");
}

double ExitCurve::eval(double p) const {
    double s = 0.0;
    for (const auto& e : bits_) s += enum_eval(e, p);
    return s / double(bits_.size());
}

double ExitCurve::derivative(double p) const {
    double s = 0.0;
    for (const auto& e : bits_) s += enum_derivative(e, p);
    return s / double(bits_.size());
}

Rational ExitCurve::area() const {
    Rational s = 0;
    for (const auto& e : bits_) s += enum_area(e);
    return s / int(bits_.size());
}

double ExitCurve::inverse(double t) const {
    return inverse_increasing([this](double p) { return eval(p); }, t);
}

double ExitCurve::width(double eps) const {
    if (eps <= 0.0 || eps > 0.5) throw std::invalid_argument("width: eps in (0, 1/2]");
    return inverse(1.0 - eps) - inverse(eps);
}

ExitCurve average_exit(const LinearCode& c, std::size_t cap) {
    std::vector<WeightEnumerator> bits;
    bits.reserve(c.N);
    for (std::size_t i = 0; i < c.N; ++i) bits.push_back(omega_enumerator(c, i, cap));
    return ExitCurve(c.N, c.K, std::move(bits));
}

ExitCurve single_bit_exit(const LinearCode& c, std::size_t i, std::size_t cap) {
    std::vector<WeightEnumerator> bits{omega_enumerator(c, i, cap)};
    return ExitCurve(c.N, c.K, std::move(bits));
}

double inverse_increasing(const std::function<double(double)>& h, double t) {
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("inverse_increasing: t in [0,1]");
    if (h(0.0) >= t) return 0.0;
    if (h(1.0) < t) return 1.0;
    double lo = 0.0, hi = 1.0;  // h(lo) < t <= h(hi)
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (h(mid) >= t) hi = mid; else lo = mid;
    }
    return hi;  // ties toward the inf
}

double margulis_russo_residual(const BitExit& be, double p) {
    double total_influence = 0.0;
    for (const auto& b : be.boundary) total_influence += enum_eval(b, p);
    return std::abs(enum_derivative(be.omega, p) - total_influence);
}

double width_bound_log(std::size_t M, double eps, double C) {
    if (M < 2 || eps <= 0.0 || eps > 0.5 || C <= 0.0)
        throw std::invalid_argument("width_bound_log: bad arguments");
    return 2.0 * std::log((1.0 - eps) / eps) / (C * std::log(double(M)));
}

double width_bound_general(double a, double b, double w, double eps1, double eps2) {
    if (!(0.0 <= a && a < b && b <= 1.0) || w <= 0.0 ||
        !(0.0 < eps1 && eps1 <= eps2 && eps2 <= 1.0))
        throw std::invalid_argument("width_bound_general: bad arguments");
    return a + (1.0 - b) +
           (std::log(eps2 / (1.0 - eps2)) + std::log((1.0 - eps1) / eps1)) / w;
}

double tail_bound_exp(double a, double b, double w, double p_half, double gamma) {
    if (!(0.0 <= a && a < b && b <= 1.0) || w <= 0.0 || gamma < 0.0 || gamma > p_half)
        throw std::invalid_argument("tail_bound_exp: bad arguments");
    return std::exp(-w * ((p_half - gamma) - (a + 1.0 - b)));
}

ErasureBounds erasure_prob_bounds(std::size_t N, std::size_t dmin, double p, double h_at_p) {
    ErasureBounds b;
    b.Pb = p * h_at_p;
    b.PB_union = double(N) * b.Pb;
    b.PB_dmin = dmin > 0 ? double(N) / double(dmin) * b.Pb : b.PB_union;
    return b;
}

CapacityCertificate block_capacity_certificate(
    double N, double dmin, const std::function<double(double)>& inverse_exit,
    CertificateMode mode) {
    if (N < 3.0) throw std::invalid_argument("block_capacity_certificate: N too small");
    CapacityCertificate cert;
    if (mode == CertificateMode::BchStyle) {
        if (dmin <= 0.0) throw std::invalid_argument("block_capacity_certificate: dmin > 0");
        cert.eps_n = dmin / (N * std::log(N));
        cert.pB_bound = (N / dmin) * cert.eps_n;  // = 1 / log N
    } else {
        cert.eps_n = 1.0 / (N * N);
        cert.pB_bound = N * cert.eps_n;  // = 1 / N
    }
    cert.p_eps = inverse_exit ? inverse_exit(cert.eps_n) : 0.0;
    return cert;
}

double low_rate_gap(double rate, double N, double eps) {
    if (eps <= 0.0 || eps >= 1.0 || rate <= 0.0 || rate > 1.0 || N < 3.0)
        throw std::invalid_argument("low_rate_gap: bad arguments");
    return eps / (1.0 - eps) + 2.0 * std::log(1.0 / eps) / (rate * std::log(N - 1.0));
}

double low_rate_recommended_eps(double rate, double N) {
    const double x = rate * std::log(N);
    if (x <= std::exp(1.0))
        throw std::invalid_argument("low_rate_recommended_eps: r log N must exceed e");
    return 1.0 / std::log(x);
}

double puncture_bound_slack(double h, double h_hat, std::size_t N, std::size_t ell) {
    if (ell >= N) throw std::invalid_argument("puncture_bound_slack: ell < N required");
    return double(N - ell) / double(N) * h_hat + double(ell) / double(N) - h;
}

double multivariate_exit(const LinearCode& c, std::size_t i, const std::vector<double>& pvec) {
    if (c.N > 13) throw std::runtime_error("multivariate_exit: blocklength above cap");
    if (pvec.size() != c.N) throw std::invalid_argument("multivariate_exit: pvec size");
    OmegaSet om = omega_set(c, i, 13);
    const std::size_t M = c.N - 1;
    double sum = 0.0;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << M); ++idx) {
        if (!om.contains(idx)) continue;
        double prob = 1.0;
        for (std::size_t t = 0; t < M; ++t) {
            const std::size_t pos = t < i ? t : t + 1;
            prob *= ((idx >> t) & 1) ? pvec[pos] : 1.0 - pvec[pos];
        }
        sum += prob;
    }
    return sum;
}

double block_entropy(const LinearCode& c, const std::vector<double>& pvec) {
    if (c.N > 13) throw std::runtime_error("block_entropy: blocklength above cap");
    if (pvec.size() != c.N) throw std::invalid_argument("block_entropy: pvec size");
    const auto g = row_masks(c.G);
    double sum = 0.0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << c.N); ++s) {
        // dim of the subcode supported inside s = K - rank(G outside s)
        const std::uint64_t outside = ~s & ((std::uint64_t{1} << c.N) - 1);
        std::vector<std::uint64_t> rows;
        rows.reserve(g.size());
        for (auto r : g) rows.push_back(r & outside);
        int rk = 0;
        for (std::size_t col = 0; col < c.N; ++col) {
            const std::uint64_t bit = std::uint64_t{1} << col;
            std::size_t piv = std::size_t(rk);
            while (piv < rows.size() && !(rows[piv] & bit)) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[piv], rows[std::size_t(rk)]);
            for (std::size_t k = 0; k < rows.size(); ++k)
                if (int(k) != rk && (rows[k] & bit)) rows[k] ^= rows[std::size_t(rk)];
            ++rk;
        }
        const int dim = int(c.K) - rk;
        if (dim == 0) continue;
        double prob = 1.0;
        for (std::size_t t = 0; t < c.N; ++t)
            prob *= ((s >> t) & 1) ? pvec[t] : 1.0 - pvec[t];
        sum += double(dim) * prob;
    }
    return sum;
}

}  // namespace exitkit
