#include "exitkit/simulate.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "exitkit/codes.hpp"

namespace exitkit {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t point,
                   std::uint64_t trial) {
    std::uint64_t k = mix64(seed);
    k = mix64(k ^ mix64(stream * 0xD1B54A32D192ED03ull));
    k = mix64(k ^ mix64(point * 0x8CB92BA72F3D8DD7ull));
    key_ = mix64(k ^ mix64(trial * 0xABCD1234ABCD1234ull));
}

std::uint64_t TrialRng::next_u64() { return mix64(key_ + (++ctr_) * 0x9E3779B97F4A7C15ull); }

double TrialRng::next_u01() { return double(next_u64() >> 11) * 0x1.0p-53; }

namespace {

constexpr std::uint64_t kStreamExit = 1;
constexpr std::uint64_t kStreamBlock = 2;

BitVec draw_pattern(TrialRng& rng, std::size_t N, double p) {
    BitVec erased(N);
    for (std::size_t t = 0; t < N; ++t)
        if (rng.bernoulli(p)) erased.set(t, true);
    return erased;
}

double bernoulli_stderr(double mean, std::uint64_t trials) {
    return std::sqrt(mean * (1.0 - mean) / double(trials));
}

}  // namespace

McEstimate estimate_exit(const LinearCode& c, double p, std::uint64_t trials,
                         std::uint64_t seed, bool single_bit,
                         std::uint64_t point_index) {
    if (p < 0.0 || p > 1.0 || trials == 0)
        throw std::invalid_argument("estimate_exit: p in [0,1], trials >= 1");
    std::uint64_t fails = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng(seed, kStreamExit, point_index, t);
        BitVec erased = draw_pattern(rng, c.N, p);
        const std::size_t i = single_bit ? 0 : std::size_t(t % c.N);
        erased.set(i, true);
        if (bit_unrecoverable(c, erased, i)) ++fails;
    }
    McEstimate e;
    e.trials = trials;
    e.seed = seed;
    e.mean = double(fails) / double(trials);
    e.stderr_ = bernoulli_stderr(e.mean, trials);
    return e;
}

PbPbEstimate estimate_pb_pB(const LinearCode& c, double p, std::uint64_t trials,
                            std::uint64_t seed, std::uint64_t point_index) {
    if (p < 0.0 || p > 1.0 || trials == 0)
        throw std::invalid_argument("estimate_pb_pB: p in [0,1], trials >= 1");
    double pb_sum = 0.0, pb_sq = 0.0;
    std::uint64_t block_fails = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialRng rng(seed, kStreamBlock, point_index, t);
        const BitVec erased = draw_pattern(rng, c.N, p);
        const BitVec undet = undetermined_set(c, erased);
        const double frac = double(undet.weight()) / double(c.N);
        pb_sum += frac;
        pb_sq += frac * frac;
        if (undet.any()) ++block_fails;
    }
    PbPbEstimate out;
    out.pb.trials = out.pB.trials = trials;
    out.pb.seed = out.pB.seed = seed;
    out.pb.mean = pb_sum / double(trials);
    const double var = pb_sq / double(trials) - out.pb.mean * out.pb.mean;
    out.pb.stderr_ = std::sqrt(std::max(var, 0.0) / double(trials));
    out.pB.mean = double(block_fails) / double(trials);
    out.pB.stderr_ = bernoulli_stderr(out.pB.mean, trials);
    return out;
}

std::vector<double> GridSpec::points() const {
    if (step <= 0.0 || start < 0.0 || start >= stop || stop > 1.0)
        throw std::invalid_argument("GridSpec: need 0 <= start < stop <= 1, step > 0");
    std::vector<double> pts;
    for (int k = 0;; ++k) {
        const double p = start + double(k) * step;
        if (p > stop + 1e-12) break;
        pts.push_back(std::min(p, stop));
    }
    if (pts.back() < stop - 1e-12) pts.push_back(stop);
    return pts;
}

std::vector<double> isotonic_fit(const std::vector<double>& y) {
    // pool-adjacent-violators, unweighted
    std::vector<double> level;
    std::vector<std::size_t> count;
    for (double v : y) {
        level.push_back(v);
        count.push_back(1);
        while (level.size() > 1 && level[level.size() - 2] > level.back()) {
            const double merged = (level[level.size() - 2] * double(count[count.size() - 2]) +
                                   level.back() * double(count.back())) /
                                  double(count[count.size() - 2] + count.back());
            count[count.size() - 2] += count.back();
            level[level.size() - 2] = merged;
            level.pop_back();
            count.pop_back();
        }
    }
    std::vector<double> out;
    out.reserve(y.size());
    for (std::size_t b = 0; b < level.size(); ++b)
        out.insert(out.end(), count[b], level[b]);
    return out;
}

CurveEstimate estimate_curve(const LinearCode& c, const GridSpec& grid,
                             std::uint64_t trials_per_point, std::uint64_t seed,
                             bool single_bit) {
    CurveEstimate est;
    const auto pts = grid.points();
    std::vector<double> means;
    for (std::size_t g = 0; g < pts.size(); ++g) {
        CurvePoint cp;
        cp.p = pts[g];
        cp.h = estimate_exit(c, pts[g], trials_per_point, seed, single_bit, g);
        means.push_back(cp.h.mean);
        est.raw.push_back(cp);
    }
    est.fit = isotonic_fit(means);
    return est;
}

namespace {

// first crossing of the nondecreasing fit with level t, linearly
// interpolated; also reports the cell index.
double invert_fit(const CurveEstimate& ce, double t, std::size_t* cell) {
    const auto& raw = ce.raw;
    const auto& f = ce.fit;
    if (f.front() >= t || f.back() < t)
        throw std::range_error("estimate_width: crossing outside the grid");
    std::size_t k = 1;
    while (f[k] < t) ++k;
    if (cell) *cell = k;
    const double df = f[k] - f[k - 1];
    if (df <= 0.0) return raw[k].p;
    return raw[k - 1].p + (t - f[k - 1]) / df * (raw[k].p - raw[k - 1].p);
}

}  // namespace

WidthEstimate estimate_width(const LinearCode& c, double eps, const GridSpec& grid,
                             std::uint64_t trials_per_point, std::uint64_t seed,
                             bool single_bit) {
    if (eps <= 0.0 || eps >= 0.5)
        throw std::invalid_argument("estimate_width: eps in (0, 1/2)");
    WidthEstimate w;
    w.curve = estimate_curve(c, grid, trials_per_point, seed, single_bit);
    std::size_t cell_lo = 0, cell_hi = 0;
    w.p_lo = invert_fit(w.curve, eps, &cell_lo);
    w.p_hi = invert_fit(w.curve, 1.0 - eps, &cell_hi);
    if (cell_hi <= cell_lo + 1)
        throw std::range_error("estimate_width: transition narrower than the grid step");
    w.width = w.p_hi - w.p_lo;

    double max_se = 0.0;
    for (std::size_t k = cell_lo; k <= cell_hi; ++k)
        max_se = std::max(max_se, w.curve.raw[k].h.stderr_);
    const double slope = (w.curve.fit[cell_hi] - w.curve.fit[cell_lo - 1]) /
                         (w.curve.raw[cell_hi].p - w.curve.raw[cell_lo - 1].p);
    w.uncertainty = grid.step + 4.0 * max_se / std::max(slope, 1e-9);
    return w;
}

Figure1Result figure1_experiment(const std::vector<int>& n_list, const GridSpec& grid,
                                 std::uint64_t trials_per_point, std::uint64_t seed) {
    Figure1Result res;
    res.n_list = n_list;
    const auto pts = grid.points();
    for (std::size_t ni = 0; ni < n_list.size(); ++ni) {
        const int n = n_list[ni];
        if (n < 3) throw std::invalid_argument("figure1_experiment: n >= 3");
        const LinearCode c = rm_code(n / 2, n);
        std::vector<double> means;
        for (std::size_t g = 0; g < pts.size(); ++g) {
            Figure1Row row;
            row.n = n;
            row.N = c.N;
            row.rate = c.rate();
            row.p = pts[g];
            // per-n point offset keeps the streams of different n disjoint
            const std::uint64_t pt = ni * 100000 + g;
            row.h = estimate_exit(c, pts[g], trials_per_point, seed, true, pt);
            const PbPbEstimate bb = estimate_pb_pB(c, pts[g], trials_per_point, seed, pt);
            row.pb = bb.pb;
            row.pB = bb.pB;
            means.push_back(row.h.mean);
            res.rows.push_back(row);
        }
        CurveEstimate ce;
        for (std::size_t g = 0; g < pts.size(); ++g)
            ce.raw.push_back({pts[g], McEstimate{means[g], 0.0, trials_per_point, seed}});
        ce.fit = isotonic_fit(means);
        auto try_invert = [&](double t) {
            try {
                return invert_fit(ce, t, nullptr);
            } catch (const std::range_error&) {
                return std::nan("");
            }
        };
        res.p_half.push_back(try_invert(0.5));
        const double lo = try_invert(0.1), hi = try_invert(0.9);
        res.width.push_back(hi - lo);
    }
    return res;
}

void write_figure1_csv(std::ostream& os, const Figure1Result& r,
                       std::uint64_t trials_per_point, std::uint64_t seed) {
    os << "n,N,rate,p,h_mean,h_stderr,pb_mean,pb_stderr,pB_mean,pB_stderr,trials,seed\n";
    char buf[512];
    for (const auto& row : r.rows) {
        std::snprintf(buf, sizeof buf,
                      "%d,%zu,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%llu,%llu\n",
                      row.n, row.N, row.rate, row.p, row.h.mean, row.h.stderr_,
                      row.pb.mean, row.pb.stderr_, row.pB.mean, row.pB.stderr_,
                      static_cast<unsigned long long>(trials_per_point),
                      static_cast<unsigned long long>(seed));
        os << buf;
    }
}

}  // namespace exitkit
