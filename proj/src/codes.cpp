#include "exitkit/codes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace exitkit {

namespace {

BitMatrix reduced_generator(const BitMatrix& g) {
    RrefResult rr = rref(g);
    BitMatrix out;
    for (std::size_t i = 0; i < rr.rank; ++i) out.append_row(rr.reduced.row(i));
    if (out.rows() == 0) out = BitMatrix(0, g.cols());
    return out;
}

}  // namespace

LinearCode make_code(BitMatrix generator, std::string label, DminInfo dmin) {
    LinearCode c;
    c.N = generator.cols();
    c.K = generator.rows();
    if (c.N == 0) throw std::invalid_argument(label + ": empty blocklength");
    if (rank(generator) != c.K)
        throw std::invalid_argument(label + ": generator rows are dependent");
    if (c.K == 0 || c.K == c.N)
        throw std::invalid_argument(label + ": rate outside (0,1)");
    for (std::size_t j = 0; j < c.N; ++j) {
        bool nonzero = false;
        for (std::size_t i = 0; i < c.K && !nonzero; ++i) nonzero = generator.get(i, j);
        if (!nonzero) throw std::invalid_argument(label + ": improper code (zero column)");
    }
    c.G = std::move(generator);
    c.H = nullspace_basis(c.G);
    c.label = std::move(label);
    c.dmin = std::move(dmin);
    // G H^T = 0 by construction of the nullspace; keep the cheap sanity check.
    for (std::size_t i = 0; i < c.H.rows(); ++i)
        if (mat_vec(c.G, c.H.row(i)).any())
            throw std::logic_error(c.label + ": G H^T != 0");
    return c;
}

LinearCode rm_code(int v, int n) {
    if (n < 1 || v < 0 || v > n) throw std::invalid_argument("rm_code: need 0 <= v <= n");
    const std::size_t N = std::size_t{1} << n;
    BitMatrix g;
    // rows: all monomial masks of weight <= v; columns: points t+1 for
    // t < N-1 and the zero point last.
    for (std::uint32_t mask = 0; mask < N; ++mask) {
        if (std::popcount(mask) > v) continue;
        BitVec row(N);
        for (std::size_t t = 0; t < N; ++t) {
            const std::uint32_t point = (t + 1 < N) ? std::uint32_t(t + 1) : 0u;
            if ((point & mask) == mask) row.set(t, true);
        }
        g.append_row(std::move(row));
    }
    DminInfo d{std::size_t{1} << (n - v), true, "rm-formula"};
    return make_code(std::move(g), "RM(" + std::to_string(v) + "," + std::to_string(n) + ")", d);
}

Gf2Poly bch_generator(int v, int n) {
    const int N = (1 << n) - 1;
    if (v < 1 || v > N) throw std::invalid_argument("bch_generator: need 1 <= v <= 2^n - 1");
    Gf2mField f(n);
    Gf2Poly g = Gf2Poly::one();
    std::vector<bool> done(std::size_t(N), false);
    for (int i = 1; i <= v; ++i) {
        const int e = i % N;  // v = N refers to alpha^N = 1, exponent 0
        if (done[std::size_t(e)]) continue;
        int j = e;
        do {
            done[std::size_t(j)] = true;
            j = int((2LL * j) % N);
        } while (j != e);
        g = g * minimal_polynomial(f, f.alpha_pow(std::uint64_t(e)));
    }
    return g;
}

namespace {

LinearCode cyclic_code(const Gf2Poly& gen, std::size_t N, std::string label, DminInfo d) {
    const int deg = gen.degree();
    if (deg < 0 || std::size_t(deg) >= N)
        throw std::invalid_argument(label + ": generator degree leaves no dimension");
    const std::size_t K = N - std::size_t(deg);
    BitMatrix g;
    for (std::size_t k = 0; k < K; ++k) {
        BitVec row(N);
        for (int i = 0; i <= deg; ++i)
            if (gen.coeff(i)) row.set(k + std::size_t(i), true);
        g.append_row(std::move(row));
    }
    return make_code(std::move(g), std::move(label), std::move(d));
}

}  // namespace

LinearCode bch_code(int v, int n) {
    const std::size_t N = (std::size_t{1} << n) - 1;
    Gf2Poly f = bch_generator(v, n);
    DminInfo d{std::size_t(v) + 1, false, "designed-distance"};
    return cyclic_code(f, N, "BCH(" + std::to_string(v) + "," + std::to_string(n) + ")", d);
}

LinearCode ebch_code(int v, int n) {
    LinearCode base = bch_code(v, n);
    LinearCode ext = extend_parity(base);
    ext.label = "eBCH(" + std::to_string(v) + "," + std::to_string(n) + ")";
    // recorded bound is exactly v + 1; see min_distance for exact values
    ext.dmin = DminInfo{std::size_t(v) + 1, false, "designed-distance"};
    return ext;
}

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

LinearCode qr_code(int N) {
    if (!is_prime(N) || N == 2)
        throw std::invalid_argument("qr_code: N must be an odd prime");
    std::vector<bool> residue(std::size_t(N), false);
    for (int x = 1; x < N; ++x) residue[std::size_t((x * x) % N)] = true;
    if (!residue[2])
        throw std::invalid_argument("qr_code: 2 is not a quadratic residue mod N");

    // splitting field: smallest m with N | 2^m - 1
    int m = 1;
    {
        long long pow2 = 2;
        while ((pow2 - 1) % N != 0) { pow2 *= 2; ++m; }
    }
    Gf2mField f(m);
    // deterministic alpha: smallest field element of multiplicative order N
    std::uint32_t alpha = 0;
    for (std::uint32_t e = 2; e < f.size(); ++e) {
        if (f.element_order(e) == std::uint32_t(N)) { alpha = e; break; }
    }
    if (alpha == 0) throw std::logic_error("qr_code: no order-N element");

    // g(x) = prod_{i in Q} (x - alpha^i), coefficients must land in GF(2)
    std::vector<std::uint32_t> c{1};
    for (int i = 1; i < N; ++i) {
        if (!residue[std::size_t(i)]) continue;
        const std::uint32_t root = f.pow(alpha, std::uint64_t(i));
        std::vector<std::uint32_t> nxt(c.size() + 1, 0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            nxt[k + 1] ^= c[k];
            nxt[k] ^= f.mul(c[k], root);
        }
        c = std::move(nxt);
    }
    std::vector<int> exps;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 1) exps.push_back(int(k));
        else if (c[k] != 0) throw std::logic_error("qr_code: non-binary generator coefficient");
    }
    Gf2Poly g = Gf2Poly::from_coeffs(exps);
    return cyclic_code(g, std::size_t(N), "QR(" + std::to_string(N) + ")", DminInfo{});
}

LinearCode extended_qr_code(int N) {
    LinearCode ext = extend_parity(qr_code(N));
    ext.label = "eQR(" + std::to_string(N) + ")";
    return ext;
}

LinearCode repetition_code(std::size_t N) {
    if (N < 2) throw std::invalid_argument("repetition_code: N >= 2");
    BitMatrix g(1, N);
    for (std::size_t j = 0; j < N; ++j) g.set(0, j, true);
    return make_code(std::move(g), "REP(" + std::to_string(N) + ")",
                     DminInfo{N, true, "repetition"});
}

LinearCode single_parity_check_code(std::size_t N) {
    if (N < 2) throw std::invalid_argument("single_parity_check_code: N >= 2");
    BitMatrix g(N - 1, N);
    for (std::size_t i = 0; i + 1 < N; ++i) {
        g.set(i, i, true);
        g.set(i, N - 1, true);
    }
    return make_code(std::move(g), "SPC(" + std::to_string(N) + ")",
                     DminInfo{2, true, "parity"});
}

LinearCode direct_sum(const LinearCode& a, const LinearCode& b) {
    BitMatrix g(a.K + b.K, a.N + b.N);
    for (std::size_t i = 0; i < a.K; ++i)
        for (std::size_t j = 0; j < a.N; ++j)
            if (a.G.get(i, j)) g.set(i, j, true);
    for (std::size_t i = 0; i < b.K; ++i)
        for (std::size_t j = 0; j < b.N; ++j)
            if (b.G.get(i, j)) g.set(a.K + i, a.N + j, true);
    DminInfo d{std::min(a.dmin.value, b.dmin.value), a.dmin.exact && b.dmin.exact, "direct-sum"};
    return make_code(std::move(g), a.label + "+" + b.label, d);
}

LinearCode dual(const LinearCode& c) {
    BitMatrix g = nullspace_basis(c.G);
    return make_code(std::move(g), c.label + "^dual", DminInfo{});
}

LinearCode puncture(const LinearCode& c, const std::vector<std::size_t>& positions) {
    std::vector<bool> drop(c.N, false);
    for (auto p : positions) {
        if (p >= c.N) throw std::invalid_argument("puncture: position out of range");
        drop[p] = true;
    }
    BitMatrix g;
    for (std::size_t i = 0; i < c.K; ++i) {
        BitVec row(c.N - positions.size());
        std::size_t t = 0;
        for (std::size_t j = 0; j < c.N; ++j)
            if (!drop[j]) row.set(t++, c.G.get(i, j));
        g.append_row(std::move(row));
    }
    BitMatrix reduced = reduced_generator(g);
    try {
        return make_code(std::move(reduced), c.label + "/punct" + std::to_string(positions.size()),
                         DminInfo{});
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("puncture: degenerate result: ") + e.what());
    }
}

LinearCode extend_parity(const LinearCode& c) {
    BitMatrix g;
    for (std::size_t i = 0; i < c.K; ++i) {
        BitVec row(c.N + 1);
        for (std::size_t j = 0; j < c.N; ++j) row.set(j, c.G.get(i, j));
        row.set(c.N, c.G.row(i).weight() & 1);
        g.append_row(std::move(row));
    }
    DminInfo d{c.dmin.value, false, "pre-extension bound"};
    return make_code(std::move(g), c.label + "+parity", d);
}

DminInfo min_distance(const LinearCode& c, int enumeration_cap) {
    if (int(c.K) > enumeration_cap) return c.dmin;
    // Gray-code sweep over all nonzero codewords.
    BitVec cur(c.N);
    std::size_t best = c.N + 1;
    const std::uint64_t total = std::uint64_t{1} << c.K;
    for (std::uint64_t i = 1; i < total; ++i) {
        cur ^= c.G.row(std::size_t(std::countr_zero(i)));
        best = std::min(best, cur.weight());
    }
    return DminInfo{best, true, "enumeration"};
}

double q_func(double t) { return 0.5 * std::erfc(t / std::sqrt(2.0)); }

double q_inv(double y) {
    if (y <= 0.0 || y >= 1.0) throw std::invalid_argument("q_inv: y in (0,1) required");
    double lo = -40.0, hi = 40.0;  // Q decreasing: Q(lo) ~ 1, Q(hi) ~ 0
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (q_func(mid) > y) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    if (r > (unsigned __int128)UINT64_MAX) throw std::overflow_error("binomial: overflow");
    return std::uint64_t(r);
}

RateChoice rm_rate_sequence(double target_rate, int n) {
    if (n < 1) throw std::invalid_argument("rm_rate_sequence: n >= 1");
    if (target_rate <= 0.0 || target_rate >= 1.0)
        throw std::invalid_argument("rm_rate_sequence: rate in (0,1)");
    const double bracket = n / 2.0 + std::sqrt(double(n)) / 2.0 * q_inv(1.0 - target_rate);
    int v = std::max(int(std::floor(bracket)), 0);
    v = std::min(v, n);
    double ksum = 0.0;
    for (int i = 0; i <= v; ++i) ksum += double(binomial(unsigned(n), unsigned(i)));
    return RateChoice{v, ksum / double(std::uint64_t{1} << n)};
}

RateChoice bch_rate_select(double target_rate, int n) {
    if (n < 2) throw std::invalid_argument("bch_rate_select: n >= 2");
    if (target_rate <= 0.0 || target_rate >= 1.0)
        throw std::invalid_argument("bch_rate_select: rate in (0,1)");
    const int N = (1 << n) - 1;
    const double lo = N * (1.0 - target_rate);
    // degree of f(n, v) grows by whole cosets as v sweeps 1..N
    std::vector<bool> done(std::size_t(N), false);
    int deg = 0;
    for (int v = 1; v <= N; ++v) {
        const int e = v % N;
        if (!done[std::size_t(e)]) {
            int j = e, size = 0;
            do {
                done[std::size_t(j)] = true;
                ++size;
                j = int((2LL * j) % N);
            } while (j != e);
            deg += size;
        }
        if (deg >= lo)
            return RateChoice{v, double(N - deg) / double(N)};
    }
    throw std::logic_error("bch_rate_select: no degree reached the window");
}

void write_code(std::ostream& os, const LinearCode& c) {
    os << c.N << ' ' << c.K << ' ' << c.label << '\n';
    for (std::size_t i = 0; i < c.K; ++i) os << c.G.row(i).to_string() << '\n';
}

LinearCode read_code(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw std::runtime_error("read_code: missing header");
    std::istringstream hs(header);
    std::size_t N = 0, K = 0;
    std::string label;
    if (!(hs >> N >> K >> label)) throw std::runtime_error("read_code: bad header");
    BitMatrix g;
    for (std::size_t i = 0; i < K; ++i) {
        std::string row;
        if (!std::getline(is, row) || row.size() != N)
            throw std::runtime_error("read_code: bad generator row");
        g.append_row(BitVec::from_string(row));
    }
    return make_code(std::move(g), std::move(label), DminInfo{});
}

}  // namespace exitkit
