#include "exitkit/gf2.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace exitkit {

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') v.set(i, true);
        else if (bits[i] != '0') throw std::invalid_argument("BitVec: expected '0'/'1'");
    }
    return v;
}

std::size_t BitVec::weight() const {
    std::size_t w = 0;
    for (auto x : w_) w += std::size_t(std::popcount(x));
    return w;
}

bool BitVec::any() const {
    for (auto x : w_) if (x) return true;
    return false;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (len_ != o.len_) throw std::invalid_argument("BitVec: length mismatch");
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
}

bool BitVec::subset_of(const BitVec& o) const {
    if (len_ != o.len_) throw std::invalid_argument("BitVec: length mismatch");
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k] & ~o.w_[k]) return false;
    return true;
}

bool BitVec::intersects(const BitVec& o) const {
    if (len_ != o.len_) throw std::invalid_argument("BitVec: length mismatch");
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k] & o.w_[k]) return true;
    return false;
}

std::string BitVec::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    BitMatrix m;
    for (const auto& r : rows) m.append_row(BitVec::from_string(r));
    return m;
}

void BitMatrix::append_row(BitVec r) {
    if (rows_.empty()) cols_ = r.size();
    else if (r.size() != cols_) throw std::invalid_argument("BitMatrix: row length mismatch");
    rows_.push_back(std::move(r));
}

RrefResult rref(BitMatrix m) {
    RrefResult out;
    const std::size_t nr = m.rows(), nc = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = r;
        while (piv < nr && !m.get(piv, c)) ++piv;
        if (piv == nr) continue;
        std::swap(m.row(piv), m.row(r));
        for (std::size_t k = 0; k < nr; ++k)
            if (k != r && m.get(k, c)) m.row(k) ^= m.row(r);
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

BitMatrix nullspace_basis(const BitMatrix& m) {
    const std::size_t nc = m.cols();
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(nc, false);
    for (auto c : rr.pivots) is_pivot[c] = true;

    BitMatrix basis;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        BitVec v(nc);
        v.set(f, true);
        for (std::size_t i = 0; i < rr.rank; ++i)
            if (rr.reduced.get(i, f)) v.set(rr.pivots[i], true);
        basis.append_row(std::move(v));
    }
    if (basis.rows() == 0) basis = BitMatrix(0, nc);
    return basis;
}

bool same_row_space(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) return false;
    const std::size_t ra = rank(a), rb = rank(b);
    if (ra != rb) return false;
    BitMatrix stacked = a;
    for (std::size_t i = 0; i < b.rows(); ++i) stacked.append_row(b.row(i));
    return rank(stacked) == ra;
}

BitVec mat_vec(const BitMatrix& m, const BitVec& x) {
    if (m.cols() != x.size()) throw std::invalid_argument("mat_vec: size mismatch");
    BitVec y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < x.word_count(); ++k) acc ^= m.row(i).word(k) & x.word(k);
        y.set(i, std::popcount(acc) & 1);
    }
    return y;
}

BitMatrix transpose(const BitMatrix& m) {
    BitMatrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.get(i, j)) t.set(j, i, true);
    return t;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: size mismatch");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.get(i, k)) out.row(i) ^= b.row(k);
    return out;
}

Gf2Poly Gf2Poly::from_mask(std::uint64_t bits) {
    Gf2Poly p;
    p.c_.assign(1, bits);
    p.trim();
    return p;
}

Gf2Poly Gf2Poly::from_coeffs(const std::vector<int>& exponents) {
    Gf2Poly p;
    int maxe = -1;
    for (int e : exponents) maxe = std::max(maxe, e);
    if (maxe < 0) return p;
    p.c_.assign(std::size_t(maxe) / 64 + 1, 0);
    for (int e : exponents) p.c_[std::size_t(e) >> 6] ^= std::uint64_t{1} << (e & 63);
    p.trim();
    return p;
}

void Gf2Poly::trim() {
    deg_ = -1;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k]) {
            deg_ = int(k * 64 + 63 - std::size_t(std::countl_zero(c_[k])));
            c_.resize(k + 1);
            return;
        }
    }
    c_.clear();
}

Gf2Poly Gf2Poly::operator+(const Gf2Poly& o) const {
    Gf2Poly p;
    p.c_.assign(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t k = 0; k < c_.size(); ++k) p.c_[k] ^= c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) p.c_[k] ^= o.c_[k];
    p.trim();
    return p;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& o) const {
    Gf2Poly p;
    if (is_zero() || o.is_zero()) return p;
    p.c_.assign(std::size_t(deg_ + o.deg_) / 64 + 1, 0);
    for (int i = 0; i <= deg_; ++i) {
        if (!coeff(i)) continue;
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            const std::size_t base = std::size_t(i) >> 6;
            const int sh = i & 63;
            p.c_[base + k] ^= o.c_[k] << sh;
            if (sh && base + k + 1 < p.c_.size()) p.c_[base + k + 1] ^= o.c_[k] >> (64 - sh);
        }
    }
    p.trim();
    return p;
}

Gf2Poly Gf2Poly::mod(const Gf2Poly& d) const {
    if (d.is_zero()) throw std::invalid_argument("Gf2Poly: division by zero");
    Gf2Poly r = *this;
    while (r.deg_ >= d.deg_) {
        const int sh = r.deg_ - d.deg_;
        // r ^= d << sh
        for (int i = 0; i <= d.deg_; ++i)
            if (d.coeff(i)) r.c_[std::size_t(i + sh) >> 6] ^= std::uint64_t{1} << ((i + sh) & 63);
        r.trim();
    }
    return r;
}

std::string Gf2Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = deg_; i >= 0; --i) {
        if (!coeff(i)) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) s += "1";
        else if (i == 1) s += "x";
        else s += "x^" + std::to_string(i);
    }
    return s;
}

namespace {

// Multiplication of m-bit polynomials modulo a degree-m modulus mask.
std::uint32_t clmul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t mod, int m) {
    std::uint64_t acc = 0, aa = a;
    while (b) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    for (int i = 2 * m - 2; i >= m; --i)
        if ((acc >> i) & 1) acc ^= std::uint64_t(mod) << (i - m);
    return std::uint32_t(acc);
}

bool is_primitive(std::uint32_t mod, int m) {
    const std::uint32_t order = (std::uint32_t{1} << m) - 1;
    std::uint32_t v = 1;
    for (std::uint32_t i = 1; i < order; ++i) {
        v = clmul_mod(v, 2, mod, m);
        if (v == 1) return false;  // order of x divides i < 2^m - 1
    }
    v = clmul_mod(v, 2, mod, m);
    return v == 1;
}

}  // namespace

std::uint32_t smallest_primitive_poly(int m) {
    if (m < 1 || m > 24) throw std::invalid_argument("smallest_primitive_poly: degree out of range");
    if (m == 1) return 0b11;  // x + 1
    const std::uint32_t top = std::uint32_t{1} << m;
    // constant term must be 1 for a nonzero root structure
    for (std::uint32_t cand = top | 1; cand < (top << 1); cand += 2)
        if (is_primitive(cand, m)) return cand;
    throw std::logic_error("smallest_primitive_poly: none found");
}

Gf2mField::Gf2mField(int m) : m_(m) {
    if (m < 2 || m > 20) throw std::invalid_argument("Gf2mField: degree out of range");
    mod_ = smallest_primitive_poly(m);
    size_ = std::uint32_t{1} << m;
    exp_.assign(size_ - 1, 0);
    log_.assign(size_, 0);
    std::uint32_t v = 1;
    for (std::uint32_t i = 0; i < size_ - 1; ++i) {
        exp_[i] = v;
        log_[v] = i;
        v = clmul_mod(v, 2, mod_, m_);
    }
}

std::uint32_t Gf2mField::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(std::uint64_t(log_[a]) + log_[b]) % order()];
}

std::uint32_t Gf2mField::inv(std::uint32_t a) const {
    if (a == 0) throw std::invalid_argument("Gf2mField: inverse of zero");
    return exp_[(order() - log_[a]) % order()];
}

std::uint32_t Gf2mField::pow(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    return exp_[(std::uint64_t(log_[a]) * (e % order())) % order()];
}

std::uint32_t Gf2mField::log(std::uint32_t a) const {
    if (a == 0) throw std::invalid_argument("Gf2mField: log of zero");
    return log_[a];
}

std::uint32_t Gf2mField::element_order(std::uint32_t a) const {
    if (a == 0) throw std::invalid_argument("Gf2mField: order of zero");
    const std::uint32_t n = order();
    std::uint32_t l = log_[a];
    return n / std::gcd(n, l == 0 ? n : l);
}

std::vector<std::vector<int>> cyclotomic_cosets(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_cosets: n >= 1 required");
    const int mod = (1 << n) - 1;
    std::vector<bool> seen(std::size_t(mod), false);
    std::vector<std::vector<int>> cosets;
    for (int i = 0; i < mod; ++i) {
        if (seen[std::size_t(i)]) continue;
        std::vector<int> coset;
        int j = i;
        do {
            seen[std::size_t(j)] = true;
            coset.push_back(j);
            j = int((2LL * j) % mod);
        } while (j != i);
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

Gf2Poly minimal_polynomial(const Gf2mField& f, std::uint32_t e) {
    if (e == 0) return Gf2Poly::x();
    // product of (x - e^{2^k}) over the conjugacy orbit of e
    std::vector<std::uint32_t> roots;
    std::uint32_t r = e;
    do {
        roots.push_back(r);
        r = f.mul(r, r);
    } while (r != e);

    // expand over GF(2^m): coefficients as field elements
    std::vector<std::uint32_t> c{1};
    for (std::uint32_t root : roots) {
        std::vector<std::uint32_t> nxt(c.size() + 1, 0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            nxt[k + 1] ^= c[k];               // x * c_k
            nxt[k] ^= f.mul(c[k], root);      // root * c_k (char 2: minus = plus)
        }
        c = std::move(nxt);
    }
    std::vector<int> exps;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 1) exps.push_back(int(k));
        else if (c[k] != 0) throw std::logic_error("minimal_polynomial: non-binary coefficient");
    }
    return Gf2Poly::from_coeffs(exps);
}

}  // namespace exitkit
