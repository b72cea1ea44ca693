#ifndef EXITKIT_GF2_HPP
#define EXITKIT_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Exact arithmetic substrate: bit-packed GF(2) linear algebra, GF(2^m)
// field tables, polynomials over GF(2) and cyclotomic cosets.
//
// All bit positions are 0-based.  Values are immutable in spirit: every
// operation returns a fresh value and never mutates shared state, so
// everything here is safe to use from concurrent workers.

namespace exitkit {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t length) : len_(length), w_((length + 63) / 64, 0) {}

    static BitVec from_string(std::string_view bits);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool b) {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (b) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t weight() const;
    bool any() const;

    BitVec& operator^=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) { a ^= b; return a; }
    bool operator==(const BitVec& o) const { return len_ == o.len_ && w_ == o.w_; }

    // x & y restricted subset test: true iff every set bit of *this is set in o.
    bool subset_of(const BitVec& o) const;
    bool intersects(const BitVec& o) const;

    std::uint64_t word(std::size_t k) const { return w_[k]; }
    std::size_t word_count() const { return w_.size(); }

    std::string to_string() const;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> w_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : cols_(cols), rows_(rows, BitVec(cols)) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_strings(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    const BitVec& row(std::size_t i) const { return rows_[i]; }
    BitVec& row(std::size_t i) { return rows_[i]; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool b) { rows_[r].set(c, b); }

    void append_row(BitVec r);

    bool operator==(const BitMatrix& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }

private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

struct RrefResult {
    BitMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

// Reduced row-echelon form over GF(2); row space preserved.
RrefResult rref(BitMatrix m);

std::size_t rank(const BitMatrix& m);

// Basis of {x : m x^T = 0}; (cols - rank) rows.
BitMatrix nullspace_basis(const BitMatrix& m);

bool same_row_space(const BitMatrix& a, const BitMatrix& b);

// m x^T, result length = rows(m).
BitVec mat_vec(const BitMatrix& m, const BitVec& x);
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
BitMatrix transpose(const BitMatrix& m);

// Polynomial over GF(2), coefficient of x^i at bit i.
class Gf2Poly {
public:
    Gf2Poly() = default;  // zero polynomial
    static Gf2Poly one() { return from_mask(1); }
    static Gf2Poly x() { return from_mask(2); }
    static Gf2Poly from_mask(std::uint64_t bits);
    static Gf2Poly from_coeffs(const std::vector<int>& exponents);

    int degree() const { return deg_; }  // -1 for the zero polynomial
    bool is_zero() const { return deg_ < 0; }
    bool coeff(int i) const {
        return i >= 0 && i <= deg_ && ((c_[std::size_t(i) >> 6] >> (i & 63)) & 1u);
    }

    Gf2Poly operator+(const Gf2Poly& o) const;
    Gf2Poly operator*(const Gf2Poly& o) const;
    Gf2Poly mod(const Gf2Poly& d) const;

    bool operator==(const Gf2Poly& o) const { return deg_ == o.deg_ && c_ == o.c_; }

    std::string to_string() const;  // e.g. "x^4 + x + 1"

private:
    void trim();
    int deg_ = -1;
    std::vector<std::uint64_t> c_;
};

// GF(2^m) via exp/log tables over the lexicographically smallest primitive
// modulus of degree m.  Elements are m-bit integers, bit i = coeff of x^i.
class Gf2mField {
public:
    explicit Gf2mField(int m);

    int degree() const { return m_; }
    std::uint32_t modulus_mask() const { return mod_; }
    std::uint32_t order() const { return size_ - 1; }  // multiplicative order
    std::uint32_t size() const { return size_; }

    std::uint32_t alpha() const { return 2; }  // the class of x, primitive

    static std::uint32_t add(std::uint32_t a, std::uint32_t b) { return a ^ b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t alpha_pow(std::uint64_t e) const { return exp_[e % order()]; }
    // discrete log base alpha; a must be nonzero
    std::uint32_t log(std::uint32_t a) const;

    // multiplicative order of a nonzero element
    std::uint32_t element_order(std::uint32_t a) const;

private:
    int m_;
    std::uint32_t mod_;   // modulus as bit mask including the x^m term
    std::uint32_t size_;  // 2^m
    std::vector<std::uint32_t> exp_, log_;
};

// Lexicographically smallest primitive polynomial of degree m, as a mask.
std::uint32_t smallest_primitive_poly(int m);

// Partition of {0, ..., 2^n - 2} into orbits under doubling mod 2^n - 1.
// The singleton {0} is included; every other coset size divides n.
std::vector<std::vector<int>> cyclotomic_cosets(int n);

// Minimal polynomial over GF(2) of a field element.  0 -> x, 1 -> x + 1.
Gf2Poly minimal_polynomial(const Gf2mField& f, std::uint32_t e);

}  // namespace exitkit

#endif
