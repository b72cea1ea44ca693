#include "exitkit/decode.hpp"

#include <bit>

namespace exitkit {

ErasurePattern ErasurePattern::from_positions(std::size_t N, const std::vector<std::size_t>& pos) {
    ErasurePattern p{N, BitVec(N)};
    for (auto i : pos) {
        if (i >= N) throw std::invalid_argument("ErasurePattern: position out of range");
        p.erased.set(i, true);
    }
    return p;
}

ErasurePattern ErasurePattern::from_mask(std::size_t N, std::uint64_t mask) {
    ErasurePattern p{N, BitVec(N)};
    for (std::size_t i = 0; i < N && i < 64; ++i)
        if ((mask >> i) & 1) p.erased.set(i, true);
    return p;
}

namespace {

// Elimination state on H restricted to the erased columns, with an optional
// syndrome column appended.
struct ErasureSolve {
    std::vector<std::size_t> cols;        // erased positions, ascending
    std::vector<BitVec> rows;             // width cols.size() + 1 (last = syndrome)
    std::vector<std::ptrdiff_t> pivot_of; // per column: row index or -1
    std::vector<bool> is_free;
    bool consistent = true;

    ErasureSolve(const LinearCode& c, const BitVec& erased, const BitVec* received) {
        const std::size_t N = c.N;
        for (std::size_t j = 0; j < N; ++j)
            if (erased.get(j)) cols.push_back(j);
        const std::size_t s = cols.size();

        rows.reserve(c.H.rows());
        for (std::size_t r = 0; r < c.H.rows(); ++r) {
            BitVec row(s + 1);
            for (std::size_t t = 0; t < s; ++t) row.set(t, c.H.get(r, cols[t]));
            if (received) {
                std::uint64_t acc = 0;
                for (std::size_t k = 0; k < received->word_count(); ++k) {
                    std::uint64_t w = c.H.row(r).word(k) & received->word(k);
                    w &= ~erased.word(k);  // erased outputs contribute nothing
                    acc ^= w;
                }
                row.set(s, std::popcount(acc) & 1);
            }
            rows.push_back(std::move(row));
        }

        // rref over the first s columns
        pivot_of.assign(s, -1);
        std::size_t r = 0;
        for (std::size_t col = 0; col < s && r < rows.size(); ++col) {
            std::size_t piv = r;
            while (piv < rows.size() && !rows[piv].get(col)) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[piv], rows[r]);
            for (std::size_t k = 0; k < rows.size(); ++k)
                if (k != r && rows[k].get(col)) rows[k] ^= rows[r];
            pivot_of[col] = std::ptrdiff_t(r);
            ++r;
        }
        is_free.assign(s, false);
        for (std::size_t col = 0; col < s; ++col)
            if (pivot_of[col] < 0) is_free[col] = true;
        for (std::size_t k = r; k < rows.size(); ++k)
            if (rows[k].get(s)) { consistent = false; break; }
    }

    // a pivot column is determined iff its row touches no free column
    bool determined(std::size_t col) const {
        if (pivot_of[col] < 0) return false;
        const BitVec& row = rows[std::size_t(pivot_of[col])];
        for (std::size_t t = 0; t < is_free.size(); ++t)
            if (is_free[t] && row.get(t)) return false;
        return true;
    }

    bool determined_value(std::size_t col) const {
        return rows[std::size_t(pivot_of[col])].get(cols.size());
    }
};

}  // namespace

DecodeOutcome bit_map_decode(const LinearCode& c, const ErasurePattern& pattern,
                             const BitVec& received,
                             std::optional<std::size_t> indirect_bit) {
    if (pattern.N != c.N || received.size() != c.N)
        throw std::invalid_argument("bit_map_decode: size mismatch");
    BitVec erased = pattern.erased;
    if (indirect_bit) {
        if (*indirect_bit >= c.N) throw std::invalid_argument("bit_map_decode: bad bit index");
        erased.set(*indirect_bit, true);
    }

    ErasureSolve solve(c, erased, &received);
    if (!solve.consistent)
        throw std::runtime_error("bit_map_decode: received values match no codeword");

    DecodeOutcome out;
    out.values = received;
    out.undetermined = BitVec(c.N);
    for (std::size_t j = 0; j < c.N; ++j)
        if (erased.get(j)) out.values.set(j, false);
    for (std::size_t t = 0; t < solve.cols.size(); ++t) {
        if (solve.determined(t)) {
            out.values.set(solve.cols[t], solve.determined_value(t));
        } else {
            out.undetermined.set(solve.cols[t], true);
        }
    }
    out.block_recovered = !out.undetermined.any();
    return out;
}

BitVec undetermined_set(const LinearCode& c, const BitVec& erased) {
    ErasureSolve solve(c, erased, nullptr);
    BitVec u(c.N);
    for (std::size_t t = 0; t < solve.cols.size(); ++t)
        if (!solve.determined(t)) u.set(solve.cols[t], true);
    return u;
}

bool bit_unrecoverable(const LinearCode& c, const BitVec& erased, std::size_t i) {
    if (!erased.get(i)) throw std::invalid_argument("bit_unrecoverable: i must be erased");
    ErasureSolve solve(c, erased, nullptr);
    for (std::size_t t = 0; t < solve.cols.size(); ++t)
        if (solve.cols[t] == i) return !solve.determined(t);
    return false;  // unreachable
}

bool coverage_oracle(const LinearCode& c, const BitVec& A, std::size_t i,
                     int enumeration_cap) {
    if (i >= c.N || A.size() != c.N) throw std::invalid_argument("coverage_oracle: bad input");
    if (A.get(i)) throw std::invalid_argument("coverage_oracle: i must not be in A");
    if (int(c.K) > enumeration_cap)
        throw std::runtime_error("coverage_oracle: dimension above enumeration cap");
    BitVec allowed = A;
    allowed.set(i, true);
    BitVec cur(c.N);
    const std::uint64_t total = std::uint64_t{1} << c.K;
    for (std::uint64_t w = 1; w < total; ++w) {
        cur ^= c.G.row(std::size_t(std::countr_zero(w)));
        if (cur.get(i) && cur.subset_of(allowed)) return true;
    }
    return false;
}

bool pivotal_oracle(const LinearCode& c, const BitVec& A, std::size_t i, std::size_t j,
                    int enumeration_cap) {
    if (j == i || j >= c.N) throw std::invalid_argument("pivotal_oracle: bad j");
    BitVec with_j = A, without_j = A;
    with_j.set(j, true);
    without_j.set(j, false);
    return coverage_oracle(c, with_j, i, enumeration_cap) &&
           !coverage_oracle(c, without_j, i, enumeration_cap);
}

}  // namespace exitkit
