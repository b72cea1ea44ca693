#ifndef EXITKIT_DECODE_HPP
#define EXITKIT_DECODE_HPP

#include <optional>

#include "exitkit/codes.hpp"

// Bit-MAP / block-MAP decoding over the BEC by Gaussian elimination on the
// parity-check matrix restricted to the erased columns, plus an independent
// codeword-coverage oracle.

namespace exitkit {

struct ErasurePattern {
    std::size_t N = 0;
    BitVec erased;  // 1 = erased

    static ErasurePattern none(std::size_t N) { return {N, BitVec(N)}; }
    static ErasurePattern from_positions(std::size_t N, const std::vector<std::size_t>& pos);
    static ErasurePattern from_mask(std::size_t N, std::uint64_t mask);
};

struct DecodeOutcome {
    BitVec values;        // decoded word; valid everywhere except undetermined bits
    BitVec undetermined;  // 1 = bit remains erased after MAP decoding
    bool block_recovered = false;
};

// MAP decode under the given pattern.  `received` carries the channel
// outputs on unerased positions (erased entries ignored).  When
// `indirect_bit` is set, that bit is treated as erased regardless of the
// pattern (the Y_i = * semantics of indirect recovery).  Throws
// std::runtime_error if the received values match no codeword.
DecodeOutcome bit_map_decode(const LinearCode& c, const ErasurePattern& pattern,
                             const BitVec& received,
                             std::optional<std::size_t> indirect_bit = std::nullopt);

// Set of erased positions that remain undetermined under MAP (the support
// of the subcode of codewords living inside the erased set).
BitVec undetermined_set(const LinearCode& c, const BitVec& erased);

// Cheap single-bit variant: is `i` unrecoverable when `erased` (which must
// include i) is wiped out?  Used by the Monte Carlo inner loop.
bool bit_unrecoverable(const LinearCode& c, const BitVec& erased, std::size_t i);

// Definition-style oracle: A (over [N] \ {i}) prevents indirect recovery of
// bit i iff some codeword B with B_i = 1 has support \ {i} inside A.
// Exhaustive over all 2^K codewords; independent of elimination.
bool coverage_oracle(const LinearCode& c, const BitVec& A, std::size_t i,
                     int enumeration_cap = 24);

// True iff flipping bit j's erasure status flips A's coverage verdict.
bool pivotal_oracle(const LinearCode& c, const BitVec& A, std::size_t i, std::size_t j,
                    int enumeration_cap = 24);

}  // namespace exitkit

#endif
