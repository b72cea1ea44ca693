#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "exitkit/simulate.hpp"
#include "exitkit/symmetry.hpp"
#include "exitkit/exit.hpp"

using namespace exitkit;

namespace {

std::uint64_t seed_chain = 0xC0FFEE;
std::uint64_t rnd() { return seed_chain = mix64(seed_chain); }

Permutation random_transposition(std::size_t n) {
    std::size_t a = rnd() % n, b = rnd() % n;
    while (b == a) b = rnd() % n;
    std::vector<std::size_t> img(n);
    std::iota(img.begin(), img.end(), std::size_t{0});
    std::swap(img[a], img[b]);
    return Permutation::from_image(std::move(img));
}

// ground-truth invariance: permute every codeword, test membership
bool invariant_by_codeword_mapping(const Permutation& pi, const LinearCode& c) {
    for (std::uint64_t msg = 0; msg < (std::uint64_t{1} << c.K); ++msg) {
        BitVec word(c.N);
        for (std::size_t r = 0; r < c.K; ++r)
            if ((msg >> r) & 1) word ^= c.G.row(r);
        BitVec mapped(c.N);
        for (std::size_t t = 0; t < c.N; ++t)
            if (word.get(t)) mapped.set(pi(t), true);
        // membership: mapped must be in the row space of G
        BitMatrix stacked = c.G;
        stacked.append_row(mapped);
        if (rank(stacked) != c.K) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("permutation group laws") {
    const Permutation id = Permutation::identity(6);
    const Permutation a = random_transposition(6);
    const Permutation b = random_transposition(6);
    CHECK(a.compose(a.inverse()) == id);
    CHECK(a.inverse().compose(a) == id);
    CHECK(id.compose(a) == a);
    // associativity spot check
    const Permutation c = random_transposition(6);
    CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
    CHECK_THROWS(Permutation::from_image({0, 0, 1}));
    CHECK_THROWS(Permutation::from_image({0, 3}));
}

TEST_CASE("invariance flag cross-checked against codeword mapping") {
    const LinearCode c = rm_code(1, 3);
    CHECK(leaves_invariant(Permutation::identity(8), c));
    for (int t = 0; t < 20; ++t) {
        const Permutation pi = random_transposition(8);
        CHECK(leaves_invariant(pi, c) == invariant_by_codeword_mapping(pi, c));
    }
    // repetition code: any permutation works
    const LinearCode rep = repetition_code(5);
    for (int t = 0; t < 5; ++t) CHECK(leaves_invariant(random_transposition(5), rep));
}

TEST_CASE("affine permutations") {
    const Gf2mField f(4);
    CHECK(affine_perm(f, 1, 0) == Permutation::identity(16));
    CHECK_THROWS(affine_perm(f, 0, 3));
    // composition law: pi_{b1,g1} o pi_{b2,g2} = pi_{b1 b2, b1 g2 + g1}
    for (int t = 0; t < 25; ++t) {
        const std::uint32_t b1 = 1 + std::uint32_t(rnd() % 15);
        const std::uint32_t b2 = 1 + std::uint32_t(rnd() % 15);
        const std::uint32_t g1 = std::uint32_t(rnd() % 16);
        const std::uint32_t g2 = std::uint32_t(rnd() % 16);
        const Permutation lhs = affine_perm(f, b1, g1).compose(affine_perm(f, b2, g2));
        const Permutation rhs = affine_perm(f, f.mul(b1, b2), f.mul(b1, g2) ^ g1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("every affine permutation preserves the extended BCH codes") {
    const Gf2mField f(4);
    for (int v : {1, 3}) {
        const LinearCode c = ebch_code(v, 4);
        for (std::uint32_t beta = 1; beta < 16; ++beta)
            for (std::uint32_t gamma = 0; gamma < 16; ++gamma)
                CHECK(leaves_invariant(affine_perm(f, beta, gamma), c));
    }
}

TEST_CASE("field-affine double-transitivity witness") {
    const Gf2mField f(4);
    for (int t = 0; t < 100; ++t) {
        const std::size_t i = rnd() % 16, j = rnd() % 16, k = rnd() % 16;
        if (i == j || i == k || j == k) continue;
        const auto [beta, gamma] = double_transitivity_witness(f, i, j, k);
        CHECK(beta != 0);
        const Permutation pi = affine_perm(f, beta, gamma);
        CHECK(pi(i) == i);
        CHECK(pi(j) == k);
    }
    // Theta(i) = 0 at the extension position: gamma vanishes
    const auto [beta0, gamma0] = double_transitivity_witness(f, 15, 2, 5);
    CHECK(gamma0 == 0);
    CHECK(beta0 == f.div(f.alpha_pow(5), f.alpha_pow(2)));  // Theta(k)/Theta(j)
    CHECK_THROWS(double_transitivity_witness(f, 1, 4, 4));
}

TEST_CASE("Reed-Muller affine witnesses") {
    const LinearCode c = rm_code(1, 3);
    for (int t = 0; t < 20; ++t) {
        const std::size_t i = rnd() % 8, j = rnd() % 8, k = rnd() % 8;
        if (i == j || i == k || j == k) continue;
        const Permutation pi = rm_doubly_transitive_witness(3, i, j, k);
        CHECK(pi(i) == i);
        CHECK(pi(j) == k);
        CHECK(leaves_invariant(pi, c));
        CHECK(invariant_by_codeword_mapping(pi, c));
    }
    // the same witness preserves every order v
    const Permutation pi = rm_doubly_transitive_witness(4, 2, 7, 11);
    for (int v = 1; v <= 3; ++v) CHECK(leaves_invariant(pi, rm_code(v, 4)));
    CHECK_THROWS(rm_doubly_transitive_witness(3, 1, 5, 5));
}

TEST_CASE("GL(n, F2) action on the nonzero points") {
    const int n = 4;
    CHECK(gl_action_on_omega(n, BitMatrix::identity(4)) == Permutation::identity(15));
    // homomorphism: pi_{T1} o pi_{T2} = pi_{T1 T2}
    for (int t = 0; t < 20; ++t) {
        const std::uint32_t u1 = 1 + std::uint32_t(rnd() % 15);
        const std::uint32_t w1 = 1 + std::uint32_t(rnd() % 15);
        const std::uint32_t u2 = 1 + std::uint32_t(rnd() % 15);
        const std::uint32_t w2 = 1 + std::uint32_t(rnd() % 15);
        const BitMatrix t1 = gl_map_between(n, u1, w1);
        const BitMatrix t2 = gl_map_between(n, u2, w2);
        CHECK(gl_action_on_omega(n, t1).compose(gl_action_on_omega(n, t2)) ==
              gl_action_on_omega(n, mat_mul(t1, t2)));
    }
    // transitivity: a map carrying any nonzero point to any other
    for (int t = 0; t < 30; ++t) {
        const std::size_t i = rnd() % 15, j = rnd() % 15;
        const BitMatrix T = gl_map_between(n, std::uint32_t(i + 1), std::uint32_t(j + 1));
        CHECK(gl_action_on_omega(n, T)(i) == j);
    }
    // the extended permutation is an RM automorphism
    const BitMatrix T = gl_map_between(n, 3, 9);
    CHECK(leaves_invariant(gl_action_extended(n, T), rm_code(1, 4)));
    // singular matrices are rejected
    BitMatrix sing(4, 4);
    CHECK_THROWS(gl_action_on_omega(n, sing));
}

TEST_CASE("GL action preserves the last bit's unrecoverable set") {
    const LinearCode c = rm_code(1, 4);
    const std::size_t i = c.N - 1;  // the all-zero evaluation point
    const OmegaSet om = omega_set(c, i);
    for (int t = 0; t < 5; ++t) {
        const std::uint32_t u = 1 + std::uint32_t(rnd() % 15);
        const std::uint32_t w = 1 + std::uint32_t(rnd() % 15);
        const Permutation pi = gl_action_on_omega(4, gl_map_between(4, u, w));
        bool preserved = true;
        for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << 15); ++idx) {
            std::uint64_t mapped = 0;
            for (std::size_t b = 0; b < 15; ++b)
                if ((idx >> b) & 1) mapped |= std::uint64_t{1} << pi(b);
            if (om.contains(idx) != om.contains(mapped)) { preserved = false; break; }
        }
        CHECK(preserved);
    }
}

TEST_CASE("transitivity certificates") {
    CHECK(certify_transitive(rm_code(1, 3)).verdict == Verdict::Certified);
    CHECK(certify_transitive(ebch_code(1, 4)).verdict == Verdict::Certified);
    CHECK(certify_transitive(bch_code(1, 4)).verdict == Verdict::Certified);  // cyclic
    CHECK(certify_transitive(repetition_code(6)).verdict == Verdict::Certified);
    const LinearCode ds = direct_sum(repetition_code(3), single_parity_check_code(3));
    CHECK(certify_transitive(ds).verdict == Verdict::Refuted);
}

TEST_CASE("double-transitivity certificates") {
    CHECK(certify_doubly_transitive(rm_code(1, 4)).verdict == Verdict::Certified);
    CHECK(certify_doubly_transitive(ebch_code(1, 4)).verdict == Verdict::Certified);
    CHECK(certify_doubly_transitive(single_parity_check_code(4)).verdict ==
          Verdict::Certified);  // full symmetric group
    const LinearCode ds = direct_sum(repetition_code(3), single_parity_check_code(3));
    CHECK(certify_doubly_transitive(ds).verdict == Verdict::Refuted);
    // extended QR: double transitivity is cited, not constructed
    const Certificate eqr = certify_doubly_transitive(extended_qr_code(17));
    CHECK(eqr.verdict == Verdict::Unknown);
}

TEST_CASE("exhaustive automorphism search on small codes") {
    const auto g = automorphism_group(repetition_code(3));
    CHECK(g.size() == 6);  // all of S_3
    const auto h = automorphism_group(rm_code(1, 3));
    CHECK(h.size() == 1344);  // |AGL(3,2)|
}
