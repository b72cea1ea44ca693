#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "exitkit/codes.hpp"

using namespace exitkit;

TEST_CASE("Reed-Muller dimensions and distance") {
    const LinearCode c13 = rm_code(1, 3);
    CHECK(c13.N == 8);
    CHECK(c13.K == 4);
    CHECK(c13.dmin.value == 4);
    CHECK(c13.dmin.exact);
    CHECK(min_distance(c13).value == 4);

    const LinearCode c24 = rm_code(2, 4);
    CHECK(c24.N == 16);
    CHECK(c24.K == 11);
    CHECK(c24.dmin.value == 4);

    CHECK(rm_code(0, 3).K == 1);            // repetition
    CHECK(rm_code(2, 3).K == 7);            // single parity check
    CHECK(rm_code(2, 5).K == 16);           // the rate-1/2 code
    CHECK(rm_code(4, 9).K == 256);
}

TEST_CASE("Reed-Muller duality") {
    // RM(v,n)^dual = RM(n-v-1,n)
    CHECK(same_row_space(dual(rm_code(1, 3)).G, rm_code(1, 3).G));  // self-dual
    CHECK(same_row_space(dual(rm_code(1, 4)).G, rm_code(2, 4).G));
    CHECK(same_row_space(dual(rm_code(2, 5)).G, rm_code(2, 5).G));
}

TEST_CASE("repetition / parity duality and direct sum") {
    const LinearCode rep = repetition_code(5);
    const LinearCode spc = single_parity_check_code(5);
    CHECK(same_row_space(dual(rep).G, spc.G));
    CHECK(same_row_space(dual(spc).G, rep.G));
    const LinearCode ds = direct_sum(repetition_code(3), single_parity_check_code(3));
    CHECK(ds.N == 6);
    CHECK(ds.K == 3);
    CHECK(min_distance(ds).value == 2);
}

TEST_CASE("BCH generator polynomials at n = 4") {
    CHECK(bch_generator(1, 4) == Gf2Poly::from_mask(0b10011));
    CHECK(bch_generator(1, 4).degree() == 4);
    CHECK(bch_generator(2, 4).degree() == 4);   // alpha^2 conjugate of alpha
    CHECK(bch_generator(3, 4).degree() == 8);
    CHECK(bch_generator(5, 4).degree() == 10);
    CHECK(bch_generator(7, 4).degree() == 14);
    CHECK(bch_generator(14, 4).degree() == 14);
    // degree steps stay within n
    int prev = bch_generator(1, 4).degree();
    for (int v = 2; v <= 14; ++v) {
        const int d = bch_generator(v, 4).degree();
        CHECK(d >= prev);
        CHECK(d - prev <= 4);
        prev = d;
    }
}

TEST_CASE("BCH and extended BCH codes") {
    const LinearCode h = bch_code(1, 4);  // Hamming [15,11]
    CHECK(h.N == 15);
    CHECK(h.K == 11);
    CHECK(min_distance(h).value == 3);
    const LinearCode eh = ebch_code(1, 4);
    CHECK(eh.N == 16);
    CHECK(eh.K == 11);
    CHECK(min_distance(eh).value == 4);
    // designed distance is a lower bound
    for (int v : {1, 3, 5, 7}) {
        const LinearCode c = bch_code(v, 4);
        CHECK(min_distance(c).value >= std::size_t(v) + 1);
    }
}

TEST_CASE("BCH rate selection") {
    const RateChoice rc = bch_rate_select(0.5, 4);
    CHECK(rc.v == 3);
    CHECK(rc.rate == doctest::Approx(7.0 / 15.0));
    // selected degree lands in [N(1-r), N(1-r)+n]
    for (double r : {0.3, 0.5, 0.7})
        for (int n : {4, 5, 6}) {
            const RateChoice c = bch_rate_select(r, n);
            const double N = double((1 << n) - 1);
            const double deg = N - c.rate * N;
            CHECK(deg >= N * (1 - r) - 1e-9);
            CHECK(deg <= N * (1 - r) + n + 1e-9);
        }
}

TEST_CASE("quadratic residue codes") {
    const LinearCode q7 = qr_code(7);  // the [7,4] Hamming code
    CHECK(q7.N == 7);
    CHECK(q7.K == 4);
    CHECK(min_distance(q7).value == 3);
    const LinearCode eq7 = extended_qr_code(7);
    CHECK(eq7.N == 8);
    CHECK(eq7.K == 4);
    CHECK(min_distance(eq7).value == 4);
    const LinearCode q17 = qr_code(17);
    CHECK(q17.N == 17);
    CHECK(q17.K == 9);
    CHECK(min_distance(q17).value == 5);
    CHECK_THROWS(qr_code(11));  // 11 = 3 mod 8
}

TEST_CASE("puncture and extend") {
    const LinearCode eh = ebch_code(1, 4);
    const LinearCode back = puncture(eh, {15});
    CHECK(back.N == 15);
    CHECK(back.K == 11);
    CHECK(same_row_space(back.G, bch_code(1, 4).G));
    const LinearCode rep4 = repetition_code(4);
    const LinearCode rep3 = puncture(rep4, {3});
    CHECK(same_row_space(rep3.G, repetition_code(3).G));
    CHECK(extend_parity(repetition_code(3)).N == 4);
}

TEST_CASE("Gaussian tail inverse") {
    CHECK(q_inv(0.5) == doctest::Approx(0.0).epsilon(1e-8));
    for (double t : {-2.0, -0.7, 0.0, 1.3, 2.5})
        CHECK(q_inv(q_func(t)) == doctest::Approx(t).epsilon(1e-7));
}

TEST_CASE("RM rate sequence at target 1/2") {
    for (int n : {5, 7, 9}) {
        const RateChoice rc = rm_rate_sequence(0.5, n);
        CHECK(rc.v == n / 2);
        CHECK(rc.rate == doctest::Approx(0.5));
    }
    // higher target rate never lowers the order
    for (int n : {6, 8}) {
        CHECK(rm_rate_sequence(0.3, n).v <= rm_rate_sequence(0.5, n).v);
        CHECK(rm_rate_sequence(0.5, n).v <= rm_rate_sequence(0.7, n).v);
    }
}

TEST_CASE("code file round trip") {
    const LinearCode c = rm_code(1, 3);
    std::stringstream ss;
    write_code(ss, c);
    const std::string text = ss.str();
    CHECK(text.substr(0, 12) == "8 4 RM(1,3)\n");
    std::stringstream in(text);
    const LinearCode back = read_code(in);
    CHECK(back.N == c.N);
    CHECK(back.K == c.K);
    CHECK(back.label == c.label);
    CHECK(back.G == c.G);
}

TEST_CASE("make_code rejects degenerate inputs") {
    // dependent rows
    BitMatrix dep = BitMatrix::from_strings({"110", "110"});
    CHECK_THROWS(make_code(std::move(dep), "dep"));
    // rate 1
    BitMatrix full = BitMatrix::identity(3);
    CHECK_THROWS(make_code(std::move(full), "full"));
    // zero column
    BitMatrix zc = BitMatrix::from_strings({"1100", "0110"});
    CHECK_THROWS(make_code(std::move(zc), "zerocol"));
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(31, 15) == 300540195ULL);
    CHECK(binomial(4, 5) == 0);
}
