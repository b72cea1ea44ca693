#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "exitkit/exit.hpp"

using namespace exitkit;

TEST_CASE("single parity check [3,2], bit 0") {
    const LinearCode c = single_parity_check_code(3);
    const WeightEnumerator om = omega_enumerator(c, 0);
    REQUIRE(om.ambient == 2);
    CHECK(om.counts == std::vector<std::uint64_t>{0, 2, 1});
    // h_0(p) = 1 - (1-p)^2
    for (double p : {0.0, 0.2, 0.5, 0.8, 1.0})
        CHECK(enum_eval(om, p) == doctest::Approx(1.0 - (1.0 - p) * (1.0 - p)).epsilon(1e-12));
    // both boundaries have counts (1,1,0): influence (1-p)
    for (std::size_t j : {std::size_t{1}, std::size_t{2}}) {
        const WeightEnumerator b = boundary_enumerator(c, 0, j);
        CHECK(b.counts == std::vector<std::uint64_t>{1, 1, 0});
        CHECK(enum_eval(b, 0.3) == doctest::Approx(0.7).epsilon(1e-12));
    }
}

TEST_CASE("repetition [3,1], bit 0") {
    const WeightEnumerator om = omega_enumerator(repetition_code(3), 0);
    CHECK(om.counts == std::vector<std::uint64_t>{0, 0, 1});
    CHECK(enum_eval(om, 0.4) == doctest::Approx(0.16).epsilon(1e-12));  // p^2
}

TEST_CASE("area theorem, exact rationals") {
    CHECK(average_exit(single_parity_check_code(3)).area() == Rational(2, 3));
    CHECK(average_exit(repetition_code(3)).area() == Rational(1, 3));
    CHECK(average_exit(rm_code(1, 3)).area() == Rational(1, 2));
    CHECK(average_exit(rm_code(1, 4)).area() == Rational(5, 16));
    CHECK(average_exit(qr_code(7)).area() == Rational(4, 7));
}

TEST_CASE("up-closure route equals the decoder sweep") {
    for (const LinearCode& c : {rm_code(1, 3), single_parity_check_code(5), repetition_code(5),
                                qr_code(7), rm_code(1, 4), bch_code(3, 4)}) {
        for (std::size_t i : {std::size_t{0}, std::size_t{1}, c.N - 1}) {
            const OmegaSet fast = omega_set(c, i);
            const OmegaSet slow = omega_set_via_decoder(c, i);
            const std::uint64_t total = std::uint64_t{1} << (c.N - 1);
            bool all_match = true;
            for (std::uint64_t idx = 0; idx < total; ++idx)
                if (fast.contains(idx) != slow.contains(idx)) { all_match = false; break; }
            CHECK(all_match);
            CHECK(fast.weight_counts().counts == slow.weight_counts().counts);
            for (std::size_t jm = 0; jm + 1 < c.N; ++jm)
                CHECK(fast.pivotal_counts(jm).counts == slow.pivotal_counts(jm).counts);
        }
    }
}

TEST_CASE("EXIT duality") {
    const ExitCurve h14 = average_exit(rm_code(1, 4));
    const ExitCurve h24 = average_exit(rm_code(2, 4));
    const ExitCurve h13 = average_exit(rm_code(1, 3));
    for (int k = 0; k <= 10; ++k) {
        const double p = k / 10.0;
        CHECK(h14.eval(p) == doctest::Approx(1.0 - h24.eval(1.0 - p)).epsilon(1e-12));
        CHECK(h13.eval(p) == doctest::Approx(1.0 - h13.eval(1.0 - p)).epsilon(1e-12));
    }
    CHECK(h13.eval(0.5) == doctest::Approx(0.5).epsilon(1e-12));  // self-dual fixed point
}

TEST_CASE("Margulis-Russo identity") {
    const BitExit be = bit_exit_full(rm_code(1, 4), 0);
    for (int k = 1; k <= 9; ++k)
        CHECK(margulis_russo_residual(be, k / 10.0) <= 1e-10);
    const BitExit be2 = bit_exit_full(single_parity_check_code(5), 2);
    CHECK(margulis_russo_residual(be2, 0.37) <= 1e-12);
}

TEST_CASE("monotonicity and endpoints of the average EXIT curve") {
    const ExitCurve h = average_exit(rm_code(1, 4));
    CHECK(h.eval(0.0) == 0.0);
    CHECK(h.eval(1.0) == 1.0);
    double prev = -1.0;
    for (int k = 0; k <= 40; ++k) {
        const double v = h.eval(k / 40.0);
        CHECK(v >= prev - 1e-14);
        prev = v;
    }
}

TEST_CASE("inverse and width") {
    const ExitCurve h = average_exit(rm_code(1, 4));
    for (double t : {0.05, 0.1, 0.5, 0.9, 0.95})
        CHECK(h.eval(h.inverse(t)) == doctest::Approx(t).epsilon(1e-9));
    CHECK(h.width(0.25) < h.width(0.1));
    CHECK(h.width(0.1) < h.width(0.05));
    CHECK(inverse_increasing([](double p) { return p * p; }, 0.25) ==
          doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("closed-form bound values") {
    // 2 log((1-eps)/eps) / log M, natural logs
    CHECK(width_bound_log(15, 0.1, 1.0) ==
          doctest::Approx(2.0 * std::log(9.0) / std::log(15.0)).epsilon(1e-14));
    CHECK(width_bound_log(100, 0.5, 1.0) == 0.0);
    // the (0, 1, log M) instance of the general bound collapses to the log form
    for (std::size_t M : {15u, 31u, 511u})
        for (double eps : {0.05, 0.1, 0.25})
            CHECK(width_bound_general(0.0, 1.0, std::log(double(M)), eps, 1.0 - eps) ==
                  doctest::Approx(width_bound_log(M, eps, 1.0)).epsilon(1e-13));
    // tail bound is 1 at the half point when a = 0, b = 1
    CHECK(tail_bound_exp(0.0, 1.0, 3.0, 0.4, 0.4) == doctest::Approx(1.0));
    CHECK(tail_bound_exp(0.0, 1.0, 3.0, 0.4, 0.1) ==
          doctest::Approx(std::exp(-0.9)).epsilon(1e-12));
}

TEST_CASE("erasure probability bounds") {
    const ErasureBounds b = erasure_prob_bounds(16, 4, 0.3, 0.25);
    CHECK(b.Pb == doctest::Approx(0.075));
    CHECK(b.PB_union == doctest::Approx(16 * 0.075));
    CHECK(b.PB_dmin == doctest::Approx(4 * 0.075));
}

TEST_CASE("block capacity certificates at N = 1024") {
    const auto bch = block_capacity_certificate(1024.0, 100.0, nullptr,
                                                CertificateMode::BchStyle);
    CHECK(bch.pB_bound == doctest::Approx(1.0 / std::log(1024.0)).epsilon(1e-12));
    CHECK(bch.pB_bound == doctest::Approx(0.14427).epsilon(1e-4));
    const auto rm = block_capacity_certificate(1024.0, 100.0, nullptr,
                                               CertificateMode::RmStyle);
    CHECK(rm.eps_n == doctest::Approx(1.0 / (1024.0 * 1024.0)).epsilon(1e-15));
    CHECK(rm.pB_bound == doctest::Approx(1.0 / 1024.0).epsilon(1e-15));
}

TEST_CASE("low-rate gap") {
    const double eps = 0.25;
    const double expect = 0.25 / 0.75 + 2.0 * std::log(4.0) / (0.5 * std::log(511.0));
    CHECK(low_rate_gap(0.5, 512.0, eps) == doctest::Approx(expect).epsilon(1e-13));
    const double rec = low_rate_recommended_eps(0.9, 1 << 20);
    CHECK(rec == doctest::Approx(1.0 / std::log(0.9 * std::log(double(1 << 20)))));
    CHECK_THROWS(low_rate_recommended_eps(0.1, 16.0));
}

TEST_CASE("puncturing bound") {
    const ExitCurve h_ext = average_exit(ebch_code(1, 4));
    const ExitCurve h_pun = average_exit(bch_code(1, 4));
    for (int k = 0; k <= 10; ++k) {
        const double p = k / 10.0;
        CHECK(puncture_bound_slack(h_ext.eval(p), h_pun.eval(p), 16, 1) >= -1e-12);
    }
    const ExitCurve rep4 = average_exit(repetition_code(4));
    const ExitCurve rep3 = average_exit(repetition_code(3));
    for (int k = 0; k <= 10; ++k) {
        const double p = k / 10.0;
        CHECK(puncture_bound_slack(rep4.eval(p), rep3.eval(p), 4, 1) >= -1e-12);
    }
}

TEST_CASE("multivariate EXIT reduces to the univariate one") {
    const LinearCode c = rm_code(1, 3);
    for (double p : {0.2, 0.5, 0.7}) {
        const std::vector<double> pv(c.N, p);
        const WeightEnumerator om = omega_enumerator(c, 2);
        CHECK(multivariate_exit(c, 2, pv) == doctest::Approx(enum_eval(om, p)).epsilon(1e-12));
    }
}

TEST_CASE("block entropy endpoints and monotone interpolation") {
    const LinearCode c = single_parity_check_code(4);
    CHECK(block_entropy(c, std::vector<double>(4, 1.0)) == doctest::Approx(3.0));
    CHECK(block_entropy(c, std::vector<double>(4, 0.0)) == doctest::Approx(0.0));
    CHECK(block_entropy(c, std::vector<double>(4, 0.5)) > 0.0);
    // raising one coordinate never lowers the entropy
    std::vector<double> lo(4, 0.3), hi(4, 0.3);
    hi[1] = 0.8;
    CHECK(block_entropy(c, hi) >= block_entropy(c, lo));
}

TEST_CASE("enumerator helpers") {
    CHECK(binomial_big(32, 16) == BigInt("601080390"));
    WeightEnumerator e{3, {0, 1, 2, 1}};
    CHECK(e.total() == 4);
    // exact area of each weight class: 1/((M+1) C(M,w))
    CHECK(enum_area(WeightEnumerator{3, {1, 0, 0, 0}}) == Rational(1, 4));
    CHECK(enum_area(WeightEnumerator{3, {0, 3, 0, 0}}) == Rational(1, 4));
}
