#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "z2k/errors.hpp"
#include "z2k/modforms.hpp"

using namespace z2k;

namespace {
mpq_class Q(long n, long d = 1) {
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}
}  // namespace

TEST_CASE("sigma3") {
    CHECK(sigma3(1) == 1);
    CHECK(sigma3(2) == 9);
    CHECK(sigma3(4) == 73);
    CHECK(sigma3(5) == 126);
    for (std::uint64_t m = 1; m <= 500; ++m) CHECK(sigma3(m) == oracle::sigma3_brute(m));
    CHECK_THROWS_AS(sigma3(0), DomainError);
}

TEST_CASE("eisenstein_e4") {
    const auto e4 = eisenstein_e4(6);
    const long expect[] = {1, 240, 2160, 6720, 17520, 30240};
    for (long m = 0; m < 6; ++m) CHECK(e4.coeff_at(m) == expect[m]);
    const auto one = eisenstein_e4(1);
    CHECK(one == FracSeries::one(1, 1));

    const auto long_e4 = eisenstein_e4(300);
    for (std::size_t m = 0; m < long_e4.size(); ++m) CHECK(sgn(long_e4.numerator(m)) > 0);
}

TEST_CASE("delta24") {
    const auto d = delta24(8);
    CHECK(d.coeff_at(0) == 0);
    CHECK(d.coeff_at(1) == 1);
    CHECK(d.coeff_at(2) == -24);
    CHECK(d.coeff_at(3) == 252);
    CHECK(d.coeff_at(4) == -1472);

    const std::size_t n = 120;
    const auto ref = oracle::delta_by_product(n);
    const auto fast = delta24(n);
    for (std::size_t m = 0; m < n; ++m) CHECK(fast.numerator(m) == ref[m]);
    CHECK_THROWS_AS(delta24(1), PrecisionTooSmall);
}

TEST_CASE("E4^3 in terms of E12 and Delta") {
    // 691 E4^3 = 691 E12 + 432000 Delta with E12 = 1 + (65520/691) sum sigma11(m) t^m
    const std::size_t n = 30;
    const auto e4_cubed = pow(eisenstein_e4(n), 3);
    const auto delta = delta24(n);
    for (std::size_t m = 1; m < n; ++m) {
        mpz_class s11 = 0;
        for (std::size_t d = 1; d <= m; ++d)
            if (m % d == 0) {
                mpz_class p;
                mpz_ui_pow_ui(p.get_mpz_t(), d, 11);
                s11 += p;
            }
        CHECK(691 * e4_cubed.coeff(m) == mpq_class(65520 * s11) + 432000 * delta.coeff(m));
    }
}

TEST_CASE("h_series") {
    const auto h = h_series(301);
    CHECK(h.coeff_at(0) == 1);
    CHECK(h.coeff_at(1) == 24);
    CHECK(h.coeff_at(2) == 324);
    CHECK(h.coeff_at(3) == 3200);
    for (std::size_t m = 0; m < h.size(); ++m) CHECK(sgn(h.numerator(m)) > 0);

    // prod (1 - t^r)^24 times h is 1
    const std::size_t n = 80;
    auto eta = oracle::delta_by_product(n + 1);
    eta.erase(eta.begin());
    const auto prod = oracle::naive_mul(eta, h_series(n).numerators(), n);
    CHECK(prod[0] == 1);
    for (std::size_t m = 1; m < n; ++m) CHECK(prod[m] == 0);
}

TEST_CASE("theta_f examples") {
    const auto f10 = theta_f(1, 0, 10);
    CHECK(f10.grid_denom() == 4);
    CHECK(f10.coeff_at(0) == 1);
    CHECK(f10.coeff_at(1) == 2);
    CHECK(f10.coeff_at(4) == 2);
    CHECK(f10.coeff_at(9) == 2);
    CHECK(f10.coeff_at(2) == 0);

    const auto f20 = theta_f(2, 0, 10);
    CHECK(f20.coeff_at(0) == 1);
    CHECK(f20.coeff_at(2) == 2);
    CHECK(f20.coeff_at(8) == 2);
    CHECK(f20.coeff_at(1) == 0);

    // single residue class: x = 1, -3, 5, ... for k = 2
    const auto f21 = theta_f(2, 1, 4);
    CHECK(f21.coeff_at(Q(1, 8)) == 1);
    CHECK(f21.coeff_at(Q(9, 8)) == 1);
    CHECK(f21.coeff_at(Q(25, 8)) == 1);

    const auto f11 = theta_f(1, 1, 3);
    CHECK(f11.coeff_at(Q(1, 4)) == 2);
    CHECK(f11.coeff_at(Q(9, 4)) == 2);
    CHECK(f11.coeff_at(0) == 0);

    CHECK_THROWS_AS(theta_f(2, 3, 4), IndexOutOfRange);
}

TEST_CASE("theta_f support lies on squares in the right classes") {
    for (std::uint32_t k = 1; k <= 6; ++k) {
        for (std::uint32_t i = 0; i <= k; ++i) {
            const auto f = theta_f(k, i, 12);
            for (std::size_t e = 0; e < f.size(); ++e) {
                if (sgn(f.numerator(e)) == 0) continue;
                const auto x = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(e))));
                REQUIRE(x * x == e);
                const std::uint64_t r = x % (2 * k);
                CHECK((r == i || r == (2 * k - i) % (2 * k)));
                // x and -x fall in the same class only for i = 0 and i = k
                const bool paired = (i == 0 || i == k) && e != 0;
                CHECK(f.numerator(e) == (paired ? 2 : 1));
            }
        }
    }
}

TEST_CASE("theta1 against lattice enumeration") {
    const auto counts = oracle::count_vectors(8, 13);
    CHECK(counts[1] == 16);
    CHECK(counts[2] == 112);
    CHECK(counts[3] == 448);
    for (std::uint32_t k = 1; k <= 6; ++k) {
        const auto th = theta1(k, 12 * k + 1);
        CHECK(th.grid_denom() == 1);
        CHECK(th.coeff_at(0) == 1);
        for (std::uint64_t m = 0; m < th.size(); ++m) {
            const mpz_class expect = (m % k == 0) ? mpz_class(counts[m / k]) : mpz_class(0);
            CHECK(th.numerator(m) == expect);
        }
    }
}

TEST_CASE("ThetaFamily holds f_0 .. f_k") {
    const auto fam = ThetaFamily::build(3, 5);
    CHECK(fam.f.size() == 4);
    CHECK(fam.f[2] == theta_f(3, 2, 5));
}
