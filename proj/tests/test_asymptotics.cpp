#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <boost/math/constants/constants.hpp>

#include "z2k/asymptotics.hpp"
#include "z2k/errors.hpp"
#include "z2k/extremal.hpp"

using namespace z2k;

namespace {

Real pi() { return boost::math::constants::pi<Real>(); }

// 2 pi E2(t), E2 = 1 - 24 sum sigma1(m) t^m, summed as 1 - 24 sum r t^r / (1 - t^r)
Real log_derivative_oracle(const Real& y) {
    const Real t = exp(-2 * pi() * y);
    Real sum = 0, tr = 1;
    for (int r = 1; r < 2000; ++r) {
        tr *= t;
        const Real term = r * tr / (1 - tr);
        sum += term;
        if (term < Real("1e-60")) break;
    }
    return 2 * pi() * (1 - 24 * sum);
}

Real rel(const Real& a, const Real& b) { return abs(a / b - 1); }

const SaddleData& saddle30() {
    static const SaddleData sd = find_saddle(30);
    return sd;
}

}  // namespace

TEST_CASE("eval_F tends to e^{2 pi y}") {
    PrecisionScope scope(40);
    const Real ratio = eval_F(Real(5), 30) / exp(10 * pi());
    CHECK(ratio > 1);
    CHECK(ratio < Real("1.00001"));
    CHECK_THROWS_AS(eval_F(Real(0), 30), DomainError);
    CHECK_THROWS_AS(eval_F(Real(-1), 30), DomainError);
}

TEST_CASE("functional equation F(1/y) = y^-12 F(y)") {
    PrecisionScope scope(40);
    const Real y("1.3");
    CHECK(rel(eval_F(1 / y, 30), pow(y, -12) * eval_F(y, 30)) < Real("1e-10"));

    std::mt19937_64 rng(2718);
    std::uniform_real_distribution<double> pick(0.3, 3.0);
    for (int i = 0; i < 10; ++i) {
        const Real yi(pick(rng));
        CHECK(rel(eval_F(1 / yi, 30), pow(yi, -12) * eval_F(yi, 30)) < Real("1e-9"));
    }
}

TEST_CASE("F(1) matches the closed form of 1/Delta(i)") {
    PrecisionScope scope(40);
    const Real closed = pow(Real(2), 24) * pow(pi(), 18) / pow(boost::multiprecision::tgamma(Real("0.25")), 24);
    const Real f1 = eval_F(Real(1), 30);
    CHECK(rel(f1, closed) < Real("1e-25"));
    CHECK(f1 > 560);
    CHECK(f1 < 561);
}

TEST_CASE("F' against the analytic log-derivative") {
    PrecisionScope scope(40);
    for (const char* ys : {"0.4", "0.7", "1", "1.6"}) {
        const Real y(ys);
        const Real expect = eval_F(y, 30) * log_derivative_oracle(y);
        CHECK(abs(eval_F_prime(y, 30) - expect) < Real("1e-15") * eval_F(y, 30));
    }
    // E2(i) = 3/pi, so F'(1)/F(1) = 6
    CHECK(abs(eval_F_prime(Real(1), 30) / eval_F(Real(1), 30) - 6) < Real("1e-15"));
}

TEST_CASE("eval_F tail bound is honest") {
    PrecisionScope scope(60);
    std::size_t r30 = 0, r60 = 0;
    const Real y("0.5");
    const Real a = eval_F(y, 30, &r30);
    const Real b = eval_F(y, 60, &r60);
    CHECK(r60 > r30);
    CHECK(rel(a, b) < Real("1e-30"));
}

TEST_CASE("saddle point") {
    const auto& sd = saddle30();
    PrecisionScope scope(40);
    CHECK(sd.y0 > 0);
    CHECK(sd.y0 < 1);
    CHECK(sd.c2 > 0);
    CHECK(abs(sd.f_prime) < Real("1e-12") * sd.c1);
    CHECK(rel(sd.t0, exp(-2 * pi() * sd.y0)) < Real("1e-28"));
    CHECK(rel(sd.c1, eval_F(sd.y0, 30)) < Real("1e-25"));
    // E2 vanishes at the saddle
    CHECK(abs(log_derivative_oracle(sd.y0)) < Real("1e-16"));
    // c2 = F''/F = (log F)'' at a stationary point; compare with a difference of the oracle
    const Real h("1e-8");
    const Real second = (log_derivative_oracle(sd.y0 + h) - log_derivative_oracle(sd.y0 - h)) / (2 * h);
    CHECK(rel(sd.c2, second) < Real("1e-12"));
}

TEST_CASE("saddle is stable under doubling the precision") {
    const SaddleData fine = find_saddle(60);
    PrecisionScope scope(70);
    CHECK(abs(fine.y0 - saddle30().y0) < Real("1e-12"));
    CHECK_THROWS_AS(find_saddle(10), DomainError);
}

TEST_CASE("predicted ratio limit") {
    const auto lim = predicted_ratio_limit(saddle30());
    PrecisionScope scope(40);
    CHECK(lim.relative_gap < Real("1e-8"));
    CHECK(abs(lim.limit / 164000 - 1) < Real("0.05"));

    // the cancelled ratio does not depend on k
    const Real r1 = g_ratio_direct(saddle30().t0, 30, 0, 1, 30);
    const Real r3 = g_ratio_direct(saddle30().t0, 30, 0, 3, 30);
    CHECK(rel(r1, r3) < Real("1e-10"));
}

TEST_CASE("asymptotic_b") {
    const auto& sd = saddle30();
    PrecisionScope scope(40);
    for (std::uint32_t k : {1u, 3u, 6u})
        for (std::uint32_t n : {24u, 48u, 480u}) CHECK(asymptotic_b(n, k, sd) < 0);
    CHECK_THROWS_AS(asymptotic_b(12, 1, sd), InvalidLength);
    CHECK_THROWS_AS(asymptotic_b(16, 1, sd), DomainError);

    // log-domain evaluation against the plain product at n = 48
    const auto p = LengthParams::of(48, 1);
    const auto v = eval_forms(sd.t0, 1, 30);
    const Real naive = -2 * pi() * p.j / sqrt(sd.c2) * pow(Real(p.mu), Real(-1.5)) * eval_G(v, p.j, p.nu, 2) *
                       pow(sd.c1, p.mu);
    CHECK(rel(asymptotic_b(48, 1, sd), naive) < Real("1e-10"));
}

TEST_CASE("asymptotic_b against exact b") {
    // The G_1 factor carries theta1(t0)^{j-1}, so the estimate is reported next to the
    // exact coefficient rather than asserted to converge.
    const auto& sd = saddle30();
    PrecisionScope scope(40);
    for (std::uint32_t n : {480u, 960u, 1920u}) {
        const auto p = LengthParams::of(n, 1);
        const auto exact = b_coefficients(n, 1, 1);
        const Real exact_r(exact[p.mu + 1].get_str());
        const Real estimate = asymptotic_b(n, 1, sd);
        CHECK(sgn(exact[p.mu + 1]) < 0);
        CHECK(estimate < 0);
        MESSAGE("n = " << n << " log10|exact| = " << Real(log10(abs(exact_r))).str(8)
                       << " log10|estimate| = " << Real(log10(abs(estimate))).str(8)
                       << " relative error = " << rel(estimate, exact_r).str(4));
    }
}

TEST_CASE("ratio_report") {
    const auto rows = ratio_report(1, {8, 24, 48}, 1);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].n == 8);
    CHECK(rows[0].threshold == 504);
    // |b_4| / 224 with b_4 = -114944
    CHECK(rows[0].ratio == "513.1428571429");
    CHECK_FALSE(rows[0].beta2_negative);
    for (const auto& r : rows) {
        CHECK(r.b1_sign < 0);
        CHECK(r.b2_sign < 0);
    }
    const auto again = ratio_report(1, {8, 24, 48}, 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].ratio == again[i].ratio);
        CHECK(rows[i].margin == again[i].margin);
    }
    CHECK_THROWS_AS(ratio_report(1, {8, 20}), InvalidLength);
}

TEST_CASE("ratio_report sign rule matches beta2") {
    for (std::uint32_t k : {1u, 2u}) {
        std::vector<std::uint32_t> ns;
        for (std::uint32_t n = 8; n <= 400; n += 8) ns.push_back(n);
        const auto rows = ratio_report(k, ns);
        for (const auto& r : rows) CHECK(r.beta2_negative == (sgn(beta_stars(r.n, k).beta2) < 0));
    }
}
