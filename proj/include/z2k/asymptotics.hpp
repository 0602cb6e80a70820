#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

namespace z2k {

using Real = boost::multiprecision::mpfr_float;

/// Sets the default MPFR precision for the current scope.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits10);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

inline constexpr unsigned kDefaultDigits = 30;

/// F(y) = e^{2 pi y} prod_{r<=R} (1 - e^{-2 pi y r})^{-24} = 1/Delta(iy).
/// R is chosen so the dropped factors change F by less than 10^-digits
/// (relative); it is written to *terms_used when given.
Real eval_F(const Real& y, unsigned digits, std::size_t* terms_used = nullptr);
/// Central difference of F at step 10^(-digits/3).
Real eval_F_prime(const Real& y, unsigned digits);
/// Second central difference of F at step 10^(-digits/4).
Real eval_F_second(const Real& y, unsigned digits);

/// Stationary point of F and the constants of the saddle-point estimate.
struct SaddleData {
    Real y0;
    Real t0;          // e^{-2 pi y0}
    Real c1;          // F(y0)
    Real c2;          // F''(y0)/F(y0)
    Real f_prime;     // F'(y0), for the stationarity check
    unsigned digits = kDefaultDigits;
    std::size_t h_terms = 0;  // product factors used for F(y0)
};

/// Bracketed root of F' on (0.05, 1): bisection, then secant refinement.
/// Throws NoBracket when F' does not change sign there.
SaddleData find_saddle(unsigned digits = kDefaultDigits);

/// E4, theta1 and h with the two derivatives, at a real point 0 < t < 1.
struct FormValues {
    Real e4, e4_prime, theta1, theta1_prime, h;
};
FormValues eval_forms(const Real& t, std::uint32_t k, unsigned digits);

/// G_1(t) = E4^{2-nu} theta1^{j-1} (theta1 E4' - theta1' E4) h(t); G_2 has E4^{5-nu}.
Real eval_G(const FormValues& v, std::uint32_t j, std::uint32_t nu, unsigned e4_exponent_base);
/// G_2(t)/G_1(t) from the full products, with nothing cancelled.
Real g_ratio_direct(const Real& t, std::uint32_t j, std::uint32_t nu, std::uint32_t k, unsigned digits);

struct RatioLimit {
    Real limit;         // c1 * E4(t0)^3
    Real direct_limit;  // c1 * G_2(t0)/G_1(t0) at j = 30, nu = 0, k = 1
    Real relative_gap;
};

/// c1 * (G_2/G_1)(t0). Both evaluation paths are computed and must agree to
/// 1e-8 (InvariantViolation otherwise).
RatioLimit predicted_ratio_limit(const SaddleData& sd);

/// -2 pi j c2^{-1/2} mu^{-3/2} G_1(t0) c1^mu evaluated in log space. Needs mu >= 1.
Real asymptotic_b(std::uint32_t n, std::uint32_t k, const SaddleData& sd);

struct RatioRow {
    std::uint32_t n = 0;
    std::uint32_t mu = 0;
    std::uint32_t nu = 0;
    std::string ratio;      // |b_{2(mu+2)} / b_{2(mu+1)}|, fixed-point decimal
    long threshold = 0;     // 24 mu - 240 nu + 744
    std::string margin;     // ratio - threshold
    int b1_sign = 0;        // sign of b_{2(mu+1)}
    int b2_sign = 0;        // sign of b_{2(mu+2)}
    bool beta2_negative = false;
};

/// Exact ratio table for each n (multiples of 8), in input order.
std::vector<RatioRow> ratio_report(std::uint32_t k, const std::vector<std::uint32_t>& ns, unsigned workers = 0);

/// Fixed-point rendering used by the reports: `decimals` digits after the point.
std::string to_decimal(const Real& x, unsigned decimals);

}  // namespace z2k
