#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "z2k/frac_series.hpp"

namespace z2k {

/// Length data of a Type II code: n = 8j, j = 3*mu + nu.
struct LengthParams {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t j = 0;
    std::uint32_t mu = 0;
    std::uint32_t nu = 0;

    /// Throws InvalidLength unless n is a positive multiple of 8, and
    /// DomainError if k == 0.
    static LengthParams of(std::uint32_t n, std::uint32_t k);
};

/// Coefficients [t^s] u^r of u = Delta / E4^3 for r <= s < terms.
///
/// u = t + O(t^2), so row r starts at t^r; rows are built by repeated
/// multiplication and are read-only afterwards, so one table can serve many
/// lengths (and threads) at once.
class UPowerTable {
public:
    explicit UPowerTable(std::size_t terms);

    std::size_t terms() const noexcept { return terms_; }
    /// [t^s] u^r; zero when s < r.
    const mpz_class& at(std::size_t r, std::size_t s) const;

private:
    std::size_t terms_;
    std::vector<std::vector<mpz_class>> rows_;  // rows_[r][s - r]
    mpz_class zero_ = 0;
};

/// b_{2s}, s = 0 .. mu + extra, from E4^{-j} theta1^j = sum b_{2s} (Delta/E4^3)^s.
/// Coefficient matching against the powers of u in `table`.
std::vector<mpz_class> b_coefficients(std::uint32_t n, std::uint32_t k, std::uint32_t extra,
                                      const UPowerTable& table);
std::vector<mpz_class> b_coefficients(std::uint32_t n, std::uint32_t k, std::uint32_t extra);

/// Same values by the Buermann/Lagrange form
///   b_{2s} = (-j/s) [t^{s-1}] E4^{3s-j-1} theta1^{j-1} (theta1 E4' - theta1' E4) h^s,
/// which never builds u or (theta1/E4)^j.
std::vector<mpz_class> b_coefficients_burmann(std::uint32_t n, std::uint32_t k, std::uint32_t extra);

struct BetaStars {
    mpz_class beta1;  // coefficient of t^{mu+1} forced on an extremal theta series
    mpz_class beta2;  // coefficient of t^{mu+2}
};

/// 24*mu - 240*nu + 744.
long beta_threshold(const LengthParams& p);
BetaStars beta_stars_from(const LengthParams& p, std::span<const mpz_class> b);
BetaStars beta_stars(std::uint32_t n, std::uint32_t k);
BetaStars beta_stars(std::uint32_t n, std::uint32_t k, const UPowerTable& table);

struct ExtremalProfile {
    LengthParams params;
    std::vector<mpz_class> b;  // b_{2s}, s = 0 .. mu + 2
    BetaStars beta;
};

ExtremalProfile extremal_profile(std::uint32_t n, std::uint32_t k);
ExtremalProfile extremal_profile(std::uint32_t n, std::uint32_t k, const UPowerTable& table);

/// sum_{s <= mu} b_{2s} E4^{j-3s} Delta^s, truncated at `terms` (> mu + 2).
FracSeries extremal_theta(std::uint32_t n, std::uint32_t k, std::uint64_t terms);

/// theta1^{j-1} (theta1 E4' - theta1' E4) on t^0 .. t^(terms-1).
FracSeries certificate_series(std::uint32_t k, std::uint32_t j, std::uint64_t terms);
/// t f0^s (f0 f_i' - f0' f_i) on the grid 1/4k, truncated at `trunc`.
FracSeries theta_wronskian_power(std::uint32_t k, std::uint32_t i, std::uint64_t s,
                                 const mpq_class& trunc);

struct PositivityReport {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t max_exponent = 0;  // mu
    mpq_class min_coeff;             // smallest coefficient of the t-grid series
    std::uint32_t min_exponent = 0;
    /// Smallest nonzero coefficient over t f0^{8j-1}(f0 f_i' - f0' f_i),
    /// i = 1..k, with exponent <= mu, and where it sits.
    mpq_class aux_min_coeff;
    mpq_class aux_min_exponent;
    std::uint32_t aux_min_index = 0;
    bool pass = false;
};

PositivityReport positivity_certificate(std::uint32_t n, std::uint32_t k);

/// ((s+2)(1+2ky)^2 - l) / 4k with l = (1+2ky)^2 + sum (2k x_i)^2 over the
/// s+1 entries of xs.
mpq_class eq3_value(std::uint32_t s, std::uint32_t k, long y, std::span<const long> xs);
/// The l above.
mpz_class eq3_l(std::uint32_t k, long y, std::span<const long> xs);

struct CrossoverRow {
    std::uint32_t n = 0;
    mpz_class beta1;
    mpz_class beta2;
};

struct CrossoverResult {
    std::uint32_t k = 0;
    std::vector<CrossoverRow> rows;           // ascending n
    std::optional<std::uint32_t> first_negative;  // least n with beta2 < 0
};

/// Exact beta values for n = from, from+8, .., <= to. `workers` = 0 uses the
/// hardware concurrency; the result does not depend on it.
CrossoverResult crossover_scan(std::uint32_t k, std::uint32_t from, std::uint32_t to,
                               unsigned workers = 0);

}  // namespace z2k
