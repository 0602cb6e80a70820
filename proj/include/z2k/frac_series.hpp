#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace z2k {

/// Truncated power series in t with exponents on the grid e/D, e >= 0.
///
/// Coefficients are exact rationals stored as integer numerators over one
/// shared positive denominator, so the common all-integer case runs on plain
/// integer convolution. Terms with exponent >= truncation() are dropped. The
/// storage is dense: slot e holds the coefficient of t^(e/D), and there are
/// exactly ceil(T*D) slots.
///
/// Values are immutable once built; every operation returns a new series.
class FracSeries {
public:
    /// Zero series on grid 1/D with truncation T (> 0).
    FracSeries(std::uint32_t grid_denom, mpq_class trunc);

    /// Integer coefficients indexed by grid slot; extra entries beyond the
    /// truncation are dropped, missing ones are zero.
    static FracSeries from_integers(std::uint32_t grid_denom, mpq_class trunc,
                                    std::vector<mpz_class> coeffs);
    static FracSeries from_integers(std::uint32_t grid_denom, mpq_class trunc,
                                    std::initializer_list<long> coeffs);
    /// Numerators over a common denominator (reduced on construction).
    static FracSeries from_fraction(std::uint32_t grid_denom, mpq_class trunc,
                                    std::vector<mpz_class> numerators, mpz_class denominator);
    static FracSeries one(std::uint32_t grid_denom, mpq_class trunc);
    /// c * t^(e/D).
    static FracSeries monomial(std::uint32_t grid_denom, mpq_class trunc, std::size_t e,
                               const mpq_class& c);

    std::uint32_t grid_denom() const noexcept { return denom_grid_; }
    const mpq_class& truncation() const noexcept { return trunc_; }
    /// Number of grid slots, ceil(T*D).
    std::size_t size() const noexcept { return num_.size(); }

    bool is_integral() const { return den_ == 1; }
    const mpz_class& numerator(std::size_t e) const { return num_[e]; }
    const std::vector<mpz_class>& numerators() const noexcept { return num_; }
    const mpz_class& denominator() const noexcept { return den_; }

    /// Coefficient at grid slot e (zero past the end).
    mpq_class coeff(std::size_t e) const;
    /// Coefficient of t^exponent. Off-grid exponents below the truncation
    /// read as zero; exponents at or above it throw OutOfTruncation.
    mpq_class coeff_at(const mpq_class& exponent) const;
    /// Integer coefficient at slot e; throws GridViolation when not integral.
    mpz_class integer_coeff(std::size_t e) const;

    /// Same values on grid 1/new_denom. Refining needs new_denom to be a
    /// multiple of D; coarsening throws GridViolation if a nonzero term falls
    /// off the coarser grid.
    FracSeries regrid(std::uint32_t new_denom) const;
    /// Drops terms at or above new_trunc (which must not exceed truncation()).
    FracSeries truncated(const mpq_class& new_trunc) const;

    /// Smallest grid denominator carrying every nonzero term.
    std::uint32_t natural_grid() const;
    bool is_zero() const;

    /// Value-wise equality up to the smaller truncation, after grid alignment.
    friend bool operator==(const FracSeries& a, const FracSeries& b);

private:
    FracSeries() = default;
    void normalize();

    friend class SeriesKernel;

    std::uint32_t denom_grid_ = 1;
    mpq_class trunc_;
    std::vector<mpz_class> num_;
    mpz_class den_ = 1;
};

/// Number of grid slots with e/D < trunc.
std::size_t slot_count(std::uint32_t grid_denom, const mpq_class& trunc);

FracSeries linear_combine(const FracSeries& a, const FracSeries& b, const mpq_class& alpha,
                          const mpq_class& beta);
FracSeries mul(const FracSeries& a, const FracSeries& b);
FracSeries square(const FracSeries& a);
FracSeries scale(const FracSeries& a, const mpq_class& c);
/// a^m by binary powering; a^0 is the constant 1.
FracSeries pow(const FracSeries& a, std::uint64_t m);
/// Multiplicative inverse; throws ZeroConstantTerm when a(0) == 0.
FracSeries invert(const FracSeries& a);
/// d/dt. The truncation drops by one; throws DomainError if a nonzero term
/// has exponent strictly between 0 and 1 and PrecisionTooSmall if T <= 1.
FracSeries differentiate(const FracSeries& a);
/// t * d/dt, which keeps the grid and the truncation.
FracSeries euler_derivative(const FracSeries& a);

inline FracSeries operator+(const FracSeries& a, const FracSeries& b) {
    return linear_combine(a, b, 1, 1);
}
inline FracSeries operator-(const FracSeries& a, const FracSeries& b) {
    return linear_combine(a, b, 1, -1);
}
inline FracSeries operator*(const FracSeries& a, const FracSeries& b) { return mul(a, b); }

/// Golden-file text form: header "fracseries D T", then one nonzero term per
/// line as "e/D<TAB>numerator[/denominator]".
std::string to_text(const FracSeries& a);
FracSeries from_text(const std::string& text);

}  // namespace z2k
