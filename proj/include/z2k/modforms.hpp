#pragma once

#include <cstdint>
#include <vector>

#include "z2k/frac_series.hpp"

namespace z2k {

/// Sum of the cubes of the positive divisors of m (m >= 1).
mpz_class sigma3(std::uint64_t m);

// q-expansions, all in t = q^2. `terms` is the integer truncation: the series
// holds t^0 .. t^(terms-1).

/// 1 + 240 * sum sigma3(m) t^m.
FracSeries eisenstein_e4(std::uint64_t terms);
/// t * prod (1 - t^m)^24. Needs terms >= 2.
FracSeries delta24(std::uint64_t terms);
/// prod (1 - t^r)^(-24).
FracSeries h_series(std::uint64_t terms);
/// prod (1 - t^m), from the pentagonal number theorem.
FracSeries euler_product(std::uint64_t terms);

/// Theta function of one residue class: sum of t^(x^2/4k) over x = i (mod 2k),
/// on the grid 1/4k. Classes i and 2k-i give the same series.
FracSeries theta_f(std::uint32_t k, std::uint32_t i, const mpq_class& trunc);

/// Theta series of sqrt(2k) Z^8, i.e. theta_f(k, 0)^8 moved to the integer grid.
FracSeries theta1(std::uint32_t k, std::uint64_t terms);

/// The family f_0 .. f_k at a common truncation.
struct ThetaFamily {
    std::uint32_t k = 1;
    mpq_class trunc;
    std::vector<FracSeries> f;

    static ThetaFamily build(std::uint32_t k, const mpq_class& trunc);
};

}  // namespace z2k
