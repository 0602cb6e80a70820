#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "z2k/frac_series.hpp"

namespace z2k {

using Word = std::vector<std::uint32_t>;

/// A free code over Z_2k given by r generator rows of length n.
struct LinearCode {
    std::uint32_t k = 1;
    std::uint32_t n = 0;
    std::vector<Word> rows;

    std::uint32_t modulus() const { return 2 * k; }

    /// Checks shapes and that every entry lies in [0, 2k); throws RangeError.
    void validate() const;

    /// "zcode k n r" followed by r lines of n residues.
    static LinearCode parse(const std::string& text);
    std::string to_text() const;
};

/// Minimal signed representative of x in Z_2k, in [1-k, k].
int rho(std::uint32_t k, std::uint32_t x);
/// sum over entries of min{x^2, (2k-x)^2}.
std::uint64_t euclidean_weight(std::uint32_t k, std::span<const std::uint32_t> word);

/// Codewords visited by a mixed-radix sweep over the generator coefficients.
inline constexpr std::uint64_t kEnumerationLimit = 10'000'000;
std::uint64_t codeword_count(const LinearCode& code);  // (2k)^r, TooLarge past the limit
void enumerate_codewords(const LinearCode& code, const std::function<void(const Word&)>& visit);

struct Type2Report {
    bool gram_zero = false;          // generator rows pairwise (and self-) orthogonal mod 2k
    std::uint64_t distinct_words = 0;
    bool self_dual = false;          // gram_zero and |C| = (2k)^{n/2}
    bool weights_divisible = false;  // every Euclidean weight divisible by 4k
    std::uint64_t min_weight = 0;    // d_E; 0 for the zero code
    bool type2() const { return self_dual && weights_divisible; }
};

Type2Report verify_type2(const LinearCode& code);

/// Symmetrized weight enumerator: (n_0, .., n_k) -> number of codewords,
/// where n_i counts entries equal to +-i.
using SweTable = std::map<std::vector<std::uint32_t>, std::uint64_t>;
SweTable swe(const LinearCode& code);

/// swe evaluated at x_i = f_i, on the grid 1/4k.
FracSeries theta_substitution(const LinearCode& code, std::uint64_t terms);
/// Theta series of (rho(C) + 2k Z^n)/sqrt(2k) for norms <= norm_cap, by
/// enumerating lattice points in every coset. norm_cap <= 12.
FracSeries theta_cosets(const LinearCode& code, std::uint32_t norm_cap);

/// Length-8 Type II code in the form [I_4 | A]. k = 1, 2 come from the
/// built-in table; other k are searched, structured candidates first, then a
/// seeded random search. Throws SearchExhausted when the trial budget runs out.
LinearCode search_c8(std::uint32_t k, std::uint64_t seed);
/// The built-in length-8 codes (extended Hamming, octacode); empty for other k.
std::optional<LinearCode> stored_c8(std::uint32_t k);

}  // namespace z2k
