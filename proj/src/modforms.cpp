#include "z2k/modforms.hpp"

#include "z2k/errors.hpp"

namespace z2k {

mpz_class sigma3(std::uint64_t m) {
    if (m == 0) throw DomainError("sigma3 needs m >= 1");
    mpz_class total = 0;
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        mpz_class cube = d;
        total += cube * cube * cube;
        const std::uint64_t other = m / d;
        if (other != d) {
            mpz_class oc = other;
            total += oc * oc * oc;
        }
    }
    return total;
}

FracSeries eisenstein_e4(std::uint64_t terms) {
    if (terms < 1) throw PrecisionTooSmall("E4 needs at least one term");
    std::vector<mpz_class> c(terms);
    c[0] = 1;
    for (std::uint64_t m = 1; m < terms; ++m) c[m] = 240 * sigma3(m);
    return FracSeries::from_integers(1, mpz_class(terms), std::move(c));
}

FracSeries euler_product(std::uint64_t terms) {
    if (terms < 1) throw PrecisionTooSmall("product needs at least one term");
    // sum over g of (-1)^g t^(g(3g-1)/2), g ranging over all integers
    std::vector<mpz_class> c(terms);
    c[0] = 1;
    for (std::uint64_t g = 1;; ++g) {
        const std::uint64_t p1 = g * (3 * g - 1) / 2;
        const std::uint64_t p2 = g * (3 * g + 1) / 2;
        if (p1 >= terms) break;
        const int sign = (g % 2 == 0) ? 1 : -1;
        c[p1] += sign;
        if (p2 < terms) c[p2] += sign;
    }
    return FracSeries::from_integers(1, mpz_class(terms), std::move(c));
}

FracSeries delta24(std::uint64_t terms) {
    if (terms < 2) throw PrecisionTooSmall("Delta needs at least two terms");
    const FracSeries eta24 = pow(euler_product(terms - 1), 24);
    std::vector<mpz_class> c(terms);
    for (std::uint64_t m = 1; m < terms; ++m) c[m] = eta24.numerator(m - 1);
    return FracSeries::from_integers(1, mpz_class(terms), std::move(c));
}

FracSeries h_series(std::uint64_t terms) { return invert(pow(euler_product(terms), 24)); }

FracSeries theta_f(std::uint32_t k, std::uint32_t i, const mpq_class& trunc) {
    if (k == 0) throw DomainError("k must be positive");
    if (i > k) throw IndexOutOfRange("theta index " + std::to_string(i) + " exceeds k = " + std::to_string(k));
    const std::uint32_t grid = 4 * k;
    FracSeries shape(grid, trunc);
    std::vector<mpz_class> c(shape.size());
    const std::int64_t mod = 2 * static_cast<std::int64_t>(k);
    // x^2 < 4k*T bounds |x|; slot index is x^2
    std::int64_t reach = 0;
    while (static_cast<std::size_t>((reach + 1) * (reach + 1)) < c.size()) ++reach;
    for (std::int64_t x = -reach; x <= reach; ++x)
        if (((x % mod) + mod) % mod == static_cast<std::int64_t>(i)) c[x * x] += 1;
    return FracSeries::from_integers(grid, trunc, std::move(c));
}

FracSeries theta1(std::uint32_t k, std::uint64_t terms) {
    const FracSeries f0 = theta_f(k, 0, mpz_class(terms));
    return pow(f0, 8).regrid(1);
}

ThetaFamily ThetaFamily::build(std::uint32_t k, const mpq_class& trunc) {
    ThetaFamily fam;
    fam.k = k;
    fam.trunc = trunc;
    for (std::uint32_t i = 0; i <= k; ++i) fam.f.push_back(theta_f(k, i, trunc));
    return fam;
}

}  // namespace z2k
