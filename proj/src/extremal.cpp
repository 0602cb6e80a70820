#include "z2k/extremal.hpp"

#include "z2k/errors.hpp"
#include "z2k/modforms.hpp"
#include "z2k/parallel.hpp"

namespace z2k {

LengthParams LengthParams::of(std::uint32_t n, std::uint32_t k) {
    if (n == 0 || n % 8 != 0)
        throw InvalidLength("length " + std::to_string(n) + " is not a positive multiple of 8");
    if (k == 0) throw DomainError("k must be positive");
    LengthParams p;
    p.n = n;
    p.k = k;
    p.j = n / 8;
    p.mu = n / 24;
    p.nu = p.j - 3 * p.mu;
    return p;
}

UPowerTable::UPowerTable(std::size_t terms) : terms_(terms) {
    if (terms == 0) return;
    std::vector<mpz_class> u(terms);
    if (terms >= 2) {
        const FracSeries series = mul(delta24(terms), pow(invert(eisenstein_e4(terms)), 3));
        for (std::size_t s = 0; s < terms; ++s) u[s] = series.integer_coeff(s);
    }

    rows_.reserve(terms);
    rows_.push_back(std::vector<mpz_class>(terms));
    rows_[0][0] = 1;
    for (std::size_t r = 1; r < terms; ++r) {
        // [t^s] u^r = sum_{i >= r-1} [t^i] u^{r-1} * [t^{s-i}] u, with s - i >= 1
        const auto& prev = rows_[r - 1];
        std::vector<mpz_class> row(terms - r);
        for (std::size_t s = r; s < terms; ++s) {
            mpz_class& acc = row[s - r];
            for (std::size_t i = r - 1; i < s; ++i)
                mpz_addmul(acc.get_mpz_t(), prev[i - (r - 1)].get_mpz_t(), u[s - i].get_mpz_t());
        }
        rows_.push_back(std::move(row));
    }
}

const mpz_class& UPowerTable::at(std::size_t r, std::size_t s) const {
    if (r >= terms_ || s >= terms_)
        throw OutOfTruncation("u-power table holds " + std::to_string(terms_) + " terms");
    if (s < r) return zero_;
    return rows_[r][s - r];
}

namespace {

std::vector<mpz_class> integer_coeffs(const FracSeries& s, const char* what) {
    std::vector<mpz_class> out(s.size());
    for (std::size_t e = 0; e < s.size(); ++e) {
        try {
            out[e] = s.integer_coeff(e);
        } catch (const GridViolation&) {
            throw InvariantViolation(std::string(what) + " has a non-integral coefficient at t^" +
                                     std::to_string(e));
        }
    }
    return out;
}

}  // namespace

std::vector<mpz_class> b_coefficients(std::uint32_t n, std::uint32_t k, std::uint32_t extra,
                                      const UPowerTable& table) {
    const auto p = LengthParams::of(n, k);
    const std::size_t terms = p.mu + extra + 1;
    if (table.terms() < terms)
        throw PrecisionTooSmall("u-power table has " + std::to_string(table.terms()) + " terms, need " +
                                std::to_string(terms));
    const FracSeries ratio = mul(theta1(k, terms), invert(eisenstein_e4(terms)));
    const auto phi = integer_coeffs(pow(ratio, p.j), "(theta1/E4)^j");

    std::vector<mpz_class> b(terms);
    mpz_class acc;
    for (std::size_t s = 0; s < terms; ++s) {
        acc = phi[s];
        for (std::size_t r = 0; r < s; ++r)
            mpz_submul(acc.get_mpz_t(), b[r].get_mpz_t(), table.at(r, s).get_mpz_t());
        b[s] = acc;
    }
    return b;
}

std::vector<mpz_class> b_coefficients(std::uint32_t n, std::uint32_t k, std::uint32_t extra) {
    const auto p = LengthParams::of(n, k);
    return b_coefficients(n, k, extra, UPowerTable(p.mu + extra + 1));
}

FracSeries certificate_series(std::uint32_t k, std::uint32_t j, std::uint64_t terms) {
    if (j == 0) throw DomainError("j must be positive");
    const mpq_class T{mpz_class(terms)};
    const FracSeries e4_long = eisenstein_e4(terms + 1);
    const FracSeries th_long = theta1(k, terms + 1);
    const FracSeries e4 = e4_long.truncated(T);
    const FracSeries th = th_long.truncated(T);
    const FracSeries wronskian = mul(th, differentiate(e4_long)) - mul(differentiate(th_long), e4);
    return mul(pow(th, j - 1), wronskian);
}

std::vector<mpz_class> b_coefficients_burmann(std::uint32_t n, std::uint32_t k, std::uint32_t extra) {
    const auto p = LengthParams::of(n, k);
    const std::size_t top = p.mu + extra;  // largest s
    std::vector<mpz_class> b(top + 1);
    b[0] = 1;
    if (top == 0) return b;

    const FracSeries e4 = eisenstein_e4(top);
    const auto q = integer_coeffs(certificate_series(k, p.j, top), "certificate series");
    const FracSeries step = mul(pow(e4, 3), h_series(top));  // t E4^3 / Delta
    FracSeries weight = pow(invert(e4), p.j + 1);             // E4^{3s-j-1} h^s at s = 0

    for (std::size_t s = 1; s <= top; ++s) {
        weight = mul(weight, step);
        mpz_class c = 0;
        for (std::size_t i = 0; i < s; ++i) c += weight.integer_coeff(i) * q[s - 1 - i];
        c *= -static_cast<long>(p.j);
        if (!mpz_divisible_ui_p(c.get_mpz_t(), s))
            throw InvariantViolation("Buermann coefficient for s = " + std::to_string(s) + " is not integral");
        mpz_divexact_ui(b[s].get_mpz_t(), c.get_mpz_t(), s);
    }
    return b;
}

long beta_threshold(const LengthParams& p) {
    return 24L * p.mu - 240L * p.nu + 744L;
}

BetaStars beta_stars_from(const LengthParams& p, std::span<const mpz_class> b) {
    if (b.size() < p.mu + 3) throw PrecisionTooSmall("beta values need b up to index mu + 2");
    BetaStars out;
    out.beta1 = -b[p.mu + 1];
    out.beta2 = -b[p.mu + 2] + b[p.mu + 1] * beta_threshold(p);
    return out;
}

BetaStars beta_stars(std::uint32_t n, std::uint32_t k, const UPowerTable& table) {
    const auto p = LengthParams::of(n, k);
    return beta_stars_from(p, b_coefficients(n, k, 2, table));
}

BetaStars beta_stars(std::uint32_t n, std::uint32_t k) {
    return extremal_profile(n, k).beta;
}

ExtremalProfile extremal_profile(std::uint32_t n, std::uint32_t k, const UPowerTable& table) {
    ExtremalProfile prof;
    prof.params = LengthParams::of(n, k);
    prof.b = b_coefficients(n, k, 2, table);
    prof.beta = beta_stars_from(prof.params, prof.b);
    return prof;
}

ExtremalProfile extremal_profile(std::uint32_t n, std::uint32_t k) {
    const auto p = LengthParams::of(n, k);
    return extremal_profile(n, k, UPowerTable(p.mu + 3));
}

FracSeries extremal_theta(std::uint32_t n, std::uint32_t k, std::uint64_t terms) {
    const auto p = LengthParams::of(n, k);
    if (terms <= p.mu + 2)
        throw PrecisionTooSmall("extremal theta needs more than mu + 2 = " + std::to_string(p.mu + 2) +
                                " terms");
    const auto b = b_coefficients(n, k, 0);
    const FracSeries e4 = eisenstein_e4(terms);
    const FracSeries e4_cubed = pow(e4, 3);
    const FracSeries delta = delta24(terms);

    // Horner in (E4^3, Delta): sum_s b_s (E4^3)^{mu-s} Delta^s
    const mpq_class T{mpz_class(terms)};
    FracSeries acc = scale(FracSeries::one(1, T), mpq_class(b[0]));
    FracSeries delta_power = FracSeries::one(1, T);
    for (std::size_t s = 1; s <= p.mu; ++s) {
        delta_power = mul(delta_power, delta);
        acc = linear_combine(mul(acc, e4_cubed), delta_power, 1, mpq_class(b[s]));
    }
    return mul(acc, pow(e4, p.nu));
}

FracSeries theta_wronskian_power(std::uint32_t k, std::uint32_t i, std::uint64_t s,
                                 const mpq_class& trunc) {
    const FracSeries f0 = theta_f(k, 0, trunc);
    const FracSeries fi = theta_f(k, i, trunc);
    const FracSeries wronskian = mul(f0, euler_derivative(fi)) - mul(euler_derivative(f0), fi);
    // f0 lives on integer exponents k*m^2, so its power is taken on the integer grid
    return mul(pow(f0.regrid(1), s), wronskian);
}

PositivityReport positivity_certificate(std::uint32_t n, std::uint32_t k) {
    const auto p = LengthParams::of(n, k);
    PositivityReport rep;
    rep.n = n;
    rep.k = k;
    rep.max_exponent = p.mu;

    const FracSeries main = certificate_series(k, p.j, p.mu + 1);
    bool main_ok = true;
    for (std::uint32_t e = 0; e <= p.mu; ++e) {
        const mpq_class c = main.coeff(e);
        if (e == 0 || c < rep.min_coeff) {
            rep.min_coeff = c;
            rep.min_exponent = e;
        }
        if (sgn(c) <= 0) main_ok = false;
    }

    bool aux_ok = true;
    bool seen = false;
    const mpq_class trunc{mpz_class(p.mu + 1)};
    for (std::uint32_t i = 1; i <= k; ++i) {
        const FracSeries w = theta_wronskian_power(k, i, static_cast<std::uint64_t>(n) - 1, trunc);
        const std::size_t last = static_cast<std::size_t>(p.mu) * w.grid_denom();
        for (std::size_t e = 0; e < w.size() && e <= last; ++e) {
            if (sgn(w.numerator(e)) == 0) continue;
            const mpq_class c = w.coeff(e);
            if (!seen || c < rep.aux_min_coeff) {
                rep.aux_min_coeff = c;
                rep.aux_min_exponent = mpq_class(static_cast<unsigned long>(e), w.grid_denom());
                rep.aux_min_exponent.canonicalize();
                rep.aux_min_index = i;
                seen = true;
            }
            if (sgn(c) < 0) aux_ok = false;
        }
    }
    rep.pass = main_ok && aux_ok;
    return rep;
}

mpz_class eq3_l(std::uint32_t k, long y, std::span<const long> xs) {
    const mpz_class two_k = 2 * static_cast<long>(k);
    const mpz_class lead = 1 + two_k * y;
    mpz_class l = lead * lead;
    for (long x : xs) {
        const mpz_class v = two_k * x;
        l += v * v;
    }
    return l;
}

mpq_class eq3_value(std::uint32_t s, std::uint32_t k, long y, std::span<const long> xs) {
    if (k == 0) throw DomainError("k must be positive");
    if (xs.size() != static_cast<std::size_t>(s) + 1)
        throw DomainError("expected " + std::to_string(s + 1) + " lattice coordinates, got " +
                          std::to_string(xs.size()));
    const mpz_class lead = 1 + mpz_class(2 * static_cast<long>(k)) * y;
    mpq_class v(mpz_class((s + 2) * lead * lead - eq3_l(k, y, xs)), mpz_class(4 * static_cast<long>(k)));
    v.canonicalize();
    return v;
}

CrossoverResult crossover_scan(std::uint32_t k, std::uint32_t from, std::uint32_t to, unsigned workers) {
    if (from == 0 || from % 8 != 0 || to % 8 != 0)
        throw InvalidLength("scan bounds must be positive multiples of 8");
    if (from > to) throw InvalidLength("empty scan range");
    const auto top = LengthParams::of(to, k);
    const UPowerTable table(top.mu + 3);

    CrossoverResult res;
    res.k = k;
    res.rows.resize((to - from) / 8 + 1);
    parallel_for(res.rows.size(), workers, [&](std::size_t i) {
        const std::uint32_t n = from + 8 * static_cast<std::uint32_t>(i);
        const auto beta = beta_stars(n, k, table);
        res.rows[i] = CrossoverRow{n, beta.beta1, beta.beta2};
    });
    for (const auto& row : res.rows) {
        if (sgn(row.beta2) < 0) {
            res.first_negative = row.n;
            break;
        }
    }
    return res;
}

}  // namespace z2k
