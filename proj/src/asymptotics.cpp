#include "z2k/asymptotics.hpp"

#include <cmath>

#include "z2k/errors.hpp"
#include "z2k/extremal.hpp"
#include "z2k/modforms.hpp"
#include "z2k/parallel.hpp"

namespace z2k {

namespace {

constexpr unsigned kGuardDigits = 10;

Real from_mpz(const mpz_class& z) {
    Real r;
    mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real from_mpq(const mpq_class& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real pow10(long e) { return boost::multiprecision::pow(Real(10), e); }

Real two_pi() { return 2 * boost::math::constants::pi<Real>(); }

// Smallest R with 24 t^{R+1} / ((1-t)(1-t^{R+1})) < eps; this bounds
// -24 * sum_{r>R} log(1 - t^r).
std::size_t product_terms(const Real& t, const Real& eps) {
    Real tr = t;  // t^{R+1}
    std::size_t r = 0;
    const Real one_minus_t = 1 - t;
    while (24 * tr / (one_minus_t * (1 - tr)) >= eps) {
        tr *= t;
        ++r;
    }
    return r;
}

Real h_value(const Real& t, const Real& eps, std::size_t* terms_used) {
    const std::size_t terms = product_terms(t, eps);
    Real prod = 1;
    Real tr = 1;
    for (std::size_t r = 1; r <= terms; ++r) {
        tr *= t;
        prod *= 1 - tr;
    }
    if (terms_used) *terms_used = terms;
    return 1 / boost::multiprecision::pow(prod, 24);
}

}  // namespace

PrecisionScope::PrecisionScope(unsigned digits10) : saved_(Real::default_precision()) {
    Real::default_precision(digits10);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Real eval_F(const Real& y, unsigned digits, std::size_t* terms_used) {
    if (y <= 0) throw DomainError("F needs y > 0");
    PrecisionScope scope(digits + kGuardDigits);
    const Real t = exp(-two_pi() * y);
    return exp(two_pi() * y) * h_value(t, pow10(-static_cast<long>(digits) - 2), terms_used);
}

Real eval_F_prime(const Real& y, unsigned digits) {
    PrecisionScope scope(digits + kGuardDigits);
    const Real step = pow10(-static_cast<long>(digits / 3));
    return (eval_F(y + step, digits) - eval_F(y - step, digits)) / (2 * step);
}

Real eval_F_second(const Real& y, unsigned digits) {
    PrecisionScope scope(digits + kGuardDigits);
    const Real step = pow10(-static_cast<long>(digits / 4));
    return (eval_F(y + step, digits) - 2 * eval_F(y, digits) + eval_F(y - step, digits)) / (step * step);
}

SaddleData find_saddle(unsigned digits) {
    if (digits < 15) throw DomainError("saddle search needs at least 15 digits");
    PrecisionScope scope(digits + kGuardDigits);
    Real lo("0.05"), hi("1.0");
    Real flo = eval_F_prime(lo, digits);
    const Real fhi = eval_F_prime(hi, digits);
    if (sign(flo) == sign(fhi)) throw NoBracket("F' keeps its sign on (0.05, 1.0)");

    while (hi - lo > Real("1e-4")) {
        const Real mid = (lo + hi) / 2;
        const Real fmid = eval_F_prime(mid, digits);
        if (sign(fmid) == sign(flo)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }

    // secant from the bracket ends, kept inside the bracket
    const Real tol = pow10(-static_cast<long>(digits / 2));
    Real a = lo, b = hi;
    Real fa = eval_F_prime(a, digits), fb = eval_F_prime(b, digits);
    for (int iter = 0; iter < 100 && fb != 0; ++iter) {
        Real next = b - fb * (b - a) / (fb - fa);
        if (next <= lo || next >= hi) next = (lo + hi) / 2;
        const Real fnext = eval_F_prime(next, digits);
        if (sign(fnext) == sign(flo)) {
            lo = next;
            flo = fnext;
        } else {
            hi = next;
        }
        const Real moved = abs(next - b);
        a = b;
        fa = fb;
        b = next;
        fb = fnext;
        if (moved < tol) break;
    }

    SaddleData sd;
    sd.digits = digits;
    sd.y0 = b;
    sd.t0 = exp(-two_pi() * b);
    sd.c1 = eval_F(b, digits, &sd.h_terms);
    sd.c2 = eval_F_second(b, digits) / sd.c1;
    sd.f_prime = fb;
    return sd;
}

FormValues eval_forms(const Real& t, std::uint32_t k, unsigned digits) {
    if (t <= 0 || t >= 1) throw DomainError("forms are evaluated for 0 < t < 1");
    if (k == 0) throw DomainError("k must be positive");
    PrecisionScope scope(digits + kGuardDigits);
    const Real eps = pow10(-static_cast<long>(digits) - 5);

    FormValues v;
    // E4 and E4': stop once the terms drop below eps relative to the partial sums
    Real e4 = 1, e4p = 0, tm = 1;  // tm = t^{m-1}
    for (std::uint64_t m = 1;; ++m) {
        const Real s3 = from_mpz(sigma3(m));
        const Real term_p = 240 * s3 * m * tm;
        e4p += term_p;
        tm *= t;
        const Real term = 240 * s3 * tm;
        e4 += term;
        if (term < eps * e4 && term_p < eps * e4p) break;
    }
    v.e4 = e4;
    v.e4_prime = e4p;

    // f0 = sum_x t^{k x^2}, f0' = sum_x k x^2 t^{k x^2 - 1}
    Real f0 = 1, f0p = 0;
    for (std::uint64_t x = 1;; ++x) {
        const std::uint64_t e = k * x * x;
        const Real term = 2 * pow(t, e);
        f0 += term;
        f0p += term * e / t;
        if (term * e < eps * t) break;
    }
    v.theta1 = pow(f0, 8);
    v.theta1_prime = 8 * pow(f0, 7) * f0p;
    v.h = h_value(t, eps, nullptr);
    return v;
}

Real eval_G(const FormValues& v, std::uint32_t j, std::uint32_t nu, unsigned e4_exponent_base) {
    if (j == 0) throw DomainError("j must be positive");
    const Real wronskian = v.theta1 * v.e4_prime - v.theta1_prime * v.e4;
    return pow(v.e4, static_cast<long>(e4_exponent_base) - static_cast<long>(nu)) * pow(v.theta1, j - 1) *
           wronskian * v.h;
}

Real g_ratio_direct(const Real& t, std::uint32_t j, std::uint32_t nu, std::uint32_t k, unsigned digits) {
    PrecisionScope scope(digits + kGuardDigits);
    const FormValues v = eval_forms(t, k, digits);
    return eval_G(v, j, nu, 5) / eval_G(v, j, nu, 2);
}

RatioLimit predicted_ratio_limit(const SaddleData& sd) {
    PrecisionScope scope(sd.digits + kGuardDigits);
    const FormValues v = eval_forms(sd.t0, 1, sd.digits);
    RatioLimit out;
    out.limit = sd.c1 * pow(v.e4, 3);
    out.direct_limit = sd.c1 * g_ratio_direct(sd.t0, 30, 0, 1, sd.digits);
    out.relative_gap = abs(out.direct_limit / out.limit - 1);
    if (out.relative_gap >= Real("1e-8"))
        throw InvariantViolation("direct and cancelled G2/G1 disagree (relative gap " +
                                 out.relative_gap.str(6) + ")");
    return out;
}

Real asymptotic_b(std::uint32_t n, std::uint32_t k, const SaddleData& sd) {
    const auto p = LengthParams::of(n, k);
    if (p.mu == 0) throw DomainError("the asymptotic form needs mu >= 1");
    PrecisionScope scope(sd.digits + kGuardDigits);
    const FormValues v = eval_forms(sd.t0, k, sd.digits);
    const Real wronskian = v.theta1 * v.e4_prime - v.theta1_prime * v.e4;
    if (wronskian <= 0) throw InvariantViolation("G_1(t0) is not positive");
    const Real log_g1 = (2 - static_cast<long>(p.nu)) * log(v.e4) + (p.j - 1) * log(v.theta1) +
                        log(wronskian) + log(v.h);
    const Real log_abs = log(two_pi() * p.j) - log(sd.c2) / 2 - Real(3) / 2 * log(Real(p.mu)) + log_g1 +
                         p.mu * log(sd.c1);
    return -exp(log_abs);
}

std::string to_decimal(const Real& x, unsigned decimals) {
    return x.str(decimals, std::ios_base::fixed);
}

std::vector<RatioRow> ratio_report(std::uint32_t k, const std::vector<std::uint32_t>& ns, unsigned workers) {
    std::uint32_t top = 0;
    for (auto n : ns) top = std::max(top, LengthParams::of(n, k).n);
    if (ns.empty()) return {};
    const UPowerTable table(LengthParams::of(top, k).mu + 3);

    std::vector<ExtremalProfile> profiles(ns.size());
    parallel_for(ns.size(), workers, [&](std::size_t i) { profiles[i] = extremal_profile(ns[i], k, table); });

    PrecisionScope scope(40);
    std::vector<RatioRow> rows;
    for (const auto& prof : profiles) {
        const auto& p = prof.params;
        const mpz_class& b1 = prof.b[p.mu + 1];
        const mpz_class& b2 = prof.b[p.mu + 2];
        RatioRow row;
        row.n = p.n;
        row.mu = p.mu;
        row.nu = p.nu;
        row.threshold = beta_threshold(p);
        row.b1_sign = sgn(b1);
        row.b2_sign = sgn(b2);
        row.beta2_negative = sgn(prof.beta.beta2) < 0;
        if (sgn(b1) != 0) {
            mpq_class ratio(abs(b2), abs(b1));
            ratio.canonicalize();
            const Real r = from_mpq(ratio);
            row.ratio = to_decimal(r, 10);
            row.margin = to_decimal(r - row.threshold, 10);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace z2k
