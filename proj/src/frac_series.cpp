#include "z2k/frac_series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "z2k/errors.hpp"

namespace z2k {

namespace {

std::uint32_t lcm_grid(std::uint32_t a, std::uint32_t b) {
    return static_cast<std::uint32_t>(std::lcm<std::uint64_t>(a, b));
}

const mpq_class& min_trunc(const mpq_class& a, const mpq_class& b) { return a < b ? a : b; }

// Numerators of a series viewed on a finer grid with n slots. Borrows the
// original storage when no respacing is needed.
class GridView {
public:
    GridView(const FracSeries& s, std::uint32_t grid, std::size_t n) {
        if (grid == s.grid_denom() && n <= s.size()) {
            borrowed_ = &s.numerators();
            n_ = n;
            return;
        }
        const std::size_t step = grid / s.grid_denom();
        owned_.resize(n);
        for (std::size_t e = 0; e < s.size() && e * step < n; ++e) owned_[e * step] = s.numerator(e);
        n_ = n;
    }
    const mpz_class& operator[](std::size_t i) const {
        return borrowed_ ? (*borrowed_)[i] : owned_[i];
    }
    std::size_t size() const { return n_; }

private:
    const std::vector<mpz_class>* borrowed_ = nullptr;
    std::vector<mpz_class> owned_;
    std::size_t n_ = 0;
};

std::vector<std::size_t> nonzero_slots(const GridView& v) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) out.push_back(i);
    return out;
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace

// Internal access for the arithmetic kernels.
class SeriesKernel {
public:
    static FracSeries make(std::uint32_t grid, mpq_class trunc, std::vector<mpz_class> num,
                           mpz_class den) {
        FracSeries s;
        s.denom_grid_ = grid;
        s.trunc_ = std::move(trunc);
        s.num_ = std::move(num);
        s.den_ = std::move(den);
        s.normalize();
        return s;
    }

    // Truncated Cauchy product of numerator arrays; skips zero slots, which
    // matters for theta functions whose support is a sparse set of squares.
    static std::vector<mpz_class> convolve(const GridView& a, const GridView& b, std::size_t n) {
        std::vector<mpz_class> out(n);
        const auto nza = nonzero_slots(a);
        const auto nzb = nonzero_slots(b);
        for (std::size_t ia : nza) {
            for (std::size_t ib : nzb) {
                if (ia + ib >= n) break;
                mpz_addmul(out[ia + ib].get_mpz_t(), a[ia].get_mpz_t(), b[ib].get_mpz_t());
            }
        }
        return out;
    }

    static std::vector<mpz_class> self_convolve(const GridView& a, std::size_t n) {
        std::vector<mpz_class> out(n);
        const auto nz = nonzero_slots(a);
        for (std::size_t p = 0; p < nz.size(); ++p) {
            const std::size_t ia = nz[p];
            if (2 * ia >= n) break;
            for (std::size_t q = p + 1; q < nz.size(); ++q) {
                const std::size_t ib = nz[q];
                if (ia + ib >= n) break;
                mpz_addmul(out[ia + ib].get_mpz_t(), a[ia].get_mpz_t(), a[ib].get_mpz_t());
            }
        }
        for (auto& c : out) c <<= 1;
        for (std::size_t ia : nz) {
            if (2 * ia >= n) break;
            mpz_addmul(out[2 * ia].get_mpz_t(), a[ia].get_mpz_t(), a[ia].get_mpz_t());
        }
        return out;
    }
};

std::size_t slot_count(std::uint32_t grid_denom, const mpq_class& trunc) {
    // number of integers e >= 0 with e < trunc * D
    mpq_class bound = trunc * grid_denom;
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
    if (sgn(c) <= 0) return 0;
    return c.get_ui();
}

FracSeries::FracSeries(std::uint32_t grid_denom, mpq_class trunc)
    : denom_grid_(grid_denom), trunc_(std::move(trunc)) {
    trunc_.canonicalize();
    if (denom_grid_ == 0) throw DomainError("grid denominator must be positive");
    if (sgn(trunc_) <= 0) throw PrecisionTooSmall("truncation must be positive");
    num_.resize(slot_count(denom_grid_, trunc_));
}

FracSeries FracSeries::from_integers(std::uint32_t grid_denom, mpq_class trunc,
                                     std::vector<mpz_class> coeffs) {
    FracSeries s(grid_denom, std::move(trunc));
    coeffs.resize(s.num_.size());
    s.num_ = std::move(coeffs);
    return s;
}

FracSeries FracSeries::from_integers(std::uint32_t grid_denom, mpq_class trunc,
                                     std::initializer_list<long> coeffs) {
    std::vector<mpz_class> v;
    for (long c : coeffs) v.emplace_back(c);
    return from_integers(grid_denom, std::move(trunc), std::move(v));
}

FracSeries FracSeries::from_fraction(std::uint32_t grid_denom, mpq_class trunc,
                                     std::vector<mpz_class> numerators, mpz_class denominator) {
    if (sgn(denominator) == 0) throw DomainError("zero denominator");
    FracSeries s(grid_denom, std::move(trunc));
    numerators.resize(s.num_.size());
    s.num_ = std::move(numerators);
    s.den_ = std::move(denominator);
    s.normalize();
    return s;
}

FracSeries FracSeries::one(std::uint32_t grid_denom, mpq_class trunc) {
    FracSeries s(grid_denom, std::move(trunc));
    if (!s.num_.empty()) s.num_[0] = 1;
    return s;
}

FracSeries FracSeries::monomial(std::uint32_t grid_denom, mpq_class trunc, std::size_t e,
                                const mpq_class& c) {
    FracSeries s(grid_denom, std::move(trunc));
    if (e < s.num_.size()) {
        s.num_[e] = c.get_num();
        s.den_ = c.get_den();
    }
    s.normalize();
    return s;
}

void FracSeries::normalize() {
    if (sgn(den_) < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    if (den_ == 1) return;
    mpz_class g = den_;
    for (const auto& c : num_) {
        if (g == 1) break;
        if (sgn(c) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g == 1) return;
    for (auto& c : num_)
        if (sgn(c) != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

mpq_class FracSeries::coeff(std::size_t e) const {
    if (e >= num_.size()) return 0;
    mpq_class q(num_[e], den_);
    q.canonicalize();
    return q;
}

mpq_class FracSeries::coeff_at(const mpq_class& exponent) const {
    if (exponent >= trunc_)
        throw OutOfTruncation("exponent " + exponent.get_str() + " >= truncation " + trunc_.get_str());
    if (sgn(exponent) < 0) return 0;
    mpq_class slot = exponent * denom_grid_;
    slot.canonicalize();
    if (slot.get_den() != 1) return 0;
    return coeff(slot.get_num().get_ui());
}

mpz_class FracSeries::integer_coeff(std::size_t e) const {
    if (e >= num_.size()) return 0;
    if (den_ == 1) return num_[e];
    if (!mpz_divisible_p(num_[e].get_mpz_t(), den_.get_mpz_t()))
        throw GridViolation("coefficient at slot " + std::to_string(e) + " is not an integer");
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num_[e].get_mpz_t(), den_.get_mpz_t());
    return out;
}

FracSeries FracSeries::regrid(std::uint32_t new_denom) const {
    if (new_denom == 0) throw DomainError("grid denominator must be positive");
    if (new_denom == denom_grid_) return *this;
    FracSeries out(new_denom, trunc_);
    out.den_ = den_;
    if (new_denom % denom_grid_ == 0) {
        const std::size_t step = new_denom / denom_grid_;
        for (std::size_t e = 0; e < num_.size(); ++e)
            if (e * step < out.num_.size()) out.num_[e * step] = num_[e];
        return out;
    }
    if (denom_grid_ % new_denom != 0)
        throw GridViolation("grids 1/" + std::to_string(denom_grid_) + " and 1/" +
                            std::to_string(new_denom) + " are not nested");
    const std::size_t step = denom_grid_ / new_denom;
    for (std::size_t e = 0; e < num_.size(); ++e) {
        if (sgn(num_[e]) == 0) continue;
        if (e % step != 0)
            throw GridViolation("nonzero term at " + std::to_string(e) + "/" +
                                std::to_string(denom_grid_) + " is off the grid 1/" +
                                std::to_string(new_denom));
        out.num_[e / step] = num_[e];
    }
    out.normalize();
    return out;
}

FracSeries FracSeries::truncated(const mpq_class& new_trunc) const {
    if (new_trunc > trunc_) throw PrecisionTooSmall("cannot extend truncation " + trunc_.get_str());
    FracSeries out(denom_grid_, new_trunc);
    std::copy_n(num_.begin(), out.num_.size(), out.num_.begin());
    out.den_ = den_;
    out.normalize();
    return out;
}

std::uint32_t FracSeries::natural_grid() const {
    std::uint64_t g = 0;
    for (std::size_t e = 0; e < num_.size(); ++e)
        if (sgn(num_[e]) != 0) g = std::gcd<std::uint64_t>(g, e);
    if (g == 0) return 1;
    return static_cast<std::uint32_t>(denom_grid_ / std::gcd<std::uint64_t>(g, denom_grid_));
}

bool FracSeries::is_zero() const {
    return std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return sgn(c) == 0; });
}

bool operator==(const FracSeries& a, const FracSeries& b) {
    const std::uint32_t grid = lcm_grid(a.grid_denom(), b.grid_denom());
    const std::size_t n = slot_count(grid, min_trunc(a.truncation(), b.truncation()));
    GridView va(a, grid, n), vb(b, grid, n);
    for (std::size_t e = 0; e < n; ++e)
        if (va[e] * b.denominator() != vb[e] * a.denominator()) return false;
    return true;
}

FracSeries linear_combine(const FracSeries& a, const FracSeries& b, const mpq_class& alpha,
                          const mpq_class& beta) {
    const std::uint32_t grid = lcm_grid(a.grid_denom(), b.grid_denom());
    const mpq_class& trunc = min_trunc(a.truncation(), b.truncation());
    const std::size_t n = slot_count(grid, trunc);
    GridView va(a, grid, n), vb(b, grid, n);
    // alpha*A/da + beta*B/db over the common denominator da*db*den(alpha)*den(beta)
    const mpz_class fa = alpha.get_num() * b.denominator() * beta.get_den();
    const mpz_class fb = beta.get_num() * a.denominator() * alpha.get_den();
    std::vector<mpz_class> out(n);
    for (std::size_t e = 0; e < n; ++e) {
        if (sgn(va[e]) != 0) mpz_addmul(out[e].get_mpz_t(), va[e].get_mpz_t(), fa.get_mpz_t());
        if (sgn(vb[e]) != 0) mpz_addmul(out[e].get_mpz_t(), vb[e].get_mpz_t(), fb.get_mpz_t());
    }
    mpz_class den = a.denominator() * b.denominator() * alpha.get_den() * beta.get_den();
    return SeriesKernel::make(grid, trunc, std::move(out), std::move(den));
}

FracSeries scale(const FracSeries& a, const mpq_class& c) {
    std::vector<mpz_class> out(a.numerators());
    for (auto& x : out) x *= c.get_num();
    return SeriesKernel::make(a.grid_denom(), a.truncation(), std::move(out),
                              a.denominator() * c.get_den());
}

FracSeries mul(const FracSeries& a, const FracSeries& b) {
    if (&a == &b) return square(a);
    const std::uint32_t grid = lcm_grid(a.grid_denom(), b.grid_denom());
    const mpq_class& trunc = min_trunc(a.truncation(), b.truncation());
    const std::size_t n = slot_count(grid, trunc);
    GridView va(a, grid, n), vb(b, grid, n);
    return SeriesKernel::make(grid, trunc, SeriesKernel::convolve(va, vb, n),
                              a.denominator() * b.denominator());
}

FracSeries square(const FracSeries& a) {
    GridView va(a, a.grid_denom(), a.size());
    return SeriesKernel::make(a.grid_denom(), a.truncation(), SeriesKernel::self_convolve(va, a.size()),
                              a.denominator() * a.denominator());
}

FracSeries pow(const FracSeries& a, std::uint64_t m) {
    FracSeries result = FracSeries::one(a.grid_denom(), a.truncation());
    if (m == 0) return result;
    FracSeries base = a;
    bool first = true;
    while (true) {
        if (m & 1U) {
            result = first ? base : mul(result, base);
            first = false;
        }
        m >>= 1U;
        if (m == 0) break;
        base = square(base);
    }
    return result;
}

FracSeries invert(const FracSeries& a) {
    if (a.size() == 0 || sgn(a.numerator(0)) == 0) throw ZeroConstantTerm("series has zero constant term");
    const std::size_t n = a.size();
    const auto& A = a.numerators();
    std::vector<std::size_t> nz;
    for (std::size_t i = 1; i < n; ++i)
        if (sgn(A[i]) != 0) nz.push_back(i);

    // a = A/d, so 1/a = d * (1/A).
    if (A[0] == 1 || A[0] == -1) {
        // unit constant: 1/A stays integral, B_m = -A_0 * sum_{i>=1} A_i B_{m-i}
        std::vector<mpz_class> B(n);
        B[0] = A[0];
        mpz_class acc;
        for (std::size_t m = 1; m < n; ++m) {
            acc = 0;
            for (std::size_t i : nz) {
                if (i > m) break;
                if (sgn(B[m - i]) != 0) mpz_addmul(acc.get_mpz_t(), A[i].get_mpz_t(), B[m - i].get_mpz_t());
            }
            B[m] = A[0] == 1 ? mpz_class(-acc) : acc;
        }
        for (auto& c : B) c *= a.denominator();
        return SeriesKernel::make(a.grid_denom(), a.truncation(), std::move(B), 1);
    }

    std::vector<mpq_class> B(n);
    const mpq_class inv0(mpz_class(1), A[0]);
    B[0] = inv0;
    B[0].canonicalize();
    for (std::size_t m = 1; m < n; ++m) {
        mpq_class acc = 0;
        for (std::size_t i : nz) {
            if (i > m) break;
            acc += mpq_class(A[i]) * B[m - i];
        }
        B[m] = -acc * B[0];
    }
    mpz_class den = 1;
    for (const auto& q : B) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> out(n);
    for (std::size_t m = 0; m < n; ++m) out[m] = B[m].get_num() * (den / B[m].get_den()) * a.denominator();
    return SeriesKernel::make(a.grid_denom(), a.truncation(), std::move(out), den);
}

FracSeries differentiate(const FracSeries& a) {
    const mpq_class trunc = a.truncation() - 1;
    if (sgn(trunc) <= 0) throw PrecisionTooSmall("derivative of a series truncated at " + a.truncation().get_str());
    const std::size_t grid = a.grid_denom();
    for (std::size_t e = 1; e < std::min<std::size_t>(grid, a.size()); ++e)
        if (sgn(a.numerator(e)) != 0)
            throw DomainError("term t^" + std::to_string(e) + "/" + std::to_string(grid) +
                              " differentiates to a negative exponent");
    const std::size_t n = slot_count(a.grid_denom(), trunc);
    std::vector<mpz_class> out(n);
    for (std::size_t e = 0; e < n; ++e) out[e] = a.numerator(e + grid) * static_cast<unsigned long>(e + grid);
    return SeriesKernel::make(a.grid_denom(), trunc, std::move(out), a.denominator() * grid);
}

FracSeries euler_derivative(const FracSeries& a) {
    std::vector<mpz_class> out(a.size());
    for (std::size_t e = 0; e < a.size(); ++e) out[e] = a.numerator(e) * static_cast<unsigned long>(e);
    return SeriesKernel::make(a.grid_denom(), a.truncation(), std::move(out),
                              a.denominator() * a.grid_denom());
}

std::string to_text(const FracSeries& a) {
    std::ostringstream os;
    os << "fracseries " << a.grid_denom() << ' ' << rational_text(a.truncation()) << '\n';
    for (std::size_t e = 0; e < a.size(); ++e) {
        if (sgn(a.numerator(e)) == 0) continue;
        os << e << '/' << a.grid_denom() << '\t' << rational_text(a.coeff(e)) << '\n';
    }
    return os.str();
}

FracSeries from_text(const std::string& text) {
    std::istringstream is(text);
    std::string tag, trunc_text;
    std::uint32_t grid = 0;
    if (!(is >> tag >> grid >> trunc_text) || tag != "fracseries")
        throw ParseError("missing 'fracseries D T' header");
    const mpq_class trunc = parse_rational(trunc_text);
    std::vector<std::pair<std::size_t, mpq_class>> terms;
    std::string slot_text, value_text;
    while (is >> slot_text >> value_text) {
        const auto slash = slot_text.find('/');
        if (slash == std::string::npos) throw ParseError("bad exponent '" + slot_text + "'");
        const std::size_t e = std::stoul(slot_text.substr(0, slash));
        if (std::stoul(slot_text.substr(slash + 1)) != grid)
            throw ParseError("exponent '" + slot_text + "' is not on grid 1/" + std::to_string(grid));
        terms.emplace_back(e, parse_rational(value_text));
    }
    mpz_class den = 1;
    for (const auto& [e, q] : terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> num(slot_count(grid, trunc));
    for (const auto& [e, q] : terms) {
        if (e >= num.size()) throw ParseError("term at slot " + std::to_string(e) + " is past the truncation");
        num[e] = q.get_num() * (den / q.get_den());
    }
    return FracSeries::from_fraction(grid, trunc, std::move(num), den);
}

}  // namespace z2k
