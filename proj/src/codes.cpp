#include "z2k/codes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>
#include <unordered_set>

#include "z2k/errors.hpp"
#include "z2k/modforms.hpp"

namespace z2k {

namespace {

constexpr const char* kHamming8 =
    "zcode 1 8 4\n"
    "1 0 0 0 0 1 1 1\n"
    "0 1 0 0 1 0 1 1\n"
    "0 0 1 0 1 1 0 1\n"
    "0 0 0 1 1 1 1 0\n";

constexpr const char* kOctacode =
    "zcode 2 8 4\n"
    "1 0 0 0 3 1 2 1\n"
    "0 1 0 0 1 2 3 1\n"
    "0 0 1 0 3 3 3 2\n"
    "0 0 0 1 2 3 1 1\n";

constexpr std::uint64_t kRandomTrialBudget = 2'000'000;

std::string word_key(const Word& w) { return std::string(w.begin(), w.end()); }

}  // namespace

void LinearCode::validate() const {
    if (k == 0) throw RangeError("k must be positive");
    for (const auto& row : rows) {
        if (row.size() != n) throw RangeError("generator row has length " + std::to_string(row.size()) +
                                              ", expected " + std::to_string(n));
        for (auto x : row)
            if (x >= modulus()) throw RangeError("entry " + std::to_string(x) + " is not reduced mod " +
                                                 std::to_string(modulus()));
    }
}

LinearCode LinearCode::parse(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    LinearCode code;
    std::size_t r = 0;
    if (!(is >> tag >> code.k >> code.n >> r) || tag != "zcode")
        throw ParseError("missing 'zcode k n r' header");
    code.rows.assign(r, Word(code.n));
    for (auto& row : code.rows)
        for (auto& x : row) {
            long v = 0;
            if (!(is >> v)) throw ParseError("code file ends early");
            if (v < 0) throw RangeError("negative entry " + std::to_string(v));
            x = static_cast<std::uint32_t>(v);
        }
    code.validate();
    return code;
}

std::string LinearCode::to_text() const {
    std::ostringstream os;
    os << "zcode " << k << ' ' << n << ' ' << rows.size() << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
        os << '\n';
    }
    return os.str();
}

int rho(std::uint32_t k, std::uint32_t x) {
    if (k == 0 || x >= 2 * k) throw RangeError("residue " + std::to_string(x) + " outside Z_" + std::to_string(2 * k));
    return x <= k ? static_cast<int>(x) : static_cast<int>(x) - static_cast<int>(2 * k);
}

std::uint64_t euclidean_weight(std::uint32_t k, std::span<const std::uint32_t> word) {
    std::uint64_t w = 0;
    for (auto x : word) {
        const std::int64_t r = rho(k, x);
        w += static_cast<std::uint64_t>(r * r);
    }
    return w;
}

std::uint64_t codeword_count(const LinearCode& code) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < code.rows.size(); ++i) {
        total *= code.modulus();
        if (total > kEnumerationLimit)
            throw TooLarge("code has more than " + std::to_string(kEnumerationLimit) + " codewords");
    }
    return total;
}

void enumerate_codewords(const LinearCode& code, const std::function<void(const Word&)>& visit) {
    code.validate();
    codeword_count(code);
    const std::uint32_t m = code.modulus();
    const std::size_t r = code.rows.size();
    Word word(code.n, 0);
    std::vector<std::uint32_t> digits(r, 0);
    while (true) {
        visit(word);
        // odometer step; adding a row m times returns it to zero, so a wrapping
        // digit needs no correction
        std::size_t d = 0;
        for (; d < r; ++d) {
            for (std::size_t i = 0; i < code.n; ++i) word[i] = (word[i] + code.rows[d][i]) % m;
            if (++digits[d] < m) break;
            digits[d] = 0;
        }
        if (d == r) return;
    }
}

Type2Report verify_type2(const LinearCode& code) {
    code.validate();
    Type2Report rep;
    const std::uint32_t m = code.modulus();
    rep.gram_zero = true;
    for (std::size_t a = 0; a < code.rows.size(); ++a)
        for (std::size_t b = a; b < code.rows.size(); ++b) {
            std::uint64_t dot = 0;
            for (std::size_t i = 0; i < code.n; ++i) dot += std::uint64_t{code.rows[a][i]} * code.rows[b][i];
            if (dot % m != 0) rep.gram_zero = false;
        }

    std::unordered_set<std::string> seen;
    rep.weights_divisible = true;
    enumerate_codewords(code, [&](const Word& w) {
        seen.insert(word_key(w));
        const auto wt = euclidean_weight(code.k, w);
        if (wt % (2 * m) != 0) rep.weights_divisible = false;
        if (wt != 0 && (rep.min_weight == 0 || wt < rep.min_weight)) rep.min_weight = wt;
    });
    rep.distinct_words = seen.size();

    bool full_size = code.n % 2 == 0;
    if (full_size) {
        std::uint64_t expect = 1;
        for (std::uint32_t i = 0; i < code.n / 2; ++i) {
            expect *= m;
            if (expect > rep.distinct_words) break;
        }
        full_size = expect == rep.distinct_words;
    }
    rep.self_dual = rep.gram_zero && full_size;
    return rep;
}

SweTable swe(const LinearCode& code) {
    SweTable table;
    std::vector<std::uint32_t> comp(code.k + 1);
    enumerate_codewords(code, [&](const Word& w) {
        std::fill(comp.begin(), comp.end(), 0);
        for (auto x : w) ++comp[static_cast<std::size_t>(std::abs(rho(code.k, x)))];
        ++table[comp];
    });
    return table;
}

FracSeries theta_substitution(const LinearCode& code, std::uint64_t terms) {
    const auto table = swe(code);
    const mpq_class T{mpz_class(terms)};
    const auto family = ThetaFamily::build(code.k, T);

    // powers[i][m] = f_i^m
    std::vector<std::vector<FracSeries>> powers(code.k + 1);
    for (std::uint32_t i = 0; i <= code.k; ++i) {
        powers[i].push_back(FracSeries::one(4 * code.k, T));
        for (std::uint32_t m = 1; m <= code.n; ++m) powers[i].push_back(mul(powers[i].back(), family.f[i]));
    }

    FracSeries total(4 * code.k, T);
    for (const auto& [comp, count] : table) {
        FracSeries term = FracSeries::one(4 * code.k, T);
        for (std::uint32_t i = 0; i <= code.k; ++i)
            if (comp[i] > 0) term = mul(term, powers[i][comp[i]]);
        total = linear_combine(total, term, 1, mpq_class(mpz_class(count)));
    }
    return total;
}

FracSeries theta_cosets(const LinearCode& code, std::uint32_t norm_cap) {
    if (norm_cap > 12) throw DomainError("norm cap " + std::to_string(norm_cap) + " exceeds 12");
    code.validate();
    const std::int64_t m = code.modulus();
    const std::uint64_t bound = static_cast<std::uint64_t>(m) * norm_cap;  // on |w|^2, w = rho(c) + 2k z

    // lifts[r] = integers w = r (mod 2k) with w^2 <= bound, by increasing |w|
    std::vector<std::vector<std::int64_t>> lifts(m);
    const auto reach = static_cast<std::int64_t>(std::sqrt(static_cast<double>(bound))) + 1;
    for (std::int64_t w = -reach; w <= reach; ++w)
        if (static_cast<std::uint64_t>(w * w) <= bound) lifts[((w % m) + m) % m].push_back(w);
    for (auto& l : lifts)
        std::sort(l.begin(), l.end(), [](auto a, auto b) { return a * a < b * b; });

    std::vector<std::uint64_t> counts(bound + 1, 0);
    std::function<void(const Word&, std::size_t, std::uint64_t)> walk =
        [&](const Word& c, std::size_t pos, std::uint64_t norm) {
            if (pos == c.size()) {
                ++counts[norm];
                return;
            }
            for (auto w : lifts[c[pos]]) {
                const std::uint64_t next = norm + static_cast<std::uint64_t>(w * w);
                if (next > bound) break;
                walk(c, pos + 1, next);
            }
        };
    enumerate_codewords(code, [&](const Word& c) { walk(c, 0, 0); });

    // slot |w|^2 on the grid 1/(4k) is t-exponent |w|^2/4k = norm/2
    const mpq_class trunc(mpz_class(bound + 1), mpz_class(2 * m));
    std::vector<mpz_class> coeffs(counts.begin(), counts.end());
    return FracSeries::from_integers(static_cast<std::uint32_t>(2 * m), trunc, std::move(coeffs));
}

std::optional<LinearCode> stored_c8(std::uint32_t k) {
    if (k == 1) return LinearCode::parse(kHamming8);
    if (k == 2) return LinearCode::parse(kOctacode);
    return std::nullopt;
}

namespace {

LinearCode standard_form(std::uint32_t k, const std::array<std::array<std::int64_t, 4>, 4>& a) {
    const std::int64_t m = 2 * static_cast<std::int64_t>(k);
    LinearCode code;
    code.k = k;
    code.n = 8;
    for (std::size_t r = 0; r < 4; ++r) {
        Word row(8, 0);
        row[r] = 1;
        for (std::size_t c = 0; c < 4; ++c) row[4 + c] = static_cast<std::uint32_t>(((a[r][c] % m) + m) % m);
        code.rows.push_back(std::move(row));
    }
    return code;
}

bool accept(const LinearCode& code) {
    const auto rep = verify_type2(code);
    return rep.type2() && rep.min_weight == 4 * code.k;
}

// Left multiplication by the quaternion a: rows are mutually orthogonal over
// Z with squared length |a|^2.
std::array<std::array<std::int64_t, 4>, 4> quaternion_block(const std::array<std::int64_t, 4>& a) {
    return {{{a[0], -a[1], -a[2], -a[3]},
             {a[1], a[0], -a[3], a[2]},
             {a[2], a[3], a[0], -a[1]},
             {a[3], -a[2], a[1], a[0]}}};
}

std::optional<LinearCode> structured_search(std::uint32_t k) {
    const std::int64_t period = 4 * static_cast<std::int64_t>(k);
    // row norm 1 + |a|^2 must vanish mod 4k
    for (std::int64_t target = period - 1; target <= 4 * period; target += period) {
        const auto lim = static_cast<std::int64_t>(std::sqrt(static_cast<double>(target))) + 1;
        for (std::int64_t a0 = 0; a0 <= lim; ++a0)
            for (std::int64_t a1 = 0; a1 <= lim; ++a1)
                for (std::int64_t a2 = 0; a2 <= lim; ++a2)
                    for (std::int64_t a3 = 0; a3 <= lim; ++a3) {
                        if (a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 != target) continue;
                        auto code = standard_form(k, quaternion_block({a0, a1, a2, a3}));
                        if (accept(code)) return code;
                    }
    }
    return std::nullopt;
}

std::optional<LinearCode> random_search(std::uint32_t k, std::uint64_t seed) {
    const std::int64_t m = 2 * static_cast<std::int64_t>(k);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> entry(0, m - 1);
    std::uint64_t trials = 0;
    while (trials < kRandomTrialBudget) {
        std::array<std::array<std::int64_t, 4>, 4> a{};
        std::size_t filled = 0;
        while (filled < 4 && trials < kRandomTrialBudget) {
            ++trials;
            auto& row = a[filled];
            for (auto& x : row) x = entry(rng);
            std::int64_t norm = 1;
            for (auto x : row) norm += x * x;
            if (norm % (2 * m) != 0) continue;
            bool orthogonal = true;
            for (std::size_t p = 0; p < filled && orthogonal; ++p) {
                std::int64_t dot = 0;
                for (std::size_t c = 0; c < 4; ++c) dot += row[c] * a[p][c];
                orthogonal = dot % m == 0;
            }
            if (orthogonal) ++filled;
        }
        if (filled < 4) break;
        auto code = standard_form(k, a);
        if (accept(code)) return code;
    }
    return std::nullopt;
}

}  // namespace

LinearCode search_c8(std::uint32_t k, std::uint64_t seed) {
    if (k == 0) throw RangeError("k must be positive");
    if (auto stored = stored_c8(k)) {
        if (!accept(*stored)) throw InvariantViolation("stored length-8 code fails Type II verification");
        return *stored;
    }
    if (auto found = structured_search(k)) return *found;
    if (auto found = random_search(k, seed)) return *found;
    throw SearchExhausted("no length-8 Type II code over Z_" + std::to_string(2 * k) + " found with seed " +
                          std::to_string(seed));
}

}  // namespace z2k
