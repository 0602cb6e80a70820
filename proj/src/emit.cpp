#include "z2k/emit.hpp"

#include <sstream>

#include "z2k/errors.hpp"

namespace z2k {

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw ParseError("unknown format '" + name + "'");
}

std::string big(const mpz_class& z) { return z.get_str(); }

namespace {

std::string rational(const mpq_class& q) { return q.get_str(); }

const char* sign_word(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

}  // namespace

Json to_json(const ExtremalProfile& prof) {
    const auto& p = prof.params;
    Json j;
    j["n"] = p.n;
    j["k"] = p.k;
    j["j"] = p.j;
    j["mu"] = p.mu;
    j["nu"] = p.nu;
    j["beta1"] = big(prof.beta.beta1);
    j["beta2"] = big(prof.beta.beta2);
    j["threshold"] = beta_threshold(p);
    Json b = Json::array();
    for (const auto& c : prof.b) b.push_back(big(c));
    j["b"] = std::move(b);
    return j;
}

Json to_json(const CrossoverResult& res) {
    Json j;
    j["k"] = res.k;
    j["from"] = res.rows.empty() ? 0U : res.rows.front().n;
    j["to"] = res.rows.empty() ? 0U : res.rows.back().n;
    j["first_negative"] = res.first_negative ? Json(*res.first_negative) : Json(nullptr);
    Json rows = Json::array();
    for (const auto& r : res.rows) rows.push_back(Json{{"n", r.n}, {"beta1", big(r.beta1)}, {"beta2", big(r.beta2)}});
    j["rows"] = std::move(rows);
    return j;
}

Json to_json(const PositivityReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["max_exponent"] = rep.max_exponent;
    j["min_coeff"] = rational(rep.min_coeff);
    j["min_exponent"] = rep.min_exponent;
    j["aux_min_coeff"] = rational(rep.aux_min_coeff);
    j["aux_min_exponent"] = rational(rep.aux_min_exponent);
    j["aux_min_index"] = rep.aux_min_index;
    j["pass"] = rep.pass;
    return j;
}

Json to_json(const SaddleData& sd) {
    const unsigned d = sd.digits;
    Json j;
    j["digits"] = d;
    j["y0"] = sd.y0.str(d);
    j["t0"] = sd.t0.str(d);
    j["c1"] = sd.c1.str(d);
    j["c2"] = sd.c2.str(d);
    j["f_prime"] = sd.f_prime.str(6);
    j["h_terms"] = sd.h_terms;
    return j;
}

Json to_json(const Type2Report& rep) {
    Json j;
    j["gram_zero"] = rep.gram_zero;
    j["distinct_words"] = rep.distinct_words;
    j["self_dual"] = rep.self_dual;
    j["weights_divisible"] = rep.weights_divisible;
    j["min_weight"] = rep.min_weight;
    j["type2"] = rep.type2();
    return j;
}

Json to_json(const SweTable& table) {
    Json out = Json::array();
    for (const auto& [comp, count] : table) out.push_back(Json{{"composition", comp}, {"count", count}});
    return out;
}

Json to_json(const std::vector<RatioRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        out.push_back(Json{{"n", r.n},
                           {"mu", r.mu},
                           {"nu", r.nu},
                           {"ratio", r.ratio},
                           {"threshold", r.threshold},
                           {"margin", r.margin},
                           {"b1_sign", r.b1_sign},
                           {"b2_sign", r.b2_sign},
                           {"beta2_negative", r.beta2_negative}});
    }
    return out;
}

std::string to_csv(const CrossoverResult& res) {
    std::ostringstream os;
    os << "n,beta1,beta2\n";
    for (const auto& r : res.rows) os << r.n << ',' << big(r.beta1) << ',' << big(r.beta2) << '\n';
    return os.str();
}

std::string to_csv(const std::vector<RatioRow>& rows) {
    std::ostringstream os;
    os << "n,ratio,threshold,margin\n";
    for (const auto& r : rows) os << r.n << ',' << r.ratio << ',' << r.threshold << ',' << r.margin << '\n';
    return os.str();
}

std::string to_text(const ExtremalProfile& prof) {
    const auto& p = prof.params;
    std::ostringstream os;
    os << "n=" << p.n << " k=" << p.k << " j=" << p.j << " mu=" << p.mu << " nu=" << p.nu << '\n';
    for (std::size_t s = 0; s < prof.b.size(); ++s) os << "b_" << 2 * s << " = " << big(prof.b[s]) << '\n';
    os << "beta1 = " << big(prof.beta.beta1) << '\n';
    os << "beta2 = " << big(prof.beta.beta2) << '\n';
    return os.str();
}

std::string to_text(const CrossoverResult& res) {
    std::ostringstream os;
    os << "k=" << res.k << " n from " << (res.rows.empty() ? 0U : res.rows.front().n) << " to "
       << (res.rows.empty() ? 0U : res.rows.back().n) << '\n';
    os << "n\tbeta1\tbeta2\tdigits(beta2)\n";
    for (const auto& r : res.rows)
        os << r.n << '\t' << sign_word(sgn(r.beta1)) << '\t' << sign_word(sgn(r.beta2)) << '\t'
           << big(abs(r.beta2)).size() << '\n';
    if (res.first_negative)
        os << "first n with beta2 < 0: " << *res.first_negative << '\n';
    else
        os << "first n with beta2 < 0: none in range\n";
    return os.str();
}

std::string to_text(const std::vector<RatioRow>& rows) {
    std::ostringstream os;
    os << "n\tmu\tnu\tratio\tthreshold\tmargin\tbeta2<0\n";
    for (const auto& r : rows)
        os << r.n << '\t' << r.mu << '\t' << r.nu << '\t' << r.ratio << '\t' << r.threshold << '\t' << r.margin
           << '\t' << (r.beta2_negative ? "yes" : "no") << '\n';
    return os.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace z2k
