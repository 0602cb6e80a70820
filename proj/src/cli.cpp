#include "z2k/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "z2k/emit.hpp"
#include "z2k/errors.hpp"
#include "z2k/modforms.hpp"
#include "z2k/parallel.hpp"

namespace z2k::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::uint32_t k = 1;
    std::uint32_t n = 0;
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    std::uint32_t nmax = 0;
    std::uint64_t terms = 5;
    unsigned digits = kDefaultDigits;
    std::uint64_t seed = 1;
    std::string file;
    std::vector<std::uint32_t> n_list;
    std::string format = "text";
    unsigned workers = 0;

    void require_length(std::uint32_t value, const char* flag) const {
        if (value == 0 || value % 8 != 0)
            throw UsageError(std::string(flag) + " must be a positive multiple of 8");
    }

    void validate() const {
        if (k == 0) throw UsageError("--k must be at least 1");
        try {
            parse_format(format);
        } catch (const ParseError&) {
            throw UsageError("--format must be text, json or csv");
        }
        if (command == "e4" && terms == 0) throw UsageError("--terms must be at least 1");
        if (command == "extremal") require_length(n, "--n");
        if (command == "crossover") {
            require_length(from, "--from");
            require_length(to, "--to");
            if (from > to) throw UsageError("--from exceeds --to");
        }
        if (command == "theorem1") require_length(nmax, "--nmax");
        if (command == "asymptotics" && digits < 15) throw UsageError("--digits must be at least 15");
        if (command == "ratio") {
            if (n_list.empty()) throw UsageError("--n-list is empty");
            for (auto v : n_list) require_length(v, "--n-list entries");
        }
        if (command == "code search" && k > 6) throw UsageError("code search supports 1 <= k <= 6");
    }
};

void cmd_e4(const RunConfig& cfg, std::ostream& out) {
    const FracSeries e4 = eisenstein_e4(cfg.terms);
    if (parse_format(cfg.format) == Format::json) {
        Json arr = Json::array();
        for (std::size_t m = 0; m < e4.size(); ++m) arr.push_back(big(e4.numerator(m)));
        out << dump(Json{{"terms", cfg.terms}, {"coefficients", arr}});
        return;
    }
    for (std::size_t m = 0; m < e4.size(); ++m) out << (m ? " " : "") << e4.numerator(m).get_str();
    out << '\n';
}

void cmd_extremal(const RunConfig& cfg, std::ostream& out) {
    const auto prof = extremal_profile(cfg.n, cfg.k);
    if (parse_format(cfg.format) == Format::json)
        out << dump(to_json(prof));
    else
        out << to_text(prof);
}

void cmd_crossover(const RunConfig& cfg, std::ostream& out) {
    const auto res = crossover_scan(cfg.k, cfg.from, cfg.to, cfg.workers);
    switch (parse_format(cfg.format)) {
        case Format::json: out << dump(to_json(res)); break;
        case Format::csv: out << to_csv(res); break;
        case Format::text: out << to_text(res); break;
    }
}

int cmd_theorem1(const RunConfig& cfg, std::ostream& out) {
    const std::size_t count = cfg.nmax / 8;
    const auto top = LengthParams::of(cfg.nmax, cfg.k);
    const UPowerTable table(top.mu + 3);
    std::vector<BetaStars> betas(count);
    std::vector<PositivityReport> reports(count);
    parallel_for(count, cfg.workers, [&](std::size_t i) {
        const auto n = static_cast<std::uint32_t>(8 * (i + 1));
        betas[i] = beta_stars(n, cfg.k, table);
        reports[i] = positivity_certificate(n, cfg.k);
    });

    bool all = true;
    const Format fmt = parse_format(cfg.format);
    Json rows = Json::array();
    std::ostringstream text;
    text << "n\tbeta1>0\tcertificate\tmin_coeff\n";
    for (std::size_t i = 0; i < count; ++i) {
        const bool beta_ok = sgn(betas[i].beta1) > 0;
        all = all && beta_ok && reports[i].pass;
        Json row = to_json(reports[i]);
        row["beta1_positive"] = beta_ok;
        rows.push_back(std::move(row));
        text << reports[i].n << '\t' << (beta_ok ? "yes" : "no") << '\t' << (reports[i].pass ? "pass" : "FAIL")
             << '\t' << reports[i].min_coeff.get_str() << '\n';
    }
    if (fmt == Format::json) {
        out << dump(Json{{"k", cfg.k}, {"nmax", cfg.nmax}, {"pass", all}, {"rows", rows}});
    } else {
        out << text.str() << "k=" << cfg.k << " n<=" << cfg.nmax << ": " << (all ? "pass" : "FAIL") << '\n';
    }
    return all ? kExitOk : kExitFailure;
}

void cmd_asymptotics(const RunConfig& cfg, std::ostream& out) {
    const SaddleData sd = find_saddle(cfg.digits);
    const RatioLimit lim = predicted_ratio_limit(sd);
    const Real quoted(164000);
    const Real rel = abs(lim.limit / quoted - 1);
    if (parse_format(cfg.format) == Format::json) {
        Json j = to_json(sd);
        j["ratio_limit"] = lim.limit.str(cfg.digits);
        j["ratio_limit_direct"] = lim.direct_limit.str(cfg.digits);
        j["relative_to_164000"] = rel.str(6);
        out << dump(j);
        return;
    }
    out << "y0 = " << sd.y0.str(cfg.digits) << '\n'
        << "t0 = " << sd.t0.str(cfg.digits) << '\n'
        << "c1 = " << sd.c1.str(cfg.digits) << '\n'
        << "c2 = " << sd.c2.str(cfg.digits) << '\n'
        << "ratio limit c1*E4(t0)^3 = " << lim.limit.str(cfg.digits) << '\n'
        << "direct G2/G1 path       = " << lim.direct_limit.str(cfg.digits) << '\n'
        << "|limit/164000 - 1| = " << rel.str(6) << '\n';
}

void cmd_ratio(const RunConfig& cfg, std::ostream& out) {
    const auto rows = ratio_report(cfg.k, cfg.n_list, cfg.workers);
    switch (parse_format(cfg.format)) {
        case Format::json: out << dump(to_json(rows)); break;
        case Format::csv: out << to_csv(rows); break;
        case Format::text: out << to_text(rows); break;
    }
}

int cmd_code_verify(const RunConfig& cfg, std::ostream& out) {
    std::ifstream in(cfg.file);
    if (!in) throw UsageError("cannot open " + cfg.file);
    std::stringstream buf;
    buf << in.rdbuf();
    const LinearCode code = LinearCode::parse(buf.str());
    const auto rep = verify_type2(code);
    if (parse_format(cfg.format) == Format::json) {
        Json j = to_json(rep);
        j["k"] = code.k;
        j["n"] = code.n;
        j["swe"] = to_json(swe(code));
        out << dump(j);
    } else {
        out << "k=" << code.k << " n=" << code.n << " words=" << rep.distinct_words
            << " self_dual=" << (rep.self_dual ? "yes" : "no")
            << " weights_div_4k=" << (rep.weights_divisible ? "yes" : "no") << " d_E=" << rep.min_weight
            << " type2=" << (rep.type2() ? "yes" : "no") << '\n';
    }
    return rep.type2() ? kExitOk : kExitFailure;
}

void cmd_code_search(const RunConfig& cfg, std::ostream& out) {
    const LinearCode code = search_c8(cfg.k, cfg.seed);
    if (parse_format(cfg.format) == Format::json) {
        Json j = to_json(verify_type2(code));
        j["k"] = code.k;
        j["seed"] = cfg.seed;
        j["code"] = code.to_text();
        out << dump(j);
    } else {
        out << code.to_text();
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Extremal Type II Z_2k-code computations"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "text, json or csv");
    };
    auto add_workers = [&](CLI::App* sub) {
        sub->add_option("--workers", cfg.workers, "worker threads (0 = all cores)");
    };

    auto* e4 = app.add_subcommand("e4", "coefficients of E4");
    e4->add_option("--terms", cfg.terms)->required();
    add_format(e4);

    auto* extremal = app.add_subcommand("extremal", "b coefficients and beta values for one length");
    extremal->add_option("--n", cfg.n)->required();
    extremal->add_option("--k", cfg.k)->required();
    add_format(extremal);

    auto* crossover = app.add_subcommand("crossover", "scan beta signs over a length range");
    crossover->add_option("--k", cfg.k)->required();
    crossover->add_option("--from", cfg.from)->required();
    crossover->add_option("--to", cfg.to)->required();
    add_format(crossover);
    add_workers(crossover);

    auto* theorem1 = app.add_subcommand("theorem1", "beta1 > 0 and positivity certificate for n <= nmax");
    theorem1->add_option("--nmax", cfg.nmax)->required();
    theorem1->add_option("--k", cfg.k)->required();
    add_format(theorem1);
    add_workers(theorem1);

    auto* asym = app.add_subcommand("asymptotics", "saddle point data and the ratio limit");
    asym->add_option("--digits", cfg.digits);
    add_format(asym);

    auto* ratio = app.add_subcommand("ratio", "exact |b_{2(mu+2)}/b_{2(mu+1)}| against the threshold");
    ratio->add_option("--k", cfg.k)->required();
    ratio->add_option("--n-list", cfg.n_list)->required()->delimiter(',');
    add_format(ratio);
    add_workers(ratio);

    auto* code = app.add_subcommand("code", "Z_2k codes");
    code->require_subcommand(1);
    auto* verify = code->add_subcommand("verify", "check a code file for the Type II conditions");
    verify->add_option("--file", cfg.file)->required();
    add_format(verify);
    auto* search = code->add_subcommand("search", "find a length-8 Type II code");
    search->add_option("--k", cfg.k)->required();
    search->add_option("--seed", cfg.seed);
    add_format(search);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (verify->parsed())
        cfg.command = "code verify";
    else if (search->parsed())
        cfg.command = "code search";
    else
        cfg.command = app.get_subcommands().front()->get_name();

    try {
        cfg.validate();
        if (cfg.command == "e4") cmd_e4(cfg, out);
        else if (cfg.command == "extremal") cmd_extremal(cfg, out);
        else if (cfg.command == "crossover") cmd_crossover(cfg, out);
        else if (cfg.command == "theorem1") return cmd_theorem1(cfg, out);
        else if (cfg.command == "asymptotics") cmd_asymptotics(cfg, out);
        else if (cfg.command == "ratio") cmd_ratio(cfg, out);
        else if (cfg.command == "code verify") return cmd_code_verify(cfg, out);
        else if (cfg.command == "code search") cmd_code_search(cfg, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace z2k::cli
