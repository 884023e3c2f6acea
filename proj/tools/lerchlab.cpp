// lerchlab command-line interface: eval, verify, characterize, report.
//
// Exit codes: 0 success, 1 evaluation or check failure, 2 usage or config error.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "lerchlab/config.hpp"
#include "lerchlab/eigenspace.hpp"
#include "lerchlab/errors.hpp"
#include "lerchlab/functions.hpp"
#include "lerchlab/lerch.hpp"
#include "lerchlab/report.hpp"
#include "lerchlab/suite.hpp"

using namespace lerchlab;
using nlohmann::json;

namespace {

constexpr int kFail = 1;
constexpr int kUsage = 2;

cplx parse_s(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return parse_complex(text);
    std::size_t used = 0;
    const double re = std::stod(text.substr(0, comma), &used);
    if (used != comma) throw ConfigError("--s: expected re,im");
    const std::string im_text = text.substr(comma + 1);
    const double im = std::stod(im_text, &used);
    if (used != im_text.size()) throw ConfigError("--s: expected re,im");
    return {re, im};
}

Parity parse_parity(const std::string& p) {
    if (p == "+" || p == "plus") return Parity::plus;
    if (p == "-" || p == "minus") return Parity::minus;
    throw ConfigError("--parity must be + or -");
}

json number(double x) {
    if (std::isfinite(x)) return x;
    return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

json complex_json(cplx z) { return {{"re", number(z.real())}, {"im", number(z.imag())}}; }

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
    return bool(f);
}

struct EvalArgs {
    std::string function = "zeta";
    std::string s;
    double a = 0.0;
    double c = 0.0;
    std::string parity = "+";
};

int run_eval(const EvalArgs& args, bool have_a) {
    const cplx s = parse_s(args.s);
    EvalResult r;
    if (args.function == "hurwitz") {
        r = hurwitz(s, args.c);
    } else {
        if (!have_a) throw ConfigError("--a is required for " + args.function);
        const LerchParams p{s, args.a, args.c};
        if (args.function == "zeta")
            r = lerch_zeta(p);
        else if (args.function == "zeta-star")
            r = lerch_star(p);
        else if (args.function == "L")
            r = L_pm(p, parse_parity(args.parity));
        else
            r = completed_L(p, parse_parity(args.parity));
    }
    json out = {{"function", args.function},
                {"value", complex_json(r.value)},
                {"error_estimate", number(r.error_estimate)},
                {"strategy", to_string(r.strategy)}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

struct VerifyArgs {
    std::string config;
    std::vector<std::string> groups;
    std::string report = "report.json";
    std::string csv;
    long seed = -1;
};

int run_verify(const VerifyArgs& args) {
    SuiteConfig cfg = args.config.empty() ? SuiteConfig::defaults() : load_config(args.config);
    if (!args.groups.empty()) {
        for (const auto& g : args.groups) {
            const auto& all = SuiteConfig::all_groups();
            if (std::find(all.begin(), all.end(), g) == all.end()) throw ConfigError("unknown group " + g);
        }
        std::vector<std::string> keep;
        for (const auto& g : cfg.groups)
            if (std::find(args.groups.begin(), args.groups.end(), g) != args.groups.end()) keep.push_back(g);
        cfg.groups = keep;
    }
    if (args.seed >= 0) cfg.seed = std::uint64_t(args.seed);

    const auto records = run_suite(cfg);
    if (!write_file(args.report, records_to_json(records) + "\n")) {
        std::cerr << "cannot write " << args.report << "\n";
        return kFail;
    }
    if (!args.csv.empty() && !write_file(args.csv, records_to_csv(records))) {
        std::cerr << "cannot write " << args.csv << "\n";
        return kFail;
    }
    int failed = 0;
    for (const auto& r : records) {
        if (r.passed) continue;
        ++failed;
        std::cerr << "FAIL " << r.identity << " [" << r.params << "] residual " << r.residual << " > " << r.tolerance
                  << "\n";
    }
    std::cout << records.size() - failed << "/" << records.size() << " checks passed\n";
    return failed == 0 ? 0 : kFail;
}

struct CharArgs {
    std::string function = "zeta-star";
    std::string s;
    std::string parity = "+";
    std::string path = "a";
    int N = 32;
    double tol = 1e-6;
    std::string slice;  // a or c: print one Fourier slice instead
    double at = 0.4;
};

TwistedFn candidate(const CharArgs& args, cplx s) {
    if (args.function == "zeta-star") return zeta_star_fn(s);
    if (args.function == "L") return L_fn(s, parse_parity(args.parity));
    if (args.function == "R") return R_fn(s, parse_parity(args.parity));
    if (args.function == "R-zeta-star") return apply_R(zeta_star_fn(1.0 - s), 1);
    if (args.function == "power")
        return TwistedFn::plane([s](double, double c) { return std::exp(-s * std::log(std::abs(c))); }, 1, "c^-s");
    throw ConfigError("unknown function " + args.function);
}

int run_characterize(const CharArgs& args) {
    const cplx s = parse_s(args.s);
    const TwistedFn F = candidate(args, s);
    if (!args.slice.empty()) {
        if (args.slice != "a" && args.slice != "c") throw ConfigError("--slice must be a or c");
        const FourierSlice sl = fourier_slice(F, args.slice == "a" ? Axis::a_axis : Axis::c_axis, args.at, args.N);
        json coeffs = json::array();
        for (const auto& [n, v] : sl.coefficients) coeffs.push_back({{"n", n}, {"value", complex_json(v)}});
        json out = {{"function", F.label()},
                    {"axis", args.slice},
                    {"fixed", args.at},
                    {"decaying", sl.decaying},
                    {"coefficients", coeffs}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    json out = {{"function", F.label()}, {"s", complex_json(s)}, {"path", args.path}};
    try {
        const auto r = characterize(F, s, args.path == "c" ? CharPath::c_path : CharPath::a_path, args.N, args.tol);
        out["in_eigenspace"] = true;
        out["A"] = complex_json(r.A);
        out["B"] = complex_json(r.B);
        out["residual"] = number(r.residual);
        out["spread"] = number(r.spread);
        out["hecke_residual"] = number(r.hecke_residual);
        std::cout << out.dump(2) << "\n";
        return r.residual <= args.tol ? 0 : kFail;
    } catch (const IdentityViolation& e) {
        out["in_eigenspace"] = false;
        out["reason"] = e.what();
        std::cout << out.dump(2) << "\n";
        return kFail;
    }
}

int run_report(const std::string& input, const std::string& output) {
    std::ifstream f(input);
    if (!f) throw ConfigError("cannot read " + input);
    std::stringstream ss;
    ss << f.rdbuf();
    const std::string csv = records_to_csv(records_from_json(ss.str()));
    if (output.empty()) {
        std::cout << csv;
        return 0;
    }
    return write_file(output, csv) ? 0 : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lerch zeta evaluation and identity verification"};
    app.require_subcommand(1);

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "evaluate a Lerch-type function");
    eval->add_option("--function", ea.function, "zeta, zeta-star, L, L-hat or hurwitz")
        ->check(CLI::IsMember({"zeta", "zeta-star", "L", "L-hat", "hurwitz"}));
    eval->add_option("--s", ea.s, "s as re,im")->required();
    auto* a_opt = eval->add_option("--a", ea.a, "a");
    eval->add_option("--c", ea.c, "c (x for hurwitz)")->required();
    eval->add_option("--parity", ea.parity, "+ or -")->check(CLI::IsMember({"+", "-", "plus", "minus"}));

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run the identity suite");
    verify->add_option("--config", va.config, "key = value config file");
    verify->add_option("--group", va.groups, "restrict to these groups");
    verify->add_option("--report", va.report, "JSON report path");
    verify->add_option("--csv", va.csv, "CSV summary path");
    verify->add_option("--seed", va.seed, "override the config seed");

    CharArgs ca;
    auto* chr = app.add_subcommand("characterize", "recover (A, B) for a candidate eigenfunction");
    chr->add_option("--function", ca.function, "zeta-star, L, R, R-zeta-star or power")
        ->check(CLI::IsMember({"zeta-star", "L", "R", "R-zeta-star", "power"}));
    chr->add_option("--s", ca.s, "s as re,im")->required();
    chr->add_option("--parity", ca.parity, "+ or -");
    chr->add_option("--path", ca.path, "a or c")->check(CLI::IsMember({"a", "c"}));
    chr->add_option("--N", ca.N, "coefficient range")->check(CLI::Range(1, 512));
    chr->add_option("--tol", ca.tol, "tolerance");
    chr->add_option("--slice", ca.slice, "print the Fourier slice along axis a or c");
    chr->add_option("--at", ca.at, "fixed coordinate of the slice");

    std::string in, out;
    auto* rep = app.add_subcommand("report", "re-render a JSON report as CSV");
    rep->add_option("--input", in, "JSON report")->required();
    rep->add_option("--output", out, "CSV path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*eval) return run_eval(ea, a_opt->count() > 0);
        if (*verify) return run_verify(va);
        if (*chr) return run_characterize(ca);
        if (*rep) return run_report(in, out);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: malformed number\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
