#pragma once

// Command dispatch for the `kapteyn` tool. Kept in a header so the test
// suites can drive it in-process with string streams.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kapteyn/io.hpp"
#include "kapteyn/kapteyn.hpp"
#include "verify_suites.hpp"

namespace kapteyn::cli
{

enum ExitCode : int
{
    ok = 0,
    verification_failed = 1,
    input_error = 2,
    domain_error = 3,
};

namespace detail
{

// "0..3", "0,2,5" or "4".
inline std::vector<long> parse_int_range(const std::string& text)
{
    std::vector<long> out;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        const long lo = std::stol(text.substr(0, dots));
        const long hi = std::stol(text.substr(dots + 2));
        if (hi < lo)
            throw ParseError("empty range \"" + text + "\"");
        for (long v = lo; v <= hi; ++v)
            out.push_back(v);
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stol(item));
    if (out.empty())
        throw ParseError("empty list \"" + text + "\"");
    return out;
}

inline std::vector<double> parse_real_list(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stod(item));
    if (out.empty())
        throw ParseError("empty list \"" + text + "\"");
    return out;
}

inline std::string read_input(const std::string& path, std::istream& in)
{
    if (path.empty() || path == "-")
        return std::string(std::istreambuf_iterator<char>(in), {});
    std::ifstream f(path);
    if (!f)
        throw ParseError("cannot open input file \"" + path + "\"");
    return std::string(std::istreambuf_iterator<char>(f), {});
}

template <CoeffScalar S>
S order_from_flag(const std::string& text, const char* what)
{
    try {
        if constexpr (std::same_as<S, Rational>)
            return Rational::parse(text);
        else {
            std::size_t used = 0;
            const double v = std::stod(text, &used);
            if (used == text.size())
                return v;
            return Rational::parse(text).to_double();
        }
    } catch (const std::invalid_argument&) {
        throw ParseError(std::string(what) + ": cannot parse \"" + text + "\"");
    }
}

struct Globals
{
    std::string out_path;
    std::string format = "json";
    double tol = 1e-14;
    int max_n = 1000;

    SumConfig sum_config() const
    {
        SumConfig cfg;
        cfg.tol = tol;
        cfg.max_n = max_n;
        return cfg;
    }
};

struct ConvertOpts
{
    std::string to;
    std::string kind;
    std::string nu = "0";
    std::string mu = "0";
    std::string input;
};

struct ClosedFormOpts
{
    std::string family;
    int p = -1;
    unsigned bound = default_closed_form_bound;
};

struct EvalOpts
{
    std::string target;
    int m = 0;
    int p = -1;
    double a = 0.0;
    double z = 0.0;
    double nu = 0.0;
    double mu = 0.0;
    std::string weight;
    std::string coeffs_path;
};

struct VerifyOpts
{
    std::string suite;
    std::string nu_range;
    std::string mu_range;
    std::string p_range;
    std::string z_list;
    int s = -1;
    int r = 10;
    int m = 14;
    int n = 8;
    int count = 100;
    int length = 20;
    std::uint64_t seed = 20240531;
    double check_tol = 1e-9;
};

struct KeplerOpts
{
    double ecc = 0.0;
    double mean_anomaly = 0.0;
    std::string method = "both";
};

inline std::string run_convert(const ConvertOpts& o, const Globals& g, std::istream& in)
{
    const CoeffRecord rec = record_from_string(read_input(o.input, in));

    auto convert = [&]<CoeffScalar S>(const auto& input) -> CoeffRecord {
        using T = std::decay_t<decltype(input)>;
        if (o.to == "taylor") {
            if constexpr (std::same_as<T, KapteynFirstCoeffs<S>>) {
                if (!o.kind.empty() && o.kind != "first")
                    throw ParseError("--kind second does not match a kapteyn1 record");
                return kapteyn1_to_taylor(input);
            } else if constexpr (std::same_as<T, KapteynSecondCoeffs<S>>) {
                if (!o.kind.empty() && o.kind != "second")
                    throw ParseError("--kind first does not match a kapteyn2 record");
                return kapteyn2_to_taylor(input);
            } else {
                throw ParseError("--to taylor needs a kapteyn1 or kapteyn2 record");
            }
        }
        if constexpr (std::same_as<T, TaylorCoeffs<S>>) {
            if (o.to == "kapteyn1")
                return taylor_to_kapteyn1(input, order_from_flag<S>(o.nu, "--nu"));
            return taylor_to_kapteyn2(input, order_from_flag<S>(o.mu, "--mu"), order_from_flag<S>(o.nu, "--nu"));
        } else {
            throw ParseError("--to " + o.to + " needs a taylor record");
        }
    };

    const CoeffRecord result = std::visit(
        [&](const auto& r) -> CoeffRecord {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::same_as<T, TaylorCoeffs<Rational>> || std::same_as<T, KapteynFirstCoeffs<Rational>> ||
                          std::same_as<T, KapteynSecondCoeffs<Rational>>)
                return convert.template operator()<Rational>(r);
            else
                return convert.template operator()<double>(r);
        },
        rec);

    if (g.format == "csv")
        return to_csv(result);
    return to_json(result).dump(2) + "\n";
}

inline std::string run_closed_form(const ClosedFormOpts& o, const Globals& g)
{
    if (o.p < 0)
        throw ParseError("closed-form needs --p (or --m) >= 0");
    const auto p = static_cast<std::size_t>(o.p);
    ClosedForm cf;
    if (o.family == "fp")
        cf = f_closed(p, o.bound);
    else if (o.family == "gp")
        cf = g_closed(p, o.bound);
    else
        cf = s1_closed(p, o.bound);
    if (g.format == "pretty")
        return format_pretty(cf) + "\n";
    return to_json(cf).dump(2) + "\n";
}

inline std::vector<double> to_doubles(const std::vector<Rational>& v)
{
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(x.to_double());
    return out;
}

inline std::string run_eval(const EvalOpts& o, const Globals& g, std::istream& in)
{
    const SumConfig cfg = g.sum_config();
    json out;
    if (o.target == "s1") {
        if (o.m < 0)
            throw DomainError("eval s1: --m must be nonnegative");
        const EvalReport r = eval_s1(static_cast<unsigned>(o.m), o.a, cfg);
        out = to_json(r);
        out["closed_form"] = s1_closed(static_cast<std::size_t>(o.m)).evaluate(o.a);
        return out.dump(2) + "\n";
    }

    const bool first = o.target == "kapteyn1";
    if (!o.coeffs_path.empty()) {
        const CoeffRecord rec = record_from_string(read_input(o.coeffs_path, in));
        EvalReport r;
        std::visit(
            [&](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::same_as<T, KapteynFirstCoeffs<Rational>> || std::same_as<T, KapteynFirstCoeffs<double>>) {
                    if (!first)
                        throw ParseError("eval kapteyn2 needs a kapteyn2 record");
                    std::vector<double> a;
                    double nu;
                    if constexpr (std::same_as<T, KapteynFirstCoeffs<Rational>>) {
                        a = to_doubles(x.a);
                        nu = x.nu.to_double();
                    } else {
                        a = x.a;
                        nu = x.nu;
                    }
                    r = eval_kapteyn1(std::span<const double>(a), nu, o.z, cfg);
                } else if constexpr (std::same_as<T, KapteynSecondCoeffs<Rational>> ||
                                     std::same_as<T, KapteynSecondCoeffs<double>>) {
                    if (first)
                        throw ParseError("eval kapteyn1 needs a kapteyn1 record");
                    std::vector<double> a, c;
                    double mu, nu;
                    if constexpr (std::same_as<T, KapteynSecondCoeffs<Rational>>) {
                        a = to_doubles(x.a);
                        c = to_doubles(x.c);
                        mu = x.mu.to_double();
                        nu = x.nu.to_double();
                    } else {
                        a = x.a;
                        c = x.c;
                        mu = x.mu;
                        nu = x.nu;
                    }
                    r = eval_kapteyn2(std::span<const double>(a), std::span<const double>(c), mu, nu, o.z, cfg);
                } else {
                    throw ParseError("eval needs a kapteyn1 or kapteyn2 coefficient record");
                }
            },
            rec);
        return to_json(r).dump(2) + "\n";
    }

    if (o.weight != "n^2p")
        throw ParseError("eval " + o.target + " needs --weight n^2p (with --p) or --coeffs FILE");
    if (o.p < 0)
        throw ParseError("--weight n^2p needs --p >= 0");
    const double two_p = 2.0 * o.p;
    auto weight = [two_p](std::size_t n) { return std::pow(static_cast<double>(n), two_p); };
    auto zero = [](std::size_t) { return 0.0; };
    if (first) {
        out = to_json(eval_kapteyn1(weight, o.nu, o.z, cfg));
        if (o.nu == 0.0)
            out["closed_form"] = f_closed(static_cast<std::size_t>(o.p)).evaluate(o.z);
    } else {
        out = to_json(eval_kapteyn2(weight, zero, o.mu, o.nu, o.z, cfg));
        if (o.mu == 0.0 && o.nu == 0.0)
            out["closed_form"] = g_closed(static_cast<std::size_t>(o.p)).evaluate(o.z);
    }
    return out.dump(2) + "\n";
}

inline std::string run_kepler(const KeplerOpts& o, const Globals& g)
{
    const KeplerParams kp{o.ecc, o.mean_anomaly};
    kp.validate();
    auto residual = [&](double e_anom) { return std::abs(e_anom - o.ecc * std::sin(e_anom) - o.mean_anomaly); };
    json out{{"eccentricity", o.ecc}, {"mean_anomaly", o.mean_anomaly}};
    double newton = 0.0;
    double bessel = 0.0;
    if (o.method == "newton" || o.method == "both") {
        newton = kepler_newton(kp, std::max(g.tol, 1e-15));
        out["newton"] = json{{"E", newton}, {"residual", residual(newton)}};
    }
    if (o.method == "bessel" || o.method == "both") {
        const EvalReport r = kepler_bessel(kp, g.sum_config());
        bessel = r.value;
        json b = to_json(r);
        b["residual"] = residual(r.value);
        out["bessel"] = b;
    }
    if (o.method == "both")
        out["difference"] = std::abs(newton - bessel);
    return out.dump(2) + "\n";
}

inline std::pair<std::string, bool> run_verify(const VerifyOpts& o, const Globals& g)
{
    VerifyReport rep;
    if (o.suite == "biortho1") {
        rep = verify_biortho1(parse_int_range(o.nu_range.empty() ? "0..3" : o.nu_range),
                              static_cast<std::size_t>(o.s < 0 ? 15 : o.s));
    } else if (o.suite == "biortho2") {
        rep = verify_biortho2(parse_int_range(o.mu_range.empty() ? "0..2" : o.mu_range),
                              parse_int_range(o.nu_range.empty() ? "0..2" : o.nu_range),
                              static_cast<std::size_t>(o.s < 0 ? 12 : o.s));
    } else if (o.suite == "lemma") {
        rep = verify_lemma(static_cast<std::size_t>(o.r), static_cast<std::size_t>(o.m));
    } else if (o.suite == "closed-vs-sum") {
        std::vector<double> zf{0.1, 0.2, 0.3};
        std::vector<double> zs{0.05, 0.1, 0.2};
        if (!o.z_list.empty()) {
            zf = parse_real_list(o.z_list);
            zs.clear();
            for (double z : zf)
                if (std::abs(z) < 0.5)
                    zs.push_back(z);
        }
        rep = verify_closed_vs_sum(parse_int_range(o.p_range.empty() ? "0..4" : o.p_range), zf, zs, o.check_tol,
                                   g.sum_config());
    } else if (o.suite == "roundtrip") {
        rep = verify_roundtrip(static_cast<std::size_t>(o.count), static_cast<std::size_t>(o.length), o.seed);
    } else {
        std::vector<double> zs{0.1, 0.5, 1.0, 2.0};
        if (!o.z_list.empty())
            zs = parse_real_list(o.z_list);
        rep = verify_bessel_xcheck(o.n, zs, 1e-9, 1e-11);
    }
    return {rep.to_json().dump(2) + "\n", rep.passed()};
}

} // namespace detail

/// Runs the tool on argv-style arguments and returns the process exit code.
/// Exit codes: 0 success, 1 verification failure, 2 input/parse error,
/// 3 domain, bound or convergence error.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err, std::istream& in)
{
    CLI::App app{"Conversions between Taylor and Kapteyn series, closed forms and evaluation", "kapteyn"};
    app.require_subcommand(1);
    app.fallthrough();

    detail::Globals g;
    app.add_option("--out", g.out_path, "Write output to this file instead of stdout");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--tol", g.tol, "Relative summation tolerance")->check(CLI::PositiveNumber);
    app.add_option("--max-n", g.max_n, "Maximum number of summed terms")->check(CLI::PositiveNumber);

    detail::ConvertOpts conv;
    auto* convert = app.add_subcommand("convert", "Convert a coefficient record between Taylor and Kapteyn form");
    convert->add_option("--to", conv.to, "Target representation")
        ->required()
        ->check(CLI::IsMember({"taylor", "kapteyn1", "kapteyn2"}));
    convert->add_option("--kind", conv.kind, "Kapteyn kind of the input when converting to taylor")
        ->check(CLI::IsMember({"first", "second"}));
    convert->add_option("--nu", conv.nu, "Order nu (rational string in exact mode)");
    convert->add_option("--mu", conv.mu, "Order mu for second-kind output");
    convert->add_option("--in,input", conv.input, "Input JSON record (default: stdin)");

    detail::ClosedFormOpts cfo;
    auto* closed = app.add_subcommand("closed-form", "Generate the closed form of f_p, g_p or S1(m, a)");
    closed->add_option("family", cfo.family, "fp, gp or s1")->required()->check(CLI::IsMember({"fp", "gp", "s1"}));
    closed->add_option("--p,--m", cfo.p, "Family index");
    closed->add_option("--bound", cfo.bound, "Largest accepted index");

    detail::EvalOpts ev;
    auto* eval = app.add_subcommand("eval", "Evaluate a Kapteyn series or S1 by direct summation");
    eval->add_option("target", ev.target, "kapteyn1, kapteyn2 or s1")
        ->required()
        ->check(CLI::IsMember({"kapteyn1", "kapteyn2", "s1"}));
    eval->add_option("--m", ev.m, "S1 power index");
    eval->add_option("--a", ev.a, "S1 argument");
    eval->add_option("--z", ev.z, "Argument z");
    eval->add_option("--nu", ev.nu, "Order nu");
    eval->add_option("--mu", ev.mu, "Order mu");
    eval->add_option("--weight", ev.weight, "Coefficient weight, currently n^2p");
    eval->add_option("--p", ev.p, "Power index for --weight n^2p");
    eval->add_option("--coeffs", ev.coeffs_path, "Kapteyn coefficient record to sum");

    detail::VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "Run an identity or oracle check suite");
    verify->add_option("suite", vo.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"biortho1", "biortho2", "lemma", "closed-vs-sum", "roundtrip", "bessel-xcheck"}));
    verify->add_option("--nu", vo.nu_range, "Integer orders, e.g. 0..3");
    verify->add_option("--mu", vo.mu_range, "Integer orders, e.g. 0..2");
    verify->add_option("--s", vo.s, "Largest s");
    verify->add_option("--r", vo.r, "Largest r (lemma)");
    verify->add_option("--m", vo.m, "Largest m (lemma)");
    verify->add_option("--n", vo.n, "Largest Bessel order (bessel-xcheck)");
    verify->add_option("--p", vo.p_range, "Power indices, e.g. 0..4");
    verify->add_option("--z", vo.z_list, "Comma-separated arguments");
    verify->add_option("--count", vo.count, "Random cases (roundtrip)");
    verify->add_option("--length", vo.length, "Longest random sequence (roundtrip)");
    verify->add_option("--seed", vo.seed, "Random seed (roundtrip)");
    verify->add_option("--check-tol", vo.check_tol, "Absolute agreement tolerance (closed-vs-sum)");

    detail::KeplerOpts ko;
    auto* kepler = app.add_subcommand("kepler", "Solve Kepler's equation by Newton and by the Bessel series");
    kepler->add_option("--ecc", ko.ecc, "Eccentricity in [0, 1)")->required();
    kepler->add_option("--M", ko.mean_anomaly, "Mean anomaly in radians")->required();
    kepler->add_option("--method", ko.method, "newton, bessel or both")
        ->check(CLI::IsMember({"newton", "bessel", "both"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return input_error;
    }

    std::string text;
    int code = ok;
    try {
        if (convert->parsed())
            text = detail::run_convert(conv, g, in);
        else if (closed->parsed())
            text = detail::run_closed_form(cfo, g);
        else if (eval->parsed())
            text = detail::run_eval(ev, g, in);
        else if (kepler->parsed())
            text = detail::run_kepler(ko, g);
        else {
            auto [report, passed] = detail::run_verify(vo, g);
            text = std::move(report);
            code = passed ? ok : verification_failed;
        }
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << '\n';
        return input_error;
    } catch (const json::exception& e) {
        err << "input error: " << e.what() << '\n';
        return input_error;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << '\n';
        return input_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return domain_error;
    }

    if (!g.out_path.empty()) {
        std::ofstream f(g.out_path);
        if (!f) {
            err << "error: cannot write \"" << g.out_path << "\"\n";
            return input_error;
        }
        f << text;
    } else {
        out << text;
    }
    return code;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr,
               std::istream& in = std::cin)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(std::move(args), out, err, in);
}

} // namespace kapteyn::cli
