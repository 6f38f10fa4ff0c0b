#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "cli.hpp"

using kapteyn::json;

namespace
{

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "")
{
    std::ostringstream out;
    std::ostringstream err;
    std::istringstream in(input);
    const int code = kapteyn::cli::run(std::move(args), out, err, in);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("kapteyn_cli_test_" + name);
}

} // namespace

TEST(CliConvert, KapteynToTaylor)
{
    const auto r = run({"convert", "--to", "taylor", "--kind", "first"},
                       R"({"kind":"kapteyn1","nu":"0","coeffs":["1","0","0"]})");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["coeffs"], json::array({"1", "0", "0"}));
    EXPECT_EQ(json::parse(r.out)["kind"], "taylor");
}

TEST(CliConvert, TaylorToKapteyn1)
{
    const auto r = run({"convert", "--to", "kapteyn1", "--nu", "0"}, R"({"kind":"taylor","coeffs":["0","1"]})");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["coeffs"][1], "2");
}

TEST(CliConvert, RoundtripIsByteIdentical)
{
    const std::string original =
        run({"convert", "--to", "kapteyn1", "--nu", "1"}, R"({"kind":"taylor","coeffs":["3","-1/2","0","7/5","2"]})").out;
    const auto taylor = run({"convert", "--to", "taylor"}, original);
    ASSERT_EQ(taylor.code, 0) << taylor.err;
    const auto back = run({"convert", "--to", "kapteyn1", "--nu", "1"}, taylor.out);
    EXPECT_EQ(back.out, original);

    const std::string second =
        run({"convert", "--to", "kapteyn2", "--mu", "1", "--nu", "0"}, R"({"kind":"taylor","coeffs":["1","2","3","4"]})")
            .out;
    const auto t2 = run({"convert", "--to", "taylor"}, second);
    ASSERT_EQ(t2.code, 0) << t2.err;
    EXPECT_EQ(run({"convert", "--to", "kapteyn2", "--mu", "1", "--nu", "0"}, t2.out).out, second);
}

TEST(CliConvert, CsvAndFileIo)
{
    const auto in_path = temp_file("in.json");
    const auto out_path = temp_file("out.csv");
    std::ofstream(in_path) << R"({"kind":"taylor","coeffs":["0","1"]})";
    const auto r = run({"--format", "csv", "--out", out_path.string(), "convert", "--to", "kapteyn1", in_path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(out_path);
    const std::string csv((std::istreambuf_iterator<char>(f)), {});
    EXPECT_EQ(csv, "index,value\n0,0\n1,2\n");
    std::filesystem::remove(in_path);
    std::filesystem::remove(out_path);
}

TEST(CliConvert, ErrorsMapToExitCodes)
{
    EXPECT_EQ(run({"convert", "--to", "taylor"}, "not json").code, 2);
    EXPECT_EQ(run({"convert", "--to", "taylor"}, R"({"kind":"taylor","coeffs":["1", 2.5]})").code, 2);
    EXPECT_EQ(run({"convert", "--to", "kapteyn1", "--nu", "-1"}, R"({"kind":"taylor","coeffs":["1"]})").code, 3);
    EXPECT_EQ(run({"convert", "--to", "sideways"}, R"({"kind":"taylor","coeffs":["1"]})").code, 2);
    EXPECT_EQ(run({"convert", "--to", "taylor", "/nonexistent/file.json"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliClosedForm, PrettyAndJson)
{
    auto r = run({"closed-form", "fp", "--p", "1", "--format", "pretty"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "z / (2 (1-z)^4)\n");

    r = run({"closed-form", "s1", "--p", "2", "--format", "pretty"});
    EXPECT_EQ(r.out, "a^2 (27a^6 + 472a^4 + 592a^2 + 64) / (256 (1-a^2)^(13/2))\n");

    r = run({"closed-form", "gp", "--p", "0"});
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["constant"], "1/2");
    EXPECT_EQ(j["prefactor"], "1/2");
    EXPECT_EQ(j["exponent"], "1/2");
    EXPECT_EQ(j["base"], "1-4z^2");
    EXPECT_EQ(kapteyn::to_json(kapteyn::closed_form_from_json(j)), j);
}

TEST(CliClosedForm, BoundExceededExitsThree)
{
    EXPECT_EQ(run({"closed-form", "fp", "--p", "13"}).code, 3);
    EXPECT_EQ(run({"closed-form", "gp", "--p", "5", "--bound", "4"}).code, 3);
    EXPECT_EQ(run({"closed-form", "hp", "--p", "1"}).code, 2);
}

TEST(CliEval, S1AndKapteyn)
{
    auto r = run({"eval", "s1", "--m", "2", "--a", "0.3"});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    EXPECT_NEAR(j["value"].get<double>(), 0.078606723356193271, 1e-9);
    EXPECT_GT(j["terms_used"].get<int>(), 0);

    r = run({"eval", "kapteyn1", "--weight", "n^2p", "--p", "1", "--z", "0.2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(json::parse(r.out)["value"].get<double>(), 0.244140625, 1e-9);

    r = run({"eval", "kapteyn2", "--weight", "n^2p", "--p", "1", "--z", "0.2"});
    ASSERT_EQ(r.code, 0) << r.err;
    j = json::parse(r.out);
    EXPECT_NEAR(j["value"].get<double>(), j["closed_form"].get<double>(), 1e-9);
}

TEST(CliEval, CoefficientFile)
{
    const auto path = temp_file("coeffs.json");
    std::ofstream(path) << R"({"kind":"kapteyn1","mode":"float","nu":0,"coeffs":[0,1,4,9,16,25]})";
    const auto r = run({"eval", "kapteyn1", "--coeffs", path.string(), "--z", "0.1"});
    std::filesystem::remove(path);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(std::isfinite(json::parse(r.out)["value"].get<double>()));
}

TEST(CliEval, DomainErrorsExitThree)
{
    EXPECT_EQ(run({"eval", "s1", "--m", "1", "--a", "1.2"}).code, 3);
    EXPECT_EQ(run({"eval", "kapteyn2", "--weight", "n^2p", "--p", "1", "--z", "0.6"}).code, 3);
    EXPECT_EQ(run({"--max-n", "3", "eval", "kapteyn1", "--weight", "n^2p", "--p", "2", "--z", "0.9"}).code, 3);
}

TEST(CliKepler, Methods)
{
    auto r = run({"kepler", "--ecc", "0", "--M", "1.3", "--method", "bessel"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["bessel"]["value"].get<double>(), 1.3);

    r = run({"kepler", "--ecc", "0.1", "--M", "1.0", "--method", "both"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_LT(std::abs(j["difference"].get<double>()), 1e-10);
    EXPECT_NEAR(j["newton"]["E"].get<double>(), 1.0885977523978936, 1e-12);

    EXPECT_EQ(run({"kepler", "--ecc", "1.5", "--M", "1.0"}).code, 3);
    EXPECT_EQ(run({"kepler", "--ecc", "0.1"}).code, 2);
}

TEST(CliVerify, SuitesPass)
{
    const std::vector<std::vector<std::string>> cases{
        {"verify", "biortho1", "--nu", "0..3", "--s", "15"},
        {"verify", "biortho2", "--mu", "0..2", "--nu", "0..2", "--s", "12"},
        {"verify", "lemma", "--r", "10", "--m", "14"},
        {"verify", "closed-vs-sum", "--p", "2", "--z", "0.2"},
        {"verify", "roundtrip", "--count", "20", "--length", "12"},
        {"verify", "bessel-xcheck", "--n", "8"},
    };
    for (const auto& args : cases) {
        const auto r = run(args);
        EXPECT_EQ(r.code, 0) << args[1] << "\n" << r.out << r.err;
        const json j = json::parse(r.out);
        EXPECT_TRUE(j["pass"].get<bool>()) << args[1];
        EXPECT_GT(j["checks"].get<int>(), 0);
    }
}

TEST(CliVerify, FailureExitsOne)
{
    // An absurdly tight agreement tolerance forces the closed-vs-sum suite to fail.
    const auto r = run({"verify", "closed-vs-sum", "--p", "3", "--z", "0.3", "--check-tol", "1e-300"});
    EXPECT_EQ(r.code, 1);
    const json j = json::parse(r.out);
    EXPECT_FALSE(j["pass"].get<bool>());
    EXPECT_FALSE(j["failures"].empty());
}

TEST(CliBinary, ExitCodesFromProcess)
{
    const std::string bin = KAPTEYN_CLI_PATH;
    auto status = [&](const std::string& args) {
        const int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    EXPECT_EQ(status("closed-form fp --p 2"), 0);
    EXPECT_EQ(status("verify lemma --r 4 --m 4"), 0);
    EXPECT_EQ(status("verify closed-vs-sum --p 1 --z 0.2 --check-tol 1e-300"), 1);
    EXPECT_EQ(status("convert --to taylor < /dev/null"), 2);
    EXPECT_EQ(status("closed-form fp --p 99"), 3);
}
