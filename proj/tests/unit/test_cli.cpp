#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "laurent/cli.hpp"
#include "laurent/laurent_engine.hpp"

using namespace laurent;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class ScopedEnv {
public:
    ScopedEnv(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
    ~ScopedEnv() { unsetenv(name_); }
    ScopedEnv(const ScopedEnv&) = delete;
    ScopedEnv& operator=(const ScopedEnv&) = delete;

private:
    const char* name_;
};

}  // namespace

TEST_CASE("parse_complex") {
    CHECK(cli::parse_complex("2") == Complex{2.0, 0.0});
    CHECK(cli::parse_complex("-1.5e-3") == Complex{-1.5e-3, 0.0});
    CHECK(cli::parse_complex("3i") == Complex{0.0, 3.0});
    CHECK(cli::parse_complex("-i") == Complex{0.0, -1.0});
    CHECK(cli::parse_complex("1-2i") == Complex{1.0, -2.0});
    CHECK(cli::parse_complex("0.5+0.25i") == Complex{0.5, 0.25});
    CHECK_THROWS_AS(cli::parse_complex("abc"), cli::ParseError);
    CHECK_THROWS_AS(cli::parse_complex(""), cli::ParseError);
    CHECK_THROWS_AS(cli::parse_complex("1+2j"), cli::ParseError);
}

TEST_CASE("parse_matrix") {
    const Matrix2C m = cli::parse_matrix("1,2i;-i,3");
    CHECK(m(0, 1) == Complex{0.0, 2.0});
    CHECK(m(1, 0) == Complex{0.0, -1.0});
    CHECK(m(1, 1) == Complex{3.0, 0.0});
    CHECK_THROWS_AS(cli::parse_matrix("1,2;3"), cli::ParseError);
    CHECK_THROWS_AS(cli::parse_matrix("1,2,3;4,5"), cli::ParseError);
    CHECK_THROWS_WITH(cli::parse_matrix("1,x;0,1"), doctest::Contains("'x'"));
}

TEST_CASE("parse_theta") {
    CHECK(cli::parse_theta("pi/4") == kPi / 4);
    CHECK(cli::parse_theta("pi/6") == kPi / 6);
    CHECK(cli::parse_theta("pi/16") == kPi / 16);
    CHECK(cli::parse_theta("0.25") == 0.25);
    CHECK_THROWS_AS(cli::parse_theta("pi/0"), cli::ParseError);
    CHECK_THROWS_AS(cli::parse_theta("tau"), cli::ParseError);
}

TEST_CASE("verify_tolerance honours the environment") {
    CHECK(cli::verify_tolerance() == cli::kDefaultVerifyTol);
    {
        ScopedEnv env(cli::kTolEnvVar, "1e-6");
        CHECK(cli::verify_tolerance() == 1e-6);
    }
    {
        ScopedEnv env(cli::kTolEnvVar, "-3");
        CHECK_THROWS_AS(cli::verify_tolerance(), UsageError);
    }
}

TEST_CASE("coeffs example") {
    const Outcome r = invoke({"coeffs", "--n", "2", "--theta", "0.5235988", "--format", "json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["schema_version"] == "1");
    CHECK(doc["command"] == "coeffs");
    const auto& c = doc["data"]["coefficients"];
    REQUIRE(c.size() == 5);
    CHECK(c[0]["k"] == -2);
    CHECK(c[0]["re"].get<double>() == doctest::Approx(1.0));
    CHECK(c[2]["k"] == 0);
    CHECK(c[2]["re"].get<double>() == doctest::Approx(1.5).epsilon(1e-6));
    CHECK(c[4]["re"].get<double>() == doctest::Approx(1.0));
    CHECK(std::abs(c[1]["re"].get<double>()) < 1e-15);
}

TEST_CASE("normal-form example") {
    const Outcome r = invoke({"normal-form", "--matrix", "2,0;0,1"});
    REQUIRE(r.code == 0);
    const json d = json::parse(r.out)["data"];
    CHECK(d["R"].get<double>() == doctest::Approx(2.0));
    CHECK(d["rho"].get<double>() == doctest::Approx(2.0));
    CHECK(d["theta"].get<double>() == 0.0);
    CHECK(d["a_re"].get<double>() == 1.0);
    CHECK(d["a_im"].get<double>() == 0.0);
}

TEST_CASE("roots example") {
    const Outcome r = invoke({"roots", "--n", "1", "--theta", "0"});
    REQUIRE(r.code == 0);
    const json d = json::parse(r.out)["data"];
    REQUIRE(d["roots"].size() == 2);
    CHECK(std::abs(d["roots"][0]["im"].get<double>() + 1.0) < 1e-15);
    CHECK(std::abs(d["roots"][1]["im"].get<double>() - 1.0) < 1e-15);
    for (const auto& root : d["roots"]) {
        CHECK(root["residual"].get<double>() <= 1e-12);
        CHECK(root["arc"] != "outside");
    }
}

TEST_CASE("other subcommands produce documents") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"eval", "--n", "3", "--theta", "pi/8", "--z", "0.5+0.5i"},
             {"trig", "--n", "4", "--theta", "pi/16"},
             {"comb", "--theta", "pi/6", "--samples", "9"},
             {"sweep", "--n", "3", "--theta-grid", "5"},
             {"roots", "--n", "3", "--matrix", "1,0.5;0.2i,2"}}) {
        const Outcome r = invoke(args);
        CHECK(r.code == 0);
        CHECK(json::parse(r.out)["schema_version"] == "1");
    }
    const json e = json::parse(invoke({"eval", "--n", "3", "--theta", "pi/8", "--z", "0.5+0.5i"}).out);
    CHECK(e["data"]["abs_diff"].get<double>() < 1e-12);
}

TEST_CASE("exit codes") {
    CHECK(invoke({"coeffs", "--n", "2", "--theta", "0", "--bogus"}).code == cli::kExitUsage);
    CHECK(invoke({"frobnicate"}).code == cli::kExitUsage);
    CHECK(invoke({"coeffs", "--n", "2"}).code == cli::kExitUsage);
    CHECK(invoke({"coeffs", "--n", "0", "--theta", "0"}).code == cli::kExitUsage);

    const Outcome bad_matrix = invoke({"normal-form", "--matrix", "1,q;0,1"});
    CHECK(bad_matrix.code == cli::kExitUsage);
    CHECK(bad_matrix.err.find("'q'") != std::string::npos);

    CHECK(invoke({"normal-form", "--matrix", "1,0;1,0"}).code == cli::kExitDomain);
    CHECK(invoke({"roots", "--n", "2", "--theta", "pi/4"}).code == cli::kExitDomain);
    CHECK(invoke({"roots", "--n", "2", "--matrix", "1,1;0,0"}).code == cli::kExitDomain);
    CHECK(invoke({"trig", "--n", "2", "--theta", "1.0"}).code == cli::kExitDomain);
    CHECK(invoke({"coeffs", "--n", "30", "--theta", "0.1", "--method", "brute"}).code == cli::kExitDomain);
}

TEST_CASE("verify passes by default and fails under a vanishing tolerance") {
    const Outcome ok = invoke({"coeffs", "--n", "9", "--theta", "0.3", "--verify"});
    CHECK(ok.code == cli::kExitOk);
    CHECK(json::parse(ok.out)["data"]["verify"]["agree"] == true);

    ScopedEnv env(cli::kTolEnvVar, "1e-300");
    const Outcome strict = invoke({"coeffs", "--n", "9", "--theta", "0.3", "--verify"});
    CHECK(strict.code == cli::kExitVerifyFailed);
    CHECK(json::parse(strict.out)["data"]["verify"]["agree"] == false);
}

TEST_CASE("csv output round-trips coefficients") {
    const Outcome r = invoke({"coeffs", "--n", "5", "--theta", "0.3", "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "k,re,im");
    const LaurentPoly p = trace_power_coeffs(5, Matrix2C::canonical(0.3));
    int k = -5;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string a;
        std::string b;
        std::string c;
        std::getline(row, a, ',');
        std::getline(row, b, ',');
        std::getline(row, c, ',');
        CHECK(std::stoi(a) == k);
        CHECK(std::strtod(b.c_str(), nullptr) == p.coeff(k).real());
        CHECK(std::strtod(c.c_str(), nullptr) == p.coeff(k).imag());
        ++k;
    }
    CHECK(k == 6);
}
