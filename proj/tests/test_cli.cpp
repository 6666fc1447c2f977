#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rrq/cli.hpp"
#include "rrq/qseries.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "rrq");
    std::vector<char*> argv;
    for (auto& a : args)
        argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = rrq::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string field(const std::string& text, const std::string& key)
{
    const auto p = text.find(key + ": ");
    REQUIRE(p != std::string::npos);
    const auto start = p + key.size() + 2;
    return text.substr(start, text.find('\n', start) - start);
}

} // namespace

TEST_CASE("eval")
{
    auto f0 = cli({"eval", "--fn", "f", "--q", "0"});
    CHECK(f0.code == 0);
    CHECK(field(f0.out, "value") == "1");

    auto u = cli({"eval", "--fn", "u", "--q", "0.5"});
    CHECK(u.code == 0);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", rrq::u_of_q(rrq::Nome(0.5)).value.real());
    CHECK(field(u.out, "value") == buf);

    auto y = cli({"eval", "--fn", "y", "--q", "0.6816394360211508"});
    CHECK(y.code == 0);
    CHECK(std::abs(std::stod(field(y.out, "value"))) < 1e-8);

    auto c = cli({"eval", "--fn", "R", "--q", "-0.23,-0.17"});
    CHECK(c.code == 0);
    CHECK(field(c.out, "value").find(',') != std::string::npos);

    CHECK(cli({"eval", "--fn", "eta", "--tau", "1"}).code == 0);
    CHECK(cli({"eval", "--fn", "u", "--q", "1.5"}).code == 1);
    CHECK(cli({"eval", "--fn", "u", "--q", "abc"}).code == 1);
    CHECK(cli({"eval", "--fn", "zeta", "--q", "0.5"}).code == 1);
    CHECK(cli({"eval", "--fn", "u"}).code == 1);
}

TEST_CASE("usage errors")
{
    CHECK(cli({}).code == 1);
    CHECK(cli({"frobnicate"}).code == 1);
    CHECK(cli({"eval", "--bogus"}).code == 1);
}

TEST_CASE("root")
{
    auto r = cli({"root", "--target", "u=0.5"});
    CHECK(r.code == 0);
    CHECK(std::stod(field(r.out, "root")) == doctest::Approx(0.24076874868836687).epsilon(1e-13));

    auto y = cli({"root", "--target", "y=0"});
    CHECK(y.code == 3);
    CHECK(y.err.find("sign") != std::string::npos);

    auto c = cli({"root", "--target", "u-complex=-11,2", "--seed", "-0.23,-0.17"});
    CHECK(c.code == 0);
    CHECK(field(c.out, "root").rfind("-0.230253957", 0) == 0);

    CHECK(cli({"root", "--target", "u-complex=-11,2"}).code == 1);
    CHECK(cli({"root", "--target", "nonsense"}).code == 1);
}

TEST_CASE("verify")
{
    auto one = cli({"verify", "--case", "THM2-1"});
    CHECK(one.code == 0);
    CHECK(one.out.find("THM2-1 ") != std::string::npos);
    CHECK(one.out.find("1 cases") != std::string::npos);

    auto bad = cli({"verify", "--case", "NOPE"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("unknown case id") != std::string::npos);

    const std::string path = "cli_test_report.json";
    auto js = cli({"verify", "--case", "EX*", "--out", path});
    CHECK(js.code == 0);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str().find("\"config_hash\"") != std::string::npos);
    std::remove(path.c_str());

    auto csv = cli({"verify", "--case", "EX1", "--format", "csv"});
    CHECK(csv.out.rfind("id,status,", 0) == 0);

    CHECK(cli({"verify", "--case", "EX1", "--out", "/nonexistent-dir/x.json"}).code == 1);
    // an impossible tolerance turns passes into failures
    CHECK(cli({"verify", "--case", "EX1", "--tol", "1e-300"}).code == 4);
}

TEST_CASE("integrate")
{
    auto r = cli({"integrate", "--k", "0.5", "--a", "0.2", "--b", "0.6"});
    CHECK(r.code == 0);
    CHECK(std::stod(field(r.out, "difference")) < 1e-9);
    CHECK(cli({"integrate", "--a", "0.6", "--b", "0.2"}).code == 1);
}

TEST_CASE("plotdata")
{
    auto r = cli({"plotdata", "--from", "0.05", "--to", "0.95", "--n", "64"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "q,R,u,y");
    int rows = 0;
    double prev_u = 1e300;
    bool monotone = true;
    while (std::getline(in, line)) {
        ++rows;
        std::stringstream ls(line);
        std::string q, R, u;
        std::getline(ls, q, ',');
        std::getline(ls, R, ',');
        std::getline(ls, u, ',');
        monotone = monotone && std::stod(u) < prev_u;
        prev_u = std::stod(u);
    }
    CHECK(rows == 64);
    CHECK(monotone);

    auto at = cli({"plotdata", "--from", "0.5", "--to", "0.5", "--n", "1"});
    auto ev = cli({"eval", "--fn", "u", "--q", "0.5"});
    CHECK(at.out.find("," + field(ev.out, "value") + ",") != std::string::npos);

    CHECK(cli({"plotdata", "--n", "0"}).code == 1);
    CHECK(cli({"plotdata", "--from", "0.9", "--to", "0.1"}).code == 1);
}
