#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qhurwitz/errors.hpp"
#include "qhurwitz/hurwitz.hpp"
#include "qhurwitz/io.hpp"

using namespace qhurwitz;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out;
};

CliRun run(const std::string& args) {
    fs::path tmp = fs::temp_directory_path() / "qhurwitz-cli-test.out";
    std::string cmd = std::string(QHURWITZ_CLI) + " " + args + " > " + tmp.string() + " 2>&1";
    int st = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, ss.str()};
}

} // namespace

TEST(Io, Formats) {
    EXPECT_EQ(format_from_name("csv"), Format::csv);
    EXPECT_THROW(format_from_name("xml"), error);
    Scalar s = Scalar::parse("(1 - t)/(1 - q)");
    EXPECT_EQ(scalar_to_latex(s), "\\frac{1 - t}{1 - q}");
    EXPECT_EQ(partition_to_latex({2, 1}), "(2,1)");
    HurwitzTable tab{{{Partition{2}, Partition{2}}, Scalar(Rational(1, 2))},
                     {{Partition{2}, Partition{1, 1}}, Scalar(0)},
                     {{Partition{1, 1}, Partition{2}}, Scalar(0)},
                     {{Partition{1, 1}, Partition{1, 1}}, Scalar(Rational(1, 2))}};
    std::string csv = table_to_csv(2, 0, std::nullopt, tab);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,d,mu,nu,value");
    WeightFamily fam(FamilyKind::macdonald, {Rational(1)});
    auto js = nlohmann::json::parse(table_to_json(2, 0, std::nullopt, fam, tab));
    EXPECT_EQ(js["entries"][0]["value"], "1/2");
    EXPECT_EQ(js["family"]["kind"], "macdonald");
}

TEST(Cli, FdJsonOutput) {
    CliRun r = run("fd --n 3 --dmax 2 --family macdonald --c 1 --mode symbolic --format json");
    ASSERT_EQ(r.code, 0) << r.out;
    auto js = nlohmann::json::parse(r.out);
    ASSERT_TRUE(js.is_array());
    EXPECT_EQ(js.size(), 3u);
    EXPECT_EQ(js[0]["d"], 0);
}

TEST(Cli, ExitCodes) {
    CliRun big = run("fd --n 99");
    EXPECT_EQ(big.code, 3);
    EXPECT_NE(big.out.find("n exceeds enumeration bound"), std::string::npos);
    EXPECT_EQ(run("fd --bogus").code, 2);
    EXPECT_EQ(run("fd --n 2 --c 0.5").code, 2);
    EXPECT_EQ(run("verify no-such-suite").code, 2);
    EXPECT_EQ(run("chars --n 3").code, 0);
}

TEST(Cli, ConfigFileUnderFlags) {
    fs::path cfg = fs::temp_directory_path() / "qhurwitz-test.ini";
    {
        std::ofstream out(cfg);
        out << "n=3\ndmax=1\nc=1\nformat=json\n";
    }
    CliRun from_cfg = run("fd --config " + cfg.string());
    ASSERT_EQ(from_cfg.code, 0) << from_cfg.out;
    EXPECT_EQ(nlohmann::json::parse(from_cfg.out)[0]["n"], 3);
    CliRun flag = run("fd --config " + cfg.string() + " --n 2");
    ASSERT_EQ(flag.code, 0) << flag.out;
    EXPECT_EQ(nlohmann::json::parse(flag.out)[0]["n"], 2);
    fs::remove(cfg);
}

TEST(Cli, RoutesAgree) {
    CliRun a = run("fd --n 3 --dmax 2 --c 1,1/2 --route character --format csv");
    CliRun b = run("fd --n 3 --dmax 2 --c 1,1/2 --route paths --format csv");
    CliRun c = run("fd --n 3 --dmax 2 --c 1,1/2 --route tau --format csv");
    ASSERT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
}
