#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#ifndef RAINBOWSAT_CLI_PATH
#error "RAINBOWSAT_CLI_PATH must name the CLI binary"
#endif

namespace {
    struct Run {
        int code = -1;
        std::string out;
    };

    auto run(const std::string &args) -> Run
    {
        const std::string cmd = std::string{"\""} + RAINBOWSAT_CLI_PATH + "\" " + args + " 2>/dev/null";
        Run r;
        FILE *pipe = ::popen(cmd.c_str(), "r");
        if (pipe == nullptr)
            return r;
        std::array<char, 4096> buf{};
        std::size_t got = 0;
        while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
            r.out.append(buf.data(), got);
        const int status = ::pclose(pipe);
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        return r;
    }

    auto json_of(const std::string &args) -> nlohmann::json
    {
        auto r = run("--json " + args);
        return nlohmann::json::parse(r.out);
    }
}

TEST(Cli, ColorableExitCodes)
{
    EXPECT_EQ(run("colorable C~ K3").code, 1);
    EXPECT_EQ(run("colorable Cl C4").code, 0);
    EXPECT_EQ(run("--node-limit 1 colorable \"E~~w\" K4").code, 2);
}

TEST(Cli, CheckExitCodes)
{
    EXPECT_EQ(run("check GhCKN{ C4").code, 0);
    EXPECT_EQ(run("check D?? K2").code, 0);
    EXPECT_EQ(run("check Ch P4").code, 1);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run("").code, 64);
    EXPECT_EQ(run("bogus").code, 64);
    EXPECT_EQ(run("colorable \"!!\" K3").code, 64);
    EXPECT_EQ(run("colorable C~ Q7").code, 64);
    EXPECT_EQ(run("satstar 11 P4").code, 64);
    EXPECT_EQ(run("construct p4 --n 10").code, 64);
    EXPECT_EQ(run("gadget GZ").code, 64);
    EXPECT_EQ(run("verify-paper --only nosuch").code, 64);
}

TEST(Cli, FileInput)
{
    auto path = std::filesystem::temp_directory_path() / "rainbowsat_cli_input.g6";
    {
        std::ofstream f(path);
        f << "\n   \nC~\n";
    }
    EXPECT_EQ(run("colorable @" + path.string() + " K3").code, 1);
    std::filesystem::remove(path);
    EXPECT_EQ(run("colorable @/nonexistent/file K3").code, 64);
}

TEST(Cli, SatStarJson)
{
    auto j = json_of("satstar 5 P4");
    EXPECT_EQ(j["n"], 5);
    EXPECT_EQ(j["value"], 4);
    EXPECT_EQ(j["witnesses"].size(), 3U);
    EXPECT_EQ(j["family"], nlohmann::json::array({"Ch"}));
}

TEST(Cli, SatJson)
{
    auto j = json_of("sat 6 P4");
    EXPECT_EQ(j["value"], 3);
}

TEST(Cli, ConstructJson)
{
    auto p4 = json_of("construct p4 --n 17 --verify");
    EXPECT_EQ(p4["verdict"]["status"], "SATURATED");
    auto wheel = json_of("construct wheel --n 8");
    EXPECT_EQ(wheel["edges"], 14);
    EXPECT_EQ(run("construct ehm --n 6 --r 4 --verify").code, 0);
    auto ladder = json_of("construct ladder --n 9 --pattern K3 --verify");
    EXPECT_EQ(ladder["verdict"]["status"], "SATURATED");
    EXPECT_TRUE(ladder.contains("trace"));
}

TEST(Cli, GadgetAndSaturate)
{
    auto g = json_of("gadget GA");
    EXPECT_EQ(g["name"], "GA");
    EXPECT_EQ(run("saturate D?? K3").code, 0);
    auto a = run("--seed 5 saturate \"G?????\" C4 --random");
    auto b = run("--seed 5 saturate \"G?????\" C4 --random");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, VerifyDeterministicAcrossThreads)
{
    auto one = run("--json --threads 1 verify-paper --quick --only ehm,p3-footnote");
    auto four = run("--json --threads 4 verify-paper --quick --only ehm,p3-footnote");
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, four.out);
    auto j = nlohmann::json::parse(one.out);
    EXPECT_EQ(j["schema"], "rainbowsat.verify/1");
    EXPECT_EQ(j["claims"].size(), 2U);
}
