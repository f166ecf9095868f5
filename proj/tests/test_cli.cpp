#include <gtest/gtest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using Json = nlohmann::json;

namespace {

const std::string kCli = L2K_CLI_PATH;
const std::string kData = L2K_DATA_DIR;

struct CliRun {
    int code = -1;
    Json report;
};

CliRun run(const std::string& args)
{
    static int counter = 0;
    const auto out = std::filesystem::temp_directory_path() / ("l2k_cli_test_" + std::to_string(counter++) + ".json");
    std::filesystem::remove(out);
    const std::string cmd = kCli + " " + args + " --out " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    CliRun r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out);
    if (in) {
        std::stringstream ss;
        ss << in.rdbuf();
        if (!ss.str().empty()) r.report = Json::parse(ss.str());
    }
    std::filesystem::remove(out);
    return r;
}

Json strip_volatile(Json j)
{
    if (j.is_object()) {
        Json out = Json::object();
        for (auto& [k, v] : j.items())
            if (k != "seconds" && k != "timing" && k != "command") out[k] = strip_volatile(v);
        return out;
    }
    if (j.is_array())
        for (auto& v : j) v = strip_volatile(v);
    return j;
}

}  // namespace

TEST(Cli, BettiExamples)
{
    const CliRun m2 = run("betti " + kData + "/m2.json --max-degree 2");
    ASSERT_EQ(m2.code, 0);
    EXPECT_EQ(m2.report["betti"], Json::parse(R"({"0":"1/4","1":"0","2":"0"})"));
    EXPECT_TRUE(m2.report["stabilization"]["checked"].get<bool>());
    EXPECT_TRUE(m2.report["stabilization"]["stable"].get<bool>());

    EXPECT_EQ(run("betti " + kData + "/c.json --max-degree 0").report["betti"], Json::parse(R"({"0":"1"})"));
    EXPECT_EQ(run("betti " + kData + "/z3.json --max-degree 1").report["betti"], Json::parse(R"({"0":"1/3","1":"0"})"));
}

TEST(Cli, FloatBackendBetti)
{
    const CliRun r = run("betti " + kData + "/m2.json --max-degree 1 --backend float");
    ASSERT_EQ(r.code, 0);
    EXPECT_NEAR(std::stod(r.report["betti"]["0"].get<std::string>()), 0.25, 1e-9);
    EXPECT_NEAR(std::stod(r.report["betti"]["1"].get<std::string>()), 0.0, 1e-9);
}

TEST(Cli, CatalogExamples)
{
    EXPECT_EQ(run("catalog " + kData + "/finite_times_free.json").report["betti"], Json::parse(R"({"1":"1/8"})"));
    EXPECT_EQ(run("catalog " + kData + "/coamenable_product.json").report["betti"], Json::object());
    EXPECT_EQ(run("catalog --rational 3/5").report["betti"], Json::parse(R"({"1":"3/5"})"));
    EXPECT_EQ(run("catalog " + kData + "/z3_descriptor.json").report["betti"], Json::parse(R"({"0":"1/3"})"));
    const CliRun fp = run("catalog --fixed-point 1/4");
    EXPECT_EQ(fp.report["fixed_point"]["solutions"], Json::parse(R"(["0","inf"])"));
}

TEST(Cli, VerifySuitesPassAndAreDeterministic)
{
    for (const char* suite : {"lemmas", "kuenneth-chain", "dim-mult", "kuenneth-betti"}) {
        const std::string args = std::string("verify ") + suite + " --seed 42 --trials 20";
        const CliRun a = run(args);
        const CliRun b = run(args);
        ASSERT_EQ(a.code, 0) << suite;
        EXPECT_EQ(a.report["status"], "pass") << suite;
        EXPECT_GT(a.report["checks"].size(), 0u) << suite;
        for (const auto& c : a.report["checks"]) {
            EXPECT_TRUE(c.contains("left") && c.contains("right")) << suite;
            EXPECT_EQ(c["status"], "pass") << suite << " " << c.dump();
        }
        EXPECT_EQ(strip_volatile(a.report), strip_volatile(b.report)) << suite;
    }
}

TEST(Cli, ExitCodes)
{
    const auto dir = std::filesystem::temp_directory_path();
    std::ofstream(dir / "l2k_bad_group.json") << R"({"kind":"group","cayley":[[0,0],[1,1]]})";
    std::ofstream(dir / "l2k_bad_syntax.json") << R"({"kind":"group",)";

    EXPECT_EQ(run("betti " + (dir / "l2k_bad_syntax.json").string()).code, 1);
    EXPECT_EQ(run("betti /nonexistent/algebra.json").code, 1);
    EXPECT_EQ(run("frobnicate").code, 1);
    EXPECT_EQ(run("verify lemmas --trials 0").code, 1);
    EXPECT_EQ(run("verify lemmas --tolerance -1").code, 1);
    const CliRun invalid = run("betti " + (dir / "l2k_bad_group.json").string());
    EXPECT_EQ(invalid.code, 2);
    EXPECT_EQ(invalid.report["status"], "error");
    EXPECT_EQ(invalid.report["error"]["kind"], "validation");
    EXPECT_EQ(run("catalog --fixed-point 3/2").code, 2);
    const CliRun ceiling = run("betti " + kData + "/m2.json --ceiling 100");
    EXPECT_EQ(ceiling.code, 3);
    EXPECT_EQ(ceiling.report["error"]["kind"], "ceiling");
}
