#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "bicontract/graph_io.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(BICONTRACT_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data_file(const std::string& name) { return std::string(BICONTRACT_DATA) + "/" + name; }

std::filesystem::path scratch(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("bicontract_cli_" + name);
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST(Cli, SolveCycle) {
    auto r = run("solve " + data_file("c5.gr") + " --k 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("YES 1\n", 0), 0u);
    EXPECT_EQ(bicontract::parse_edge_list(r.out).size(), 1u);
}

TEST(Cli, SolveK4) {
    auto no = run("solve " + data_file("k4.gr") + " --k 1");
    EXPECT_EQ(no.code, 1);
    EXPECT_EQ(no.out, "NO\n");
    EXPECT_EQ(run("solve " + data_file("k4.gr") + " --k 2").code, 0);
}

TEST(Cli, MissingFileIsExitTwo) {
    EXPECT_EQ(run("solve /nonexistent/file.gr --k 1").code, 2);
    EXPECT_EQ(run("solve").code, 2);
}

TEST(Cli, MalformedFileIsExitTwo) {
    auto path = scratch("loop.gr", "p edge 2 1\ne 1 1\n");
    EXPECT_EQ(run("solve " + path.string() + " --k 1").code, 2);
    std::filesystem::remove(path);
}

TEST(Cli, ResourceLimitIsExitThree) {
    EXPECT_EQ(run("--work-limit 5 oracle " + data_file("petersen.gr") + " --k 3").code, 3);
}

TEST(Cli, VerifyAcceptsSolverOutput) {
    auto solved = run("solve " + data_file("petersen.gr") + " --k 3");
    ASSERT_EQ(solved.code, 0);
    auto witness = scratch("petersen.w", solved.out);
    auto v = run("verify " + data_file("petersen.gr") + " " + witness.string() + " --k 3");
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(v.out, "ACCEPT\n");
    std::filesystem::remove(witness);
}

TEST(Cli, VerifyRejects) {
    auto empty = scratch("empty.w", "");
    auto r = run("verify " + data_file("c5.gr") + " " + empty.string() + " --k 1");
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out.rfind("REJECT", 0), 0u);
    auto ghost = scratch("ghost.w", "e 1 3\n");
    auto g = run("verify " + data_file("c5.gr") + " " + ghost.string() + " --k 1");
    EXPECT_EQ(g.code, 1);
    EXPECT_NE(g.out.find("1"), std::string::npos);
    std::filesystem::remove(empty);
    std::filesystem::remove(ghost);
}

TEST(Cli, StructuredOutput) {
    auto r = run("--format structured solve " + data_file("c5.gr") + " --k 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("type=result answer=yes k=1 n=5 m=5 size=1\n", 0), 0u);
    EXPECT_NE(r.out.find("type=edge "), std::string::npos);
    EXPECT_NE(r.out.find("type=color vertex=5 "), std::string::npos);
    EXPECT_NE(r.out.find("type=diagnostic phase=solve"), std::string::npos);
}

TEST(Cli, OracleAgreesWithSolveOnBundledFiles) {
    std::ifstream expected(data_file("expected.txt"));
    std::string name;
    std::string answer;
    int k = 0;
    std::size_t checked = 0;
    std::string line;
    while (std::getline(expected, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream in(line);
        in >> name >> k >> answer;
        const auto args = data_file(name) + " --k " + std::to_string(k);
        auto s = run("solve " + args);
        auto o = run("oracle " + args);
        EXPECT_EQ(s.code, o.code) << line;
        EXPECT_EQ(s.code, answer == "YES" ? 0 : 1) << line;
        ++checked;
    }
    EXPECT_GE(checked, 6u);
}

TEST(Cli, GenCycle) {
    auto r = run("gen cycle 5");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "p edge 5 5\ne 1 2\ne 1 5\ne 2 3\ne 3 4\ne 4 5\n");
    EXPECT_EQ(run("gen hypercube 3").code, 2);
    EXPECT_EQ(run("--seed 4 gen random 8 0.4").out, run("--seed 4 gen random 8 0.4").out);
}

TEST(Cli, GenReduce) {
    auto r = run("gen reduce " + data_file("k4.gr") + " 1");
    EXPECT_EQ(r.code, 0);
    auto g = bicontract::parse_graph(r.out);
    EXPECT_EQ(g.num_edges(), 6u * 5u);
}

TEST(Cli, TreeDecomposition) {
    auto r = run("tw " + data_file("petersen.gr") + " --strategy min-degree");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("s td "), std::string::npos);
    EXPECT_EQ(run("tw " + data_file("petersen.gr") + " --strategy random").code, 2);
}

TEST(Cli, ImportantSets) {
    auto path = scratch("p3.gr", "p edge 3 2\ne 1 2\ne 2 3\n");
    auto r = run("impsep " + path.string() + " 1 3 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "set 1: 1 2\nc 1 sets\n");
    std::filesystem::remove(path);
}

TEST(Cli, BenchSmoke) {
    auto r = run("bench smoke --time-budget 60");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("within_budget=yes"), std::string::npos);
    EXPECT_NE(r.out.find("type=instance name=petersen"), std::string::npos);
}
