// End-to-end checks of the entropy-mirage binary: subcommands, file formats,
// exit codes. The binary path comes from the build via EM_CLI_PATH.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "graph.hpp"

namespace {

const std::string kCli = EM_CLI_PATH;

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run(const std::string& args) {
    const auto dir = std::filesystem::temp_directory_path() / "em_cli_test";
    std::filesystem::create_directories(dir);
    const auto out_file = dir / "stdout.txt";
    const std::string command = kCli + " " + args + " > " + out_file.string() + " 2>/dev/null";
    const int raw = std::system(command.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(out_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.stdout_text = buf.str();
    return r;
}

}  // namespace

TEST_CASE("generate zk emits the edge-list format") {
    const auto r = run("generate zk --steps 5");
    REQUIRE(r.exit_code == 0);
    const auto g = em::Graph::parse_edge_list(r.stdout_text);
    CHECK(g.edge_count() == 14);
    CHECK(g.node_count() == 10);

    const auto randomized = run("generate zk --steps 5 --randomized --seed 3");
    REQUIRE(randomized.exit_code == 0);
    CHECK(em::Graph::parse_edge_list(randomized.stdout_text).edge_count() == 14);
}

TEST_CASE("generate digit-graph, er, ba, ring, targeted") {
    const auto dg = run("generate digit-graph --source champernowne --base 10 --n 20");
    REQUIRE(dg.exit_code == 0);
    CHECK(em::Graph::parse_edge_list(dg.stdout_text).node_count() == 20);

    const auto er = run("generate er --n 30 --p 0.2 --seed 5");
    REQUIRE(er.exit_code == 0);
    CHECK(em::Graph::parse_edge_list(er.stdout_text).node_count() == 30);

    const auto er2 = run("generate er --n 30 --p 0.2 --seed 5");
    CHECK(er.stdout_text == er2.stdout_text);  // seeded determinism end to end

    const auto ba = run("generate ba --n 25 --m 2 --seed 5");
    REQUIRE(ba.exit_code == 0);
    CHECK(em::Graph::parse_edge_list(ba.stdout_text).edge_count() == 3 + 2 * 22);

    const auto ring = run("generate ring --n 12 --k 4");
    REQUIRE(ring.exit_code == 0);
    CHECK(em::Graph::parse_edge_list(ring.stdout_text).edge_count() == 24);

    const auto targeted = run("generate targeted --n 40 --entropy 2.0 --tol 0.2 --seed 7");
    REQUIRE(targeted.exit_code == 0);
    CHECK(targeted.stdout_text.find("# degrees=") != std::string::npos);
    CHECK(em::Graph::parse_edge_list(targeted.stdout_text).node_count() == 40);
}

TEST_CASE("measure reads a graph file and emits a JSON report") {
    const auto dir = std::filesystem::temp_directory_path() / "em_cli_measure";
    std::filesystem::create_directories(dir);
    const auto path = dir / "triangle.txt";
    {
        std::ofstream out(path);
        out << "# nodes=3\n1 2\n2 3\n1 3\n";
    }
    const auto adj = run("measure --feature adjacency --input " + path.string());
    REQUIRE(adj.exit_code == 0);
    CHECK(adj.stdout_text.find("\"feature\": \"adjacency\"") != std::string::npos);
    CHECK(adj.stdout_text.find("\"value\": 0") != std::string::npos);
    CHECK(adj.stdout_text.find(path.string()) != std::string::npos);

    const auto block = run("measure --feature block --L 1 --input " + path.string());
    REQUIRE(block.exit_code == 0);
    CHECK(block.stdout_text.find("\"feature\": \"block(1)\"") != std::string::npos);

    const auto unknown = run("measure --feature walk --input " + path.string());
    CHECK(unknown.exit_code == 3);

    const auto missing = run("measure --feature adjacency --input /nonexistent.txt");
    CHECK(missing.exit_code == 3);
    std::filesystem::remove_all(dir);
}

TEST_CASE("digits subcommand emits the digit file format") {
    const auto r = run("digits --source pi --base 10 --count 20");
    REQUIRE(r.exit_code == 0);
    CHECK(r.stdout_text.find("# base=10") != std::string::npos);
    CHECK(r.stdout_text.find("31415926535897932384") != std::string::npos);

    const auto bin = run("digits --source pi --base 10 --count 6 --binarize");
    REQUIRE(bin.exit_code == 0);
    CHECK(bin.stdout_text.find("# base=2") != std::string::npos);
    CHECK(bin.stdout_text.find("000011") != std::string::npos);

    const auto bad = run("digits --source nope --count 5");
    CHECK(bad.exit_code == 3);
}

TEST_CASE("experiment subcommand writes artifacts and maps exit codes") {
    const auto dir = std::filesystem::temp_directory_path() / "em_cli_exp";
    std::filesystem::remove_all(dir);
    const auto r = run("experiment zk-growth --t-max 15 --out " + (dir / "a").string() + " --svg");
    REQUIRE(r.exit_code == 0);
    CHECK(std::filesystem::exists(dir / "a" / "zk-growth.csv"));
    CHECK(std::filesystem::exists(dir / "a" / "zk-growth.json"));
    CHECK(std::filesystem::exists(dir / "a" / "zk-growth.svg"));
    CHECK(r.stdout_text.find("\"experiment\": \"zk-growth\"") != std::string::npos);

    // missing omega file is an input error with an actionable message
    const auto omega = run("experiment omega-graph --n 11 --out " + (dir / "b").string());
    CHECK(omega.exit_code == 3);

    const auto standin = run("experiment omega-graph --n 11 --allow-prng-standin --seed 4 --out " +
                             (dir / "c").string());
    REQUIRE(standin.exit_code == 0);
    CHECK(standin.stdout_text.find("prng-standin") != std::string::npos);

    const auto bad = run("experiment zk-growth --t-max 3 --out " + (dir / "d").string());
    CHECK(bad.exit_code == 3);

    const auto unknown_flag = run("generate zk --definitely-not-a-flag 1");
    CHECK(unknown_flag.exit_code == 3);
    std::filesystem::remove_all(dir);
}
