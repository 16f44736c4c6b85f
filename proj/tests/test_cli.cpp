#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "divrank/cli.hpp"
#include "divrank/distance.hpp"
#include "divrank/io.hpp"

using namespace divrank;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Scratch directory holding the small fixture files, removed on exit.
struct Fixtures {
    fs::path dir;

    Fixtures() : dir(fs::temp_directory_path() / "divrank_cli_test") {
        fs::remove_all(dir);
        fs::create_directories(dir);
        write("c3.graph", "3\n0 1 1\n1 2 1\n0 2 1\n");
        write("c3.div", "1 1 1\n");
        write("c3.thr", "2 2 2\n");
        write("k2.graph", "2\n0 1 1\n");
        write("k2.div", "0 0\n");
        write("k2.thr", "1 1\n");
        write("k2_saturated.thr", "2 1\n");
        write("bad.graph", "2\n0 1\n");
        write("short.div", "1 1\n");
    }
    ~Fixtures() { fs::remove_all(dir); }

    void write(const std::string& name, const std::string& text) const {
        std::ofstream(dir / name) << text;
    }
    std::string operator()(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("documented invocations") {
    Fixtures f;
    auto r = run({"rank", f("c3.graph"), f("c3.div")});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "2\n");

    r = run({"verify-chain", f("c3.graph"), f("c3.thr")});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("dist_rec(G',x) = ts: 2 vs 2") != std::string::npos);
    CHECK(r.out.find("dist_nonhalt(G'',x'') = ts: 2 vs 2") != std::string::npos);
    CHECK(r.out.substr(r.out.size() - 3) == "OK\n");

    r = run({"halting", f("k2.graph"), f("k2.div")});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "halting\nstable: 0 0\n");
}

TEST_CASE("other commands") {
    Fixtures f;
    CHECK(run({"winnable", f("c3.graph"), f("c3.div")}).out == "winnable\n");
    CHECK(run({"recurrent", f("k2.graph"), f("k2.div")}).out == "not recurrent\n");
    CHECK(run({"dist-rec", f("k2.graph"), f("k2.div")}).out == "1\n");
    CHECK(run({"--witness", "dist-nonhalt", f("k2.graph"), f("k2.div")}).out == "1\nwitness: 1 0\n");
    CHECK(run({"tss", f("c3.graph"), f("c3.thr")}).out == "2\n0 1\n");
    CHECK(run({"--oracle", "rank", f("c3.graph"), f("c3.div")}).out == "2\noracle 2 OK\n");
    CHECK(run({"--format", "json", "rank", f("c3.graph"), f("c3.div")}).out == "{\"rank\":2}\n");

    auto trace = run({"trace", f("k2.graph"), f("k2.div")});
    CHECK(trace.code == cli::kExitOk);
    CHECK(trace.out.find("halting") != std::string::npos);

    auto sub = run({"subdivide", f("c3.graph"), f("c3.div")});
    CHECK(sub.code == cli::kExitOk);
    CHECK(sub.out.find("# vertices 6, edges 6") != std::string::npos);
}

TEST_CASE("exit codes") {
    Fixtures f;
    auto r = run({"bogus"});
    CHECK(r.code == cli::kExitInputError);
    CHECK(r.err.find("unknown command 'bogus'") != std::string::npos);

    CHECK(run({"rank", f("bad.graph"), f("c3.div")}).code == cli::kExitInputError);
    CHECK(run({"rank", f("c3.graph"), f("short.div")}).code == cli::kExitInputError);
    CHECK(run({"rank", f("missing.graph"), f("c3.div")}).code == cli::kExitInputError);
    CHECK(run({"rank", f("c3.graph")}).code == cli::kExitInputError);
    CHECK(run({"--format", "yaml", "rank", f("c3.graph"), f("c3.div")}).code == cli::kExitInputError);
    CHECK(run({"--max-n", "2", "rank", f("c3.graph"), f("c3.div")}).code == cli::kExitInputError);
    CHECK(run({"reduce", "rec-to-nonhalt", "--m", "1", "--verify", f("k2.graph"), f("k2.div")}).code ==
          cli::kExitInputError);
    CHECK(run({"--help"}).code == cli::kExitOk);

    auto failed = run({"verify-chain", f("k2.graph"), f("k2_saturated.thr")});
    CHECK(failed.code == cli::kExitVerificationFailed);
    CHECK(failed.out.substr(failed.out.size() - 5) == "FAIL\n");

    auto wide = run({"--max-n", "40", "rank", f("c3.graph"), f("c3.div")});
    CHECK(wide.code == cli::kExitOk);
    CHECK(wide.err.find("warning") != std::string::npos);
}

TEST_CASE("reduce JSON round-trips") {
    Fixtures f;
    auto r = run({"--format", "json", "reduce", "tss-to-rec", f("c3.graph"), f("c3.thr")});
    REQUIRE(r.code == cli::kExitOk);
    auto g = io::parse_graph(r.out);
    auto x = io::parse_divisor(r.out);
    CHECK(g.vertex_count() == 15);
    CHECK(dist_rec(g, x).value == 2);

    r = run({"--format", "json", "reduce", "tss-to-nonhalt", f("k2.graph"), f("k2.thr")});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(dist_nonhalt(io::parse_graph(r.out), io::parse_divisor(r.out)).value == 1);

    r = run({"--format", "json", "reduce", "rec-to-nonhalt", "--m", "2", f("k2.graph"), f("k2.div")});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(dist_nonhalt(io::parse_graph(r.out), io::parse_divisor(r.out)).value == 1);

    const std::string prefix = f("k2_reduced");
    r = run({"reduce", "--out", prefix, "tss-to-rec", f("k2.graph"), f("k2.thr")});
    REQUIRE(r.code == cli::kExitOk);
    auto g2 = io::read_graph_file(prefix + ".graph");
    auto x2 = io::read_divisor_file(prefix + ".div");
    CHECK(dist_rec(g2, x2).value == 1);
    CHECK(fs::exists(prefix + ".json"));
}

TEST_CASE("identical invocations give identical bytes") {
    Fixtures f;
    const std::vector<std::vector<std::string>> calls = {
        {"--witness", "dist-rec", f("c3.graph"), f("c3.div")},
        {"--format", "json", "verify-chain", f("c3.graph"), f("c3.thr")},
        {"--format", "json", "reduce", "tss-to-nonhalt", f("c3.graph"), f("c3.thr")},
        {"--seed", "7", "halting", f("c3.graph"), f("c3.div")},
        {"trace", f("c3.graph"), f("c3.div")},
    };
    for (const auto& call : calls) {
        auto a = run(call);
        auto b = run(call);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

#ifdef DIVRANK_CLI_PATH
TEST_CASE("installed binary runs") {
    Fixtures f;
    const std::string cmd = std::string(DIVRANK_CLI_PATH) + " rank " + f("c3.graph") + " " + f("c3.div") +
                            " > " + f("out.txt");
    REQUIRE(std::system(cmd.c_str()) == 0);
    std::ifstream in(f("out.txt"));
    std::string line;
    std::getline(in, line);
    CHECK(line == "2");
}
#endif
