// End-to-end tests against the built binary.  The harness exports the
// binary path in GROTHLAB_CLI.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

std::string cli_path() {
    const char* path = std::getenv("GROTHLAB_CLI");
    REQUIRE_MESSAGE(path != nullptr, "GROTHLAB_CLI must point at the binary");
    return path;
}

RunResult run_raw(const std::string& command_line) {
    const std::string command = command_line + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

RunResult run(const std::string& args, const std::string& stdin_data = "") {
    std::string command = cli_path() + " " + args;
    if (!stdin_data.empty()) {
        command = "printf '%s' '" + stdin_data + "' | " + command;
    }
    return run_raw(command);
}

}  // namespace

TEST_CASE("poly prints the known 2413 values") {
    const RunResult g = run("poly 2413 --grothendieck");
    CHECK(g.exit_code == 0);
    CHECK(g.output == "x1*x2^2 + x1^2*x2 - x1^2*x2^2\n");

    const RunResult s = run("poly 2413 --schubert");
    CHECK(s.exit_code == 0);
    CHECK(s.output == "x1*x2^2 + x1^2*x2\n");

    const RunResult one = run("poly 1 --schubert");
    CHECK(one.exit_code == 0);
    CHECK(one.output == "1\n");
}

TEST_CASE("poly engines agree") {
    const RunResult a = run("poly 2413 --grothendieck --engine pipedream");
    const RunResult b = run("poly 2413 --grothendieck --engine recursion");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("poly usage errors exit 2") {
    CHECK(run("poly 2413").exit_code == 2);  // needs exactly one family flag
    CHECK(run("poly 2413 --schubert --grothendieck").exit_code == 2);
    CHECK(run("poly 22 --schubert").exit_code == 2);  // malformed permutation
    CHECK(run("poly 2413 --schubert --engine hmm").exit_code == 2);
}

TEST_CASE("support formula matches enumeration for a fireworks permutation") {
    const RunResult direct = run("support 31542");
    const RunResult formula = run("support 31542 --formula");
    CHECK(direct.exit_code == 0);
    CHECK(formula.exit_code == 0);
    CHECK(direct.output == formula.output);

    const RunResult trivial = run("support 1");
    CHECK(trivial.exit_code == 0);
    CHECK(trivial.output == "(0)\n");
}

TEST_CASE("support --formula rejects non-fireworks input with exit 3") {
    CHECK(run("support 2413 --formula").exit_code == 3);
    CHECK(run("support 2413").exit_code == 0);  // plain enumeration still fine
}

TEST_CASE("pipedreams reports the 2413 counts") {
    const RunResult counts = run("pipedreams 2413 --count");
    CHECK(counts.exit_code == 0);
    CHECK(counts.output == "3 pipe dreams (2 reduced)\n");

    const RunResult reduced = run("pipedreams 2413 --reduced --count");
    CHECK(reduced.exit_code == 0);
    CHECK(reduced.output == "2 pipe dreams (2 reduced)\n");

    const RunResult json = run("pipedreams 2413 --count --json");
    CHECK(json.exit_code == 0);
    CHECK(json.output ==
          R"({"count":3,"perm":"2413","reduced_count":2})"
          "\n");
}

TEST_CASE("raise runs end to end") {
    const std::string pd = R"({"n":3,"crosses":[[2,1]]})";
    const RunResult ok = run("raise --perm 132 --row 1 --validate", pd);
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("\"final_weight\":[1,0,0]") != std::string::npos);

    // row already at its maximum weight
    CHECK(run("raise --perm 132 --row 3", pd).exit_code == 3);
    // malformed JSON
    CHECK(run("raise --perm 132 --row 1", "zorp").exit_code == 2);
    // pipe dream traces to a different permutation
    CHECK(run("raise --perm 213 --row 1", pd).exit_code == 3);
}

TEST_CASE("raise reads from a file and respects the row cap") {
    // the nonreduced 3162754 pipe dream of weight (3,2,2,2,1,1,0)
    const std::string figure =
        R"({"n":7,"crosses":[[1,1],[1,2],[1,5],[2,2],[2,3],[3,3],[3,4],[4,2],[4,3],[5,1],[6,1]]})";
    const std::string path = "/tmp/grothlab_cli_figure.json";
    std::FILE* f = std::fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs(figure.c_str(), f);
    std::fclose(f);

    // row 7 is already at its maximum weight 0
    CHECK(run("raise --perm 3162754 --row 7 --file " + path).exit_code == 3);

    const RunResult ok = run("raise --perm 3162754 --row 1 --file " + path);
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("\"initial_weight\":[3,2,2,2,1,1,0]") != std::string::npos);
    CHECK(ok.output.find("\"final_weight\":[4,") != std::string::npos);

    CHECK(run("raise --perm 3162754 --row 1 --file /no/such/file").exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("verify sweeps succeed on small sizes") {
    const RunResult oracle = run("verify oracle-equiv --n 4");
    CHECK(oracle.exit_code == 0);
    CHECK(oracle.output == "checked 24 instances, 0 failures\n");

    const RunResult mconvex = run("verify m-convex --n 1");
    CHECK(mconvex.exit_code == 0);
    CHECK(mconvex.output == "checked 1 instances, 0 failures\n");

    const RunResult support = run("verify main-support --n 4 --filter fireworks --jobs 2");
    CHECK(support.exit_code == 0);
    CHECK(support.output == "checked 15 instances, 0 failures\n");

    const RunResult raise = run("verify raise-sweep --n 4");
    CHECK(raise.exit_code == 0);
    CHECK(raise.output == "checked 15 instances, 0 failures\n");

    CHECK(run("verify no-such-claim --n 3").exit_code == 2);
}

TEST_CASE("verify JSON output is byte-identical across runs") {
    const std::string args = "verify psp-formula --n 3 --seed 7 --json";
    const RunResult first = run(args);
    const RunResult second = run(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(first.output.find("\"failures\":[]") != std::string::npos);

    // parallel schedule must not change the bytes either
    const RunResult serial = run("verify schub-support --n 4 --json --jobs 1");
    const RunResult parallel = run("verify schub-support --n 4 --json --jobs 4");
    CHECK(serial.exit_code == 0);
    CHECK(serial.output == parallel.output);
}

TEST_CASE("verify counts the psp instances deterministically") {
    // 200 seeded diagrams plus the 121 nested pairs with equal max in [5]
    const RunResult r = run("verify psp-formula --n 5 --seed 42");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "checked 321 instances, 0 failures\n");
}

TEST_CASE("GROTHLAB_THREADS overrides the worker count") {
    const RunResult ok =
        run_raw("env GROTHLAB_THREADS=2 " + cli_path() + " verify oracle-equiv --n 4");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == "checked 24 instances, 0 failures\n");

    const RunResult bad =
        run_raw("env GROTHLAB_THREADS=banana " + cli_path() + " verify oracle-equiv --n 3");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("fail-fast sweeps still succeed when nothing fails") {
    const RunResult r = run("verify layered --n 4 --fail-fast");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "checked 15 instances, 0 failures\n");
}
