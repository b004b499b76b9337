#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "qgeom/json_io.hpp"

namespace {

struct CliResult {
    int exit_code;
    std::string output;
};

// Runs the CLI through the shell; stdin_doc, when nonempty, is piped in.
CliResult run_cli(const std::string& args, const std::string& stdin_doc = "") {
    std::string cmd;
    if (!stdin_doc.empty()) cmd += "printf '%s' '" + stdin_doc + "' | ";
    cmd += std::string(QGEOM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return CliResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("state command emits normalized qubit JSON") {
    CliResult r = run_cli("state --a 0.6 --b 0.8");
    REQUIRE(r.exit_code == 0);
    qgeom::json j = qgeom::json::parse(r.output);
    CHECK(j.at("a").at("re").get<double>() == 0.6);
    CHECK(j.at("b").at("re").get<double>() == 0.8);
    CHECK(j.at("a").at("im").get<double>() == 0.0);

    // unnormalized input is normalized
    CliResult big = run_cli("--compact state --a 3 --b 4");
    qgeom::json jb = qgeom::json::parse(big.output);
    CHECK(jb.at("a").at("re").get<double>() == Catch::Approx(0.6).margin(1e-15));
}

TEST_CASE("measure is deterministic under a fixed seed") {
    const std::string state = run_cli("--compact state --a 0.5 --b 0.8660254037844386").output;
    CliResult first = run_cli("--compact measure --seed 42", state);
    CliResult second = run_cli("--compact measure --seed 42", state);
    REQUIRE(first.exit_code == 0);
    CHECK(first.output == second.output);

    qgeom::json j = qgeom::json::parse(first.output);
    CHECK((j.at("outcome") == 0 || j.at("outcome") == 1));

    // seed is mandatory
    CHECK(run_cli("measure", state).exit_code == 2);
}

TEST_CASE("state | basic | recover round trip") {
    const std::string gate = "--phi 0.7 --alpha-re 0.36235775447667357 --alpha-im 0.9320390859672263";
    const std::string state = run_cli("--compact state --a 0.6 --a-im 0.1 --b 0.75").output;
    const std::string after = run_cli("--compact basic " + gate, state).output;
    CliResult back = run_cli("--compact recover " + gate, after);
    REQUIRE(back.exit_code == 0);

    qgeom::Qubit original = qgeom::qubit_from_json(qgeom::json::parse(state));
    qgeom::Qubit recovered = qgeom::qubit_from_json(qgeom::json::parse(back.output));
    CHECK(recovered.entrywise_equal(original, 1e-12));
}

TEST_CASE("rotate and decompose commands") {
    const std::string state = run_cli("--compact state --a 1").output;
    CliResult rotated = run_cli("--compact rotate --theta 3.141592653589793 --axis 1 0 1", state);
    REQUIRE(rotated.exit_code == 0);
    // pi rotation about (1,0,1)/sqrt(2) is Hadamard up to phase: |0> -> |+>
    qgeom::Qubit q = qgeom::qubit_from_json(qgeom::json::parse(rotated.output));
    CHECK(std::abs(std::norm(q.a()) - 0.5) < 1e-12);
    CHECK(std::abs(std::norm(q.b()) - 0.5) < 1e-12);

    CliResult dec = run_cli("--compact decompose --hadamard");
    REQUIRE(dec.exit_code == 0);
    qgeom::json j = qgeom::json::parse(dec.output);
    CHECK(j.at("phi").get<double>() == Catch::Approx(1.5707963267948966).margin(1e-12));
    CHECK(j.at("theta").get<double>() == Catch::Approx(3.141592653589793).margin(1e-12));
    CHECK(j.at("axis")[0].get<double>() == Catch::Approx(1.0 / std::sqrt(2.0)).margin(1e-12));

    CliResult diag = run_cli("--compact decompose --alpha-re 0.7071067811865476 "
                             "--alpha-im -0.7071067811865476");
    qgeom::json jd = qgeom::json::parse(diag.output);
    CHECK(std::abs(jd.at("axis")[0].get<double>()) < 1e-12);
    CHECK(std::abs(std::abs(jd.at("axis")[2].get<double>()) - 1.0) < 1e-12);
}

TEST_CASE("fuzzy and register commands") {
    CliResult info = run_cli("--compact fuzzy --n 2 info");
    REQUIRE(info.exit_code == 0);
    qgeom::json j = qgeom::json::parse(info.output);
    CHECK(j.at("k").get<double>() == Catch::Approx(0.5773502691896258).margin(1e-16));

    CliResult verify = run_cli("--compact fuzzy --n 64 verify");
    CHECK(verify.exit_code == 0);
    qgeom::json jv = qgeom::json::parse(verify.output);
    CHECK(jv.at("residuals").size() == 7);

    CliResult reg = run_cli("--compact register --qubits 3");
    CHECK(qgeom::json::parse(reg.output).at("n") == 8);

    CHECK(run_cli("fuzzy --n 1 info").exit_code == 1);
    CHECK(run_cli("register --qubits 13").exit_code == 1);
}

TEST_CASE("error exit codes") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("state --bogus-flag 1").exit_code == 2);
    CHECK(run_cli("basic --phi 0 --alpha-re 1", "{not json").exit_code == 1);
    CHECK(run_cli("basic --phi 0 --alpha-re 0.5 --alpha-im 0",
                  run_cli("--compact state --a 1").output)
              .exit_code == 1);
    // zero state is a domain error
    CHECK(run_cli("state --a 0 --b 0").exit_code == 1);
}
