// qgeom command-line frontend: qubit states, measurements, rotations and
// fuzzy-sphere verification with JSON on stdin/stdout for piping.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qgeom/fuzzy_sphere.hpp"
#include "qgeom/json_io.hpp"
#include "qgeom/measurement.hpp"
#include "qgeom/qubit.hpp"
#include "qgeom/rotation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

struct OutputOptions {
    bool compact = false;
    std::string out_path;
};

void emit(const qgeom::json& doc, const OutputOptions& opts) {
    const std::string text = opts.compact ? doc.dump() : doc.dump(2);
    if (!opts.out_path.empty()) {
        std::ofstream f(opts.out_path);
        if (!f) throw std::runtime_error("cannot open output file: " + opts.out_path);
        f << text << "\n";
    }
    std::cout << text << "\n";
}

qgeom::json read_stdin_json() {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    try {
        return qgeom::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON on stdin: ") + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"One-qubit states, reversible measurements and fuzzy-sphere geometry"};
    app.require_subcommand(1);

    OutputOptions out_opts;
    app.add_flag("--compact", out_opts.compact, "Single-line JSON output");
    app.add_option("--out", out_opts.out_path, "Also write the JSON document to this file");

    // state
    double a_re = 0.0, a_im = 0.0, b_re = 0.0, b_im = 0.0;
    CLI::App* state = app.add_subcommand("state", "Build a normalized qubit state");
    state->add_option("--a-re,--a", a_re, "Re amplitude of |0>");
    state->add_option("--a-im", a_im, "Im amplitude of |0>");
    state->add_option("--b-re,--b", b_re, "Re amplitude of |1>");
    state->add_option("--b-im", b_im, "Im amplitude of |1>");

    // measure
    std::uint64_t seed = 0;
    CLI::App* measure =
        app.add_subcommand("measure", "Standard projective measurement of the stdin state");
    measure->add_option("--seed", seed, "Deterministic RNG seed")->required();

    // basic / recover share the diagonal-unitary flags
    double phi = 0.0, alpha_re = 1.0, alpha_im = 0.0;
    CLI::App* basic =
        app.add_subcommand("basic", "Reversible basic measurement of the stdin state");
    CLI::App* rec = app.add_subcommand("recover", "Invert a basic measurement on the stdin state");
    for (CLI::App* sub : {basic, rec}) {
        sub->add_option("--phi", phi, "Global phase (radians)");
        sub->add_option("--alpha-re", alpha_re, "Re alpha");
        sub->add_option("--alpha-im", alpha_im, "Im alpha");
    }

    // rotate
    double rot_phi = 0.0, rot_theta = 0.0;
    std::vector<double> rot_axis{0.0, 0.0, 1.0};
    CLI::App* rotate =
        app.add_subcommand("rotate", "Apply an axis-angle rotation gate to the stdin state");
    rotate->add_option("--phi", rot_phi, "Global phase (radians)");
    rotate->add_option("--theta", rot_theta, "Rotation angle (radians)")->required();
    rotate->add_option("--axis", rot_axis, "Rotation axis x y z")->expected(3);

    // decompose
    double g_phi = 0.0, g_alpha_re = 1.0, g_alpha_im = 0.0, g_beta_re = 0.0, g_beta_im = 0.0;
    CLI::App* decompose =
        app.add_subcommand("decompose", "Axis-angle decomposition of a 2x2 unitary gate");
    decompose->add_option("--phi", g_phi, "Global phase (radians)");
    decompose->add_option("--alpha-re", g_alpha_re, "Re alpha");
    decompose->add_option("--alpha-im", g_alpha_im, "Im alpha");
    decompose->add_option("--beta-re", g_beta_re, "Re beta");
    decompose->add_option("--beta-im", g_beta_im, "Im beta");
    bool decompose_hadamard = false;
    decompose->add_flag("--hadamard", decompose_hadamard, "Decompose the Hadamard gate");

    // fuzzy
    std::size_t fuzzy_n = 2;
    std::string fuzzy_mode = "info";
    CLI::App* fuzzy = app.add_subcommand("fuzzy", "Fuzzy-sphere construction and verification");
    fuzzy->add_option("--n", fuzzy_n, "Cell count")->required();
    fuzzy->add_option("mode", fuzzy_mode, "info or verify")
        ->check(CLI::IsMember({"info", "verify"}));

    // register
    int qubits = 1;
    CLI::App* reg = app.add_subcommand("register", "Cell count of the sphere for an N-qubit register");
    reg->add_option("--qubits", qubits, "Qubit count")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsageError;
    }

    try {
        if (state->parsed()) {
            qgeom::Qubit q(qgeom::cplx{a_re, a_im}, qgeom::cplx{b_re, b_im});
            emit(qgeom::to_json(q), out_opts);
        } else if (measure->parsed()) {
            qgeom::Qubit q = qgeom::qubit_from_json(read_stdin_json());
            emit(qgeom::to_json(qgeom::standard_measure(q, seed)), out_opts);
        } else if (basic->parsed() || rec->parsed()) {
            qgeom::Qubit q = qgeom::qubit_from_json(read_stdin_json());
            qgeom::DiagonalUnitary u(phi, qgeom::cplx{alpha_re, alpha_im});
            qgeom::Qubit result =
                basic->parsed() ? qgeom::basic_measure(q, u) : qgeom::recover(q, u);
            emit(qgeom::to_json(result), out_opts);
        } else if (rotate->parsed()) {
            qgeom::Qubit q = qgeom::qubit_from_json(read_stdin_json());
            const double norm = std::sqrt(rot_axis[0] * rot_axis[0] +
                                          rot_axis[1] * rot_axis[1] +
                                          rot_axis[2] * rot_axis[2]);
            if (norm == 0.0) throw std::domain_error("rotation axis must be nonzero");
            qgeom::RotationDecomposition r{rot_phi, rot_theta,
                                           {rot_axis[0] / norm, rot_axis[1] / norm,
                                            rot_axis[2] / norm}};
            emit(qgeom::to_json(qgeom::apply_matrix(qgeom::reconstruct_unitary(r), q)), out_opts);
        } else if (decompose->parsed()) {
            qgeom::ComplexMatrix m =
                decompose_hadamard
                    ? qgeom::hadamard()
                    : qgeom::UnitaryGate2(g_phi, qgeom::cplx{g_alpha_re, g_alpha_im},
                                          qgeom::cplx{g_beta_re, g_beta_im})
                          .realized();
            emit(qgeom::to_json(qgeom::decompose_unitary(m)), out_opts);
        } else if (fuzzy->parsed()) {
            qgeom::FuzzySphere s = qgeom::fuzzy_sphere(fuzzy_n);
            if (fuzzy_mode == "info") {
                emit(qgeom::json{{"n", s.n}, {"k", s.k}, {"matrix_dim", s.n}}, out_opts);
            } else {
                qgeom::VerificationReport rep = qgeom::verify_sphere(s);
                emit(qgeom::to_json(rep), out_opts);
                if (rep.max_residual() > 1e-9) {
                    std::cerr << "fuzzy verify: residual above 1e-9\n";
                    return kExitDomainError;
                }
            }
        } else if (reg->parsed()) {
            emit(qgeom::json{{"n", qgeom::cells_for_register(qubits)}}, out_opts);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitOk;
}
