#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgeom/complex_matrix.hpp"
#include "qgeom/su2_generators.hpp"

namespace qgeom {

// Unit-radius fuzzy sphere with n cells: quantized coordinates
// X_i = k G_i with k = 1/sqrt(n^2 - 1), so sum X_i^2 = I and
// [X_i, X_j] = 2ik eps_ijk X_k.
struct FuzzySphere {
    std::size_t n;
    double k;
    ComplexMatrix x1;
    ComplexMatrix x2;
    ComplexMatrix x3;
};

inline FuzzySphere fuzzy_sphere(std::size_t n) {
    if (n < 2 || n > kMaxGeneratorDim)
        throw std::domain_error("fuzzy_sphere: cell count must be in [2, 4096]");
    GeneratorTriple g = su2_generators(n);
    const double nn = static_cast<double>(n);
    const double k = 1.0 / std::sqrt(nn * nn - 1.0);
    return FuzzySphere{n, k, scalar_mul(k, g.g1), scalar_mul(k, g.g2), scalar_mul(k, g.g3)};
}

/// Cell count of the fuzzy sphere matching an N-qubit register: 2^N.
inline std::size_t cells_for_register(int qubits) {
    if (qubits < 1 || qubits > 12)
        throw std::domain_error("cells_for_register: qubit count must be in [1, 12]");
    return std::size_t{1} << qubits;
}

// Residual names are a stable interface; order matters for the report.
struct VerificationReport {
    std::size_t n;
    double k;
    std::vector<std::pair<std::string, double>> residuals;

    double max_residual() const {
        double m = 0.0;
        for (const auto& [name, r] : residuals) m = std::max(m, r);
        return m;
    }
};

inline VerificationReport verify_sphere(const FuzzySphere& s) {
    VerificationReport rep{s.n, s.k, {}};
    const ComplexMatrix* x[3] = {&s.x1, &s.x2, &s.x3};

    for (int i = 0; i < 3; ++i)
        rep.residuals.emplace_back("hermiticity_x" + std::to_string(i + 1),
                                   frobenius_norm(mat_sub(*x[i], dagger(*x[i]))));

    ComplexMatrix casimir = mat_mul(s.x1, s.x1);
    casimir = mat_add(casimir, mat_mul(s.x2, s.x2));
    casimir = mat_add(casimir, mat_mul(s.x3, s.x3));
    rep.residuals.emplace_back(
        "casimir", frobenius_distance(casimir, ComplexMatrix::identity(s.n)));

    const cplx factor{0.0, 2.0 * s.k};
    const int pairs[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    const char* names[3] = {"commutator_12", "commutator_23", "commutator_31"};
    for (int p = 0; p < 3; ++p) {
        const ComplexMatrix lhs = commutator(*x[pairs[p][0]], *x[pairs[p][1]]);
        const ComplexMatrix rhs = scalar_mul(factor, *x[pairs[p][2]]);
        rep.residuals.emplace_back(names[p], frobenius_distance(lhs, rhs));
    }
    return rep;
}

// Membership test for the 2-points lattice (the diagonal 2x2 subalgebra).
struct LatticeClassification {
    bool is_diagonal;
    double off_diagonal_residual;
};

inline LatticeClassification classify_lattice(const ComplexMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2)
        throw std::invalid_argument("classify_lattice: expected a 2x2 matrix");
    const double res = std::sqrt(std::norm(m.at(0, 1)) + std::norm(m.at(1, 0)));
    return LatticeClassification{res <= 1e-12, res};
}

inline std::vector<std::pair<std::size_t, double>>
classical_limit_profile(const std::vector<std::size_t>& n_values) {
    std::vector<std::pair<std::size_t, double>> out;
    out.reserve(n_values.size());
    for (std::size_t n : n_values) {
        if (n < 2)
            throw std::domain_error("classical_limit_profile: cell count must be >= 2");
        const double nn = static_cast<double>(n);
        out.emplace_back(n, 1.0 / std::sqrt(nn * nn - 1.0));
    }
    return out;
}

}  // namespace qgeom
