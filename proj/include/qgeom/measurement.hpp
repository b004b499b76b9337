#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "qgeom/complex_matrix.hpp"
#include "qgeom/qubit.hpp"

namespace qgeom {

// Fixed generator for all sampling: mt19937_64 with the draw mapped to
// [0,1) by taking the top 53 bits. Outcome sequences are test fixtures,
// so the mapping must not depend on library distribution internals.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 engine_;
};

class Projector {
public:
    explicit Projector(int target) : target_(target), matrix_(2, 2) {
        if (target != 0 && target != 1)
            throw std::domain_error("Projector: basis index must be 0 or 1");
        matrix_.at(static_cast<std::size_t>(target), static_cast<std::size_t>(target)) = 1.0;
    }

    int target() const { return target_; }
    const ComplexMatrix& matrix() const { return matrix_; }

private:
    int target_;
    ComplexMatrix matrix_;
};

inline Projector projector(int target) { return Projector(target); }

// Unnormalized image of the projector; its squared norm is the outcome
// probability, so no renormalization here.
struct ProjectedVector {
    cplx v0;
    cplx v1;

    double norm_sq() const { return std::norm(v0) + std::norm(v1); }
};

inline ProjectedVector project(const Projector& p, const Qubit& q) {
    const ComplexMatrix& m = p.matrix();
    return ProjectedVector{m.at(0, 0) * q.a() + m.at(0, 1) * q.b(),
                           m.at(1, 0) * q.a() + m.at(1, 1) * q.b()};
}

inline ProjectedVector project(const Projector& p, const ProjectedVector& v) {
    const ComplexMatrix& m = p.matrix();
    return ProjectedVector{m.at(0, 0) * v.v0 + m.at(0, 1) * v.v1,
                           m.at(1, 0) * v.v0 + m.at(1, 1) * v.v1};
}

struct MeasurementOutcome {
    int outcome;         // 0 or 1
    double probability;  // Born probability of the observed outcome
    Qubit post_state;    // collapsed basis state
};

inline MeasurementOutcome standard_measure(const Qubit& q, std::uint64_t rng_seed) {
    const double p0 = std::norm(q.a());
    // Forced outcomes skip sampling; the generator is not consumed.
    if (p0 == 1.0)
        return MeasurementOutcome{0, 1.0, Qubit::zero()};
    if (p0 == 0.0)
        return MeasurementOutcome{1, 1.0, Qubit::one()};
    SeededRng rng(rng_seed);
    const int outcome = rng.uniform01() < p0 ? 0 : 1;
    return outcome == 0 ? MeasurementOutcome{0, p0, Qubit::zero()}
                        : MeasurementOutcome{1, 1.0 - p0, Qubit::one()};
}

// e^{i phi} diag(alpha, alpha*), the diagonal unitary gates available on
// the 2-points lattice.
class DiagonalUnitary {
public:
    DiagonalUnitary(double phi, cplx alpha) : phi_(phi), alpha_(alpha) {
        if (std::abs(std::abs(alpha) - 1.0) > 1e-12)
            throw std::domain_error("DiagonalUnitary: alpha must be unimodular");
    }

    double phi() const { return phi_; }
    cplx alpha() const { return alpha_; }

    ComplexMatrix realized() const {
        const cplx phase = std::polar(1.0, phi_);
        return ComplexMatrix(2, 2, {phase * alpha_, 0.0, 0.0, phase * std::conj(alpha_)});
    }

    DiagonalUnitary inverse() const { return DiagonalUnitary(-phi_, std::conj(alpha_)); }

private:
    double phi_;
    cplx alpha_;
};

/// Reversible measurement: a' = e^{i phi} alpha a, b' = e^{i phi} alpha* b.
inline Qubit basic_measure(const Qubit& q, const DiagonalUnitary& u) {
    const cplx phase = std::polar(1.0, u.phi());
    const cplx a = phase * u.alpha() * q.a();
    const cplx b = phase * std::conj(u.alpha()) * q.b();
    // The normalization divisor must already be 1 for a unitary gate;
    // assert rather than assume so a non-unitary extension fails loudly.
    const double total = std::norm(a) + std::norm(b);
    if (std::abs(total - 1.0) > 1e-12)
        throw std::logic_error("basic_measure: total probability drifted from 1");
    return Qubit(a, b);
}

/// e^{i phi}(alpha P0 + alpha* P1); equals the realized diagonal matrix.
inline ComplexMatrix superposed_projector_form(const DiagonalUnitary& u) {
    const cplx phase = std::polar(1.0, u.phi());
    const ComplexMatrix p0 = projector(0).matrix();
    const ComplexMatrix p1 = projector(1).matrix();
    return scalar_mul(phase, mat_add(scalar_mul(u.alpha(), p0),
                                     scalar_mul(std::conj(u.alpha()), p1)));
}

/// Inverse of basic_measure: applies the dagger of the realized matrix.
inline Qubit recover(const Qubit& q_prime, const DiagonalUnitary& u) {
    return basic_measure(q_prime, u.inverse());
}

inline Qubit apply_matrix(const ComplexMatrix& m, const Qubit& q) {
    if (m.rows() != 2 || m.cols() != 2)
        throw std::invalid_argument("apply_matrix: expected a 2x2 matrix");
    return Qubit(m.at(0, 0) * q.a() + m.at(0, 1) * q.b(),
                 m.at(1, 0) * q.a() + m.at(1, 1) * q.b());
}

/// Basic measurement conjugated into another basis: applies B U B^dag.
inline Qubit basic_measure_in_basis(const Qubit& q, const DiagonalUnitary& u,
                                    const ComplexMatrix& basis_change) {
    if (!is_unitary(basis_change, 1e-12))
        throw std::domain_error("basic_measure_in_basis: basis change must be unitary");
    const ComplexMatrix conjugated =
        mat_mul(basis_change, mat_mul(u.realized(), dagger(basis_change)));
    return apply_matrix(conjugated, q);
}

/// Round-trip inverse of basic_measure_in_basis: applies B U^dag B^dag.
inline Qubit recover_in_basis(const Qubit& q_prime, const DiagonalUnitary& u,
                              const ComplexMatrix& basis_change) {
    return basic_measure_in_basis(q_prime, u.inverse(), basis_change);
}

}  // namespace qgeom
