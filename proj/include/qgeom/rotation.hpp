#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qgeom/complex_matrix.hpp"
#include "qgeom/qubit.hpp"
#include "qgeom/su2_generators.hpp"

namespace qgeom {

// General 2x2 unitary e^{i phi} [[alpha, beta], [-beta*, alpha*]].
class UnitaryGate2 {
public:
    UnitaryGate2(double phi, cplx alpha, cplx beta)
        : phi_(phi), alpha_(alpha), beta_(beta) {
        if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-12)
            throw std::domain_error("UnitaryGate2: |alpha|^2 + |beta|^2 must be 1");
    }

    double phi() const { return phi_; }
    cplx alpha() const { return alpha_; }
    cplx beta() const { return beta_; }

    ComplexMatrix realized() const {
        const cplx phase = std::polar(1.0, phi_);
        return ComplexMatrix(2, 2,
                             {phase * alpha_, phase * beta_,
                              -phase * std::conj(beta_), phase * std::conj(alpha_)});
    }

private:
    double phi_;
    cplx alpha_;
    cplx beta_;
};

inline Qubit apply_unitary(const UnitaryGate2& g, const Qubit& q) {
    const cplx phase = std::polar(1.0, g.phi());
    return Qubit(phase * (g.alpha() * q.a() + g.beta() * q.b()),
                 phase * (-std::conj(g.beta()) * q.a() + std::conj(g.alpha()) * q.b()));
}

// Axis-angle form of a 2x2 unitary: M = e^{i phi}(cos(theta/2) I - i sin(theta/2) n.sigma).
struct RotationDecomposition {
    double phi;                   // global phase
    double theta;                 // rotation angle in [0, pi]
    std::array<double, 3> axis;   // unit rotation axis
};

inline ComplexMatrix reconstruct_unitary(const RotationDecomposition& r) {
    const cplx phase = std::polar(1.0, r.phi);
    const double c = std::cos(r.theta / 2.0);
    const double s = std::sin(r.theta / 2.0);
    const cplx mis{0.0, -s};
    ComplexMatrix m(2, 2);
    m.at(0, 0) = phase * (c + mis * r.axis[2]);
    m.at(0, 1) = phase * (mis * cplx{r.axis[0], -r.axis[1]});
    m.at(1, 0) = phase * (mis * cplx{r.axis[0], r.axis[1]});
    m.at(1, 1) = phase * (c - mis * r.axis[2]);
    return m;
}

// Canonical decomposition: phi = arg(det M)/2 shifted by pi if needed so
// cos(theta/2) >= 0; theta in [0, pi]; axis sign at theta = pi fixed by
// the first nonzero component; axis (0,0,1) by convention at theta = 0.
inline RotationDecomposition decompose_unitary(const ComplexMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2)
        throw std::invalid_argument("decompose_unitary: expected a 2x2 matrix");
    if (!is_unitary(m, 1e-10))
        throw std::domain_error("decompose_unitary: matrix is not unitary");

    const cplx det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    double phi = std::arg(det) / 2.0;
    cplx phase = std::polar(1.0, -phi);
    if ((phase * (m.at(0, 0) + m.at(1, 1))).real() < 0.0) {
        phi += std::numbers::pi;
        phase = -phase;
    }

    // V = e^{-i phi} M is in SU(2): V = cos(theta/2) I - i sin(theta/2) n.sigma
    const cplx v00 = phase * m.at(0, 0);
    const cplx v01 = phase * m.at(0, 1);
    const cplx v10 = phase * m.at(1, 0);
    const cplx v11 = phase * m.at(1, 1);

    const double c = std::clamp((v00 + v11).real() / 2.0, -1.0, 1.0);
    const double theta = 2.0 * std::acos(c);
    const double s = std::sin(theta / 2.0);

    std::array<double, 3> axis{0.0, 0.0, 1.0};
    if (s >= 1e-8) {
        // n_k = -Im tr(sigma_k V) / (2 sin(theta/2))
        axis[0] = -(v01 + v10).imag() / (2.0 * s);
        axis[1] = -(v01 - v10).real() / (2.0 * s);
        axis[2] = -(v00 - v11).imag() / (2.0 * s);
        const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
        for (double& a : axis) a /= norm;
        if (std::abs(theta - std::numbers::pi) < 1e-12) {
            // traceless case: flipping n negates V, so the phase absorbs -1;
            // pick the sign making the first nonzero axis component positive
            for (double a : axis) {
                if (a > 1e-12) break;
                if (a < -1e-12) {
                    for (double& x : axis) x = -x;
                    phi += std::numbers::pi;
                    break;
                }
            }
        }
    }

    RotationDecomposition r{phi, theta, axis};
    if (frobenius_distance(reconstruct_unitary(r), m) > 1e-10)
        throw std::logic_error("decompose_unitary: reconstruction residual too large");
    return r;
}

/// Rodrigues rotation of a Bloch vector by theta about the axis.
inline BlochVector rotate_bloch(const RotationDecomposition& r, const BlochVector& v) {
    const auto& n = r.axis;
    const double c = std::cos(r.theta);
    const double s = std::sin(r.theta);
    const double dot = n[0] * v.x + n[1] * v.y + n[2] * v.z;
    const double cx = n[1] * v.z - n[2] * v.y;
    const double cy = n[2] * v.x - n[0] * v.z;
    const double cz = n[0] * v.y - n[1] * v.x;
    return BlochVector{v.x * c + cx * s + n[0] * dot * (1.0 - c),
                       v.y * c + cy * s + n[1] * dot * (1.0 - c),
                       v.z * c + cz * s + n[2] * dot * (1.0 - c)};
}

}  // namespace qgeom
