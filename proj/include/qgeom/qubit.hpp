#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "qgeom/complex_matrix.hpp"

namespace qgeom {

struct BlochVector {
    double x;
    double y;
    double z;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

// Normalized one-qubit state a|0> + b|1>.
class Qubit {
public:
    Qubit(cplx a, cplx b) {
        const double n2 = std::norm(a) + std::norm(b);
        if (n2 <= 0.0 || !std::isfinite(n2))
            throw std::domain_error("Qubit: amplitudes must form a nonzero finite vector");
        const double inv = 1.0 / std::sqrt(n2);
        a_ = a * inv;
        b_ = b * inv;
    }

    cplx a() const { return a_; }
    cplx b() const { return b_; }

    static Qubit zero() { return Qubit(1.0, 0.0); }
    static Qubit one() { return Qubit(0.0, 1.0); }

    /// <this|other>
    cplx inner(const Qubit& other) const {
        return std::conj(a_) * other.a_ + std::conj(b_) * other.b_;
    }

    /// |<this|other>|, 1 for physically equal states (global phase ignored).
    double fidelity(const Qubit& other) const { return std::abs(inner(other)); }

    bool entrywise_equal(const Qubit& other, double tol) const {
        return std::abs(a_ - other.a_) <= tol && std::abs(b_ - other.b_) <= tol;
    }

private:
    cplx a_;
    cplx b_;
};

inline Qubit new_qubit(cplx a, cplx b) { return Qubit(a, b); }

inline BlochVector bloch_vector(const Qubit& q) {
    const cplx ab = std::conj(q.a()) * q.b();
    return BlochVector{2.0 * ab.real(), 2.0 * ab.imag(),
                       std::norm(q.a()) - std::norm(q.b())};
}

// Half-angle convention: a = cos(theta/2), b = e^{i phi} sin(theta/2).
inline Qubit from_bloch(double theta, double phi) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
        throw std::domain_error("from_bloch: polar angle must be in [0, pi]");
    if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi))
        throw std::domain_error("from_bloch: azimuth must be in [0, 2*pi)");
    const cplx a = std::cos(theta / 2.0);
    const cplx b = std::polar(std::sin(theta / 2.0), phi);
    if (std::norm(a) + std::norm(b) == 0.0)
        throw std::domain_error("from_bloch: degenerate angles");
    return Qubit(a, b);
}

/// The pair |+>, |-> = (|0> +- |1>)/sqrt(2).
inline std::pair<Qubit, Qubit> dual_basis() {
    const double s = 1.0 / std::sqrt(2.0);
    return {Qubit(s, s), Qubit(s, -s)};
}

inline ComplexMatrix hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return ComplexMatrix(2, 2, {s, s, s, -s});
}

}  // namespace qgeom
