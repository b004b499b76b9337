#pragma once

#include "qgeom/complex_matrix.hpp"

namespace qgeom {

inline constexpr std::size_t kMaxGeneratorDim = 4096;

// Pauli-normalized SU(2) generators G_i = 2 J_i of the n-dimensional
// irreducible representation. For n = 2 these are the Pauli matrices;
// eigenvalues of G3 are (n-1), (n-3), ..., -(n-1).
struct GeneratorTriple {
    std::size_t n;
    ComplexMatrix g1;
    ComplexMatrix g2;
    ComplexMatrix g3;
};

inline GeneratorTriple su2_generators(std::size_t n) {
    if (n < 2)
        throw std::domain_error("su2_generators: dimension must be >= 2");
    if (n > kMaxGeneratorDim)
        throw std::length_error("su2_generators: dimension exceeds 4096");

    const double j = (static_cast<double>(n) - 1.0) / 2.0;

    // Rows indexed by m = j, j-1, ..., -j; J+ moves m -> m+1 (one row up).
    ComplexMatrix jplus(n, n);
    for (std::size_t r = 1; r < n; ++r) {
        const double m = j - static_cast<double>(r);
        jplus.at(r - 1, r) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    }
    ComplexMatrix jminus = dagger(jplus);

    ComplexMatrix g1(n, n);
    ComplexMatrix g2(n, n);
    ComplexMatrix g3(n, n);
    const cplx minus_i{0.0, -1.0};
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            // G1 = J+ + J-, G2 = -i (J+ - J-), both twice the spin matrices
            g1.at(r, c) = jplus.at(r, c) + jminus.at(r, c);
            g2.at(r, c) = minus_i * (jplus.at(r, c) - jminus.at(r, c));
        }
    for (std::size_t r = 0; r < n; ++r)
        g3.at(r, r) = 2.0 * (j - static_cast<double>(r));

    return GeneratorTriple{n, std::move(g1), std::move(g2), std::move(g3)};
}

inline ComplexMatrix pauli(int i) {
    switch (i) {
        case 0: return ComplexMatrix::identity(2);
        case 1: return ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0});
        case 2: return ComplexMatrix(2, 2, {0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0});
        case 3: return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0});
        default: throw std::domain_error("pauli: index must be 0..3");
    }
}

}  // namespace qgeom
