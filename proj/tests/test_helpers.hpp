#pragma once

#include <random>

#include "qgeom/complex_matrix.hpp"
#include "qgeom/qubit.hpp"
#include "qgeom/rotation.hpp"

// Shared random sampling for property tests. The generators here are
// test fixtures only and stay independent of the library's sampling.
namespace testutil {

inline qgeom::cplx random_complex(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    return qgeom::cplx{gauss(rng), gauss(rng)};
}

inline qgeom::Qubit random_qubit(std::mt19937_64& rng) {
    qgeom::cplx a = random_complex(rng);
    qgeom::cplx b = random_complex(rng);
    while (std::norm(a) + std::norm(b) == 0.0) {
        a = random_complex(rng);
        b = random_complex(rng);
    }
    return qgeom::Qubit(a, b);
}

// Haar-like sample of e^{i phi} [[alpha, beta], [-beta*, alpha*]].
inline qgeom::UnitaryGate2 random_gate(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.141592653589793);
    qgeom::cplx a = random_complex(rng);
    qgeom::cplx b = random_complex(rng);
    double n = std::sqrt(std::norm(a) + std::norm(b));
    while (n == 0.0) {
        a = random_complex(rng);
        b = random_complex(rng);
        n = std::sqrt(std::norm(a) + std::norm(b));
    }
    return qgeom::UnitaryGate2(angle(rng), a / n, b / n);
}

inline qgeom::ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                                          std::size_t cols) {
    qgeom::ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_complex(rng);
    return m;
}

}  // namespace testutil
