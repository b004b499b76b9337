#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "qgeom/measurement.hpp"
#include "qgeom/qubit.hpp"
#include "test_helpers.hpp"

using namespace qgeom;
using std::numbers::pi;

TEST_CASE("new_qubit normalization") {
    Qubit q0 = new_qubit(1.0, 0.0);
    CHECK(q0.a() == cplx{1.0, 0.0});
    CHECK(q0.b() == cplx{0.0, 0.0});

    Qubit scaled = new_qubit(2.0, 0.0);
    CHECK(scaled.entrywise_equal(Qubit::zero(), 1e-15));

    Qubit plus = new_qubit(1.0, 1.0);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(plus.a() - cplx{s, 0.0}) < 1e-15);
    CHECK(std::abs(plus.b() - cplx{s, 0.0}) < 1e-15);

    CHECK_THROWS_AS(new_qubit(0.0, 0.0), std::domain_error);
}

TEST_CASE("bloch_vector poles and equator") {
    BlochVector north = bloch_vector(Qubit::zero());
    CHECK(north.x == 0.0);
    CHECK(north.y == 0.0);
    CHECK(north.z == 1.0);

    BlochVector south = bloch_vector(Qubit::one());
    CHECK(south.z == -1.0);

    const double s = 1.0 / std::sqrt(2.0);
    BlochVector v = bloch_vector(Qubit(s, cplx{0.0, s}));
    CHECK(std::abs(v.x) < 1e-15);
    CHECK(std::abs(v.y - 1.0) < 1e-15);
    CHECK(std::abs(v.z) < 1e-15);
}

TEST_CASE("from_bloch") {
    CHECK(from_bloch(0.0, 1.0).entrywise_equal(Qubit::zero(), 1e-15));

    Qubit eq = from_bloch(pi / 2.0, 0.0);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(eq.a() - cplx{s, 0.0}) < 1e-15);
    CHECK(std::abs(eq.b() - cplx{s, 0.0}) < 1e-15);

    Qubit yplus = from_bloch(pi / 2.0, pi / 2.0);
    BlochVector v = bloch_vector(yplus);
    CHECK(std::abs(v.y - 1.0) < 1e-12);

    CHECK_THROWS_AS(from_bloch(-0.1, 0.0), std::domain_error);
    CHECK_THROWS_AS(from_bloch(0.5, 7.0), std::domain_error);
}

TEST_CASE("dual basis") {
    auto [plus, minus] = dual_basis();
    CHECK(std::abs(plus.inner(minus)) < 1e-15);
    BlochVector v = bloch_vector(plus);
    CHECK(std::abs(v.x - 1.0) < 1e-15);
    CHECK(std::abs(v.y) < 1e-15);
    CHECK(std::abs(v.z) < 1e-15);

    // Hadamard maps |+> back to |0>
    Qubit h_plus = apply_matrix(hadamard(), plus);
    CHECK(h_plus.entrywise_equal(Qubit::zero(), 1e-15));
}

TEST_CASE("bloch round trip up to global phase") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
        Qubit q = testutil::random_qubit(rng);
        BlochVector v = bloch_vector(q);
        CHECK(std::abs(v.norm() - 1.0) < 1e-12);

        double theta = std::acos(std::clamp(v.z, -1.0, 1.0));
        double phi = std::atan2(v.y, v.x);
        if (phi < 0.0) phi += 2.0 * pi;
        if (phi >= 2.0 * pi) phi = 0.0;
        Qubit back = from_bloch(theta, phi);
        CHECK(q.fidelity(back) == Catch::Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("bloch_vector phase invariance") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
    for (int t = 0; t < 100; ++t) {
        Qubit q = testutil::random_qubit(rng);
        const cplx phase = std::polar(1.0, angle(rng));
        Qubit rotated(phase * q.a(), phase * q.b());
        BlochVector u = bloch_vector(q);
        BlochVector w = bloch_vector(rotated);
        CHECK(std::abs(u.x - w.x) < 1e-12);
        CHECK(std::abs(u.y - w.y) < 1e-12);
        CHECK(std::abs(u.z - w.z) < 1e-12);
    }
}
