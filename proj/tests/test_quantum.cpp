#include "mdbell/quantum.hpp"

#include <doctest/doctest.h>

#include <cmath>
#include <random>

using namespace mdbell;

namespace {

constexpr double kPi = 3.14159265358979323846;

MeasurementSettings in_plane_settings(const std::array<double, 6>& angles) {
    MeasurementSettings s;
    s.a = {in_plane_direction(angles[0]), in_plane_direction(angles[1])};
    s.b = {in_plane_direction(angles[2]), in_plane_direction(angles[3])};
    s.c = {in_plane_direction(angles[4]), in_plane_direction(angles[5])};
    return s;
}

Vec3 random_unit(std::mt19937& rng) {
    std::normal_distribution<double> gauss;
    while (true) {
        const Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
        const double n = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
        if (n > 1e-3)
            return {v.x / n, v.y / n, v.z / n};
    }
}

MeasurementSettings random_settings(std::mt19937& rng) {
    MeasurementSettings s;
    s.a = {random_unit(rng), random_unit(rng)};
    s.b = {random_unit(rng), random_unit(rng)};
    s.c = {random_unit(rng), random_unit(rng)};
    return s;
}

} // namespace

TEST_CASE("in-plane directions are unit vectors at the requested angle") {
    const Vec3 e0 = in_plane_direction(0);
    CHECK(e0.x == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(e0.y == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(e0.z == 0.0);
    const Vec3 q = in_plane_direction(kPi / 2);
    CHECK(q.x == doctest::Approx(0.0).scale(1));
    CHECK(q.y == doctest::Approx(1.0).epsilon(1e-15));
    for (double t : {0.1, 1.0, 2.5, -0.7}) {
        const Vec3 v = in_plane_direction(t);
        CHECK(v.x * v.x + v.y * v.y + v.z * v.z == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("correlators reject directions that are not unit length") {
    MeasurementSettings s = in_plane_settings({0, 0, 0, 0, 0, 0});
    s.b[1] = Vec3{0.5, 0.5, 0};
    CHECK_THROWS_AS(ghz_correlator(GhzState::standard(), s, Context::full(0, 1, 0)), Error);
    CHECK_THROWS_AS(evaluate_quantum(InequalityKind::Mermin, s), Error);
}

TEST_CASE("in-plane GHZ correlators follow the angle-sum cosine law") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::array<double, 6> t = {angle(rng), angle(rng), angle(rng),
                                         angle(rng), angle(rng), angle(rng)};
        const MeasurementSettings s = in_plane_settings(t);
        const GhzState ghz = GhzState::standard();
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int z = 0; z < 2; ++z) {
                    const double expected = std::cos(t[x] + t[2 + y] + t[4 + z]);
                    const double got = ghz_correlator(ghz, s, Context::full(x, y, z));
                    CHECK(got == doctest::Approx(expected).epsilon(1e-12).scale(1));
                }
        // A pair of in-plane observables has zero GHZ expectation.
        CHECK(ghz_correlator(ghz, s, Context::pair_xy(0, 1)) ==
              doctest::Approx(0.0).scale(1));
    }
}

TEST_CASE("pair correlators with both z observables equal one") {
    MeasurementSettings s;
    const Vec3 zhat{0, 0, 1};
    s.a = {zhat, zhat};
    s.b = {zhat, zhat};
    s.c = {zhat, zhat};
    const GhzState ghz = GhzState::standard();
    CHECK(ghz_correlator(ghz, s, Context::pair_xy(0, 0)) == doctest::Approx(1.0));
    CHECK(ghz_correlator(ghz, s, Context::pair_yz(1, 0)) == doctest::Approx(1.0));
    CHECK(ghz_correlator(ghz, s, Context::pair_xz(1, 1)) == doctest::Approx(1.0));
    // The full three-z correlator vanishes: the two GHZ branches cancel.
    CHECK(ghz_correlator(ghz, s, Context::full(0, 0, 0)) == doctest::Approx(0.0).scale(1));
}

TEST_CASE("random settings never beat the quantum maxima") {
    std::mt19937 rng(20260816);
    const double mermin_cap = 4.0;
    const double svet_cap = 4.0 * std::sqrt(2.0);
    const double ns2_cap = 1.0 + 2.0 * std::sqrt(2.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const MeasurementSettings s = random_settings(rng);
        CHECK(std::abs(evaluate_quantum(InequalityKind::Mermin, s)) <= mermin_cap + 1e-9);
        CHECK(std::abs(evaluate_quantum(InequalityKind::Svetlichny, s)) <= svet_cap + 1e-9);
        CHECK(std::abs(evaluate_quantum(InequalityKind::NS2_99, s)) <= ns2_cap + 1e-9);
    }
}

TEST_CASE("optimization reaches the GHZ values") {
    const QuantumOptimum mermin = optimize_settings(InequalityKind::Mermin);
    CHECK(mermin.s == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(evaluate_quantum(InequalityKind::Mermin, mermin.settings) ==
          doctest::Approx(mermin.s).epsilon(1e-12));

    const QuantumOptimum svet = optimize_settings(InequalityKind::Svetlichny);
    CHECK(svet.s == doctest::Approx(4.0 * std::sqrt(2.0)).epsilon(1e-6));

    const QuantumOptimum ns2 = optimize_settings(InequalityKind::NS2_99);
    CHECK(ns2.s == doctest::Approx(1.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-6));
}

TEST_CASE("a relative phase shifts the in-plane correlator") {
    const double phase = 0.9;
    const GhzState shifted = GhzState::with_phase(phase);
    const MeasurementSettings s = in_plane_settings({0.3, 0, -0.2, 0, 0.5, 0});
    // sigma(t)|0> = exp(it)|1>, so the phase enters with a minus sign.
    const double expected = std::cos(0.3 - 0.2 + 0.5 - phase);
    CHECK(ghz_correlator(shifted, s, Context::full(0, 0, 0)) ==
          doctest::Approx(expected).epsilon(1e-12));
    const GhzState zero = GhzState::with_phase(0.0);
    CHECK(ghz_correlator(zero, s, Context::full(0, 0, 0)) ==
          doctest::Approx(ghz_correlator(GhzState::standard(), s, Context::full(0, 0, 0)))
              .epsilon(1e-12));
}
