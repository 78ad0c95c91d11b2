#pragma once

#include "mdbell/inequalities.hpp"

#include <array>
#include <complex>
#include <string>

namespace mdbell {

struct Vec3 {
    double x = 0;
    double y = 0;
    double z = 0;
};

// Unit Bloch direction in the x-y plane at the given angle from +x.
Vec3 in_plane_direction(double angle);

// Two Bloch directions per party: index 0 for the unprimed setting, 1 for
// the primed one.  Correlator evaluation requires every direction used to
// be unit length within 1e-12.
struct MeasurementSettings {
    std::array<Vec3, 2> a{};
    std::array<Vec3, 2> b{};
    std::array<Vec3, 2> c{};
};

// Three-qubit state vector; amplitude index is 4*qa + 2*qb + qc.
struct GhzState {
    std::array<std::complex<double>, 8> amplitudes{};

    static GhzState standard();               // (|000> + |111>)/sqrt(2)
    static GhzState with_phase(double phase); // (|000> + e^{i*phase}|111>)/sqrt(2)
};

// Expectation value of the product of Bloch observables for a full or pair
// context; a pair context acts with the identity on the absent party.
double ghz_correlator(const GhzState& state, const MeasurementSettings& settings,
                      const Context& ctx);

// Inequality value on the standard GHZ state.
double evaluate_quantum(InequalityKind kind, const MeasurementSettings& settings);

struct QuantumOptimum {
    MeasurementSettings settings;
    double s = 0;
};

// Deterministic multi-start coordinate ascent over the twelve spherical
// angles.  Each single-angle slice of S is one harmonic A*cos t + B*sin t
// + C, so every coordinate step maximizes its angle in closed form.
QuantumOptimum optimize_settings(InequalityKind kind);

std::string settings_to_json(const MeasurementSettings& settings);

} // namespace mdbell
