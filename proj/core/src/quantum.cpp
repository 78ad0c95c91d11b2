#include "mdbell/quantum.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <random>
#include <sstream>

namespace mdbell {

Vec3 in_plane_direction(double angle) {
    return {std::cos(angle), std::sin(angle), 0.0};
}

GhzState GhzState::standard() {
    GhzState state;
    state.amplitudes[0] = state.amplitudes[7] = 1.0 / std::sqrt(2.0);
    return state;
}

GhzState GhzState::with_phase(double phase) {
    GhzState state;
    state.amplitudes[0] = 1.0 / std::sqrt(2.0);
    state.amplitudes[7] = std::polar(1.0 / std::sqrt(2.0), phase);
    return state;
}

namespace {

using Amplitudes = std::array<std::complex<double>, 8>;

void require_unit(const Vec3& v) {
    const double norm = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
    if (std::abs(norm - 1.0) > 1e-12) {
        std::ostringstream msg;
        msg << "measurement direction (" << v.x << ", " << v.y << ", " << v.z
            << ") has norm " << norm << ", expected 1";
        throw Error(msg.str());
    }
}

// Applies sigma . v to one qubit (0 = A, 1 = B, 2 = C) of the state.
Amplitudes apply_direction(const Amplitudes& in, int qubit, const Vec3& v) {
    const std::complex<double> m00(v.z, 0.0), m01(v.x, -v.y), m10(v.x, v.y), m11(-v.z, 0.0);
    const int stride = 4 >> qubit;
    Amplitudes out{};
    for (int i = 0; i < 8; ++i) {
        if (i & stride)
            out[i] = m10 * in[i ^ stride] + m11 * in[i];
        else
            out[i] = m00 * in[i] + m01 * in[i ^ stride];
    }
    return out;
}

} // namespace

double ghz_correlator(const GhzState& state, const MeasurementSettings& settings,
                      const Context& ctx) {
    if (!ctx.is_valid())
        throw Error("invalid context");
    Amplitudes v = state.amplitudes;
    if (ctx.x) {
        const Vec3& d = settings.a[static_cast<std::size_t>(*ctx.x)];
        require_unit(d);
        v = apply_direction(v, 0, d);
    }
    if (ctx.y) {
        const Vec3& d = settings.b[static_cast<std::size_t>(*ctx.y)];
        require_unit(d);
        v = apply_direction(v, 1, d);
    }
    if (ctx.z) {
        const Vec3& d = settings.c[static_cast<std::size_t>(*ctx.z)];
        require_unit(d);
        v = apply_direction(v, 2, d);
    }
    std::complex<double> inner = 0.0;
    for (int i = 0; i < 8; ++i)
        inner += std::conj(state.amplitudes[i]) * v[i];
    return inner.real();
}

double evaluate_quantum(InequalityKind kind, const MeasurementSettings& settings) {
    const GhzState state = GhzState::standard();
    double s = 0;
    for (const InequalityTerm& term : inequality_spec(kind).terms)
        s += term.sign * ghz_correlator(state, settings, term.context);
    return s;
}

namespace {

using Angles = std::array<double, 12>; // (theta, phi) per direction a0,a1,b0,b1,c0,c1

MeasurementSettings settings_from_angles(const Angles& t) {
    auto sph = [](double theta, double phi) {
        return Vec3{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                    std::cos(theta)};
    };
    MeasurementSettings s;
    s.a = {sph(t[0], t[1]), sph(t[2], t[3])};
    s.b = {sph(t[4], t[5]), sph(t[6], t[7])};
    s.c = {sph(t[8], t[9]), sph(t[10], t[11])};
    return s;
}

double angles_value(InequalityKind kind, const Angles& t) {
    return evaluate_quantum(kind, settings_from_angles(t));
}

// One ascent run: each angle's slice of S is A*cos t + B*sin t + C, so
// three samples pin the harmonic and the argmax is atan2(B, A).
double coordinate_ascent(InequalityKind kind, Angles& t) {
    constexpr double half_pi = 1.5707963267948966;
    double current = angles_value(kind, t);
    for (int sweep = 0; sweep < 200; ++sweep) {
        const double before = current;
        for (std::size_t i = 0; i < t.size(); ++i) {
            const double saved = t[i];
            t[i] = 0.0;
            const double s0 = angles_value(kind, t);
            t[i] = half_pi;
            const double s1 = angles_value(kind, t);
            t[i] = 2.0 * half_pi;
            const double s2 = angles_value(kind, t);
            const double c = (s0 + s2) / 2.0;
            const double a = s0 - c; // cos coefficient
            const double b = s1 - c; // sin coefficient
            const double amplitude = std::hypot(a, b);
            t[i] = amplitude < 1e-15 ? saved : std::atan2(b, a);
            const double after = angles_value(kind, t);
            if (after < current) {
                t[i] = saved;
            } else {
                current = after;
            }
        }
        if (current - before < 1e-13)
            break;
    }
    return current;
}

} // namespace

QuantumOptimum optimize_settings(InequalityKind kind) {
    constexpr double pi = 3.141592653589793;
    std::mt19937 engine(20260816u);
    auto unit = [&engine] {
        return static_cast<double>(engine()) / 4294967296.0;
    };

    std::vector<Angles> starts;
    Angles in_plane{};
    for (std::size_t i = 0; i < in_plane.size(); i += 2) {
        in_plane[i] = pi / 2.0;
        in_plane[i + 1] = 0.25 + 0.5 * static_cast<double>(i);
    }
    starts.push_back(in_plane);
    for (int k = 0; k < 32; ++k) {
        Angles t{};
        for (std::size_t i = 0; i < t.size(); i += 2) {
            t[i] = pi * unit();
            t[i + 1] = 2.0 * pi * unit();
        }
        starts.push_back(t);
    }

    QuantumOptimum best;
    best.s = -1e300;
    for (Angles t : starts) {
        const double value = coordinate_ascent(kind, t);
        if (value > best.s) {
            best.s = value;
            best.settings = settings_from_angles(t);
        }
    }
    return best;
}

std::string settings_to_json(const MeasurementSettings& settings) {
    nlohmann::ordered_json j;
    auto vectors = [](const std::array<Vec3, 2>& pair) {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const Vec3& v : pair)
            out.push_back({v.x, v.y, v.z});
        return out;
    };
    j["A"] = vectors(settings.a);
    j["B"] = vectors(settings.b);
    j["C"] = vectors(settings.c);
    return j.dump();
}

} // namespace mdbell
