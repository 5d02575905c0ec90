#include "nady/types.hpp"

#include <cmath>
#include <cstddef>

namespace nady {

namespace {

// Error-free transformation: a + b = s + err with s = fl(a + b).
inline double two_sum(double a, double b, double& err) {
    double s = a + b;
    double bv = s - a;
    err = (a - (s - bv)) + (b - bv);
    return s;
}

}  // namespace

bool exact_sum_is_zero(const std::vector<double>& values) {
    // Shewchuk-style expansion: the running sum is kept as a list of
    // non-overlapping components whose exact sum equals the input sum.
    std::vector<double> expansion;
    for (double v : values) {
        double carry = v;
        std::size_t kept = 0;
        for (std::size_t i = 0; i < expansion.size(); ++i) {
            double err;
            carry = two_sum(expansion[i], carry, err);
            if (err != 0.0) expansion[kept++] = err;
        }
        expansion.resize(kept);
        if (carry != 0.0) expansion.push_back(carry);
    }
    return expansion.empty();
}

SystemSpec build_system(const std::vector<Particle>& particles) {
    if (particles.empty()) throw DimensionMismatch("build_system: empty particle list");
    if (particles.size() < 2) throw NeutralityViolation("build_system: N >= 2 required for a neutral system");

    std::vector<double> charges;
    charges.reserve(particles.size());
    double total_mass = 0.0;
    for (std::size_t i = 0; i < particles.size(); ++i) {
        if (!(particles[i].mass > 0.0))
            throw NonPositiveMass("build_system: particle " + std::to_string(i) + " has non-positive mass");
        total_mass += particles[i].mass;
        charges.push_back(particles[i].charge);
    }
    if (!exact_sum_is_zero(charges))
        throw NeutralityViolation("build_system: charges do not sum to zero");

    return SystemSpec{particles, total_mass};
}

double constraint_residual(const ReducedState& state, const SystemSpec& spec) {
    const int n = spec.size();
    Vec3 mrho = Vec3::Zero(), mrhodot = Vec3::Zero();
    double scale_r = 0.0, scale_v = 0.0;
    for (int i = 0; i < n; ++i) {
        const double m = spec.particles[i].mass;
        mrho += m * state.rho[i];
        mrhodot += m * state.rho_dot[i];
        scale_r += m * state.rho[i].norm();
        scale_v += m * state.rho_dot[i].norm();
    }
    double res_r = scale_r > 0.0 ? mrho.norm() / scale_r : mrho.norm();
    double res_v = scale_v > 0.0 ? mrhodot.norm() / scale_v : mrhodot.norm();
    return std::max(res_r, res_v);
}

ReducedState to_internal_frame(const FullState& full, const SystemSpec& spec) {
    const int n = spec.size();
    if (static_cast<int>(full.positions.size()) != n || static_cast<int>(full.velocities.size()) != n)
        throw DimensionMismatch("to_internal_frame: state/spec particle count mismatch");

    ReducedState out;
    out.time = full.time;
    Vec3 mr = Vec3::Zero(), mv = Vec3::Zero();
    for (int i = 0; i < n; ++i) {
        mr += spec.particles[i].mass * full.positions[i];
        mv += spec.particles[i].mass * full.velocities[i];
    }
    out.R = mr / spec.total_mass;
    out.R_dot = mv / spec.total_mass;
    out.rho.resize(n);
    out.rho_dot.resize(n);
    for (int i = 0; i < n; ++i) {
        out.rho[i] = full.positions[i] - out.R;
        out.rho_dot[i] = full.velocities[i] - out.R_dot;
    }
    return out;
}

FullState to_lab_frame(const ReducedState& reduced, const SystemSpec& spec) {
    const int n = spec.size();
    if (static_cast<int>(reduced.rho.size()) != n || static_cast<int>(reduced.rho_dot.size()) != n)
        throw DimensionMismatch("to_lab_frame: state/spec particle count mismatch");
    if (constraint_residual(reduced, spec) > constants::constraint_tol)
        throw ConstraintViolation("to_lab_frame: internal coordinates violate sum(m rho) = 0");

    FullState out;
    out.time = reduced.time;
    out.positions.resize(n);
    out.velocities.resize(n);
    for (int i = 0; i < n; ++i) {
        out.positions[i] = reduced.R + reduced.rho[i];
        out.velocities[i] = reduced.R_dot + reduced.rho_dot[i];
    }
    return out;
}

Eigen::VectorXd pack_state(const ReducedState& state) {
    const int n = static_cast<int>(state.rho.size());
    Eigen::VectorXd y(6 + 6 * n);
    y.segment<3>(0) = state.R;
    y.segment<3>(3) = state.R_dot;
    for (int i = 0; i < n; ++i) {
        y.segment<3>(6 + 3 * i) = state.rho[i];
        y.segment<3>(6 + 3 * n + 3 * i) = state.rho_dot[i];
    }
    return y;
}

Eigen::VectorXd pack_state(const FullState& state) {
    const int n = static_cast<int>(state.positions.size());
    Eigen::VectorXd y(6 * n);
    for (int i = 0; i < n; ++i) {
        y.segment<3>(3 * i) = state.positions[i];
        y.segment<3>(3 * n + 3 * i) = state.velocities[i];
    }
    return y;
}

ReducedState unpack_reduced(const Eigen::VectorXd& y, double time) {
    const int n = static_cast<int>((y.size() - 6) / 6);
    ReducedState s;
    s.time = time;
    s.R = y.segment<3>(0);
    s.R_dot = y.segment<3>(3);
    s.rho.resize(n);
    s.rho_dot.resize(n);
    for (int i = 0; i < n; ++i) {
        s.rho[i] = y.segment<3>(6 + 3 * i);
        s.rho_dot[i] = y.segment<3>(6 + 3 * n + 3 * i);
    }
    return s;
}

FullState unpack_full(const Eigen::VectorXd& y, double time) {
    const int n = static_cast<int>(y.size() / 6);
    FullState s;
    s.time = time;
    s.positions.resize(n);
    s.velocities.resize(n);
    for (int i = 0; i < n; ++i) {
        s.positions[i] = y.segment<3>(3 * i);
        s.velocities[i] = y.segment<3>(3 * n + 3 * i);
    }
    return s;
}

}  // namespace nady
