#pragma once

#include <vector>

#include <Eigen/Dense>

#include "nady/constants.hpp"
#include "nady/errors.hpp"

namespace nady {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

struct Particle {
    double mass = 0.0;    // a.u., > 0
    double charge = 0.0;  // a.u., signed
};

// A validated particle set. Use build_system() to construct: it enforces
// neutrality (sum of charges exactly zero) and positive masses.
struct SystemSpec {
    std::vector<Particle> particles;
    double total_mass = 0.0;

    int size() const { return static_cast<int>(particles.size()); }
};

SystemSpec build_system(const std::vector<Particle>& particles);

// Exact test for sum == 0 over the given doubles (error-free accumulation,
// no rounding). Charges are expected as exactly representable values
// (integers or small dyadic rationals in units of e).
bool exact_sum_is_zero(const std::vector<double>& values);

// Lab-frame state: positions r_i and velocities v_i.
struct FullState {
    std::vector<Vec3> positions;
    std::vector<Vec3> velocities;
    double time = 0.0;
};

// Center-of-mass frame state: R, Rdot and internal coordinates rho_i with
// sum(m_i rho_i) = 0 and sum(m_i rhodot_i) = 0.
struct ReducedState {
    Vec3 R = Vec3::Zero();
    Vec3 R_dot = Vec3::Zero();
    std::vector<Vec3> rho;
    std::vector<Vec3> rho_dot;
    double time = 0.0;
};

// Relative residual of the internal constraint, max over positions and
// velocities: |sum m rho| / sum m |rho| (zero when all rho vanish).
double constraint_residual(const ReducedState& state, const SystemSpec& spec);

// R = sum(m_i r_i)/M, rho_i = r_i - R; analogous for velocities.
ReducedState to_internal_frame(const FullState& full, const SystemSpec& spec);

// r_i = R + rho_i, v_i = Rdot + rhodot_i. Throws ConstraintViolation if the
// input violates the constraint beyond constants::constraint_tol.
FullState to_lab_frame(const ReducedState& reduced, const SystemSpec& spec);

// Flat layouts used by the integrator.
//   reduced: [R, Rdot, rho_1..rho_N, rhodot_1..rhodot_N]  (6 + 6N)
//   full:    [r_1..r_N, v_1..v_N]                         (6N)
Eigen::VectorXd pack_state(const ReducedState& state);
Eigen::VectorXd pack_state(const FullState& state);
ReducedState unpack_reduced(const Eigen::VectorXd& y, double time);
FullState unpack_full(const Eigen::VectorXd& y, double time);

}  // namespace nady
