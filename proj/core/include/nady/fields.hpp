#pragma once

#include <functional>
#include <vector>

#include "nady/types.hpp"

namespace nady {

// Static external fields, stored as E0/H0 directly (no potentials). All
// shipped magnetic models are source-free in the simulated region:
// div H0 = 0 and curl H0 = 0.
struct FieldModel {
    enum class Kind { UniformB, GradientB, UniformE, Superposition };

    Kind kind = Kind::UniformB;
    double B0 = 0.0;            // uniform field strength along z
    double b = 0.0;             // gradient strength (GradientB)
    Vec3 E = Vec3::Zero();      // uniform electric vector (UniformE)
    std::vector<FieldModel> parts;  // Superposition members

    static FieldModel uniform_b(double B0);
    // H0(R) = (-b x, 0, B0 + b z): the minimal linear inhomogeneous field
    // with div = 0 and curl = 0.
    static FieldModel gradient_b(double B0, double b);
    static FieldModel uniform_e(const Vec3& E);
    static FieldModel superposition(std::vector<FieldModel> parts);

    bool has_electric() const;
};

// J(i,j) = dH_j / dR_i; traceless and symmetric for the shipped models.
using FieldJacobian = Mat3;

Vec3 eval_E(const FieldModel& field, const Vec3& R);
Vec3 eval_H(const FieldModel& field, const Vec3& R);
FieldJacobian jacobian_H(const FieldModel& field, const Vec3& R);
FieldJacobian jacobian_E(const FieldModel& field, const Vec3& R);  // zero for all shipped kinds

// grad_R (v . H0(R)) = J v, valid because the external field is curl-free
// (J symmetric).
Vec3 grad_vdotH(const FieldModel& field, const Vec3& R, const Vec3& v);

struct Box {
    Vec3 lo = Vec3::Zero();
    Vec3 hi = Vec3::Zero();
};

struct FieldValidationReport {
    double max_abs_div = 0.0;       // max |tr J| over samples
    double max_abs_curl = 0.0;      // max |asym J| over samples
    double max_fd_mismatch = 0.0;   // max rel deviation, analytic vs central differences
    int n_samples = 0;
};

// Samples n uniformly distributed points in the box (deterministic for a
// given seed) and checks Maxwell consistency of the analytic Jacobian plus
// agreement with central finite differences (step 1e-5).
FieldValidationReport validate_field(const FieldModel& field, const Box& region,
                                     int n_samples, unsigned long long seed = 20260810ULL);

// Same check for an arbitrary field given as callables; used to validate
// hand-written (including deliberately broken) field definitions.
FieldValidationReport validate_field_fn(const std::function<Vec3(const Vec3&)>& eval_h,
                                        const std::function<Mat3(const Vec3&)>& jac_h,
                                        const Box& region, int n_samples,
                                        unsigned long long seed = 20260810ULL);

}  // namespace nady
