#include "nady/fields.hpp"

#include <cmath>
#include <random>
#include <utility>

namespace nady {

FieldModel FieldModel::uniform_b(double B0) {
    FieldModel f;
    f.kind = Kind::UniformB;
    f.B0 = B0;
    return f;
}

FieldModel FieldModel::gradient_b(double B0, double b) {
    FieldModel f;
    f.kind = Kind::GradientB;
    f.B0 = B0;
    f.b = b;
    return f;
}

FieldModel FieldModel::uniform_e(const Vec3& E) {
    FieldModel f;
    f.kind = Kind::UniformE;
    f.E = E;
    return f;
}

FieldModel FieldModel::superposition(std::vector<FieldModel> parts) {
    FieldModel f;
    f.kind = Kind::Superposition;
    f.parts = std::move(parts);
    return f;
}

bool FieldModel::has_electric() const {
    switch (kind) {
        case Kind::UniformE:
            return E.squaredNorm() > 0.0;
        case Kind::Superposition:
            for (const auto& p : parts)
                if (p.has_electric()) return true;
            return false;
        default:
            return false;
    }
}

Vec3 eval_E(const FieldModel& field, const Vec3& R) {
    switch (field.kind) {
        case FieldModel::Kind::UniformE:
            return field.E;
        case FieldModel::Kind::Superposition: {
            Vec3 e = Vec3::Zero();
            for (const auto& p : field.parts) e += eval_E(p, R);
            return e;
        }
        default:
            return Vec3::Zero();
    }
}

Vec3 eval_H(const FieldModel& field, const Vec3& R) {
    switch (field.kind) {
        case FieldModel::Kind::UniformB:
            return Vec3(0.0, 0.0, field.B0);
        case FieldModel::Kind::GradientB:
            return Vec3(-field.b * R.x(), 0.0, field.B0 + field.b * R.z());
        case FieldModel::Kind::Superposition: {
            Vec3 h = Vec3::Zero();
            for (const auto& p : field.parts) h += eval_H(p, R);
            return h;
        }
        default:
            return Vec3::Zero();
    }
}

FieldJacobian jacobian_H(const FieldModel& field, const Vec3& R) {
    switch (field.kind) {
        case FieldModel::Kind::GradientB: {
            Mat3 j = Mat3::Zero();
            j(0, 0) = -field.b;  // dHx/dx
            j(2, 2) = field.b;   // dHz/dz
            return j;
        }
        case FieldModel::Kind::Superposition: {
            Mat3 j = Mat3::Zero();
            for (const auto& p : field.parts) j += jacobian_H(p, R);
            return j;
        }
        default:
            return Mat3::Zero();
    }
}

FieldJacobian jacobian_E(const FieldModel& field, const Vec3&) {
    // All shipped electric models are uniform.
    (void)field;
    return Mat3::Zero();
}

Vec3 grad_vdotH(const FieldModel& field, const Vec3& R, const Vec3& v) {
    return jacobian_H(field, R) * v;
}

namespace {

FieldValidationReport validate_impl(const std::function<Vec3(const Vec3&)>& eval_h,
                                    const std::function<Mat3(const Vec3&)>& jac_h,
                                    const Box& region, int n_samples,
                                    unsigned long long seed) {
    FieldValidationReport rep;
    rep.n_samples = n_samples;

    const double fd_step = 1e-5;  // central differences, fields of order unity
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    for (int s = 0; s < n_samples; ++s) {
        Vec3 R;
        for (int k = 0; k < 3; ++k) R[k] = region.lo[k] + (region.hi[k] - region.lo[k]) * u(rng);

        const Mat3 j = jac_h(R);
        rep.max_abs_div = std::max(rep.max_abs_div, std::abs(j.trace()));
        // curl H in terms of J(i,j) = dH_j/dR_i: (curl H)_x = J(1,2) - J(2,1), etc.
        Vec3 curl(j(1, 2) - j(2, 1), j(2, 0) - j(0, 2), j(0, 1) - j(1, 0));
        rep.max_abs_curl = std::max(rep.max_abs_curl, curl.template lpNorm<Eigen::Infinity>());

        // central finite differences of eval_h, relative to the field scale
        Mat3 fd;
        for (int i = 0; i < 3; ++i) {
            Vec3 dp = R, dm = R;
            dp[i] += fd_step;
            dm[i] -= fd_step;
            fd.row(i) = ((eval_h(dp) - eval_h(dm)) / (2.0 * fd_step)).transpose();
        }
        double scale = std::max(1.0, std::max(j.template lpNorm<Eigen::Infinity>(),
                                              eval_h(R).template lpNorm<Eigen::Infinity>()));
        rep.max_fd_mismatch = std::max(rep.max_fd_mismatch,
                                       (fd - j).template lpNorm<Eigen::Infinity>() / scale);
    }
    return rep;
}

}  // namespace

FieldValidationReport validate_field(const FieldModel& field, const Box& region,
                                     int n_samples, unsigned long long seed) {
    return validate_impl([&field](const Vec3& R) { return eval_H(field, R); },
                         [&field](const Vec3& R) { return jacobian_H(field, R); },
                         region, n_samples, seed);
}

FieldValidationReport validate_field_fn(const std::function<Vec3(const Vec3&)>& eval_h,
                                        const std::function<Mat3(const Vec3&)>& jac_h,
                                        const Box& region, int n_samples,
                                        unsigned long long seed) {
    return validate_impl(eval_h, jac_h, region, n_samples, seed);
}

}  // namespace nady
