#include "relent/lorentz.hpp"

#include <cmath>
#include <string>

namespace relent {

namespace {

Eigen::Matrix4d minkowski_metric() {
    Eigen::Matrix4d g = Eigen::Matrix4d::Identity();
    g(1, 1) = g(2, 2) = g(3, 3) = -1.0;
    return g;
}

double mass_of(const FourVector& p) {
    const double m2 = p.invariant_mass_squared();
    if (!(m2 > 0.0) || !(p.t > 0.0)) {
        throw invalid_momentum("momentum must be timelike with positive energy");
    }
    return std::sqrt(m2);
}

} // namespace

double Rapidity::beta() const {
    return std::tanh(value);
}

LorentzTransform LorentzTransform::identity() {
    return LorentzTransform(Eigen::Matrix4d::Identity());
}

LorentzTransform LorentzTransform::from_matrix(const Eigen::Matrix4d& m) {
    LorentzTransform L(m);
    if (L.metric_violation() > 1e-12) {
        throw error("matrix does not preserve the Minkowski metric");
    }
    return L;
}

LorentzTransform LorentzTransform::inverse() const {
    const Eigen::Matrix4d g = minkowski_metric();
    return LorentzTransform(g * m_.transpose() * g);
}

double LorentzTransform::metric_violation() const {
    const Eigen::Matrix4d g = minkowski_metric();
    return (m_.transpose() * g * m_ - g).cwiseAbs().maxCoeff();
}

LorentzTransform boost(Rapidity xi, const Eigen::Vector3d& axis) {
    if (std::abs(axis.norm() - 1.0) > 1e-12) {
        throw invalid_direction("boost axis must be a unit vector");
    }
    if (!std::isfinite(xi.value)) {
        throw error("boost rapidity must be finite");
    }
    const double ch = std::cosh(xi.value);
    const double sh = std::sinh(xi.value);
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m(0, 0) = ch;
    for (int i = 0; i < 3; ++i) {
        m(0, i + 1) = m(i + 1, 0) = sh * axis(i);
        for (int j = 0; j < 3; ++j) {
            m(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + (ch - 1.0) * axis(i) * axis(j);
        }
    }
    return LorentzTransform(m);
}

LorentzTransform standard_boost(const FourVector& p) {
    const double m = mass_of(p);
    const double sp = p.spatial_norm();
    if (sp / m < 1e-300) {
        return LorentzTransform::identity();
    }
    return boost(Rapidity{std::asinh(sp / m)}, p.spatial_part() / sp);
}

Rapidity rapidity_of(const FourVector& p) {
    const double m = mass_of(p);
    return Rapidity{std::asinh(p.spatial_norm() / m)};
}

} // namespace relent
