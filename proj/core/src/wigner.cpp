#include "relent/wigner.hpp"

#include <algorithm>
#include <cmath>

namespace relent {

namespace {

using namespace std::complex_literals;

Eigen::Matrix2cd pauli_dot(const Eigen::Vector3d& n) {
    Eigen::Matrix2cd m;
    m << n.z(), n.x() - 1i * n.y(), //
        n.x() + 1i * n.y(), -n.z();
    return m;
}

// The composition L(q)^-1 L L(p) cancels entries of size cosh^2 down to
// order one; at rapidities around 5 that costs ~1e-8 in double. The product
// therefore runs in extended precision, after projecting the given matrix
// back onto the metric-preserving manifold (its double entries violate
// L^T g L = g by just enough to dominate the error budget).
using Mat4ld = Eigen::Matrix<long double, 4, 4>;
using Vec4ld = Eigen::Matrix<long double, 4, 1>;

Mat4ld metric_ld() {
    Mat4ld g = Mat4ld::Identity();
    g(1, 1) = g(2, 2) = g(3, 3) = -1.0L;
    return g;
}

Mat4ld standard_boost_ld(const Vec4ld& p, long double mass) {
    const Eigen::Matrix<long double, 3, 1> spatial = p.segment<3>(1);
    const long double sp = spatial.norm();
    Mat4ld m = Mat4ld::Identity();
    if (sp / mass < 1e-300L) {
        return m;
    }
    const long double chi = std::asinh(sp / mass);
    const long double ch = std::cosh(chi);
    const long double sh = std::sinh(chi);
    const Eigen::Matrix<long double, 3, 1> axis = spatial / sp;
    m(0, 0) = ch;
    for (int i = 0; i < 3; ++i) {
        m(0, i + 1) = m(i + 1, 0) = sh * axis(i);
        for (int j = 0; j < 3; ++j) {
            m(i + 1, j + 1) = (i == j ? 1.0L : 0.0L) + (ch - 1.0L) * axis(i) * axis(j);
        }
    }
    return m;
}

} // namespace

LorentzTransform wigner_rotation(const LorentzTransform& lambda, const FourVector& p) {
    const Mat4ld g = metric_ld();
    Mat4ld l = lambda.matrix().cast<long double>();
    // Newton projection onto L^T g L = g (quadratic convergence).
    for (int iteration = 0; iteration < 2; ++iteration) {
        const Mat4ld x = g * l.transpose() * g * l;
        l = l * (3.0L * Mat4ld::Identity() - x) / 2.0L;
    }

    const Vec4ld pv = p.components().cast<long double>();
    const long double m2 = pv(0) * pv(0) - pv.segment<3>(1).squaredNorm();
    if (!(m2 > 0.0L) || !(pv(0) > 0.0L)) {
        throw invalid_momentum("momentum must be timelike with positive energy");
    }
    const long double mass = std::sqrt(m2);

    const Mat4ld l_p = standard_boost_ld(pv, mass);
    const Mat4ld l_q = standard_boost_ld(l * pv, mass);
    const Mat4ld w = g * l_q.transpose() * g * l * l_p;
    return LorentzTransform::from_matrix(w.cast<double>());
}

double wigner_angle(Rapidity eta, Rapidity xi) {
    return std::atan(std::sinh(eta.value) * std::sinh(xi.value) /
                     (std::cosh(eta.value) + std::cosh(xi.value)));
}

Eigen::Matrix2cd wigner_su2(double delta, Branch branch) {
    const double sign = branch == Branch::plus ? 1.0 : -1.0;
    const double c = std::cos(delta / 2.0);
    const double s = sign * std::sin(delta / 2.0);
    Eigen::Matrix2cd u;
    u << c, s, //
        -s, c;
    return u;
}

AxisAngle rotation_axis_angle(const LorentzTransform& rotation) {
    const Eigen::Matrix3d r = rotation.matrix().block<3, 3>(1, 1);
    const double cos_angle = std::clamp((r.trace() - 1.0) / 2.0, -1.0, 1.0);
    const double angle = std::acos(cos_angle);

    if (angle < 1e-9) {
        return {Eigen::Vector3d::UnitZ(), angle};
    }
    if (angle > M_PI - 1e-6) {
        // Antisymmetric part degenerates; read the axis off (R + I)/2 = n n^T.
        const Eigen::Matrix3d s = (r + Eigen::Matrix3d::Identity()) / 2.0;
        int k = 0;
        s.diagonal().maxCoeff(&k);
        Eigen::Vector3d axis = s.col(k) / std::sqrt(s(k, k));
        return {axis.normalized(), angle};
    }
    Eigen::Vector3d axis{r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1)};
    return {axis / (2.0 * std::sin(angle)), angle};
}

Eigen::Matrix2cd su2_from_axis_angle(const AxisAngle& aa) {
    return std::cos(aa.angle / 2.0) * Eigen::Matrix2cd::Identity() -
           1i * std::sin(aa.angle / 2.0) * pauli_dot(aa.axis);
}

Eigen::Matrix2cd su2_from_rotation(const LorentzTransform& rotation) {
    return su2_from_axis_angle(rotation_axis_angle(rotation));
}

} // namespace relent
