#pragma once

#include <Eigen/Dense>

#include "relent/lorentz.hpp"

namespace relent {

/// Momentum branch of the two-particle scenario: particle A carries p+
/// (moving along +z in the source frame), particle B carries p-.
enum class Branch { plus, minus };

/// Little-group element W(L, p) = L(p_L)^-1 * L * L(p): takes the rest
/// momentum k to p, on to L p, and back to k, leaving at most a rotation.
LorentzTransform wigner_rotation(const LorentzTransform& lambda, const FourVector& p);

/// Rotation angle for the perpendicular geometry (particle along +-z with
/// rapidity eta, observer boost along -x with rapidity xi):
///
///   tan(delta) = sinh(eta) sinh(xi) / (cosh(eta) + cosh(xi)).
///
/// Nonnegative rapidities give delta in [0, pi/2).
double wigner_angle(Rapidity eta, Rapidity xi);

/// Spin-1/2 Wigner rotation attached to momentum branch p+-:
///
///   U+- = [[ cos(d/2), +-sin(d/2)],
///          [-+sin(d/2),  cos(d/2)]]
///
/// acting on the spin column (up, down).
///
/// Sign map to the 4x4 little group: for the perpendicular geometry the
/// rotation axis is antiparallel to the cross product of particle and
/// observer velocities, i.e. W(L, p+-) rotates by delta about the -+y axis,
/// and U+- is exactly su2_from_rotation(W(L, p+-)). Verified in the test
/// suite against the expansion coefficients of the boosted Bell-family
/// state.
Eigen::Matrix2cd wigner_su2(double delta, Branch branch);

struct AxisAngle {
    Eigen::Vector3d axis; // unit; arbitrary (+z) for angle 0, sign-ambiguous at pi
    double angle = 0.0;   // in [0, pi]
};

/// Axis and angle of the spatial 3x3 block of a little-group rotation.
/// Guarded near angle 0 (returns +z axis) and near pi (axis from the
/// symmetric part, either sign valid).
AxisAngle rotation_axis_angle(const LorentzTransform& rotation);

/// SU(2) image cos(t/2) I - i sin(t/2) (n . sigma) of a spatial rotation
/// by angle t about unit axis n.
Eigen::Matrix2cd su2_from_axis_angle(const AxisAngle& aa);

/// SU(2) image of the spatial block of a little-group rotation.
Eigen::Matrix2cd su2_from_rotation(const LorentzTransform& rotation);

} // namespace relent
