#pragma once

#include <Eigen/Dense>

#include "relent/errors.hpp"

namespace relent {

/// Contravariant four-vector in natural units (hbar = c = 1),
/// metric signature (+,-,-,-).
struct FourVector {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    static FourVector rest(double mass) { return {mass, 0.0, 0.0, 0.0}; }
    /// Lift of a spatial vector: zero time component.
    static FourVector spatial(const Eigen::Vector3d& v) { return {0.0, v.x(), v.y(), v.z()}; }

    double minkowski_dot(const FourVector& o) const {
        return t * o.t - x * o.x - y * o.y - z * o.z;
    }
    /// p.p = m^2 for an on-shell momentum.
    double invariant_mass_squared() const { return minkowski_dot(*this); }

    Eigen::Vector3d spatial_part() const { return {x, y, z}; }
    double spatial_norm() const { return spatial_part().norm(); }

    Eigen::Vector4d components() const { return {t, x, y, z}; }
    static FourVector from_components(const Eigen::Vector4d& c) {
        return {c(0), c(1), c(2), c(3)};
    }

    friend FourVector operator+(const FourVector& a, const FourVector& b) {
        return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend FourVector operator-(const FourVector& a, const FourVector& b) {
        return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend FourVector operator*(double s, const FourVector& a) {
        return {s * a.t, s * a.x, s * a.y, s * a.z};
    }
};

/// Additive boost parameter; velocity beta = tanh(value).
struct Rapidity {
    double value = 0.0;
    double beta() const;
};

/// Real 4x4 matrix preserving the Minkowski metric.
class LorentzTransform {
public:
    static LorentzTransform identity();

    /// Validates metric preservation L^T g L = g within 1e-12 entrywise.
    static LorentzTransform from_matrix(const Eigen::Matrix4d& m);

    const Eigen::Matrix4d& matrix() const { return m_; }

    FourVector operator()(const FourVector& v) const {
        return FourVector::from_components(m_ * v.components());
    }

    LorentzTransform operator*(const LorentzTransform& rhs) const {
        return LorentzTransform(m_ * rhs.m_);
    }

    /// g L^T g; exact inverse for a metric-preserving matrix.
    LorentzTransform inverse() const;

    /// max_ij |(L^T g L - g)_ij|, for validation and property tests.
    double metric_violation() const;

private:
    explicit LorentzTransform(Eigen::Matrix4d m) : m_(std::move(m)) {}

    Eigen::Matrix4d m_;

    friend LorentzTransform boost(Rapidity, const Eigen::Vector3d&);
};

/// Pure boost of rapidity xi along a unit axis; boost(0, axis) = identity,
/// and it maps (m,0,0,0) to (m cosh xi, m sinh xi * axis).
/// Throws invalid_direction unless the axis is unit within 1e-12.
LorentzTransform boost(Rapidity xi, const Eigen::Vector3d& axis);

/// Standard boost L(p) taking the rest momentum k = (m,0,0,0) to p;
/// a pure (symmetric) boost along the spatial direction of p.
/// Throws invalid_momentum unless p is timelike with p.t > 0.
LorentzTransform standard_boost(const FourVector& p);

/// Rapidity of an on-shell momentum: asinh(|p_spatial| / m).
Rapidity rapidity_of(const FourVector& p);

} // namespace relent
