#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>

#include "relent/lorentz.hpp"
#include "relent/qubits.hpp"
#include "relent/states.hpp"
#include "relent/wigner.hpp"

namespace relent {

/// Spatial unit vector used as a spin-measurement direction.
class Direction {
public:
    /// Components must form a unit vector within 1e-12.
    Direction(double x, double y, double z);

    /// Scales an arbitrary nonzero vector to unit length.
    static Direction normalized(double x, double y, double z);

    /// (sin t cos p, sin t sin p, cos t).
    static Direction polar(double polar_angle, double azimuth);

    const Eigen::Vector3d& vec() const { return n_; }

    /// Four-vector lift with zero time component.
    FourVector lifted() const { return FourVector::spatial(n_); }

private:
    explicit Direction(Eigen::Vector3d n) : n_(std::move(n)) {}

    Eigen::Vector3d n_;
};

/// The four measurement four-vectors of a CHSH run, expressed in the frame
/// the correlations are evaluated in. Directions picked by an observer in
/// that frame have zero time component; directions carried over from the
/// source frame acquire one through transform_setup.
struct MeasurementSetup {
    FourVector a;           // Alice, first setting
    FourVector alpha_prime; // Alice, second setting
    FourVector b;           // Bob, first setting
    FourVector beta_prime;  // Bob, second setting

    static MeasurementSetup from_directions(const Direction& a, const Direction& alpha_prime,
                                            const Direction& b, const Direction& beta_prime);

    /// Planar setup maximizing the singlet CHSH value at rest:
    /// a = x, alpha' = y, b = (x+y)/sqrt2, beta' = (y-x)/sqrt2.
    static MeasurementSetup optimal_planar();
};

/// Inertial frame of a CHSH evaluation: the source frame S' has the
/// particles moving along +-z with rapidity eta; the observer frame is
/// reached by a boost of rapidity xi along -x (xi = 0 means the source
/// frame itself).
struct FrameDescriptor {
    Rapidity eta{0.0};
    Rapidity xi{0.0};
    double mass = 1.0;

    /// Wigner rotation angle wigner_angle(eta, xi) of this frame change.
    double delta() const;

    /// The frame-change transformation: boost(xi, -x).
    LorentzTransform lambda() const;

    /// p+- in the source frame: (m cosh eta, 0, 0, +-m sinh eta).
    FourVector source_momentum(Branch branch) const;

    /// Branch momentum as seen in this frame: lambda() applied to p+-.
    FourVector branch_momentum(Branch branch) const;
};

/// Nonrelativistic spin observable a . sigma; eigenvalues +-1.
Eigen::Matrix2cd rest_spin_observable(const Direction& a);

/// Unit Bloch direction of the momentum-dependent spin observable in the
/// velocity decomposition (sqrt(1-b^2) a_perp + a_par) / |...|.
Eigen::Vector3d pauli_lubanski_direction(const Direction& a, const FourVector& p);

/// Normalized Pauli-Lubanski spin observable for measurement four-vector a
/// and particle momentum p: the rest-frame pullback n . sigma with n the
/// normalized spatial part of L(p)^-1 a. Throws singular_observable when
/// that spatial part has norm below 1e-12.
Eigen::Matrix2cd pauli_lubanski_observable(const FourVector& a, const FourVector& p);

/// Same for a spatial direction (zero-time lift); agrees with the velocity
/// decomposition pauli_lubanski_direction.
Eigen::Matrix2cd pauli_lubanski_observable(const Direction& a, const FourVector& p);

/// Plain matrix action of a transformation on a measurement four-vector,
/// no normalization.
FourVector transform_direction(const LorentzTransform& lambda, const FourVector& a);

/// Unit vector along the spatial part; throws singular_direction when the
/// spatial part has norm below 1e-12.
Direction normalize_spatial(const FourVector& a);

/// One particle's observable on its (momentum (x) spin) qubit pair,
/// block-diagonal in the momentum basis:
///   |1><1| (x) a^(p_plus)  +  |0><0| (x) a^(p_minus).
/// Hermitian with eigenvalues +-1.
Eigen::Matrix4cd joint_observable(const FourVector& a, const FourVector& p_plus,
                                  const FourVector& p_minus);

/// <psi| A (x) B |psi> with Alice's joint observable on qubits (0,2) and
/// Bob's on (1,3), built from the measurement four-vectors and the frame's
/// branch momenta.
double correlation(const PureState& state, const FourVector& a, const FourVector& b,
                   const FrameDescriptor& frame);
double correlation(const PureState& state, const Direction& a, const Direction& b,
                   const FrameDescriptor& frame);

/// CHSH combination |E(a,b) - E(a,b')| + |E(a',b') + E(a',b)|.
double chsh(const PureState& state, const MeasurementSetup& setup, const FrameDescriptor& frame);

/// Carries a source-frame setup over to the observer frame: applies
/// lambda() to each measurement four-vector.
MeasurementSetup transform_setup(const MeasurementSetup& source_setup,
                                 const FrameDescriptor& frame);

struct ChshOptimum {
    MeasurementSetup setup;
    /// (polar, azimuth) pairs in setup order a, alpha', b, beta'.
    std::array<double, 8> angles{};
    double value = 0.0;
};

/// Multi-start derivative-free maximization of the CHSH value over the
/// eight direction angles. Deterministic for a fixed seed; ties within
/// 1e-12 resolve to the earliest restart.
ChshOptimum chsh_maximize(const PureState& state, const FrameDescriptor& frame,
                          std::uint64_t seed = 0, int restarts = 16);

} // namespace relent
