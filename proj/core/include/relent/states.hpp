#pragma once

#include <variant>

#include "relent/lorentz.hpp"
#include "relent/qubits.hpp"
#include "relent/wigner.hpp"

namespace relent {

/// Bell-type spin family: cos(beta) |ud> + sin(beta) |du>.
struct BellPsi {
    double beta = 0.0;
};

/// Triplet spin family in spherical coordinates:
/// sin(t)cos(p) |uu> + sin(t)sin(p)/sqrt(2) (|ud> + |du>) + cos(t) |dd>.
struct Triplet {
    double theta = 0.0;
    double phi = 0.0;
};

using SpinFamily = std::variant<BellPsi, Triplet>;

/// cos(alpha) |p+,p-> + sin(alpha) |p-,p+>  (momentum qubits, |p+> = |1>).
PureState momentum_state(double alpha);

PureState spin_state(const SpinFamily& family);

/// Product of a 2-qubit momentum state (high bits) with a 2-qubit spin
/// state (low bits) into the 4-qubit register.
PureState compose_total(const PureState& momentum, const PureState& spin);

/// Boost of the total state as the momentum-controlled pair of Wigner spin
/// rotations: branch |p+,p-> gets U+ (x) U-, branch |p-,p+> gets U- (x) U+.
/// The boosted momentum labels remain a two-level system, so the momentum
/// amplitudes are untouched.
///
/// Throws unsupported_scenario when the state has weight above 1e-12 on the
/// equal-momentum branches |p+,p+> or |p-,p->, for which this geometry
/// defines no Wigner rotation.
PureState boost_total(const PureState& total, double delta);

/// One simulated configuration: momentum angle, spin family, Wigner angle.
struct Scenario {
    double alpha = 0.0;
    SpinFamily spin = BellPsi{0.0};
    double delta = 0.0;

    static Scenario from_rapidities(double alpha, SpinFamily spin, Rapidity eta, Rapidity xi);

    PureState initial() const;
    PureState boosted() const;
};

} // namespace relent
