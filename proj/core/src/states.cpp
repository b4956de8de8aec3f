#include "relent/states.hpp"

#include <cmath>

namespace relent {

PureState momentum_state(double alpha) {
    Vector v = Vector::Zero(4);
    v(2) = std::cos(alpha); // |10> = |p+,p->
    v(1) = std::sin(alpha); // |01> = |p-,p+>
    return PureState(std::move(v));
}

PureState spin_state(const SpinFamily& family) {
    Vector v = Vector::Zero(4); // basis (uu, ud, du, dd)
    if (const auto* bell = std::get_if<BellPsi>(&family)) {
        v(1) = std::cos(bell->beta);
        v(2) = std::sin(bell->beta);
    } else {
        const auto& t = std::get<Triplet>(family);
        v(0) = std::sin(t.theta) * std::cos(t.phi);
        v(1) = v(2) = std::sin(t.theta) * std::sin(t.phi) / std::sqrt(2.0);
        v(3) = std::cos(t.theta);
    }
    return PureState(std::move(v));
}

PureState compose_total(const PureState& momentum, const PureState& spin) {
    if (momentum.qubit_count() != 2 || spin.qubit_count() != 2) {
        throw dimension_mismatch("compose_total expects two 2-qubit states");
    }
    return tensor(momentum, spin);
}

PureState boost_total(const PureState& total, double delta) {
    if (total.qubit_count() != 4) {
        throw dimension_mismatch("boost_total expects a 4-qubit state");
    }
    const Vector& amps = total.amplitudes();
    // Momentum branches |00> and |11> occupy index blocks [0,4) and [12,16).
    if (amps.segment(0, 4).norm() > 1e-12 || amps.segment(12, 4).norm() > 1e-12) {
        throw unsupported_scenario("state has weight on equal-momentum branches");
    }
    const Eigen::Matrix2cd u_plus = wigner_su2(delta, Branch::plus);
    const Eigen::Matrix2cd u_minus = wigner_su2(delta, Branch::minus);

    Vector out = Vector::Zero(16);
    out.segment(8, 4) = kron(Matrix(u_plus), Matrix(u_minus)) * amps.segment(8, 4);
    out.segment(4, 4) = kron(Matrix(u_minus), Matrix(u_plus)) * amps.segment(4, 4);
    return PureState(std::move(out));
}

Scenario Scenario::from_rapidities(double alpha, SpinFamily spin, Rapidity eta, Rapidity xi) {
    return Scenario{alpha, spin, wigner_angle(eta, xi)};
}

PureState Scenario::initial() const {
    return compose_total(momentum_state(alpha), spin_state(spin));
}

PureState Scenario::boosted() const {
    return boost_total(initial(), delta);
}

} // namespace relent
