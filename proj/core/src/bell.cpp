#include "relent/bell.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace relent {

namespace {

using namespace std::complex_literals;

Eigen::Matrix2cd pauli_dot(const Eigen::Vector3d& n) {
    Eigen::Matrix2cd m;
    m << n.z(), n.x() - 1i * n.y(), //
        n.x() + 1i * n.y(), -n.z();
    return m;
}

} // namespace

Direction::Direction(double x, double y, double z) : n_(x, y, z) {
    if (std::abs(n_.norm() - 1.0) > 1e-12) {
        throw invalid_direction("measurement direction must be a unit vector");
    }
}

Direction Direction::normalized(double x, double y, double z) {
    Eigen::Vector3d v(x, y, z);
    const double n = v.norm();
    if (n < 1e-12) {
        throw singular_direction("cannot normalize a (near-)zero vector");
    }
    return Direction(Eigen::Vector3d(v / n));
}

Direction Direction::polar(double polar_angle, double azimuth) {
    return Direction(Eigen::Vector3d{std::sin(polar_angle) * std::cos(azimuth),
                                     std::sin(polar_angle) * std::sin(azimuth),
                                     std::cos(polar_angle)});
}

MeasurementSetup MeasurementSetup::from_directions(const Direction& a,
                                                   const Direction& alpha_prime,
                                                   const Direction& b,
                                                   const Direction& beta_prime) {
    return {a.lifted(), alpha_prime.lifted(), b.lifted(), beta_prime.lifted()};
}

MeasurementSetup MeasurementSetup::optimal_planar() {
    const double r = 1.0 / std::sqrt(2.0);
    return from_directions(Direction(1, 0, 0), Direction(0, 1, 0), Direction(r, r, 0),
                           Direction(-r, r, 0));
}

double FrameDescriptor::delta() const {
    return wigner_angle(eta, xi);
}

LorentzTransform FrameDescriptor::lambda() const {
    return boost(xi, Eigen::Vector3d(-1, 0, 0));
}

FourVector FrameDescriptor::source_momentum(Branch branch) const {
    const double sign = branch == Branch::plus ? 1.0 : -1.0;
    return {mass * std::cosh(eta.value), 0.0, 0.0, sign * mass * std::sinh(eta.value)};
}

FourVector FrameDescriptor::branch_momentum(Branch branch) const {
    return lambda()(source_momentum(branch));
}

Eigen::Matrix2cd rest_spin_observable(const Direction& a) {
    return pauli_dot(a.vec());
}

Eigen::Vector3d pauli_lubanski_direction(const Direction& a, const FourVector& p) {
    const double m2 = p.invariant_mass_squared();
    if (!(m2 > 0.0) || !(p.t > 0.0)) {
        throw invalid_momentum("momentum must be timelike with positive energy");
    }
    const double beta = p.spatial_norm() / p.t;
    if (beta < 1e-15) {
        return a.vec();
    }
    const Eigen::Vector3d p_hat = p.spatial_part().normalized();
    const Eigen::Vector3d a_par = a.vec().dot(p_hat) * p_hat;
    const Eigen::Vector3d a_perp = a.vec() - a_par;
    return (std::sqrt(1.0 - beta * beta) * a_perp + a_par) /
           std::sqrt(1.0 + beta * beta * (a_par.squaredNorm() - 1.0));
}

Eigen::Matrix2cd pauli_lubanski_observable(const FourVector& a, const FourVector& p) {
    const FourVector rest_frame_a = standard_boost(p).inverse()(a);
    const double norm = rest_frame_a.spatial_norm();
    if (norm < 1e-12) {
        throw singular_observable("measurement four-vector is parallel to the momentum");
    }
    return pauli_dot(rest_frame_a.spatial_part() / norm);
}

Eigen::Matrix2cd pauli_lubanski_observable(const Direction& a, const FourVector& p) {
    return pauli_lubanski_observable(a.lifted(), p);
}

FourVector transform_direction(const LorentzTransform& lambda, const FourVector& a) {
    return lambda(a);
}

Direction normalize_spatial(const FourVector& a) {
    const Eigen::Vector3d s = a.spatial_part();
    return Direction::normalized(s.x(), s.y(), s.z());
}

Eigen::Matrix4cd joint_observable(const FourVector& a, const FourVector& p_plus,
                                  const FourVector& p_minus) {
    Eigen::Matrix4cd op = Eigen::Matrix4cd::Zero();
    op.block<2, 2>(2, 2) = pauli_lubanski_observable(a, p_plus); // momentum qubit |1> = p+
    op.block<2, 2>(0, 0) = pauli_lubanski_observable(a, p_minus);
    return op;
}

namespace {

// <psi| A (x) B |psi> with A on qubits (0,2) and B on qubits (1,3).
double pair_expectation(const Vector& psi, const Eigen::Matrix4cd& alice,
                        const Eigen::Matrix4cd& bob) {
    Complex sum = 0.0;
    for (int r = 0; r < 16; ++r) {
        const int ar = ((r >> 2) & 2) | ((r >> 1) & 1); // bits (b0, b2)
        const int br = ((r >> 1) & 2) | (r & 1);        // bits (b1, b3)
        for (int c = 0; c < 16; ++c) {
            const int ac = ((c >> 2) & 2) | ((c >> 1) & 1);
            const int bc = ((c >> 1) & 2) | (c & 1);
            sum += std::conj(psi(r)) * alice(ar, ac) * bob(br, bc) * psi(c);
        }
    }
    return sum.real();
}

struct BranchMomenta {
    FourVector plus;
    FourVector minus;
};

BranchMomenta frame_momenta(const FrameDescriptor& frame) {
    return {frame.branch_momentum(Branch::plus), frame.branch_momentum(Branch::minus)};
}

} // namespace

double correlation(const PureState& state, const FourVector& a, const FourVector& b,
                   const FrameDescriptor& frame) {
    if (state.qubit_count() != 4) {
        throw dimension_mismatch("correlation expects a 4-qubit state");
    }
    const auto [p_plus, p_minus] = frame_momenta(frame);
    return pair_expectation(state.amplitudes(), joint_observable(a, p_plus, p_minus),
                            joint_observable(b, p_plus, p_minus));
}

double correlation(const PureState& state, const Direction& a, const Direction& b,
                   const FrameDescriptor& frame) {
    return correlation(state, a.lifted(), b.lifted(), frame);
}

double chsh(const PureState& state, const MeasurementSetup& setup,
            const FrameDescriptor& frame) {
    if (state.qubit_count() != 4) {
        throw dimension_mismatch("chsh expects a 4-qubit state");
    }
    const auto [p_plus, p_minus] = frame_momenta(frame);
    const Eigen::Matrix4cd obs_a = joint_observable(setup.a, p_plus, p_minus);
    const Eigen::Matrix4cd obs_ap = joint_observable(setup.alpha_prime, p_plus, p_minus);
    const Eigen::Matrix4cd obs_b = joint_observable(setup.b, p_plus, p_minus);
    const Eigen::Matrix4cd obs_bp = joint_observable(setup.beta_prime, p_plus, p_minus);

    const Vector& psi = state.amplitudes();
    const double e_ab = pair_expectation(psi, obs_a, obs_b);
    const double e_abp = pair_expectation(psi, obs_a, obs_bp);
    const double e_apbp = pair_expectation(psi, obs_ap, obs_bp);
    const double e_apb = pair_expectation(psi, obs_ap, obs_b);
    return std::abs(e_ab - e_abp) + std::abs(e_apbp + e_apb);
}

MeasurementSetup transform_setup(const MeasurementSetup& source_setup,
                                 const FrameDescriptor& frame) {
    const LorentzTransform l = frame.lambda();
    return {l(source_setup.a), l(source_setup.alpha_prime), l(source_setup.b),
            l(source_setup.beta_prime)};
}

namespace {

MeasurementSetup setup_from_angles(const std::array<double, 8>& x) {
    return MeasurementSetup::from_directions(
        Direction::polar(x[0], x[1]), Direction::polar(x[2], x[3]),
        Direction::polar(x[4], x[5]), Direction::polar(x[6], x[7]));
}

// Nelder-Mead simplex ascent on the 8 direction angles.
struct SimplexResult {
    std::array<double, 8> point{};
    double value = 0.0;
};

SimplexResult nelder_mead_max(const std::function<double(const std::array<double, 8>&)>& f,
                              const std::array<double, 8>& start, double step,
                              int max_iterations) {
    constexpr int n = 8;
    struct Vertex {
        std::array<double, n> x;
        double f;
    };
    std::vector<Vertex> simplex;
    simplex.reserve(n + 1);
    simplex.push_back({start, f(start)});
    for (int i = 0; i < n; ++i) {
        auto x = start;
        x[i] += step;
        simplex.push_back({x, f(x)});
    }
    auto by_value_desc = [](const Vertex& l, const Vertex& r) { return l.f > r.f; };

    for (int it = 0; it < max_iterations; ++it) {
        std::sort(simplex.begin(), simplex.end(), by_value_desc);
        if (simplex.front().f - simplex.back().f < 1e-13) {
            break;
        }
        std::array<double, n> centroid{};
        for (int v = 0; v < n; ++v) {
            for (int i = 0; i < n; ++i) {
                centroid[i] += simplex[v].x[i] / n;
            }
        }
        auto blend = [&](double coeff) {
            std::array<double, n> x{};
            for (int i = 0; i < n; ++i) {
                x[i] = centroid[i] + coeff * (centroid[i] - simplex[n].x[i]);
            }
            return x;
        };

        const auto reflected = blend(1.0);
        const double f_r = f(reflected);
        if (f_r > simplex[0].f) {
            const auto expanded = blend(2.0);
            const double f_e = f(expanded);
            simplex[n] = f_e > f_r ? Vertex{expanded, f_e} : Vertex{reflected, f_r};
        } else if (f_r > simplex[n - 1].f) {
            simplex[n] = {reflected, f_r};
        } else {
            const auto contracted = blend(-0.5);
            const double f_c = f(contracted);
            if (f_c > simplex[n].f) {
                simplex[n] = {contracted, f_c};
            } else {
                for (int v = 1; v <= n; ++v) {
                    for (int i = 0; i < n; ++i) {
                        simplex[v].x[i] = simplex[0].x[i] + 0.5 * (simplex[v].x[i] - simplex[0].x[i]);
                    }
                    simplex[v].f = f(simplex[v].x);
                }
            }
        }
    }
    std::sort(simplex.begin(), simplex.end(), by_value_desc);
    return {simplex.front().x, simplex.front().f};
}

} // namespace

ChshOptimum chsh_maximize(const PureState& state, const FrameDescriptor& frame,
                          std::uint64_t seed, int restarts) {
    if (restarts < 1) {
        throw error("chsh_maximize needs at least one restart");
    }
    const auto objective = [&](const std::array<double, 8>& x) {
        return chsh(state, setup_from_angles(x), frame);
    };

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> polar(0.0, M_PI);
    std::uniform_real_distribution<double> azimuth(0.0, 2.0 * M_PI);

    SimplexResult best{{}, -1.0};
    for (int r = 0; r < restarts; ++r) {
        std::array<double, 8> start{};
        for (int i = 0; i < 8; ++i) {
            start[i] = (i % 2 == 0) ? polar(rng) : azimuth(rng);
        }
        const SimplexResult run = nelder_mead_max(objective, start, 0.35, 2500);
        if (run.value > best.value + 1e-12) {
            best = run;
        }
    }
    // Polish pass with a tight simplex around the best point found.
    const SimplexResult polished = nelder_mead_max(objective, best.point, 0.01, 2500);
    if (polished.value > best.value + 1e-12) {
        best = polished;
    }

    return {setup_from_angles(best.point), best.point, best.value};
}

} // namespace relent
