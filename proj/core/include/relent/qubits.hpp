#pragma once

#include <Eigen/Dense>

#include <complex>
#include <initializer_list>
#include <vector>

#include "relent/errors.hpp"

namespace relent {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Roles of the four qubits of the two-particle system.
///
/// Basis labels are big-endian over (q0,q1,q2,q3): the basis state
/// |b0 b1 b2 b3> sits at amplitude index 8*b0 + 4*b1 + 2*b2 + b3.
/// Encoding: momentum |p+> = |1>, |p-> = |0>; spin |up> = |0>, |down> = |1>.
enum class Qubit : int {
    momentum_a = 0,
    momentum_b = 1,
    spin_a = 2,
    spin_b = 3,
};

class DensityMatrix;

/// Normalized pure state of a 1-, 2- or 4-qubit register.
class PureState {
public:
    /// Wraps an amplitude vector of length 2, 4 or 16 with unit norm (1e-12).
    explicit PureState(Vector amplitudes);

    /// Basis state |index> of a register with `qubit_count` qubits.
    static PureState basis(int qubit_count, int index);

    int qubit_count() const { return qubit_count_; }
    int dimension() const { return static_cast<int>(amps_.size()); }
    const Vector& amplitudes() const { return amps_; }
    Complex amplitude(int index) const { return amps_(index); }
    double norm() const { return amps_.norm(); }

    /// Projector |psi><psi|.
    DensityMatrix density() const;

private:
    Vector amps_;
    int qubit_count_ = 0;
};

/// Hermitian unit-trace matrix of dimension 2, 4, 8 or 16.
class DensityMatrix {
public:
    /// Validates dimension, Hermiticity and unit trace (1e-12).
    explicit DensityMatrix(Matrix entries);

    int dimension() const { return static_cast<int>(entries_.rows()); }
    int qubit_count() const { return qubit_count_; }
    const Matrix& entries() const { return entries_; }

    /// Re tr(rho^2); 1 for pure states, 1/d for maximally mixed ones.
    double purity() const;

    /// Smallest eigenvalue; physical states have it >= -1e-10.
    double min_eigenvalue() const;

private:
    Matrix entries_;
    int qubit_count_ = 0;
};

/// Kronecker product with the left factor on the high bits.
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

PureState tensor(const PureState& a, const PureState& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Traces out every qubit not listed in `keep`.
///
/// `keep` holds qubit positions of the input register (0 = highest bit);
/// the output register orders the kept qubits ascending by input position.
/// Throws invalid_partition when `keep` is empty, covers the whole register,
/// repeats a position, or names a position outside the register.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<Qubit> keep);

/// 1 - tr(rho^2); zero for pure states, 1 - 1/d for maximally mixed ones.
double linear_entropy(const DensityMatrix& rho);

} // namespace relent
