#include "relent/qubits.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace relent {

namespace {

constexpr double norm_tol = 1e-12;

int qubit_count_for_dimension(Eigen::Index dim, std::initializer_list<int> allowed) {
    for (int n : allowed) {
        if (dim == (Eigen::Index{1} << n)) {
            return n;
        }
    }
    throw dimension_mismatch("unsupported register dimension " + std::to_string(dim));
}

} // namespace

PureState::PureState(Vector amplitudes) : amps_(std::move(amplitudes)) {
    qubit_count_ = qubit_count_for_dimension(amps_.size(), {1, 2, 4});
    if (std::abs(amps_.norm() - 1.0) > norm_tol) {
        throw error("pure state is not normalized: |norm - 1| = " +
                    std::to_string(std::abs(amps_.norm() - 1.0)));
    }
}

PureState PureState::basis(int qubit_count, int index) {
    if (qubit_count != 1 && qubit_count != 2 && qubit_count != 4) {
        throw dimension_mismatch("basis: qubit_count must be 1, 2 or 4");
    }
    const int dim = 1 << qubit_count;
    if (index < 0 || index >= dim) {
        throw error("basis index out of range");
    }
    Vector v = Vector::Zero(dim);
    v(index) = 1.0;
    return PureState(std::move(v));
}

DensityMatrix PureState::density() const {
    return DensityMatrix(amps_ * amps_.adjoint());
}

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        throw dimension_mismatch("density matrix must be square");
    }
    qubit_count_ = qubit_count_for_dimension(entries_.rows(), {1, 2, 3, 4});
    if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > norm_tol) {
        throw error("density matrix is not Hermitian");
    }
    if (std::abs(entries_.trace().real() - 1.0) > norm_tol ||
        std::abs(entries_.trace().imag()) > norm_tol) {
        throw error("density matrix trace is not 1");
    }
}

double DensityMatrix::purity() const {
    // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    return entries_.squaredNorm();
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Vector kron(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

PureState tensor(const PureState& a, const PureState& b) {
    return PureState(kron(a.amplitudes(), b.amplitudes()));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix(kron(a.entries(), b.entries()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    const int n = rho.qubit_count();
    std::vector<int> kept(keep);
    std::sort(kept.begin(), kept.end());
    if (kept.empty() || static_cast<int>(kept.size()) >= n) {
        throw invalid_partition("keep set must be a nonempty proper subset of the register");
    }
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
        throw invalid_partition("keep set repeats a qubit");
    }
    if (kept.front() < 0 || kept.back() >= n) {
        throw invalid_partition("keep set names a qubit outside the register");
    }

    std::vector<int> dropped;
    for (int q = 0; q < n; ++q) {
        if (!std::binary_search(kept.begin(), kept.end(), q)) {
            dropped.push_back(q);
        }
    }

    // Qubit q occupies bit (n-1-q) of a basis index.
    auto scatter = [n](const std::vector<int>& qubits, int packed) {
        int idx = 0;
        for (std::size_t i = 0; i < qubits.size(); ++i) {
            const int bit = (packed >> (qubits.size() - 1 - i)) & 1;
            idx |= bit << (n - 1 - qubits[i]);
        }
        return idx;
    };

    const int dim_keep = 1 << kept.size();
    const int dim_drop = 1 << dropped.size();
    Matrix out = Matrix::Zero(dim_keep, dim_keep);
    for (int r = 0; r < dim_keep; ++r) {
        for (int c = 0; c < dim_keep; ++c) {
            Complex sum = 0.0;
            for (int d = 0; d < dim_drop; ++d) {
                const int row = scatter(kept, r) | scatter(dropped, d);
                const int col = scatter(kept, c) | scatter(dropped, d);
                sum += rho.entries()(row, col);
            }
            out(r, c) = sum;
        }
    }
    return DensityMatrix(std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<Qubit> keep) {
    std::vector<int> positions;
    positions.reserve(keep.size());
    for (Qubit q : keep) {
        positions.push_back(static_cast<int>(q));
    }
    return partial_trace(rho, positions);
}

double linear_entropy(const DensityMatrix& rho) {
    return 1.0 - rho.purity();
}

} // namespace relent
