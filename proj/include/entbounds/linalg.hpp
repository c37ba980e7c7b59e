#pragma once

#include <complex>
#include <vector>

namespace entbounds {

using cxd = std::complex<double>;

// Dense row-major complex matrix. Everything in this project is at most
// 32x32 (five qubits), so the implementation favours clarity over blocking.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cxd& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const cxd& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;
    cxd trace() const;
    double max_abs() const;
    double frobenius_norm() const;

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(cxd s, const ComplexMatrix& a);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cxd> data_;
};

// Density operator over a list of subsystems. Subsystem 0 is the leftmost
// tensor factor (party A); basis indices are big-endian bit strings.
struct DensityMatrix {
    std::vector<int> dims;  // each entry 2 in this project
    ComplexMatrix matrix;
};

struct EigenSystem {
    std::vector<double> eigenvalues;  // descending
    ComplexMatrix eigenvectors;       // columns, orthonormal, matching order
};

// Kronecker product; the left factor carries the high-order index bits.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// Reduced density matrix on `keep` (original relative order preserved).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

// Cyclic Jacobi eigendecomposition of a Hermitian matrix. Off-diagonal
// Frobenius norm is driven below 1e-14 (relative to the matrix norm),
// at most 100 sweeps. Rejects non-Hermitian input (tolerance 1e-10).
EigenSystem hermitian_eig(const ComplexMatrix& h);

// Hermitian PSD square root. Eigenvalues in [-1e-10, 0) are clamped to 0;
// anything below -1e-10 is rejected as not positive semidefinite.
ComplexMatrix psd_sqrt(const ComplexMatrix& rho);

bool is_hermitian(const ComplexMatrix& m, double tol);

// Hermiticity, unit trace and eigenvalue floor checks; throws on failure.
void validate_density(const DensityMatrix& rho);

}  // namespace entbounds
