#include "entbounds/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace entbounds {

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) = std::conj((*this)(i, j));
    return out;
}

cxd ComplexMatrix::trace() const {
    cxd t = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cxd& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cxd& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    ComplexMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const cxd aik = a(i, k);
            if (aik == cxd{}) continue;
            for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum: dimension mismatch");
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix difference: dimension mismatch");
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

ComplexMatrix operator*(cxd s, const ComplexMatrix& a) {
    ComplexMatrix out = a;
    for (cxd& v : out.data_) v *= s;
    return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i1 = 0; i1 < a.rows(); ++i1)
        for (int j1 = 0; j1 < a.cols(); ++j1) {
            const cxd aij = a(i1, j1);
            if (aij == cxd{}) continue;
            for (int i2 = 0; i2 < b.rows(); ++i2)
                for (int j2 = 0; j2 < b.cols(); ++j2)
                    out(i1 * b.rows() + i2, j1 * b.cols() + j2) = aij * b(i2, j2);
        }
    return out;
}

namespace {

// Scatter the bits of `sub` (one per listed qubit, big-endian over the list)
// into their positions inside a full n-qubit basis index.
int scatter_bits(int sub, const std::vector<int>& qubits, int n) {
    int full = 0;
    const int count = static_cast<int>(qubits.size());
    for (int pos = 0; pos < count; ++pos) {
        const int bit = (sub >> (count - 1 - pos)) & 1;
        full |= bit << (n - 1 - qubits[pos]);
    }
    return full;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    const int n = static_cast<int>(rho.dims.size());
    for (int d : rho.dims)
        if (d != 2) throw std::invalid_argument("partial_trace: only qubit subsystems supported");
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep set must be nonempty");

    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
        throw std::invalid_argument("partial_trace: duplicate subsystem index");
    if (kept.front() < 0 || kept.back() >= n)
        throw std::invalid_argument("partial_trace: subsystem index out of range");

    std::vector<int> traced;
    for (int q = 0; q < n; ++q)
        if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);

    const int dim_keep = 1 << kept.size();
    const int dim_traced = 1 << traced.size();
    ComplexMatrix out(dim_keep, dim_keep);
    for (int i = 0; i < dim_keep; ++i) {
        const int row_base = scatter_bits(i, kept, n);
        for (int j = 0; j < dim_keep; ++j) {
            const int col_base = scatter_bits(j, kept, n);
            cxd sum = 0.0;
            for (int r = 0; r < dim_traced; ++r) {
                const int env = scatter_bits(r, traced, n);
                sum += rho.matrix(row_base | env, col_base | env);
            }
            out(i, j) = sum;
        }
    }
    return DensityMatrix{std::vector<int>(kept.size(), 2), std::move(out)};
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i; j < m.cols(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    return true;
}

EigenSystem hermitian_eig(const ComplexMatrix& h) {
    if (h.rows() != h.cols()) throw std::invalid_argument("hermitian_eig: matrix must be square");
    if (!is_hermitian(h, 1e-10)) throw std::invalid_argument("hermitian_eig: matrix not Hermitian");

    const int n = h.rows();
    ComplexMatrix a = h;
    // Symmetrize away sub-tolerance noise so the rotations see exact input.
    for (int i = 0; i < n; ++i) {
        a(i, i) = cxd{a(i, i).real(), 0.0};
        for (int j = i + 1; j < n; ++j) {
            const cxd avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double tol = 1e-14 * std::max(1.0, a.frobenius_norm());

    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += 2.0 * std::norm(a(i, j));
        return std::sqrt(s);
    };

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    for (; sweep < kMaxSweeps && off_norm() > tol; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cxd apq = a(p, q);
                const double h_abs = std::abs(apq);
                if (h_abs == 0.0) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Unitary U = diag(1, phase') * real Givens rotation zeroing
                // the (p,q) element of the phase-rotated 2x2 block.
                const double theta = 0.5 * std::atan2(2.0 * h_abs, app - aqq);
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                const cxd phase = apq / h_abs;           // e^{i arg(apq)}
                const cxd spc = std::conj(phase) * s;    // U(q,p)
                // Rows (left-multiplication by U^dagger):
                for (int j = 0; j < n; ++j) {
                    const cxd tp = a(p, j);
                    const cxd tq = a(q, j);
                    a(p, j) = c * tp + phase * s * tq;
                    a(q, j) = -s * tp + phase * c * tq;
                }
                // Columns (right-multiplication by U):
                for (int i = 0; i < n; ++i) {
                    const cxd tp = a(i, p);
                    const cxd tq = a(i, q);
                    a(i, p) = c * tp + spc * tq;
                    a(i, q) = -s * tp + std::conj(phase) * c * tq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    const cxd tp = v(i, p);
                    const cxd tq = v(i, q);
                    v(i, p) = c * tp + spc * tq;
                    v(i, q) = -s * tp + std::conj(phase) * c * tq;
                }
            }
        }
    }
    if (sweep == kMaxSweeps && off_norm() > tol)
        throw std::runtime_error("hermitian_eig: Jacobi iteration did not converge");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    EigenSystem sys;
    sys.eigenvalues.resize(n);
    sys.eigenvectors = ComplexMatrix(n, n);
    for (int col = 0; col < n; ++col) {
        sys.eigenvalues[col] = a(order[col], order[col]).real();
        for (int row = 0; row < n; ++row) sys.eigenvectors(row, col) = v(row, order[col]);
    }
    return sys;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& rho) {
    EigenSystem sys = hermitian_eig(rho);
    const int n = rho.rows();
    for (double& lam : sys.eigenvalues) {
        if (lam < -1e-10) throw std::domain_error("psd_sqrt: matrix not positive semidefinite");
        if (lam < 0.0) lam = 0.0;
    }
    ComplexMatrix out(n, n);
    for (int col = 0; col < n; ++col) {
        const double root = std::sqrt(sys.eigenvalues[col]);
        if (root == 0.0) continue;
        for (int i = 0; i < n; ++i) {
            const cxd vi = sys.eigenvectors(i, col);
            if (vi == cxd{}) continue;
            for (int j = 0; j < n; ++j)
                out(i, j) += root * vi * std::conj(sys.eigenvectors(j, col));
        }
    }
    return out;
}

void validate_density(const DensityMatrix& rho) {
    long long expected = 1;
    for (int d : rho.dims) expected *= d;
    if (rho.matrix.rows() != rho.matrix.cols() || rho.matrix.rows() != expected)
        throw std::invalid_argument("density matrix: dimension mismatch with subsystem list");
    if (!is_hermitian(rho.matrix, 1e-10))
        throw std::invalid_argument("density matrix: not Hermitian");
    if (std::abs(rho.matrix.trace() - cxd{1.0, 0.0}) > 1e-10)
        throw std::invalid_argument("density matrix: trace not 1");
    const EigenSystem sys = hermitian_eig(rho.matrix);
    if (sys.eigenvalues.back() < -1e-10)
        throw std::invalid_argument("density matrix: negative eigenvalue");
}

}  // namespace entbounds
