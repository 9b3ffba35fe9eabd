#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "nptcert/config.hpp"

namespace nptcert {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Dense operator on H_A (x) H_B with explicit local dimensions.
// Composite index convention (A-major): basis state |i,j> sits at
// row (i-1)*dim_b + (j-1), 1-based i, j.
struct BipartiteOperator {
    int dim_a = 0;
    int dim_b = 0;
    Matrix mat;

    int dim() const { return dim_a * dim_b; }
    // <i,j| M |k,l>, all 1-based
    Complex elem(int i, int j, int k, int l) const {
        return mat((i - 1) * dim_b + (j - 1), (k - 1) * dim_b + (l - 1));
    }
};

// max(1, largest |entry|)
double entry_scale(const Matrix& m);
// max-entry deviation from m = m^dagger
double herm_defect(const Matrix& m);

// Kronecker product / n-fold power (left-associated). Output beyond
// element_cap entries raises SizeLimitError. OpenMP over output blocks;
// element writes are independent, so the result is thread-count invariant.
Matrix kron(const Matrix& a, const Matrix& b, std::size_t element_cap = kKronElementCap);
Matrix kron_power(const Matrix& a, int n, std::size_t element_cap = kKronElementCap);

// Transposition of subsystem B only: <i,j|out|k,l> = <i,l|in|k,j>.
BipartiteOperator partial_transpose(const BipartiteOperator& op);

struct EigResult {
    Eigen::VectorXd values; // ascending
    Matrix vectors;         // orthonormal columns, phase-fixed
};

// Hermitian eigendecomposition. Input must be Hermitian within tol_herm
// (max-entry defect), otherwise std::invalid_argument reporting the
// violation magnitude. The phase of each eigenvector is fixed so that its
// largest-magnitude component is real nonnegative.
EigResult hermitian_eig(const Matrix& h, double tol_herm = 1e-10);

// Determinant via pivoted LU (reference oracle path).
Complex det_lu(const Matrix& c);
// Determinant via the Leibniz sum over S_d; size capped at kMaxPermDegree.
Complex det_perm_sum(const Matrix& c);

// Minor selection; 1-based row/column index lists, no duplicates.
Matrix submatrix(const Matrix& c, const std::vector<int>& rows, const std::vector<int>& cols);

namespace reference {
// Serial nested-loop Kronecker product, kept as the comparison baseline for
// the parallel kernel.
Matrix kron(const Matrix& a, const Matrix& b);
} // namespace reference

} // namespace nptcert
