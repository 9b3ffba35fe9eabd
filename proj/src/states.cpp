#include "nptcert/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nptcert/rng.hpp"

namespace nptcert {

Matrix swap_operator(int dim) {
    if (dim < 1) throw std::invalid_argument("swap_operator: dim must be positive");
    Matrix f = Matrix::Zero(dim * dim, dim * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) f(j * dim + i, i * dim + j) = 1.0;
    return f;
}

Vector max_entangled(int dim) {
    Vector v = Vector::Zero(dim * dim);
    for (int k = 0; k < dim; ++k) v(k * dim + k) = 1.0 / std::sqrt(static_cast<double>(dim));
    return v;
}

DensityMatrix singlet() {
    Vector v = Vector::Zero(4);
    v(1) = 1.0 / std::sqrt(2.0);  // |1,2>
    v(2) = -1.0 / std::sqrt(2.0); // |2,1>
    return DensityMatrix{BipartiteOperator{2, 2, v * v.adjoint()}};
}

DensityMatrix werner(int dim, double alpha) {
    if (dim < 2) throw std::invalid_argument("werner: dim must be >= 2");
    if (alpha < -1.0 || alpha > 1.0) throw std::invalid_argument("werner: alpha must lie in [-1, 1]");
    const int n = dim * dim;
    const double norm = static_cast<double>(n) + alpha * static_cast<double>(dim);
    Matrix m = (Matrix::Identity(n, n) + alpha * swap_operator(dim)) / norm;
    return DensityMatrix{BipartiteOperator{dim, dim, std::move(m)}};
}

DensityMatrix isotropic(int dim, double fidelity) {
    if (dim < 2) throw std::invalid_argument("isotropic: dim must be >= 2");
    if (fidelity < 0.0 || fidelity > 1.0)
        throw std::invalid_argument("isotropic: fidelity must lie in [0, 1]");
    const int n = dim * dim;
    const Vector phi = max_entangled(dim);
    const Matrix proj = phi * phi.adjoint();
    Matrix m = fidelity * proj + (1.0 - fidelity) / static_cast<double>(n - 1) * (Matrix::Identity(n, n) - proj);
    return DensityMatrix{BipartiteOperator{dim, dim, std::move(m)}};
}

DensityMatrix horodecki_3x3(double a) {
    if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("horodecki_3x3: need 0 < a < 1");
    const double b = (1.0 + a) / 2.0;
    const double c = std::sqrt(1.0 - a * a) / 2.0;
    Matrix m = Matrix::Zero(9, 9);
    // basis order |11>,|12>,|13>,|21>,|22>,|23>,|31>,|32>,|33>
    for (int k : {0, 1, 2, 3, 4, 5, 7}) m(k, k) = a;
    m(6, 6) = b;
    m(8, 8) = b;
    m(0, 4) = m(4, 0) = a;
    m(0, 8) = m(8, 0) = a;
    m(4, 8) = m(8, 4) = a;
    m(6, 8) = m(8, 6) = c;
    m /= (8.0 * a + 1.0);
    return DensityMatrix{BipartiteOperator{3, 3, std::move(m)}};
}

DensityMatrix random_density(int dim_a, int dim_b, int rank, std::uint64_t seed) {
    if (dim_a < 1 || dim_b < 1) throw std::invalid_argument("random_density: dimensions must be positive");
    const int n = dim_a * dim_b;
    if (rank < 1 || rank > n)
        throw std::invalid_argument("random_density: rank must lie in [1, dimA*dimB]");
    Rng rng(seed);
    const Matrix g = gaussian_matrix(n, rank, rng);
    Matrix m = g * g.adjoint();
    m /= m.trace().real();
    return DensityMatrix{BipartiteOperator{dim_a, dim_b, std::move(m)}};
}

DensityMatrix maximally_mixed(int dim_a, int dim_b) {
    if (dim_a < 1 || dim_b < 1) throw std::invalid_argument("maximally_mixed: dimensions must be positive");
    const int n = dim_a * dim_b;
    return DensityMatrix{BipartiteOperator{dim_a, dim_b, Matrix::Identity(n, n) / static_cast<double>(n)}};
}

StateValidation validate(const DensityMatrix& rho, const Tolerances& tol) {
    StateValidation report;
    report.herm_defect = herm_defect(rho.op.mat);
    report.trace_defect = std::abs(rho.op.mat.trace() - Complex(1.0, 0.0));
    // eigenvalues of the Hermitian part; safe even when the input fails the check
    const Matrix sym = 0.5 * (rho.op.mat + rho.op.mat.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
    report.min_eigenvalue = solver.eigenvalues().minCoeff();
    report.pass = report.herm_defect <= tol.herm && report.trace_defect <= tol.herm &&
                  report.min_eigenvalue >= -tol.herm;
    return report;
}

BipartiteOperator pt(const DensityMatrix& rho) {
    return partial_transpose(rho.op);
}

} // namespace nptcert
