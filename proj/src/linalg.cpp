#include "nptcert/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "nptcert/errors.hpp"
#include "nptcert/perm.hpp"

namespace nptcert {

double entry_scale(const Matrix& m) {
    return std::max(1.0, m.cwiseAbs().maxCoeff());
}

double herm_defect(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("herm_defect: matrix not square");
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

namespace {

void check_kron_cap(Eigen::Index rows, Eigen::Index cols, std::size_t cap) {
    const std::size_t elems = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    if (elems > cap) {
        throw SizeLimitError("kron: result would hold " + std::to_string(elems) +
                             " elements, above the cap of " + std::to_string(cap));
    }
}

} // namespace

Matrix kron(const Matrix& a, const Matrix& b, std::size_t element_cap) {
    const Eigen::Index ra = a.rows(), ca = a.cols();
    const Eigen::Index rb = b.rows(), cb = b.cols();
    check_kron_cap(ra * rb, ca * cb, element_cap);
    Matrix out(ra * rb, ca * cb);
#pragma omp parallel for collapse(2) schedule(static)
    for (Eigen::Index i = 0; i < ra; ++i)
        for (Eigen::Index j = 0; j < ca; ++j)
            out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    return out;
}

Matrix kron_power(const Matrix& a, int n, std::size_t element_cap) {
    if (n < 1) throw std::invalid_argument("kron_power: need n >= 1");
    Matrix out = a;
    for (int i = 1; i < n; ++i) out = kron(out, a, element_cap);
    return out;
}

BipartiteOperator partial_transpose(const BipartiteOperator& op) {
    const int da = op.dim_a, db = op.dim_b;
    if (op.mat.rows() != op.dim() || op.mat.cols() != op.dim())
        throw std::invalid_argument("partial_transpose: matrix size does not match dim_a*dim_b");
    BipartiteOperator out{da, db, Matrix(op.dim(), op.dim())};
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j)
            for (int k = 0; k < da; ++k)
                for (int l = 0; l < db; ++l)
                    out.mat(i * db + j, k * db + l) = op.mat(i * db + l, k * db + j);
    return out;
}

EigResult hermitian_eig(const Matrix& h, double tol_herm) {
    if (h.rows() != h.cols()) throw std::invalid_argument("hermitian_eig: matrix not square");
    const double defect = herm_defect(h);
    if (defect > tol_herm) {
        throw std::invalid_argument("hermitian_eig: input not Hermitian, max-entry defect " +
                                    std::to_string(defect) + " exceeds " + std::to_string(tol_herm));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eig: eigensolver did not converge");
    EigResult result{solver.eigenvalues(), solver.eigenvectors()};
    // phase fix: largest-magnitude component real nonnegative
    for (Eigen::Index k = 0; k < result.vectors.cols(); ++k) {
        Eigen::Index imax = 0;
        result.vectors.col(k).cwiseAbs().maxCoeff(&imax);
        const Complex pivot = result.vectors(imax, k);
        const double mag = std::abs(pivot);
        if (mag > 0.0) result.vectors.col(k) *= std::conj(pivot) / mag;
    }
    return result;
}

Complex det_lu(const Matrix& c) {
    if (c.rows() != c.cols()) throw std::invalid_argument("det_lu: matrix not square");
    return Eigen::PartialPivLU<Matrix>(c).determinant();
}

Complex det_perm_sum(const Matrix& c) {
    if (c.rows() != c.cols()) throw std::invalid_argument("det_perm_sum: matrix not square");
    const int d = static_cast<int>(c.rows());
    if (d > kMaxPermDegree) {
        throw SizeLimitError("det_perm_sum: size " + std::to_string(d) + " exceeds the Leibniz cap of " +
                             std::to_string(kMaxPermDegree));
    }
    Complex sum = 0.0;
    for (const Permutation& f : enumerate_perms(d)) {
        Complex prod = static_cast<double>(f.sign());
        for (int t = 1; t <= d; ++t) prod *= c(t - 1, f(t) - 1);
        sum += prod;
    }
    return sum;
}

Matrix submatrix(const Matrix& c, const std::vector<int>& rows, const std::vector<int>& cols) {
    auto check = [&](const std::vector<int>& idx, Eigen::Index bound, const char* which) {
        std::vector<bool> seen(static_cast<std::size_t>(bound), false);
        for (int v : idx) {
            if (v < 1 || v > bound)
                throw std::invalid_argument(std::string("submatrix: ") + which + " index out of range");
            if (seen[static_cast<std::size_t>(v) - 1])
                throw std::invalid_argument(std::string("submatrix: duplicate ") + which + " index");
            seen[static_cast<std::size_t>(v) - 1] = true;
        }
    };
    check(rows, c.rows(), "row");
    check(cols, c.cols(), "column");
    Matrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = c(rows[i] - 1, cols[j] - 1);
    return out;
}

namespace reference {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

} // namespace reference

} // namespace nptcert
