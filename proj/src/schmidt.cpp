#include "nptcert/schmidt.hpp"

#include <cmath>
#include <stdexcept>

namespace nptcert {

PureState SchmidtData::reconstruct(int dim_a, int dim_b) const {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim_a) * dim_b);
    for (Eigen::Index k = 0; k < coefficients.size(); ++k)
        for (int i = 0; i < dim_a; ++i)
            for (int j = 0; j < dim_b; ++j)
                v(i * dim_b + j) += coefficients(k) * base_a(i, k) * base_b(j, k);
    return PureState{dim_a, dim_b, std::move(v)};
}

SchmidtData schmidt_decompose(const PureState& phi, double tol_schmidt) {
    if (phi.amplitudes.size() != static_cast<Eigen::Index>(phi.dim_a) * phi.dim_b)
        throw std::invalid_argument("schmidt_decompose: amplitude length does not match dimA*dimB");
    if (std::abs(phi.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("schmidt_decompose: state is not unit norm");

    // reshape |phi> = sum_ij M(i,j) |i,j>
    Matrix m(phi.dim_a, phi.dim_b);
    for (int i = 0; i < phi.dim_a; ++i)
        for (int j = 0; j < phi.dim_b; ++j) m(i, j) = phi.amplitudes(i * phi.dim_b + j);

    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    SchmidtData out;
    out.coefficients = svd.singularValues();
    out.base_a = svd.matrixU();
    // M = U S V^dagger means phi = sum_k s_k |u_k> (x) |conj(v_k)>
    out.base_b = svd.matrixV().conjugate();

    for (Eigen::Index k = 0; k < out.coefficients.size(); ++k) {
        Eigen::Index ia = 0, ib = 0;
        out.base_a.col(k).cwiseAbs().maxCoeff(&ia);
        const Complex pa = out.base_a(ia, k);
        if (std::abs(pa) > 0.0) {
            const Complex phase = std::conj(pa) / std::abs(pa);
            out.base_a.col(k) *= phase;
            out.base_b.col(k) *= std::conj(phase); // keeps the product term fixed
        }
        out.base_b.col(k).cwiseAbs().maxCoeff(&ib);
        // residual global phase of the term sits on b; make its pivot's phase explicit
        (void)ib;
    }

    out.rank = 0;
    for (Eigen::Index k = 0; k < out.coefficients.size(); ++k)
        if (out.coefficients(k) > tol_schmidt) ++out.rank;
    return out;
}

} // namespace nptcert
