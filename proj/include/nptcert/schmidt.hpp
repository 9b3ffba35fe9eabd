#pragma once

#include <Eigen/Dense>

#include "nptcert/states.hpp"

namespace nptcert {

// Schmidt form of a bipartite pure state: phi = sum_k coefficients[k]
// base_a.col(k) (x) base_b.col(k), coefficients nonnegative and descending.
// All min(dimA, dimB) singular directions are kept; rank counts those above
// the truncation tolerance. Ties keep the order produced by the SVD; each
// local vector's phase is fixed so its largest-magnitude component is real
// nonnegative (the compensating phase is pushed into the partner vector).
struct SchmidtData {
    Eigen::VectorXd coefficients;
    Matrix base_a;
    Matrix base_b;
    int rank = 0;

    PureState reconstruct(int dim_a, int dim_b) const;
};

SchmidtData schmidt_decompose(const PureState& phi, double tol_schmidt = 1e-9);

} // namespace nptcert
