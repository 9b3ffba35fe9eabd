#pragma once

#include <cstdint>

#include "nptcert/config.hpp"
#include "nptcert/linalg.hpp"

namespace nptcert {

// Unit-norm pure state on H_A (x) H_B, composite A-major indexing.
struct PureState {
    int dim_a = 0;
    int dim_b = 0;
    Vector amplitudes;

    double norm() const { return amplitudes.norm(); }
};

// Density operator; Hermitian, unit trace, PSD within tolerances.
struct DensityMatrix {
    BipartiteOperator op;
};

struct StateValidation {
    double herm_defect = 0.0;
    double trace_defect = 0.0;
    double min_eigenvalue = 0.0;
    bool pass = false;
};

// Swap operator F|i,j> = |j,i> on dim (x) dim.
Matrix swap_operator(int dim);
// |Phi+> = sum_k |k,k> / sqrt(dim)
Vector max_entangled(int dim);

// 2 (x) 2 projector onto (|1,2> - |2,1>)/sqrt(2).
DensityMatrix singlet();
// (I + alpha F) / (dim^2 + alpha dim); NPT iff alpha < -1/dim.
DensityMatrix werner(int dim, double alpha);
// fidelity |Phi+><Phi+| + (1-fidelity) (I - |Phi+><Phi+|)/(dim^2-1).
DensityMatrix isotropic(int dim, double fidelity);
// The one-parameter 3 (x) 3 PPT-entangled family, 0 < a < 1.
DensityMatrix horodecki_3x3(double a);
// G G^dagger / tr(G G^dagger) with G an N x rank seeded complex Gaussian
// matrix; identical seeds reproduce identical bytes.
DensityMatrix random_density(int dim_a, int dim_b, int rank, std::uint64_t seed);
// I / (dim_a * dim_b)
DensityMatrix maximally_mixed(int dim_a, int dim_b);

StateValidation validate(const DensityMatrix& rho, const Tolerances& tol = {});

// Convenience: partial transpose of the state's operator.
BipartiteOperator pt(const DensityMatrix& rho);

} // namespace nptcert
