#pragma once

#include <cstddef>
#include <vector>

#include "nptcert/config.hpp"
#include "nptcert/linalg.hpp"
#include "nptcert/perm.hpp"

namespace nptcert {

struct PairTerm {
    Permutation f;
    Permutation g;
    double coeff = 0.0;
};

// Sum_i c_i |f_i, g_i> with |f,g> = (x)_{t=1..d} |f(t)>_A (x) |g(t)>_B,
// copy-major (copy 1 in the most significant digits). The terms live on
// pairwise-orthonormal basis vectors as long as no (f,g) pair repeats.
struct SignedPairSuperposition {
    int degree = 0;
    std::vector<PairTerm> terms;

    // degrees consistent, no duplicate (f,g) pair
    void validate() const;
    // orthonormal terms: sum of squared coefficients
    double norm_sq() const;
};

// Single-system counterpart: sum_i c_i |f_i>.
struct PermTerm {
    Permutation f;
    double coeff = 0.0;
};

// <bra| C^(x)d |ket> = sum_{i,j} c'_i c_j prod_t <f'_i(t),g'_i(t)|C|f_j(t),g_j(t)>,
// evaluated without materializing C^(x)d. Cost O(|bra|*|ket|*d). Requires
// dim_a >= d and dim_b >= d (permutation labels address the first d local
// basis vectors). OpenMP with deterministic block reduction.
Complex bilinear_pair_form(const BipartiteOperator& c,
                           const SignedPairSuperposition& bra,
                           const SignedPairSuperposition& ket);

// Single-system analogue over a plain m x m matrix (m >= d):
// sum_{i,j} c'_i c_j prod_t C[f'_i(t), f_j(t)].
Complex bilinear_single_form(const Matrix& c,
                             const std::vector<PermTerm>& bra,
                             const std::vector<PermTerm>& ket);

// Explicit state vector in ((A (x) B)^(x)d) ordering, copy-major. Guarded by
// an entry cap; used to cross-check the matrix-free path against kron_power.
Vector dense_vector(const SignedPairSuperposition& s, int dim_a, int dim_b,
                    std::size_t entry_cap = kDenseVectorCap);

// Index map from the copy-major (AB)^(x)n composite basis to the
// A^(x)n : B^(x)n grouped basis (all A factors first). Length (dimA*dimB)^n.
std::vector<std::size_t> cut_index_map(int dim_a, int dim_b, int copies);

// Regroups a copy-major multi-copy vector to the A^(x)n : B^(x)n cut.
Vector regroup_to_cut(const Vector& v, int dim_a, int dim_b, int copies);

namespace reference {
// Plain nested-loop evaluation with straight left-to-right accumulation;
// the serial baseline the parallel kernel is tested against.
Complex bilinear_pair_form(const BipartiteOperator& c,
                           const SignedPairSuperposition& bra,
                           const SignedPairSuperposition& ket);
} // namespace reference

} // namespace nptcert
