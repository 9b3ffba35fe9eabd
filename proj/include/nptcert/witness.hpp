#pragma once

#include <cstdint>
#include <vector>

#include "nptcert/schmidt.hpp"
#include "nptcert/states.hpp"

namespace nptcert {

struct NptResult {
    double min_pt_eigenvalue = 0.0;
    PureState witness; // eigenvector of rho^T2 at the minimum
    bool npt = false;  // min_pt_eigenvalue < -tol.neg
};

// Spectral minimum of rho^T2; the state is NPT iff it dips below -tol.neg.
NptResult npt_check(const DensityMatrix& rho, const Tolerances& tol = {});

struct SeesawOptions {
    int restarts = 32;
    int max_iters = 200;
    std::uint64_t seed = 0;
    Tolerances tol{};
};

struct RankMinResult {
    double value = 0.0;
    PureState phi;
    int best_restart = -1;
    int iterations = 0;              // half-steps taken by the winning run
    std::vector<double> history;     // winning run's value after each half-step
};

// Local minimization of <phi|W|phi> over unit states of Schmidt rank <= k by
// alternating restricted eigenproblems: fixing an orthonormal k-frame on one
// side reduces the problem to an exact minimum-eigenvector computation on the
// other. Values are nonincreasing within a run; the best of all restarts is
// returned (ties resolved by restart index). The result is an upper bound on
// the true constrained minimum.
//
// warm_frames are extra B-side initial frames tried before the seeded random
// restarts; they occupy the leading restart indices.
RankMinResult seesaw_rank_min(const BipartiteOperator& w, int k, const SeesawOptions& opts,
                              const std::vector<Matrix>& warm_frames = {});

// seesaw_rank_min applied to W = rho^T2.
RankMinResult rank_constrained_min(const DensityMatrix& rho, int k, const SeesawOptions& opts);

struct PerRankEntry {
    int k = 0;
    double value = 0.0;
    PureState vector;
    int iterations = 0;
    int best_restart = -1;
};

struct WitnessReport {
    double min_pt_eigenvalue = 0.0;
    PureState witness;
    SchmidtData schmidt;                   // Schmidt data of the witness
    std::vector<PerRankEntry> per_rank;    // k = 1 .. min(dimA, dimB)
    int minimal_rank_estimate = 0;         // 0 when no rank went negative
    bool no_negativity = false;
    // The estimate certifies negativity at that rank only; it proves nothing
    // about ranks below it (see-saw is a heuristic upper bound).
};

// Runs rank_constrained_min for every k, warm-starting rank k from the rank
// k-1 minimizer and from the rank-k truncation of the exact witness, which
// forces per-rank values to be nonincreasing in k.
WitnessReport witness_report(const DensityMatrix& rho, const SeesawOptions& opts);

// Deterministic completion of an orthonormal column set to total_cols
// columns (Gram-Schmidt of canonical basis vectors against the given ones).
Matrix complete_orthonormal(const Matrix& cols, int total_cols);

} // namespace nptcert
