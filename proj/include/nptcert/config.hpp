#pragma once

#include <cstddef>
#include <cstdint>

namespace nptcert {

// Numerical tolerances used across the toolkit. Comparisons of two values
// x, y are made against scale = max(1, |x|, |y|) unless a contract states an
// absolute tolerance.
struct Tolerances {
    double herm = 1e-10;    // max-entry Hermiticity defect
    double neg = 1e-10;     // negativity decision threshold (absolute)
    double schmidt = 1e-9;  // Schmidt coefficient truncation threshold
    double seesaw_improve = 1e-12; // see-saw stops below this gain
};

// Size caps. Permutation machinery grows as d! and d^d; the pair-state
// evaluations grow quadratically in the term count.
inline constexpr int kMaxPermDegree = 8;     // S_d enumeration and Leibniz sums
inline constexpr int kMaxPsiTildeDegree = 7; // |psi~> evaluation, (7!)^2 pairs
inline constexpr int kMaxPsiBuildDegree = 6; // |psi> construction
inline constexpr int kMaxPsiEvalDegree = 5;  // |psi> evaluation
inline constexpr std::size_t kKronElementCap = std::size_t{1} << 24;
inline constexpr std::size_t kDenseVectorCap = 1'000'000;
inline constexpr std::size_t kCertifyDenseDimCap = 4096;

inline constexpr std::uint64_t kFactorial[9] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};

// scale = max(1, |x|, |y|) helper for relative comparisons.
inline double cmp_scale(double x, double y) {
    double s = 1.0;
    if (x < 0) x = -x;
    if (y < 0) y = -y;
    if (x > s) s = x;
    if (y > s) s = y;
    return s;
}

} // namespace nptcert
