#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace nptcert {

// splitmix64 finalizer over seed + golden-ratio stream offset. Used to derive
// independent substream seeds (per restart, per fixture) from one base seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Deterministic Gaussian source: mt19937_64 driving an explicit Box-Muller
// transform. Both pieces are fully specified, so identical seeds reproduce
// identical bits on any conforming platform (std::normal_distribution gives
// no such guarantee). The exact draw order is documented in the README and
// is part of the serialization contract for seeded states.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // uniform double in (0, 1]
    double uniform();
    // standard normal N(0,1)
    double normal();
    // re + i*im with independent N(0,1) parts, re drawn first
    std::complex<double> complex_normal();

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// rows x cols matrix of iid complex standard Gaussians, drawn row-major.
Eigen::MatrixXcd gaussian_matrix(int rows, int cols, Rng& rng);

// Haar-distributed unitary: QR of a Gaussian matrix with the column phase
// fix Q <- Q * diag(r_kk / |r_kk|).
Eigen::MatrixXcd haar_unitary(int dim, Rng& rng);

// First k columns of a Haar unitary: a uniformly random orthonormal k-frame.
Eigen::MatrixXcd haar_frame(int dim, int k, Rng& rng);

} // namespace nptcert
