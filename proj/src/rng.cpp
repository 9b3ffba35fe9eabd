#include "nptcert/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nptcert {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform() {
    // 53-bit mantissa, shifted into (0, 1]
    const std::uint64_t bits = gen_() >> 11;
    return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
}

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

std::complex<double> Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

Eigen::MatrixXcd gaussian_matrix(int rows, int cols, Rng& rng) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("gaussian_matrix: dimensions must be positive");
    Eigen::MatrixXcd g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) g(i, j) = rng.complex_normal();
    return g;
}

Eigen::MatrixXcd haar_unitary(int dim, Rng& rng) {
    return haar_frame(dim, dim, rng);
}

Eigen::MatrixXcd haar_frame(int dim, int k, Rng& rng) {
    if (k <= 0 || k > dim) throw std::invalid_argument("haar_frame: need 1 <= k <= dim");
    const Eigen::MatrixXcd g = gaussian_matrix(dim, k, rng);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(dim, k);
    const Eigen::MatrixXcd r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
    for (int j = 0; j < k; ++j) {
        const std::complex<double> rjj = r(j, j);
        const double mag = std::abs(rjj);
        if (mag > 0.0) q.col(j) *= rjj / mag;
    }
    return q;
}

} // namespace nptcert
