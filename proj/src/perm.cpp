#include "nptcert/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "nptcert/config.hpp"
#include "nptcert/errors.hpp"

namespace nptcert {

namespace {

int inversion_sign(const std::vector<int>& images) {
    int inversions = 0;
    const int d = static_cast<int>(images.size());
    for (int s = 0; s < d; ++s)
        for (int t = s + 1; t < d; ++t)
            if (images[s] > images[t]) ++inversions;
    return (inversions % 2 == 0) ? +1 : -1;
}

void check_degree_cap(int degree, const char* who) {
    if (degree < 1 || degree > kMaxPermDegree) {
        throw SizeLimitError(std::string(who) + ": degree " + std::to_string(degree) +
                             " outside [1, " + std::to_string(kMaxPermDegree) +
                             "] (d! enumeration bound)");
    }
}

} // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int d = static_cast<int>(images_.size());
    if (d == 0) throw std::invalid_argument("Permutation: empty image list");
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    for (int v : images_) {
        if (v < 1 || v > d || seen[static_cast<std::size_t>(v) - 1])
            throw std::invalid_argument("Permutation: image list is not a bijection on {1..d}");
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
    sign_ = inversion_sign(images_);
}

Permutation Permutation::identity(int degree) {
    if (degree < 1) throw std::invalid_argument("Permutation::identity: degree must be positive");
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(int degree, int a, int b) {
    if (a < 1 || a > degree || b < 1 || b > degree || a == b)
        throw std::invalid_argument("Permutation::transposition: need distinct a, b in {1..d}");
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    std::swap(images[static_cast<std::size_t>(a) - 1], images[static_cast<std::size_t>(b) - 1]);
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
    for (int t = 1; t <= degree(); ++t)
        if ((*this)(t) != t) return false;
    return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("compose: degree mismatch");
    const int d = p.degree();
    std::vector<int> images(static_cast<std::size_t>(d));
    for (int t = 1; t <= d; ++t) images[static_cast<std::size_t>(t) - 1] = p(q(t));
    return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
    const int d = p.degree();
    std::vector<int> images(static_cast<std::size_t>(d));
    for (int t = 1; t <= d; ++t) images[static_cast<std::size_t>(p(t)) - 1] = t;
    return Permutation(std::move(images));
}

std::vector<Permutation> enumerate_perms(int degree) {
    check_degree_cap(degree, "enumerate_perms");
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    out.reserve(kFactorial[degree]);
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::vector<Permutation> alternating(int degree) {
    check_degree_cap(degree, "alternating");
    std::vector<Permutation> out;
    out.reserve(kFactorial[degree] / 2 + 1);
    for (auto& p : enumerate_perms(degree))
        if (p.sign() > 0) out.push_back(std::move(p));
    return out;
}

std::uint64_t perm_basis_index(const Permutation& p) {
    const int d = p.degree();
    std::uint64_t index = 0;
    for (int t = 1; t <= d; ++t)
        index = index * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(p(t) - 1);
    return index;
}

Eigen::MatrixXd permutation_matrix(const Permutation& p) {
    const int d = p.degree();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    for (int k = 1; k <= d; ++k) m(p(k) - 1, k - 1) = 1.0;
    return m;
}

} // namespace nptcert
