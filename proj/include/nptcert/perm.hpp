#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace nptcert {

// A permutation f of {1..d}, stored as the image list images[t-1] = f(t),
// with the sign cached at construction. Immutable.
class Permutation {
public:
    // Validates that images is a bijection on {1..d}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);
    // The transposition swapping a and b (1-based), identity elsewhere.
    static Permutation transposition(int degree, int a, int b);

    int degree() const { return static_cast<int>(images_.size()); }
    // f(t) for 1-based t
    int operator()(int t) const { return images_[static_cast<std::size_t>(t) - 1]; }
    const std::vector<int>& images() const { return images_; }
    int sign() const { return sign_; }
    bool is_identity() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<int> images_;
    int sign_;
};

// (p o q)(t) = p(q(t)); degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

// All of S_d in lexicographic order of the image list; the identity first.
// Degree is capped (d! growth); violations raise SizeLimitError.
std::vector<Permutation> enumerate_perms(int degree);
// The even permutations A_d, in the order induced by enumerate_perms.
std::vector<Permutation> alternating(int degree);

// Index of |f> = |f(1),...,f(d)> in the d^d tensor basis, big-endian:
// sum_t (f(t)-1) * d^(d-t).
std::uint64_t perm_basis_index(const Permutation& p);

// d x d 0/1 matrix with P|k> = |f(k)>: column k-1 has its 1 in row f(k)-1.
Eigen::MatrixXd permutation_matrix(const Permutation& p);

} // namespace nptcert
