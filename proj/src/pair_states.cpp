#include "nptcert/pair_states.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "nptcert/errors.hpp"
#include "nptcert/parallel.hpp"

namespace nptcert {

void SignedPairSuperposition::validate() const {
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (const PairTerm& term : terms) {
        if (term.f.degree() != degree || term.g.degree() != degree)
            throw std::invalid_argument("SignedPairSuperposition: term degree mismatch");
        if (!seen.emplace(term.f.images(), term.g.images()).second)
            throw std::invalid_argument("SignedPairSuperposition: duplicate (f,g) pair");
    }
}

double SignedPairSuperposition::norm_sq() const {
    double s = 0.0;
    for (const PairTerm& term : terms) s += term.coeff * term.coeff;
    return s;
}

namespace {

// Terms flattened for the kernel: per term, the d composite basis indices
// (f(t)-1)*dim_b + (g(t)-1), plus the coefficient.
struct PackedTerms {
    int degree = 0;
    std::size_t count = 0;
    std::vector<int> composite; // count * degree
    std::vector<double> coeff;  // count
};

PackedTerms pack_pair_terms(const SignedPairSuperposition& s, int dim_b) {
    PackedTerms packed;
    packed.degree = s.degree;
    packed.count = s.terms.size();
    packed.composite.resize(packed.count * static_cast<std::size_t>(s.degree));
    packed.coeff.resize(packed.count);
    for (std::size_t i = 0; i < packed.count; ++i) {
        const PairTerm& term = s.terms[i];
        packed.coeff[i] = term.coeff;
        for (int t = 1; t <= s.degree; ++t)
            packed.composite[i * static_cast<std::size_t>(s.degree) + static_cast<std::size_t>(t - 1)] =
                (term.f(t) - 1) * dim_b + (term.g(t) - 1);
    }
    return packed;
}

PackedTerms pack_single_terms(const std::vector<PermTerm>& terms, int degree) {
    PackedTerms packed;
    packed.degree = degree;
    packed.count = terms.size();
    packed.composite.resize(packed.count * static_cast<std::size_t>(degree));
    packed.coeff.resize(packed.count);
    for (std::size_t i = 0; i < packed.count; ++i) {
        if (terms[i].f.degree() != degree)
            throw std::invalid_argument("bilinear_single_form: term degree mismatch");
        packed.coeff[i] = terms[i].coeff;
        for (int t = 1; t <= degree; ++t)
            packed.composite[i * static_cast<std::size_t>(degree) + static_cast<std::size_t>(t - 1)] =
                terms[i].f(t) - 1;
    }
    return packed;
}

// Deterministic parallel double sum over bra x ket term pairs. The matrix is
// accessed by raw column-major pointer; products accumulate per pair in a
// fixed order inside fixed-size blocks.
Complex packed_form(const Matrix& mat, const PackedTerms& bra, const PackedTerms& ket) {
    const Complex* data = mat.data();
    const std::size_t stride = static_cast<std::size_t>(mat.rows());
    const int d = bra.degree;
    const std::size_t nk = ket.count;
    const std::size_t pairs = bra.count * nk;
    return deterministic_block_sum<Complex>(pairs, [&](std::size_t p) {
        const std::size_t i = p / nk;
        const std::size_t j = p % nk;
        const int* row = bra.composite.data() + i * static_cast<std::size_t>(d);
        const int* col = ket.composite.data() + j * static_cast<std::size_t>(d);
        Complex prod = bra.coeff[i] * ket.coeff[j];
        for (int t = 0; t < d; ++t)
            prod *= data[static_cast<std::size_t>(col[t]) * stride + static_cast<std::size_t>(row[t])];
        return prod;
    });
}

void check_pair_dims(const BipartiteOperator& c, const SignedPairSuperposition& bra,
                     const SignedPairSuperposition& ket) {
    if (bra.degree != ket.degree)
        throw std::invalid_argument("bilinear_pair_form: bra/ket degree mismatch");
    if (c.dim_a < bra.degree || c.dim_b < bra.degree)
        throw std::invalid_argument("bilinear_pair_form: operator local dimensions below the degree");
    if (c.mat.rows() != c.dim() || c.mat.cols() != c.dim())
        throw std::invalid_argument("bilinear_pair_form: operator matrix size mismatch");
}

} // namespace

Complex bilinear_pair_form(const BipartiteOperator& c, const SignedPairSuperposition& bra,
                           const SignedPairSuperposition& ket) {
    check_pair_dims(c, bra, ket);
    return packed_form(c.mat, pack_pair_terms(bra, c.dim_b), pack_pair_terms(ket, c.dim_b));
}

Complex bilinear_single_form(const Matrix& c, const std::vector<PermTerm>& bra,
                             const std::vector<PermTerm>& ket) {
    if (bra.empty() || ket.empty()) return 0.0;
    const int d = bra.front().f.degree();
    if (ket.front().f.degree() != d)
        throw std::invalid_argument("bilinear_single_form: bra/ket degree mismatch");
    if (c.rows() != c.cols() || c.rows() < d)
        throw std::invalid_argument("bilinear_single_form: matrix must be square with size >= degree");
    return packed_form(c, pack_single_terms(bra, d), pack_single_terms(ket, d));
}

Vector dense_vector(const SignedPairSuperposition& s, int dim_a, int dim_b, std::size_t entry_cap) {
    if (dim_a < s.degree || dim_b < s.degree)
        throw std::invalid_argument("dense_vector: local dimensions below the degree");
    const std::size_t local = static_cast<std::size_t>(dim_a) * static_cast<std::size_t>(dim_b);
    std::size_t total = 1;
    for (int t = 0; t < s.degree; ++t) {
        if (total > entry_cap / local) {
            throw SizeLimitError("dense_vector: (dimA*dimB)^d = " + std::to_string(local) + "^" +
                                 std::to_string(s.degree) + " exceeds the cap of " +
                                 std::to_string(entry_cap) + " entries");
        }
        total *= local;
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(total));
    for (const PairTerm& term : s.terms) {
        std::size_t index = 0;
        for (int t = 1; t <= s.degree; ++t) {
            const std::size_t composite = static_cast<std::size_t>(term.f(t) - 1) * static_cast<std::size_t>(dim_b) +
                                          static_cast<std::size_t>(term.g(t) - 1);
            index = index * local + composite;
        }
        v(static_cast<Eigen::Index>(index)) += term.coeff;
    }
    return v;
}

std::vector<std::size_t> cut_index_map(int dim_a, int dim_b, int copies) {
    if (copies < 1) throw std::invalid_argument("cut_index_map: need copies >= 1");
    const std::size_t local = static_cast<std::size_t>(dim_a) * static_cast<std::size_t>(dim_b);
    std::size_t total = 1;
    std::size_t db_pow = 1;
    for (int t = 0; t < copies; ++t) {
        total *= local;
        db_pow *= static_cast<std::size_t>(dim_b);
    }
    std::vector<std::size_t> map(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        // copy-major digits, copy 1 most significant
        std::size_t rem = idx;
        std::size_t a_index = 0, b_index = 0;
        std::size_t shift = total / local;
        for (int t = 0; t < copies; ++t) {
            const std::size_t composite = rem / shift;
            rem %= shift;
            if (t + 1 < copies) shift /= local;
            a_index = a_index * static_cast<std::size_t>(dim_a) + composite / static_cast<std::size_t>(dim_b);
            b_index = b_index * static_cast<std::size_t>(dim_b) + composite % static_cast<std::size_t>(dim_b);
        }
        map[idx] = a_index * db_pow + b_index;
    }
    return map;
}

Vector regroup_to_cut(const Vector& v, int dim_a, int dim_b, int copies) {
    const std::vector<std::size_t> map = cut_index_map(dim_a, dim_b, copies);
    if (v.size() != static_cast<Eigen::Index>(map.size()))
        throw std::invalid_argument("regroup_to_cut: vector length does not match (dimA*dimB)^copies");
    Vector out(v.size());
    for (std::size_t idx = 0; idx < map.size(); ++idx)
        out(static_cast<Eigen::Index>(map[idx])) = v(static_cast<Eigen::Index>(idx));
    return out;
}

namespace reference {

Complex bilinear_pair_form(const BipartiteOperator& c, const SignedPairSuperposition& bra,
                           const SignedPairSuperposition& ket) {
    check_pair_dims(c, bra, ket);
    Complex sum = 0.0;
    for (const PairTerm& bt : bra.terms) {
        for (const PairTerm& kt : ket.terms) {
            Complex prod = bt.coeff * kt.coeff;
            for (int t = 1; t <= bra.degree; ++t)
                prod *= c.elem(bt.f(t), bt.g(t), kt.f(t), kt.g(t));
            sum += prod;
        }
    }
    return sum;
}

} // namespace reference

} // namespace nptcert
