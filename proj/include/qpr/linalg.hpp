#pragma once

#include <span>
#include <vector>

#include "qpr/field.hpp"
#include "qpr/index_set.hpp"
#include "qpr/matrix.hpp"

namespace qpr {

/// Reusable determinant engine. Classifying one matrix means computing
/// thousands of minors, so the working buffers are kept across calls
/// (for rationals this also recycles GMP limb allocations).
template <class S> class DetWorkspace;

/// Exact determinant over Q. Entries are scaled row-wise to integers
/// (one LCM per row), the integer matrix is reduced by fraction-free
/// elimination, and the accumulated row scaling is divided out once at
/// the end. Keeps all intermediate values integral.
template <> class DetWorkspace<Rational> {
  public:
    Rational det(const Mat<Rational>& m);
    Rational det_sub(const SymMat<Rational>& B, std::span<const int> alpha,
                     std::span<const int> beta);

  private:
    Rational run(int n);

    std::vector<mpz_class> z_; // n x n integer working matrix, row-major
    mpz_class denom_;          // product of row scalings
    mpz_class lcm_, t0_, t1_;  // scratch
};

/// Determinant over GF(p) by straightforward elimination; residues are
/// kept in 64-bit words, so products of values < 2^31 never overflow.
template <> class DetWorkspace<Fp> {
  public:
    Fp det(const Mat<Fp>& m);
    Fp det_sub(const SymMat<Fp>& B, std::span<const int> alpha, std::span<const int> beta);

  private:
    std::uint64_t run(int n, std::uint64_t p);

    std::vector<std::uint64_t> z_;
    std::uint32_t p_ = 0;
};

template <class S> S det(const Mat<S>& m) {
    DetWorkspace<S> ws;
    return ws.det(m);
}

template <class S>
S det_of_submatrix(const SymMat<S>& B, const IndexSet& alpha, const IndexSet& beta) {
    DetWorkspace<S> ws;
    return ws.det_sub(B, alpha.span(), beta.span());
}

/// Rank by Gaussian elimination with exact field arithmetic.
template <class S> int rank(Mat<S> m) {
    int nr = m.rows(), nc = m.cols();
    int r = 0;
    for (int col = 0; col < nc && r < nr; ++col) {
        int piv = -1;
        for (int i = r; i < nr; ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != r)
            for (int j = col; j < nc; ++j)
                std::swap(m.at(piv, j), m.at(r, j));
        S inv = m.at(r, col).inv();
        for (int i = r + 1; i < nr; ++i) {
            if (m.at(i, col).is_zero())
                continue;
            S f = m.at(i, col) * inv;
            for (int j = col; j < nc; ++j)
                m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

template <class S> int rank(const SymMat<S>& m) { return rank(m.to_mat()); }

/// Gauss-Jordan inverse; throws DomainError if the matrix is singular.
template <class S> Mat<S> inverse(Mat<S> m) {
    if (!m.is_square())
        throw DomainError("inverse of non-square matrix");
    int n = m.rows();
    Mat<S> inv(n, n, m.field());
    for (int i = 0; i < n; ++i)
        inv.at(i, i) = field_one<S>(m.field());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0)
            throw DomainError("matrix is singular");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        S pinv = m.at(col, col).inv();
        for (int j = 0; j < n; ++j) {
            m.at(col, j) *= pinv;
            inv.at(col, j) *= pinv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || m.at(i, col).is_zero())
                continue;
            S f = m.at(i, col);
            for (int j = 0; j < n; ++j) {
                m.at(i, j) -= f * m.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

/// Sign of the permutation that sorts the concatenated index list
/// (gamma..., alpha...) for disjoint sorted sets, i.e. (-1)^#{g > a}.
/// Minors of C = B / B[gamma], with C's labels inherited from B, satisfy
///     det C[alpha, beta] * det B[gamma]
///         = interleave_sign(gamma, alpha) * interleave_sign(gamma, beta)
///           * det B[union_of(alpha, gamma), union_of(beta, gamma)]:
/// arranging the union minor with the gamma block leading makes the ratio
/// exact, and sorting rows/columns back costs one sign each. The two signs
/// cancel whenever alpha == beta, so principal minors need no correction.
inline int interleave_sign(const IndexSet& gamma, const IndexSet& alpha) {
    int crossings = 0;
    for (int g : gamma)
        for (int a : alpha)
            if (g > a)
                ++crossings;
    return crossings % 2 == 0 ? 1 : -1;
}

/// Schur complement B / B[gamma]: eliminate the rows/columns in gamma.
/// Returns the symmetric matrix B[delta] - B[delta,gamma] B[gamma]^-1 B[gamma,delta]
/// where delta is the complement of gamma. Throws DomainError when
/// B[gamma] is singular.
template <class S> SymMat<S> schur_complement(const SymMat<S>& B, const IndexSet& gamma) {
    detail::check_indices(gamma.span(), B.order());
    IndexSet delta = gamma.complement(B.order());
    Mat<S> G = submatrix(B, gamma, gamma);
    Mat<S> Ginv;
    try {
        Ginv = inverse(std::move(G));
    } catch (const DomainError&) {
        throw DomainError("principal submatrix B[" + gamma.str() + "] is singular");
    }
    int k = gamma.size(), d = delta.size();
    Mat<S> X = submatrix(B, gamma, delta); // k x d
    // Y = B[gamma]^-1 X, computed column by column.
    Mat<S> Y(k, d, B.field());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < d; ++j)
            for (int t = 0; t < k; ++t)
                Y.at(i, j) += Ginv.at(i, t) * X.at(t, j);
    SymMat<S> out = SymMat<S>::zero(d, B.field());
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            S v = B.at(delta[i] - 1, delta[j] - 1);
            for (int t = 0; t < k; ++t)
                v -= X.at(t, i) * Y.at(t, j);
            out.set(i, j, std::move(v));
        }
    return out;
}

} // namespace qpr
