#pragma once

#include <random>
#include <span>
#include <utility>
#include <vector>

#include "qpr/field.hpp"
#include "qpr/index_set.hpp"

namespace qpr {

/// Dense rectangular matrix over an exact field. Used for the general
namespace detail {
// Validated before any allocation happens (member initializers run first).
inline std::size_t checked_extent(int n) {
    if (n < 0)
        throw DomainError("negative matrix dimension");
    return static_cast<std::size_t>(n);
}
} // namespace detail

/// submatrices B[alpha, beta]; symmetric top-level matrices live in SymMat.
template <class S> class Mat {
  public:
    using scalar_type = S;

    Mat() = default;
    Mat(int rows, int cols, const FieldSpec& f)
        : rows_(rows), cols_(cols), field_(f),
          a_(detail::checked_extent(rows) * detail::checked_extent(cols), field_zero<S>(f)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const FieldSpec& field() const { return field_; }

    S& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const S& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    // Reshape in place, keeping the allocation; contents become zero.
    void assign(int rows, int cols, const FieldSpec& f) {
        std::size_t want = detail::checked_extent(rows) * detail::checked_extent(cols);
        rows_ = rows;
        cols_ = cols;
        field_ = f;
        a_.assign(want, field_zero<S>(f));
    }

    bool operator==(const Mat&) const = default;

  private:
    int rows_ = 0, cols_ = 0;
    FieldSpec field_;
    std::vector<S> a_;
};

/// Symmetric n x n matrix; symmetry is enforced at every construction path.
template <class S> class SymMat {
  public:
    using scalar_type = S;

    SymMat() = default;

    static SymMat zero(int n, const FieldSpec& f) { return SymMat(n, f); }

    static SymMat identity(int n, const FieldSpec& f) {
        SymMat m(n, f);
        for (int i = 0; i < n; ++i)
            m.set(i, i, field_one<S>(f));
        return m;
    }

    static SymMat from_rows(const std::vector<std::vector<S>>& rows, const FieldSpec& f) {
        int n = static_cast<int>(rows.size());
        SymMat m(n, f);
        for (int i = 0; i < n; ++i)
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
                throw DomainError("row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[static_cast<std::size_t>(i)].size()) +
                                  " entries, expected " + std::to_string(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const S& v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (j < i) {
                    if (!(v == m.at(j, i)))
                        throw DomainError("not symmetric: entries (" + std::to_string(i + 1) +
                                          "," + std::to_string(j + 1) + ") and (" +
                                          std::to_string(j + 1) + "," + std::to_string(i + 1) +
                                          ") differ");
                } else {
                    m.set(i, j, v);
                }
            }
        return m;
    }

    int order() const { return n_; }
    const FieldSpec& field() const { return field_; }

    const S& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    /// Writes both (i,j) and (j,i).
    void set(int i, int j, S v) {
        a_[static_cast<std::size_t>(i) * n_ + j] = v;
        a_[static_cast<std::size_t>(j) * n_ + i] = std::move(v);
    }

    Mat<S> to_mat() const {
        Mat<S> m(n_, n_, field_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                m.at(i, j) = at(i, j);
        return m;
    }

    bool operator==(const SymMat&) const = default;

  private:
    SymMat(int n, const FieldSpec& f)
        : n_(n), field_(f),
          a_(detail::checked_extent(n) * detail::checked_extent(n), field_zero<S>(f)) {}

    int n_ = 0;
    FieldSpec field_;
    std::vector<S> a_;
};

namespace detail {
inline void check_indices(std::span<const int> idx, int n) {
    for (int i : idx)
        if (i < 1 || i > n)
            throw DomainError("index " + std::to_string(i) + " out of range for order " +
                              std::to_string(n));
}
} // namespace detail

/// B[alpha, beta]: rows indexed by alpha, columns by beta (1-based sets).
template <class S>
Mat<S> submatrix(const SymMat<S>& B, std::span<const int> alpha, std::span<const int> beta) {
    detail::check_indices(alpha, B.order());
    detail::check_indices(beta, B.order());
    Mat<S> m(static_cast<int>(alpha.size()), static_cast<int>(beta.size()), B.field());
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (std::size_t j = 0; j < beta.size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = B.at(alpha[i] - 1, beta[j] - 1);
    return m;
}

template <class S>
Mat<S> submatrix(const SymMat<S>& B, const IndexSet& alpha, const IndexSet& beta) {
    return submatrix(B, alpha.span(), beta.span());
}

template <class S> SymMat<S> principal_submatrix(const SymMat<S>& B, const IndexSet& alpha) {
    detail::check_indices(alpha.span(), B.order());
    SymMat<S> m = SymMat<S>::zero(alpha.size(), B.field());
    for (int i = 0; i < alpha.size(); ++i)
        for (int j = i; j < alpha.size(); ++j)
            m.set(i, j, B.at(alpha[i] - 1, alpha[j] - 1));
    return m;
}

/// Borders B with a final column v, its mirrored row, and corner d.
template <class S> SymMat<S> border(const SymMat<S>& B, std::span<const S> v, const S& d) {
    int n = B.order();
    if (static_cast<int>(v.size()) != n)
        throw DomainError("border vector has length " + std::to_string(v.size()) +
                          ", expected " + std::to_string(n));
    SymMat<S> m = SymMat<S>::zero(n + 1, B.field());
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j)
            m.set(i, j, B.at(i, j));
        m.set(i, n, v[static_cast<std::size_t>(i)]);
    }
    m.set(n, n, d);
    return m;
}

template <class S>
SymMat<S> border(const SymMat<S>& B, const std::vector<S>& v, const S& d) {
    return border(B, std::span<const S>(v), d);
}

template <class S> SymMat<S> direct_sum(const SymMat<S>& a, const SymMat<S>& b) {
    if (!(a.field() == b.field()))
        throw DomainError("direct sum across different fields (" + a.field().str() + " vs " +
                          b.field().str() + ")");
    SymMat<S> m = SymMat<S>::zero(a.order() + b.order(), a.field());
    for (int i = 0; i < a.order(); ++i)
        for (int j = i; j < a.order(); ++j)
            m.set(i, j, a.at(i, j));
    for (int i = 0; i < b.order(); ++i)
        for (int j = i; j < b.order(); ++j)
            m.set(a.order() + i, a.order() + j, b.at(i, j));
    return m;
}

template <class S> std::vector<S> matvec(const SymMat<S>& B, std::span<const S> x) {
    int n = B.order();
    if (static_cast<int>(x.size()) != n)
        throw DomainError("matvec length mismatch");
    std::vector<S> y(static_cast<std::size_t>(n), field_zero<S>(B.field()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            y[static_cast<std::size_t>(i)] += B.at(i, j) * x[static_cast<std::size_t>(j)];
    return y;
}

template <class S> std::vector<S> matvec(const SymMat<S>& B, const std::vector<S>& x) {
    return matvec(B, std::span<const S>(x));
}

template <class S>
S dot(std::span<const S> x, std::span<const S> y, const FieldSpec& f) {
    if (x.size() != y.size())
        throw DomainError("dot length mismatch");
    S acc = field_zero<S>(f);
    for (std::size_t i = 0; i < x.size(); ++i)
        acc += x[i] * y[i];
    return acc;
}

/// Deterministic random symmetric matrix: upper-triangle entries drawn as
/// integers in [-bound, bound] (row by row, i <= j) and mapped into the field.
template <class S>
SymMat<S> random_symmetric(int n, const FieldSpec& f, std::uint64_t seed, int bound) {
    if (n < 0)
        throw DomainError("negative matrix order");
    if (bound < 1)
        throw DomainError("entry bound must be >= 1");
    std::mt19937_64 rng(seed);
    auto draw = [&]() {
        std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
        return static_cast<std::int64_t>(rng() % span) - bound;
    };
    SymMat<S> m = SymMat<S>::zero(n, f);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            m.set(i, j, field_from_int<S>(draw(), f));
    return m;
}

} // namespace qpr
