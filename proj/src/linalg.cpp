#include "qpr/linalg.hpp"

#include <utility>

namespace qpr {

namespace {

void require_square(int rows, int cols) {
    if (rows != cols)
        throw DomainError("determinant of non-square matrix (" + std::to_string(rows) + "x" +
                          std::to_string(cols) + ")");
}

} // namespace

// ---------------------------------------------------------------------------
// Rational determinants
// ---------------------------------------------------------------------------

Rational DetWorkspace<Rational>::det(const Mat<Rational>& m) {
    require_square(m.rows(), m.cols());
    int n = m.rows();
    z_.resize(static_cast<std::size_t>(n) * n);
    denom_ = 1;
    for (int i = 0; i < n; ++i) {
        lcm_ = 1;
        for (int j = 0; j < n; ++j)
            mpz_lcm(lcm_.get_mpz_t(), lcm_.get_mpz_t(),
                    m.at(i, j).value().get_den().get_mpz_t());
        for (int j = 0; j < n; ++j) {
            mpz_class& zij = z_[static_cast<std::size_t>(i) * n + j];
            // lcm / den is exact by construction.
            mpz_divexact(t0_.get_mpz_t(), lcm_.get_mpz_t(),
                         m.at(i, j).value().get_den().get_mpz_t());
            zij = t0_ * m.at(i, j).value().get_num();
        }
        denom_ *= lcm_;
    }
    return run(n);
}

Rational DetWorkspace<Rational>::det_sub(const SymMat<Rational>& B, std::span<const int> alpha,
                                         std::span<const int> beta) {
    if (alpha.size() != beta.size())
        throw DomainError("determinant of non-square submatrix");
    detail::check_indices(alpha, B.order());
    detail::check_indices(beta, B.order());
    int n = static_cast<int>(alpha.size());
    z_.resize(static_cast<std::size_t>(n) * n);
    denom_ = 1;
    for (int i = 0; i < n; ++i) {
        lcm_ = 1;
        for (int j = 0; j < n; ++j)
            mpz_lcm(lcm_.get_mpz_t(), lcm_.get_mpz_t(),
                    B.at(alpha[static_cast<std::size_t>(i)] - 1,
                         beta[static_cast<std::size_t>(j)] - 1)
                        .value()
                        .get_den()
                        .get_mpz_t());
        for (int j = 0; j < n; ++j) {
            const mpq_class& v = B.at(alpha[static_cast<std::size_t>(i)] - 1,
                                      beta[static_cast<std::size_t>(j)] - 1)
                                     .value();
            mpz_divexact(t0_.get_mpz_t(), lcm_.get_mpz_t(), v.get_den().get_mpz_t());
            mpz_class& zij = z_[static_cast<std::size_t>(i) * n + j];
            zij = t0_ * v.get_num();
        }
        denom_ *= lcm_;
    }
    return run(n);
}

// Fraction-free elimination over the integers: every intermediate entry is
// itself a minor of the scaled matrix, and each 2x2 cross-multiply is exactly
// divisible by the previous pivot.
Rational DetWorkspace<Rational>::run(int n) {
    if (n == 0)
        return Rational(1); // empty product convention
    auto z = [&](int i, int j) -> mpz_class& { return z_[static_cast<std::size_t>(i) * n + j]; };
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (sgn(z(k, k)) == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (sgn(z(i, k)) != 0) {
                    r = i;
                    break;
                }
            if (r < 0)
                return Rational(0);
            for (int j = k; j < n; ++j)
                std::swap(z(k, j), z(r, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                t0_ = z(i, j) * z(k, k);
                t1_ = z(i, k) * z(k, j);
                t0_ -= t1_;
                mpz_divexact(z(i, j).get_mpz_t(), t0_.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = z(k, k);
    }
    mpq_class q(sign > 0 ? z(n - 1, n - 1) : mpz_class(-z(n - 1, n - 1)), denom_);
    return Rational(std::move(q)); // ctor canonicalizes
}

// ---------------------------------------------------------------------------
// GF(p) determinants
// ---------------------------------------------------------------------------

Fp DetWorkspace<Fp>::det(const Mat<Fp>& m) {
    require_square(m.rows(), m.cols());
    int n = m.rows();
    std::uint32_t p = m.field().p;
    z_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            z_[static_cast<std::size_t>(i) * n + j] = m.at(i, j).residue();
    return Fp(static_cast<std::int64_t>(run(n, p)), p);
}

Fp DetWorkspace<Fp>::det_sub(const SymMat<Fp>& B, std::span<const int> alpha,
                             std::span<const int> beta) {
    if (alpha.size() != beta.size())
        throw DomainError("determinant of non-square submatrix");
    detail::check_indices(alpha, B.order());
    detail::check_indices(beta, B.order());
    int n = static_cast<int>(alpha.size());
    std::uint32_t p = B.field().p;
    z_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            z_[static_cast<std::size_t>(i) * n + j] =
                B.at(alpha[static_cast<std::size_t>(i)] - 1,
                     beta[static_cast<std::size_t>(j)] - 1)
                    .residue();
    return Fp(static_cast<std::int64_t>(run(n, p)), p);
}

std::uint64_t DetWorkspace<Fp>::run(int n, std::uint64_t p) {
    if (n == 0)
        return 1 % p;
    auto z = [&](int i, int j) -> std::uint64_t& {
        return z_[static_cast<std::size_t>(i) * n + j];
    };
    std::uint64_t detv = 1;
    for (int k = 0; k < n; ++k) {
        int r = -1;
        for (int i = k; i < n; ++i)
            if (z(i, k) != 0) {
                r = i;
                break;
            }
        if (r < 0)
            return 0;
        if (r != k) {
            for (int j = k; j < n; ++j)
                std::swap(z(k, j), z(r, j));
            detv = p - detv; // detv is nonzero here
        }
        detv = detv * z(k, k) % p;
        std::uint64_t inv = Fp(static_cast<std::int64_t>(z(k, k)), static_cast<std::uint32_t>(p))
                                .inv()
                                .residue();
        for (int i = k + 1; i < n; ++i) {
            if (z(i, k) == 0)
                continue;
            std::uint64_t f = p - (z(i, k) * inv % p); // negated multiplier
            if (f == p)
                f = 0;
            for (int j = k; j < n; ++j)
                z(i, j) = (z(i, j) + f * z(k, j)) % p;
        }
    }
    return detv;
}

} // namespace qpr
