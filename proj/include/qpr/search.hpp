#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "qpr/field.hpp"
#include "qpr/index_set.hpp"
#include "qpr/matrix.hpp"
#include "qpr/sequences.hpp"

namespace qpr {

/// Determinant by cofactor expansion along the first row. Deliberately
/// naive: this is the independent oracle the elimination-based path is
/// checked against, so it shares no code with DetWorkspace.
template <class S> S laplace_det(const Mat<S>& m) {
    if (!m.is_square())
        throw DomainError("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0)
        return field_one<S>(m.field());
    if (n == 1)
        return m.at(0, 0);
    S acc = field_zero<S>(m.field());
    Mat<S> sub(n - 1, n - 1, m.field());
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero())
            continue;
        for (int i = 1; i < n; ++i)
            for (int c = 0, sc = 0; c < n; ++c) {
                if (c == j)
                    continue;
                sub.at(i - 1, sc++) = m.at(i, c);
            }
        S term = m.at(0, j) * laplace_det(sub);
        if (j % 2)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

/// qpr by brute force: every (alpha, beta) pair of k-subsets is generated
/// and filtered by the intersection condition, every minor goes through
/// laplace_det, and there is no early exit. Guarded to n <= 7.
template <class S> std::string oracle_qpr(const SymMat<S>& B) {
    int n = B.order();
    if (n > 7)
        throw DomainError("oracle limited to order <= 7, got " + std::to_string(n));
    std::string out;
    for (int k = 1; k <= n; ++k) {
        std::uint64_t zero = 0, nonzero = 0;
        for_each_principal_set(n, k, [&](std::span<const int> a) {
            for_each_principal_set(n, k, [&](std::span<const int> b) {
                int common = 0;
                for (int v : a)
                    if (std::binary_search(b.begin(), b.end(), v))
                        ++common;
                if (common >= k - 1) {
                    if (laplace_det(submatrix(B, a, b)).is_zero())
                        ++zero;
                    else
                        ++nonzero;
                }
                return true;
            });
            return true;
        });
        out += nonzero == 0 ? 'N' : zero == 0 ? 'A' : 'S';
    }
    return out;
}

/// Tally of one exhaustive pass over all symmetric matrices of order n
/// over GF(p). The witness kept per sequence is the first one in odometer
/// order (upper-triangle entries as little-endian base-p digits).
struct SurveyResult {
    struct Entry {
        std::uint64_t count = 0;
        std::uint64_t witness_index = 0; // odometer index of the witness
        SymMat<Fp> witness;
    };

    FieldSpec field;
    int n = 0;
    std::uint64_t total = 0; // p^(n(n+1)/2)
    std::map<std::string, Entry> realized;
};

/// Enumerates all p^(n(n+1)/2) symmetric matrices; budget-guarded to 10^7.
SurveyResult exhaustive_survey(std::uint32_t p, int n);

/// Same result, computed with the odometer range split across OpenMP
/// threads and the per-thread tallies merged (witness = smallest index).
SurveyResult exhaustive_survey_parallel(std::uint32_t p, int n);

/// Draws random symmetric matrices over the field until one has the given
/// qpr-sequence; none after `trials` draws returns nullopt. Entry bound 9
/// matches the survey-scale corpus.
template <class S>
std::optional<SymMat<S>> random_search(std::string_view seq, const FieldSpec& field,
                                       std::uint64_t trials, std::uint64_t seed, int bound = 9) {
    std::string target = parse_sequence(seq);
    if (trials < 1)
        throw DomainError("trial budget must be >= 1");
    if (bound < 1)
        throw DomainError("entry bound must be >= 1");
    int n = static_cast<int>(target.size());
    std::mt19937_64 rng(seed);
    std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
    DetWorkspace<S> ws;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        SymMat<S> m = SymMat<S>::zero(n, field);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                m.set(i, j,
                      field_from_int<S>(static_cast<std::int64_t>(rng() % span) - bound, field));
        if (compute_qpr(m, ws) == target)
            return m;
    }
    return std::nullopt;
}

} // namespace qpr
