#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qpr/matrix.hpp"

namespace qpr {

/// Knobs for the sample-verify-retry loop that backs every bordering step.
/// Draws are deterministic in `seed`; the entry bound doubles every
/// ceil(max_retries/8) failed candidates so stubborn targets get a wider box.
struct RetryPolicy {
    std::uint64_t seed = 0;
    int initial_bound = 4;
    int max_retries = 64;
};

/// Hand-checked starting matrices for the induction.
///   Zero       -> N^n (the zero matrix, any n >= 1)
///   A          -> "A"        ([1])
///   AA         -> "AA"       ([[1,1],[1,2]])
///   SA         -> "SA"       (2x2 identity)
///   AllSThenA  -> S^(n-1)A   (I_(n-2) direct-sum [[1,1],[1,0]], n >= 2)
enum class BaseKind { Zero, A, AA, SA, AllSThenA };

std::string base_kind_str(BaseKind kind);

/// Builds the named base matrix and verifies its qpr before returning.
SymMat<Rational> base_witness(BaseKind kind, int n);

/// One construction step. Every append is the same bordering
///   B' = [[B, Bx], [x^T B, x^T B x + t]]
/// distinguished by whether t is zero and whether x's first coordinate is
/// pinned to zero (which puts the new column in the span of columns 2..n).
struct SynthesisStep {
    enum class Op { Base, AppendN, AppendA, AppendSN, AppendSA };

    Op op = Op::Base;
    BaseKind base = BaseKind::Zero; // Op::Base only
    int base_order = 0;             // Op::Base only
    std::vector<Rational> x;        // drawn coefficient vector (append ops)
    Rational t;                     // corner shift (zero unless AppendA/AppendSA)
    int retries = 0;                // failed candidates before this one verified
    std::string qpr_after;          // full qpr of the matrix after this step

    std::string str() const;
    bool operator==(const SynthesisStep&) const = default;
};

struct SynthesisTrace {
    std::string target;
    std::uint64_t seed = 0;
    std::vector<SynthesisStep> steps;

    std::string str() const;
    bool operator==(const SynthesisTrace&) const = default;
};

struct SynthesisResult {
    SymMat<Rational> matrix;
    SynthesisTrace trace;
};

/// The four bordering moves. Each draws candidates per the policy, verifies
/// the full qpr of the bordered matrix against the expected sequence, and
/// returns the first verified candidate (recording it in *step if given).
/// Throws Error when the retry budget runs out; throws DomainError when the
/// input matrix does not satisfy the move's precondition.

/// qpr q1..qn -> q1..qn N. Works for any symmetric B; rank is preserved.
SymMat<Rational> append_n(const SymMat<Rational>& B, const RetryPolicy& policy,
                          SynthesisStep* step = nullptr);

/// qpr q1..q(n-1) A -> q1..q(n-1) A A. Requires an N-free qpr ending in A.
SymMat<Rational> append_a(const SymMat<Rational>& B, const RetryPolicy& policy,
                          SynthesisStep* step = nullptr);

/// qpr q1..q(n-1) A -> q1..q(n-1) S N. Same precondition as append_a.
/// For n = 1 the drawn span is empty, so the new column is zero and the
/// step is deterministic ([[b,0],[0,0]]).
SymMat<Rational> append_sn(const SymMat<Rational>& B, const RetryPolicy& policy,
                           SynthesisStep* step = nullptr);

/// qpr q1..q(n-1) A -> q1..q(n-1) S A. Same precondition as append_a.
SymMat<Rational> append_sa(const SymMat<Rational>& B, const RetryPolicy& policy,
                           SynthesisStep* step = nullptr);

/// Builds a rational symmetric matrix whose computed qpr equals `seq`,
/// or throws DomainError when `seq` is not attainable. The result is always
/// verified: the randomness only affects which witness is found, never
/// whether the answer is correct. Deterministic in (seq, seed).
SynthesisResult synthesize(std::string_view seq, const RetryPolicy& policy);
SynthesisResult synthesize(std::string_view seq, std::uint64_t seed);

/// Re-applies the recorded draws of a trace with no randomness and
/// re-verifies each step; returns the reconstructed matrix. The result is
/// bit-identical to the original synthesis output.
SymMat<Rational> replay(const SynthesisTrace& trace);

namespace detail {
/// Stable per-step seed derivation (synthesize step i uses mix_seed(seed, i)).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t step);
} // namespace detail

} // namespace qpr
