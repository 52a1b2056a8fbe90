#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qpr/linalg.hpp"
#include "qpr/matrix.hpp"

namespace qpr {

/// Per-order classification of a minor family:
///   A = all minors of that order are nonzero,
///   S = some but not all are nonzero,
///   N = none are nonzero.
enum class Symbol : char { A = 'A', S = 'S', N = 'N' };

inline char symbol_char(Symbol s) { return static_cast<char>(s); }

enum class MinorFamily { Principal, QuasiPrincipal };

/// Canonicalizes a sequence string: uppercases and validates the {A,S,N}
/// alphabet. Throws ParseError on an empty string or a bad character.
std::string parse_sequence(std::string_view text);

/// Classifies order k of B against the given minor family. Stops scanning
/// as soon as both a zero and a nonzero minor have been seen.
template <class S>
Symbol classify_order(const SymMat<S>& B, int k, MinorFamily family, DetWorkspace<S>& ws) {
    detail::check_order_range(B.order(), k);
    bool seen_zero = false, seen_nonzero = false;
    auto look = [&](std::span<const int> a, std::span<const int> b) {
        if (ws.det_sub(B, a, b).is_zero())
            seen_zero = true;
        else
            seen_nonzero = true;
        return !(seen_zero && seen_nonzero);
    };
    if (family == MinorFamily::Principal)
        for_each_principal_set(B.order(), k, [&](std::span<const int> a) { return look(a, a); });
    else
        for_each_quasi_principal_pair(B.order(), k, look);
    if (seen_zero && seen_nonzero)
        return Symbol::S;
    return seen_nonzero ? Symbol::A : Symbol::N;
}

template <class S> Symbol classify_order(const SymMat<S>& B, int k, MinorFamily family) {
    DetWorkspace<S> ws;
    return classify_order(B, k, family, ws);
}

template <class S> std::string compute_qpr(const SymMat<S>& B, DetWorkspace<S>& ws) {
    std::string out;
    out.reserve(static_cast<std::size_t>(B.order()));
    for (int k = 1; k <= B.order(); ++k)
        out += symbol_char(classify_order(B, k, MinorFamily::QuasiPrincipal, ws));
    return out;
}

template <class S> std::string compute_qpr(const SymMat<S>& B) {
    DetWorkspace<S> ws;
    return compute_qpr(B, ws);
}

template <class S> std::string compute_epr(const SymMat<S>& B, DetWorkspace<S>& ws) {
    std::string out;
    out.reserve(static_cast<std::size_t>(B.order()));
    for (int k = 1; k <= B.order(); ++k)
        out += symbol_char(classify_order(B, k, MinorFamily::Principal, ws));
    return out;
}

template <class S> std::string compute_epr(const SymMat<S>& B) {
    DetWorkspace<S> ws;
    return compute_epr(B, ws);
}

/// OpenMP variant: orders are classified independently and merged by index.
/// Work per order is skewed toward the middle, so the schedule is dynamic.
template <class S> std::string compute_qpr_parallel(const SymMat<S>& B) {
    int n = B.order();
    std::string out(static_cast<std::size_t>(n), 'N');
#pragma omp parallel
    {
        DetWorkspace<S> ws;
#pragma omp for schedule(dynamic, 1)
        for (int k = 1; k <= n; ++k)
            out[static_cast<std::size_t>(k - 1)] =
                symbol_char(classify_order(B, k, MinorFamily::QuasiPrincipal, ws));
    }
    return out;
}

/// Principal-minor existence record: r0 is 1 exactly when a diagonal entry
/// is zero (that convention is as given, even though it reads inverted);
/// r[k-1] is 1 exactly when some principal minor of order k is nonzero.
struct PrSequence {
    bool r0 = false;
    std::vector<bool> r;

    std::string str() const; // "r0]r1r2...rn"
    bool operator==(const PrSequence&) const = default;
};

template <class S> PrSequence compute_pr(const SymMat<S>& B, DetWorkspace<S>& ws) {
    PrSequence pr;
    for (int i = 0; i < B.order(); ++i)
        if (B.at(i, i).is_zero()) {
            pr.r0 = true;
            break;
        }
    std::string epr = compute_epr(B, ws);
    pr.r.reserve(epr.size());
    for (char c : epr)
        pr.r.push_back(c != 'N');
    return pr;
}

template <class S> PrSequence compute_pr(const SymMat<S>& B) {
    DetWorkspace<S> ws;
    return compute_pr(B, ws);
}

/// One structural consistency check; failures can only mean a bug in the
/// minor classification, never a property of the input.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct MatrixReport {
    std::string qpr;
    std::string epr;
    PrSequence pr;
    int rank = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

namespace detail {
MatrixReport build_report(std::string qpr, std::string epr, PrSequence pr, int rank);
}

/// Computes pr/epr/qpr plus rank and cross-checks the structural facts that
/// hold for every symmetric matrix: the qpr ends in N or A, an N is never
/// followed by A or S, rank equals the index of the last non-N qpr symbol,
/// qpr A/N symbols pin the epr symbol at the same order, an epr NN pair
/// forces an all-N tail, and the pr bits match the epr classification.
template <class S> MatrixReport validate_matrix_report(const SymMat<S>& B) {
    DetWorkspace<S> ws;
    std::string qpr = compute_qpr(B, ws);
    std::string epr = compute_epr(B, ws);
    PrSequence pr;
    for (int i = 0; i < B.order(); ++i)
        if (B.at(i, i).is_zero()) {
            pr.r0 = true;
            break;
        }
    pr.r.reserve(epr.size());
    for (char c : epr)
        pr.r.push_back(c != 'N');
    return detail::build_report(std::move(qpr), std::move(epr), std::move(pr), rank(B));
}

} // namespace qpr
