#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qpr/errors.hpp"

namespace qpr {

/// Strictly increasing set of distinct 1-based row/column indices.
class IndexSet {
  public:
    IndexSet() = default;
    explicit IndexSet(std::vector<int> members) : v_(std::move(members)) {
        std::sort(v_.begin(), v_.end());
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (v_[i] < 1)
                throw DomainError("index sets are 1-based, got " + std::to_string(v_[i]));
            if (i > 0 && v_[i] == v_[i - 1])
                throw DomainError("duplicate index " + std::to_string(v_[i]));
        }
    }

    static IndexSet full(int n) {
        std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
        for (int i = 0; i < n; ++i)
            v[static_cast<std::size_t>(i)] = i + 1;
        return IndexSet(std::move(v));
    }

    int size() const { return static_cast<int>(v_.size()); }
    bool empty() const { return v_.empty(); }
    int operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
    int max() const { return v_.empty() ? 0 : v_.back(); }
    bool contains(int idx) const { return std::binary_search(v_.begin(), v_.end(), idx); }

    IndexSet complement(int n) const {
        if (max() > n)
            throw DomainError("index " + std::to_string(max()) + " out of range for order " +
                              std::to_string(n));
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(n - size()));
        for (int i = 1; i <= n; ++i)
            if (!contains(i))
                out.push_back(i);
        return IndexSet(std::move(out));
    }

    static IndexSet union_of(const IndexSet& a, const IndexSet& b) {
        std::vector<int> out;
        std::set_union(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end(), std::back_inserter(out));
        return IndexSet(std::move(out));
    }

    static IndexSet intersect(const IndexSet& a, const IndexSet& b) {
        std::vector<int> out;
        std::set_intersection(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end(),
                              std::back_inserter(out));
        return IndexSet(std::move(out));
    }

    const std::vector<int>& members() const { return v_; }
    std::span<const int> span() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(v_[i]);
        }
        return s + "}";
    }

    bool operator==(const IndexSet&) const = default;

  private:
    std::vector<int> v_;
};

/// Row/column index pair of a quasi-principal submatrix:
/// |alpha| = |beta| and |alpha ∩ beta| >= |alpha| - 1.
struct IndexPair {
    IndexSet alpha;
    IndexSet beta;

    static IndexPair checked(IndexSet a, IndexSet b) {
        if (a.size() != b.size())
            throw DomainError("index pair with mismatched sizes");
        int common = IndexSet::intersect(a, b).size();
        if (common < a.size() - 1)
            throw DomainError("pair " + a.str() + "," + b.str() + " is not quasi-principal");
        return IndexPair{std::move(a), std::move(b)};
    }

    bool is_principal() const { return alpha == beta; }
    bool operator==(const IndexPair&) const = default;
};

std::uint64_t binomial(int n, int k);

/// C(n,k) * (1 + k*(n-k)): all principal plus all almost-principal positions.
std::uint64_t quasi_principal_pair_count(int n, int k);

namespace detail {

// Lexicographic successor of a k-combination of {1..n}; false when exhausted.
inline bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - (k - 1 - i)) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

inline void check_order_range(int n, int k) {
    if (k < 1 || k > n)
        throw DomainError("order " + std::to_string(k) + " out of range for n = " +
                          std::to_string(n));
}

} // namespace detail

/// Visits every k-subset of {1..n} in lexicographic order. The visitor takes a
/// span of sorted indices and returns false to stop early; the function
/// returns false iff it was stopped.
template <class F> bool for_each_principal_set(int n, int k, F&& f) {
    detail::check_order_range(n, k);
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        c[static_cast<std::size_t>(i)] = i + 1;
    do {
        if (!f(std::span<const int>(c)))
            return false;
    } while (detail::next_combination(c, n));
    return true;
}

/// Visits every quasi-principal (alpha, beta) of order k exactly once:
/// principal pairs first (alpha lexicographic), then almost-principal pairs
/// ordered by (shared (k-1)-set, extra row, extra column). The visitor takes
/// (alpha, beta) spans and returns false to stop early.
template <class F> bool for_each_quasi_principal_pair(int n, int k, F&& f) {
    detail::check_order_range(n, k);
    bool done = for_each_principal_set(n, k, [&](std::span<const int> a) { return f(a, a); });
    if (!done)
        return false;
    if (k == n)
        return true; // no almost-principal pair exists at full order

    std::vector<int> alpha(static_cast<std::size_t>(k)), beta(static_cast<std::size_t>(k));
    auto merged = [&](std::span<const int> common, int extra, std::vector<int>& out) {
        std::size_t ci = 0, oi = 0;
        while (ci < common.size() && common[ci] < extra)
            out[oi++] = common[ci++];
        out[oi++] = extra;
        while (ci < common.size())
            out[oi++] = common[ci++];
    };

    auto body = [&](std::span<const int> common) {
        for (int r = 1; r <= n; ++r) {
            if (std::binary_search(common.begin(), common.end(), r))
                continue;
            for (int c = 1; c <= n; ++c) {
                if (c == r || std::binary_search(common.begin(), common.end(), c))
                    continue;
                merged(common, r, alpha);
                merged(common, c, beta);
                if (!f(std::span<const int>(alpha), std::span<const int>(beta)))
                    return false;
            }
        }
        return true;
    };

    if (k == 1) {
        // the shared set is empty; a single pass over the off-diagonal entries
        return body(std::span<const int>());
    }
    return for_each_principal_set(n, k - 1, body);
}

std::vector<IndexPair> quasi_principal_pairs(int n, int k);

} // namespace qpr
