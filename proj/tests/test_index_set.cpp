#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "qpr/index_set.hpp"

using namespace qpr;

TEST_CASE("index set construction and set algebra") {
    IndexSet s(std::vector<int>{3, 1, 2});
    CHECK(s.size() == 3);
    CHECK(s.members() == std::vector<int>{1, 2, 3}); // sorted on construction
    CHECK(s.str() == "{1,2,3}");
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(4));
    CHECK(s.max() == 3);
    CHECK(IndexSet().empty());
    CHECK(IndexSet().str() == "{}");

    CHECK_THROWS_AS(IndexSet(std::vector<int>{0}), DomainError);
    CHECK_THROWS_AS(IndexSet(std::vector<int>{-2, 1}), DomainError);
    CHECK_THROWS_AS(IndexSet(std::vector<int>{1, 1}), DomainError);

    CHECK(IndexSet::full(4) == IndexSet(std::vector<int>{1, 2, 3, 4}));
    CHECK(IndexSet::full(0).empty());

    IndexSet a(std::vector<int>{1, 3}), b(std::vector<int>{3, 4});
    CHECK(IndexSet::union_of(a, b) == IndexSet(std::vector<int>{1, 3, 4}));
    CHECK(IndexSet::intersect(a, b) == IndexSet(std::vector<int>{3}));
    CHECK(a.complement(5) == IndexSet(std::vector<int>{2, 4, 5}));
    CHECK(IndexSet::full(3).complement(3).empty());
    CHECK_THROWS_AS(a.complement(2), DomainError); // 3 out of range
}

TEST_CASE("quasi-principal pair validation") {
    IndexSet a(std::vector<int>{1, 2}), b(std::vector<int>{1, 3}), c(std::vector<int>{3, 4});
    CHECK(IndexPair::checked(a, a).is_principal());
    CHECK_FALSE(IndexPair::checked(a, b).is_principal());
    CHECK_THROWS_AS(IndexPair::checked(a, IndexSet(std::vector<int>{1})), DomainError);
    CHECK_THROWS_AS(IndexPair::checked(a, c), DomainError); // empty intersection at k=2
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(12, 6) == 924);
    CHECK(binomial(3, 4) == 0);
    // Pascal recurrence as an independent cross-check
    for (int n = 1; n <= 20; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("principal set enumeration is lexicographic and complete") {
    std::vector<std::vector<int>> seen;
    for_each_principal_set(4, 2, [&](std::span<const int> a) {
        seen.emplace_back(a.begin(), a.end());
        return true;
    });
    std::vector<std::vector<int>> expect = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    CHECK(seen == expect);

    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            std::uint64_t count = 0;
            for_each_principal_set(n, k, [&](std::span<const int>) {
                ++count;
                return true;
            });
            CHECK(count == binomial(n, k));
        }

    // early stop: callback returning false ends the walk
    int calls = 0;
    bool completed = for_each_principal_set(5, 2, [&](std::span<const int>) {
        return ++calls < 3;
    });
    CHECK_FALSE(completed);
    CHECK(calls == 3);
}

TEST_CASE("quasi-principal pair enumeration") {
    // count matches the closed form C(n,k) * (1 + k(n-k))
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            std::uint64_t count = 0;
            for_each_quasi_principal_pair(n, k, [&](std::span<const int>, std::span<const int>) {
                ++count;
                return true;
            });
            CHECK(count == quasi_principal_pair_count(n, k));
            CHECK(count == binomial(n, k) * (1 + static_cast<std::uint64_t>(k) * (n - k)));
        }

    // every visited pair is genuinely quasi-principal and no pair repeats
    int n = 5;
    for (int k = 1; k <= n; ++k) {
        std::set<std::pair<std::vector<int>, std::vector<int>>> dedup;
        for_each_quasi_principal_pair(n, k, [&](std::span<const int> a, std::span<const int> b) {
            std::vector<int> va(a.begin(), a.end()), vb(b.begin(), b.end());
            IndexPair::checked(IndexSet(va), IndexSet(vb)); // throws if not quasi-principal
            CHECK(dedup.emplace(std::move(va), std::move(vb)).second);
            return true;
        });
    }

    // materialized form agrees with the callback walk
    auto pairs = quasi_principal_pairs(4, 2);
    CHECK(pairs.size() == quasi_principal_pair_count(4, 2));
    std::size_t at = 0;
    for_each_quasi_principal_pair(4, 2, [&](std::span<const int> a, std::span<const int> b) {
        REQUIRE(at < pairs.size());
        CHECK(pairs[at].alpha.span().size() == a.size());
        CHECK(std::equal(a.begin(), a.end(), pairs[at].alpha.begin()));
        CHECK(std::equal(b.begin(), b.end(), pairs[at].beta.begin()));
        ++at;
        return true;
    });
    CHECK(at == pairs.size());

    CHECK(quasi_principal_pair_count(12, 6) == 924 * (1 + 36));
    CHECK_THROWS_AS(quasi_principal_pair_count(-1, 0), DomainError);
}

TEST_CASE("total quasi-principal minor counts per order") {
    // full tallies used by the performance criterion: sum over k of C(n,k)(1+k(n-k))
    auto total = [](int n) {
        std::uint64_t sum = 0;
        for (int k = 1; k <= n; ++k)
            sum += quasi_principal_pair_count(n, k);
        return sum;
    };
    CHECK(total(1) == 1);
    CHECK(total(2) == 5); // 4 positions of order 1, then the determinant
    CHECK(total(3) == 19);
    CHECK(total(12) == 139263);

    // order-1 sanity: every entry of the upper triangle incl. diagonal shows up
    CHECK(quasi_principal_pair_count(2, 1) == 4); // (1,1),(2,2),(1,2),(2,1)
}
