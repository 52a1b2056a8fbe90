#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "qpr/attainability.hpp"
#include "qpr/search.hpp"
#include "qpr/sequences.hpp"

using namespace qpr;

namespace {

const FieldSpec Q = FieldSpec::rationals();

// All symmetric n x n matrices over GF(p), odometer order (tiny sizes only).
template <class F> void for_each_symmetric_gf(std::uint32_t p, int n, F&& f) {
    FieldSpec field = FieldSpec::prime(p);
    std::uint64_t total = 1;
    for (int e = 0; e < n * (n + 1) / 2; ++e)
        total *= p;
    SymMat<Fp> m = SymMat<Fp>::zero(n, field);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t digits = idx;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                m.set(i, j, Fp(static_cast<std::int64_t>(digits % p), p));
                digits /= p;
            }
        f(idx, m);
    }
}

} // namespace

TEST_CASE("oracle qpr on hand-checked inputs") {
    auto f2 = FieldSpec::prime(2);
    CHECK(oracle_qpr(SymMat<Rational>::from_rows(
              {{Rational(1), Rational(1)}, {Rational(1), Rational(0)}}, Q)) == "SA");
    CHECK(oracle_qpr(SymMat<Rational>::zero(2, Q)) == "NN");
    CHECK(oracle_qpr(SymMat<Rational>::identity(3, Q)) == "SSA");
    CHECK(oracle_qpr(SymMat<Fp>::identity(2, f2)) == "SA");
    CHECK_THROWS_AS(oracle_qpr(SymMat<Rational>::zero(8, Q)), DomainError);
}

TEST_CASE("oracle and elimination classifier agree") {
    // exhaustively over GF(2) for n <= 3 (2 + 8 + 64 matrices)
    for (int n = 1; n <= 3; ++n)
        for_each_symmetric_gf(2, n, [&](std::uint64_t, const SymMat<Fp>& m) {
            CHECK(oracle_qpr(m) == compute_qpr(m));
        });

    // randomized rationals with fractional entries
    std::mt19937_64 rng(404);
    for (int n = 1; n <= 5; ++n)
        for (int rep = 0; rep < 40; ++rep) {
            SymMat<Rational> m = SymMat<Rational>::zero(n, Q);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j)
                    m.set(i, j, Rational(static_cast<long>(rng() % 5) - 2,
                                         1 + static_cast<long>(rng() % 2)));
            CHECK(oracle_qpr(m) == compute_qpr(m));
        }
}

TEST_CASE("exhaustive survey over GF(2), n = 1") {
    auto r = exhaustive_survey(2, 1);
    CHECK(r.total == 2);
    CHECK(r.realized.size() == 2);
    CHECK(r.realized.at("N").count == 1);
    CHECK(r.realized.at("A").count == 1);
    CHECK(r.realized.at("N").witness_index == 0);
    CHECK(r.realized.at("A").witness.at(0, 0) == Fp(1, 2));
}

TEST_CASE("exhaustive survey over GF(2), n = 2: the full table") {
    auto r = exhaustive_survey(2, 2);
    CHECK(r.total == 8);
    REQUIRE(r.realized.size() == 4);
    CHECK(r.realized.at("NN").count == 1);
    CHECK(r.realized.at("SN").count == 2);
    CHECK(r.realized.at("SA").count == 4);
    CHECK(r.realized.at("AN").count == 1);
    CHECK(r.realized.count("AA") == 0); // unreachable in characteristic 2

    // first-encountered witnesses, odometer order (b11, b12, b22)
    CHECK(r.realized.at("NN").witness_index == 0);
    CHECK(r.realized.at("SN").witness_index == 1);
    CHECK(r.realized.at("SA").witness_index == 2);
    CHECK(r.realized.at("AN").witness_index == 7);

    std::uint64_t sum = 0;
    for (const auto& [seq, e] : r.realized) {
        sum += e.count;
        CHECK(compute_qpr(e.witness) == seq);
    }
    CHECK(sum == r.total);
}

TEST_CASE("exhaustive survey over GF(2), n = 3") {
    auto r = exhaustive_survey(2, 3);
    CHECK(r.total == 64);
    CHECK(r.realized.count("AAN") == 0); // the characteristic-2 obstruction
    CHECK(r.realized.count("AAA") == 0);
    std::uint64_t sum = 0;
    for (const auto& [seq, e] : r.realized) {
        sum += e.count;
        CHECK(check_attainable(seq).attainable); // necessary condition holds here too
        CHECK(compute_qpr(e.witness) == seq);
    }
    CHECK(sum == 64);
}

TEST_CASE("characteristic-2 family A..AN..N stays unrealized up to n = 4") {
    for (int n = 2; n <= 4; ++n) {
        auto r = exhaustive_survey(2, n);
        for (const auto& [seq, e] : r.realized) {
            std::size_t first_n = std::min(seq.find('N'), seq.size());
            bool head_all_a = first_n >= 2 &&
                              seq.find('S') == std::string::npos; // A..A then N..N
            CHECK_FALSE(head_all_a);
            (void)e;
        }
    }
}

TEST_CASE("GF(3) survey sanity") {
    auto r = exhaustive_survey(3, 2);
    CHECK(r.total == 27);
    std::uint64_t sum = 0;
    for (const auto& [seq, e] : r.realized)
        sum += e.count;
    CHECK(sum == 27);
    CHECK(r.realized.count("AA") == 1); // e.g. all-ones off-diagonal with distinct diagonal
    CHECK(r.realized.at("AA").count > 0);
}

TEST_CASE("parallel survey equals the serial one exactly") {
    for (auto [p, n] : {std::pair<std::uint32_t, int>{2, 3}, {2, 4}, {3, 2}, {5, 2}}) {
        auto serial = exhaustive_survey(p, n);
        auto parallel = exhaustive_survey_parallel(p, n);
        CHECK(serial.total == parallel.total);
        REQUIRE(serial.realized.size() == parallel.realized.size());
        for (const auto& [seq, e] : serial.realized) {
            const auto& pe = parallel.realized.at(seq);
            CHECK(pe.count == e.count);
            CHECK(pe.witness_index == e.witness_index);
            CHECK(pe.witness == e.witness);
        }
    }
}

TEST_CASE("survey guards") {
    CHECK_THROWS_AS(exhaustive_survey(4, 2), DomainError);  // not a prime
    CHECK_THROWS_AS(exhaustive_survey(2, 0), DomainError);  // empty order
    CHECK_THROWS_AS(exhaustive_survey(2, 7), DomainError);  // 2^28 over budget
    CHECK_THROWS_AS(exhaustive_survey(11, 4), DomainError); // 11^10 over budget
    CHECK_THROWS_AS(exhaustive_survey_parallel(2, 7), DomainError);
}

TEST_CASE("random search") {
    auto hit = random_search<Rational>("SA", Q, 200, 1);
    REQUIRE(hit.has_value());
    CHECK(compute_qpr(*hit) == "SA");

    auto over_f3 = random_search<Fp>("AA", FieldSpec::prime(3), 500, 2);
    REQUIRE(over_f3.has_value()); // ~20% per trial, e.g. [[1,1],[1,2]]
    CHECK(compute_qpr(*over_f3) == "AA");

    // sequences that cannot end a qpr never match
    CHECK_FALSE(random_search<Rational>("AAS", Q, 60, 3).has_value());
    // and the characteristic-2 obstruction holds under random draws as well
    CHECK_FALSE(random_search<Fp>("AA", FieldSpec::prime(2), 2000, 4).has_value());

    CHECK_THROWS_AS(random_search<Rational>("SA", Q, 0, 1), DomainError);
    CHECK_THROWS_AS((random_search<Rational>("SA", Q, 1, 1, 0)), DomainError);
    CHECK_THROWS_AS(random_search<Rational>("XY", Q, 1, 1), ParseError);
}
