#include "qpr/selftest.hpp"

#include <ostream>
#include <random>
#include <sstream>

#include "qpr/attainability.hpp"
#include "qpr/linalg.hpp"
#include "qpr/matrix_io.hpp"
#include "qpr/search.hpp"
#include "qpr/sequences.hpp"
#include "qpr/synthesis.hpp"

namespace qpr {

namespace {

struct Suite {
    std::ostream& out;
    bool all_ok = true;
    bool group_ok = true;
    std::string first_detail = {};

    void fail(const std::string& detail) {
        if (group_ok)
            first_detail = detail;
        group_ok = false;
    }
    void expect(bool ok, const std::string& detail) {
        if (!ok)
            fail(detail);
    }
    void finish(const std::string& name) {
        if (group_ok) {
            out << "ok   " << name << "\n";
        } else {
            out << "FAIL " << name << ": " << first_detail << "\n";
            all_ok = false;
        }
        group_ok = true;
        first_detail.clear();
    }
};

// Draws a nonsingular principal submatrix index set of the given size, or
// empty when none exists.
IndexSet find_nonsingular_gamma(const SymMat<Rational>& B, int k) {
    IndexSet found;
    DetWorkspace<Rational> ws;
    for_each_principal_set(B.order(), k, [&](std::span<const int> g) {
        if (!ws.det_sub(B, g, g).is_zero()) {
            found = IndexSet(std::vector<int>(g.begin(), g.end()));
            return false;
        }
        return true;
    });
    return found;
}

void field_axioms(Suite& s) {
    std::mt19937_64 rng(11);
    auto rq = [&] { return Rational(static_cast<long>(rng() % 19) - 9, 1 + rng() % 7); };
    for (int i = 0; i < 100; ++i) {
        Rational a = rq(), b = rq(), c = rq();
        s.expect((a + b) + c == a + (b + c), "Q associativity");
        s.expect(a * (b + c) == a * b + a * c, "Q distributivity");
        if (!a.is_zero())
            s.expect(a * a.inv() == Rational(1), "Q inverse");
        s.expect(Rational::parse(a.str()) == a, "Q parse/print round trip");
    }
    FieldSpec f7 = FieldSpec::prime(7);
    for (int i = 0; i < 100; ++i) {
        Fp a(static_cast<std::int64_t>(rng()), 7), b(static_cast<std::int64_t>(rng()), 7),
            c(static_cast<std::int64_t>(rng()), 7);
        s.expect((a + b) + c == a + (b + c), "F7 associativity");
        s.expect(a * (b + c) == a * b + a * c, "F7 distributivity");
        if (!a.is_zero())
            s.expect(a * a.inv() == field_one<Fp>(f7), "F7 inverse");
        s.expect(Fp::parse(a.str(), 7) == a, "F7 parse/print round trip");
    }
    s.finish("field axioms and scalar round trips (Q, F7)");
}

void det_oracle(Suite& s) {
    FieldSpec q = FieldSpec::rationals(), f5 = FieldSpec::prime(5);
    for (int i = 0; i < 30; ++i) {
        Mat<Rational> m = random_symmetric<Rational>(4, q, 100 + i, 9).to_mat();
        s.expect(det(m) == laplace_det(m), "Q det disagrees with cofactor oracle");
        Mat<Fp> mf = random_symmetric<Fp>(4, f5, 200 + i, 9).to_mat();
        s.expect(det(mf) == laplace_det(mf), "F5 det disagrees with cofactor oracle");
    }
    s.finish("determinant matches the cofactor-expansion oracle");
}

void rank_identity(Suite& s) {
    FieldSpec q = FieldSpec::rationals();
    DetWorkspace<Rational> ws;
    for (int n = 1; n <= 5; ++n)
        for (int i = 0; i < 10; ++i) {
            SymMat<Rational> B = random_symmetric<Rational>(n, q, 300 + 10 * n + i, 3);
            int largest = 0;
            for (int k = 1; k <= n; ++k)
                for_each_principal_set(n, k, [&](std::span<const int> g) {
                    if (!ws.det_sub(B, g, g).is_zero()) {
                        largest = k;
                        return false;
                    }
                    return true;
                });
            s.expect(rank(B) == largest, "rank != largest nonzero principal minor order");
        }
    s.finish("rank equals the largest nonzero principal minor order");
}

void bordered_rank_bounds(Suite& s) {
    FieldSpec q = FieldSpec::rationals();
    for (int n = 2; n <= 5; ++n)
        for (int i = 0; i < 10; ++i) {
            SymMat<Rational> B = random_symmetric<Rational>(n, q, 400 + 10 * n + i, 3);
            int rb = rank(B);
            for_each_principal_set(n, n - 1, [&](std::span<const int> a) {
                IndexSet alpha(std::vector<int>(a.begin(), a.end()));
                int ra = rank(principal_submatrix(B, alpha));
                s.expect(ra <= rb && rb <= ra + 2, "bordered rank bound violated");
                return true;
            });
            if (rb == n) {
                // nonsingular: every (n-1)x(n-1) submatrix has rank >= n-2
                for_each_quasi_principal_pair(n, n - 1, [&](std::span<const int> a,
                                                            std::span<const int> b) {
                    s.expect(rank(submatrix(B, a, b)) >= n - 2,
                             "submatrix of nonsingular matrix has rank < n-2");
                    return true;
                });
            }
        }
    s.finish("bordered and deleted rank bounds");
}

void structural_checks(Suite& s) {
    FieldSpec fields[] = {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3),
                          FieldSpec::prime(5)};
    int i = 0;
    for (const FieldSpec& f : fields)
        for (int n = 1; n <= 5; ++n)
            for (int rep = 0; rep < 10; ++rep, ++i) {
                MatrixReport rep_out;
                if (f.kind == FieldKind::Rationals)
                    rep_out = validate_matrix_report(
                        random_symmetric<Rational>(n, f, 500 + i, 4));
                else
                    rep_out = validate_matrix_report(random_symmetric<Fp>(n, f, 500 + i, 4));
                for (const auto& c : rep_out.checks)
                    s.expect(c.pass, c.name + " (" + c.detail + ")");
            }
    s.finish("structural sequence facts on random matrices (Q, F2, F3, F5)");
}

void schur_checks(Suite& s) {
    FieldSpec q = FieldSpec::rationals();
    DetWorkspace<Rational> ws;
    int done = 0;
    for (int seed = 0; done < 20 && seed < 200; ++seed) {
        SymMat<Rational> B = random_symmetric<Rational>(5, q, 700 + seed, 4);
        int k = 1 + seed % 2;
        IndexSet gamma = find_nonsingular_gamma(B, k);
        if (gamma.empty())
            continue;
        ++done;
        SymMat<Rational> C = schur_complement(B, gamma);
        IndexSet delta = gamma.complement(B.order());
        Rational dg = det_of_submatrix(B, gamma, gamma);
        // minor identity at all quasi-principal positions of order <= 2
        for (int j = 1; j <= std::min(2, delta.size()); ++j)
            for_each_quasi_principal_pair(delta.size(), j, [&](std::span<const int> a,
                                                               std::span<const int> b) {
                std::vector<int> alpha, beta; // positions in C -> indices of B
                for (int v : a)
                    alpha.push_back(delta[v - 1]);
                for (int v : b)
                    beta.push_back(delta[v - 1]);
                IndexSet ma(std::move(alpha)), mb(std::move(beta));
                Rational lhs = ws.det_sub(C, a, b) * dg;
                IndexSet au = IndexSet::union_of(ma, gamma);
                IndexSet bu = IndexSet::union_of(mb, gamma);
                Rational rhs = ws.det_sub(B, au.span(), bu.span());
                if (interleave_sign(gamma, ma) * interleave_sign(gamma, mb) < 0)
                    rhs = -rhs;
                s.expect(lhs == rhs,
                         "minor identity det C[a,b] * det B[g] = +/- det B[a+g, b+g]");
                return true;
            });
        s.expect(rank(C) == rank(B) - gamma.size(), "rank of complement != rank B - |gamma|");
        // symbol inheritance: q'_j = q_{j+k} whenever the latter is A or N
        std::string qb = compute_qpr(B, ws), qc = compute_qpr(C, ws);
        for (std::size_t j = 0; j < qc.size(); ++j) {
            char top = qb[j + static_cast<std::size_t>(k)];
            if (top == 'A' || top == 'N')
                s.expect(qc[j] == top, "complement qpr symbol not inherited");
        }
    }
    s.expect(done == 20, "too few nonsingular gamma draws");
    s.finish("Schur complement identities and qpr inheritance");
}

void attainability_consistency(Suite& s) {
    for (int n = 1; n <= 6; ++n) {
        std::vector<std::string> brute;
        std::string cur(static_cast<std::size_t>(n), 'A');
        const char alphabet[] = {'A', 'N', 'S'};
        std::vector<int> digit(static_cast<std::size_t>(n), 0);
        for (;;) {
            for (int i = 0; i < n; ++i)
                cur[static_cast<std::size_t>(i)] = alphabet[digit[static_cast<std::size_t>(i)]];
            if (check_attainable(cur).attainable)
                brute.push_back(cur);
            int pos = n - 1;
            while (pos >= 0 && digit[static_cast<std::size_t>(pos)] == 2)
                digit[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0)
                break;
            ++digit[static_cast<std::size_t>(pos)];
        }
        std::vector<std::string> listed = enumerate_attainable(n);
        s.expect(listed == brute, "enumeration != brute-force filter at n=" + std::to_string(n));
        s.expect(count_attainable(n) == listed.size(),
                 "closed-form count mismatch at n=" + std::to_string(n));
    }
    s.finish("attainability check/enumerate/count agree with brute force");
}

void synthesis_round_trip(Suite& s) {
    for (int n = 1; n <= 4; ++n)
        for (const std::string& seq : enumerate_attainable(n)) {
            SynthesisResult r = synthesize(seq, 42);
            s.expect(compute_qpr(r.matrix) == seq, "synthesized qpr != " + seq);
            s.expect(replay(r.trace) == r.matrix, "trace replay differs for " + seq);
        }
    s.finish("synthesis realizes and replays every attainable sequence (n <= 4)");
}

void gf2_survey(Suite& s) {
    SurveyResult r2 = exhaustive_survey(2, 2);
    s.expect(r2.total == 8, "GF(2) n=2 total != 8");
    std::map<std::string, std::uint64_t> want{{"AN", 1}, {"NN", 1}, {"SA", 4}, {"SN", 2}};
    std::map<std::string, std::uint64_t> got;
    for (const auto& [seq, e] : r2.realized)
        got[seq] = e.count;
    s.expect(got == want, "GF(2) n=2 realized table mismatch");

    SurveyResult r3 = exhaustive_survey(2, 3);
    std::uint64_t sum = 0;
    for (const auto& [seq, e] : r3.realized) {
        sum += e.count;
        s.expect(check_attainable(seq).attainable,
                 "survey realized a sequence violating the necessary condition: " + seq);
        s.expect(compute_qpr(e.witness) == seq, "stored witness has wrong qpr");
    }
    s.expect(sum == r3.total, "GF(2) n=3 counts do not sum to 2^6");
    s.expect(r3.realized.find("AAN") == r3.realized.end(),
             "AAN realized over GF(2) (should be impossible)");
    s.expect(r3.realized.find("AAA") == r3.realized.end(),
             "AAA realized over GF(2) (should be impossible)");

    SurveyResult par = exhaustive_survey_parallel(2, 3);
    bool same = par.total == r3.total && par.realized.size() == r3.realized.size();
    if (same)
        for (const auto& [seq, e] : r3.realized) {
            auto it = par.realized.find(seq);
            same = it != par.realized.end() && it->second.count == e.count &&
                   it->second.witness_index == e.witness_index &&
                   it->second.witness == e.witness;
            if (!same)
                break;
        }
    s.expect(same, "parallel survey differs from serial");
    s.finish("GF(2) survey tables and parallel/serial agreement");
}

void io_round_trip(Suite& s) {
    SynthesisResult r = synthesize("ASAN", 7);
    AnySymMatrix m(r.matrix);
    std::string text = matrix_str(m);
    std::istringstream in(text);
    AnySymMatrix back = read_matrix(in);
    s.expect(matrix_str(back) == text, "matrix file round trip not byte-identical");
    s.expect(std::get<SymMat<Rational>>(back) == r.matrix, "matrix changed through file");
    s.finish("matrix file round trip");
}

} // namespace

bool run_selftest(std::ostream& out) {
    Suite s{out};
    field_axioms(s);
    det_oracle(s);
    rank_identity(s);
    bordered_rank_bounds(s);
    structural_checks(s);
    schur_checks(s);
    attainability_consistency(s);
    synthesis_round_trip(s);
    gf2_survey(s);
    io_round_trip(s);
    out << (s.all_ok ? "selftest passed\n" : "selftest FAILED\n");
    return s.all_ok;
}

} // namespace qpr
