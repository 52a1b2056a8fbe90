#include "qpr/search.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qpr {

namespace {

constexpr std::uint64_t kSurveyBudget = 10'000'000;

// Upper-triangle entry list in row-major order; the odometer digit k
// (little-endian base p) is the value of entry k.
std::vector<std::pair<int, int>> triangle_entries(int n) {
    std::vector<std::pair<int, int>> e;
    e.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            e.emplace_back(i, j);
    return e;
}

std::uint64_t survey_total(std::uint32_t p, int n) {
    std::uint64_t total = 1;
    int m = n * (n + 1) / 2;
    for (int e = 0; e < m; ++e) {
        if (total > kSurveyBudget / p)
            throw DomainError("survey of GF(" + std::to_string(p) + ") order " +
                              std::to_string(n) + " exceeds the " +
                              std::to_string(kSurveyBudget) + "-matrix budget");
        total *= p;
    }
    return total;
}

SurveyResult survey_range(const FieldSpec& field, int n,
                          const std::vector<std::pair<int, int>>& entries, std::uint64_t lo,
                          std::uint64_t hi) {
    SurveyResult out;
    out.field = field;
    out.n = n;
    SymMat<Fp> m = SymMat<Fp>::zero(n, field);
    DetWorkspace<Fp> ws;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        std::uint64_t digits = idx;
        for (const auto& [i, j] : entries) {
            m.set(i, j, Fp(static_cast<std::int64_t>(digits % field.p), field.p));
            digits /= field.p;
        }
        std::string seq = compute_qpr(m, ws);
        auto [it, fresh] = out.realized.try_emplace(std::move(seq));
        if (fresh) {
            it->second.witness_index = idx;
            it->second.witness = m;
        }
        ++it->second.count;
    }
    return out;
}

void merge_into(SurveyResult& dst, SurveyResult&& part) {
    for (auto& [seq, entry] : part.realized) {
        auto [it, fresh] = dst.realized.try_emplace(seq);
        if (fresh || entry.witness_index < it->second.witness_index) {
            it->second.witness_index = entry.witness_index;
            it->second.witness = std::move(entry.witness);
        }
        it->second.count += entry.count;
    }
}

} // namespace

SurveyResult exhaustive_survey(std::uint32_t p, int n) {
    FieldSpec field = FieldSpec::prime(p);
    if (n < 1)
        throw DomainError("survey order must be >= 1");
    std::uint64_t total = survey_total(p, n);
    SurveyResult out = survey_range(field, n, triangle_entries(n), 0, total);
    out.total = total;
    return out;
}

SurveyResult exhaustive_survey_parallel(std::uint32_t p, int n) {
    FieldSpec field = FieldSpec::prime(p);
    if (n < 1)
        throw DomainError("survey order must be >= 1");
    std::uint64_t total = survey_total(p, n);
    auto entries = triangle_entries(n);
#ifdef _OPENMP
    int workers = omp_get_max_threads();
#else
    int workers = 1;
#endif
    std::vector<SurveyResult> parts(static_cast<std::size_t>(workers));
#pragma omp parallel for schedule(static, 1)
    for (int w = 0; w < workers; ++w) {
        std::uint64_t lo = total * static_cast<std::uint64_t>(w) / workers;
        std::uint64_t hi = total * (static_cast<std::uint64_t>(w) + 1) / workers;
        parts[static_cast<std::size_t>(w)] = survey_range(field, n, entries, lo, hi);
    }
    SurveyResult out;
    out.field = field;
    out.n = n;
    out.total = total;
    for (auto& part : parts)
        merge_into(out, std::move(part));
    return out;
}

} // namespace qpr
