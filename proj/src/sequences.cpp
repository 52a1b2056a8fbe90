#include "qpr/sequences.hpp"

#include <cctype>

namespace qpr {

std::string parse_sequence(std::string_view text) {
    if (text.empty())
        throw ParseError("empty sequence");
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (u != 'A' && u != 'S' && u != 'N')
            throw ParseError(std::string("invalid sequence character '") + c +
                             "' (expected A, S, or N)");
        out += u;
    }
    return out;
}

std::string PrSequence::str() const {
    std::string s = r0 ? "1]" : "0]";
    for (bool b : r)
        s += b ? '1' : '0';
    return s;
}

namespace detail {

MatrixReport build_report(std::string qpr, std::string epr, PrSequence pr, int rank) {
    MatrixReport rep;
    rep.qpr = std::move(qpr);
    rep.epr = std::move(epr);
    rep.pr = std::move(pr);
    rep.rank = rank;
    auto add = [&](std::string name, bool pass, std::string detail = "") {
        rep.checks.push_back({std::move(name), pass, std::move(detail)});
    };
    const std::string& q = rep.qpr;
    const std::string& l = rep.epr;
    int n = static_cast<int>(q.size());
    if (n == 0) {
        add("empty matrix has empty sequences", rank == 0);
        return rep;
    }

    add("qpr ends in A or N", q.back() != 'S', "qpr = " + q);

    bool tail_ok = true;
    for (int i = 0; i + 1 < n; ++i)
        if (q[static_cast<std::size_t>(i)] == 'N' && q[static_cast<std::size_t>(i + 1)] != 'N')
            tail_ok = false;
    add("qpr N forces an all-N tail", tail_ok, "qpr = " + q);

    int last_non_n = 0;
    for (int i = 0; i < n; ++i)
        if (q[static_cast<std::size_t>(i)] != 'N')
            last_non_n = i + 1;
    add("rank equals index of last non-N qpr symbol", last_non_n == rank,
        "qpr = " + q + ", rank = " + std::to_string(rank));

    bool epr_pinned = true;
    for (int i = 0; i < n; ++i) {
        char qc = q[static_cast<std::size_t>(i)];
        if ((qc == 'A' || qc == 'N') && l[static_cast<std::size_t>(i)] != qc)
            epr_pinned = false;
    }
    add("qpr A/N pins the epr symbol at the same order", epr_pinned,
        "qpr = " + q + ", epr = " + l);

    bool nn_ok = true;
    for (int i = 0; i + 2 < n; ++i)
        if (l[static_cast<std::size_t>(i)] == 'N' && l[static_cast<std::size_t>(i + 1)] == 'N' &&
            l[static_cast<std::size_t>(i + 2)] != 'N')
            nn_ok = false;
    add("epr NN forces an all-N tail", nn_ok, "epr = " + l);

    bool pr_ok = rep.pr.r.size() == l.size();
    for (std::size_t i = 0; pr_ok && i < l.size(); ++i)
        pr_ok = rep.pr.r[i] == (l[i] != 'N');
    add("pr bits match epr classification", pr_ok, "pr = " + rep.pr.str() + ", epr = " + l);

    return rep;
}

} // namespace detail

} // namespace qpr
