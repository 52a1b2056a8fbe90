#include "qpr/attainability.hpp"

#include <algorithm>

#include "qpr/sequences.hpp"

namespace qpr {

std::string violation_str(Violation v) {
    switch (v) {
    case Violation::EndsInS:
        return "ends in S";
    case Violation::ContainsNA:
        return "contains NA";
    case Violation::ContainsNS:
        return "contains NS";
    }
    return "?";
}

std::string AttainabilityVerdict::str() const {
    if (attainable)
        return "attainable";
    std::string s = "not attainable: ";
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i)
            s += ", ";
        s += violation_str(violations[i]);
    }
    return s;
}

AttainabilityVerdict check_attainable(std::string_view seq) {
    std::string s = parse_sequence(seq);
    AttainabilityVerdict v;
    if (s.back() == 'S')
        v.violations.push_back(Violation::EndsInS);
    bool na = false, ns = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] != 'N')
            continue;
        if (s[i + 1] == 'A')
            na = true;
        if (s[i + 1] == 'S')
            ns = true;
    }
    if (na)
        v.violations.push_back(Violation::ContainsNA);
    if (ns)
        v.violations.push_back(Violation::ContainsNS);
    v.attainable = v.violations.empty();
    return v;
}

std::vector<std::string> enumerate_attainable(int n) {
    if (n < 1 || n > 20)
        throw DomainError("enumeration length must be in [1, 20], got " + std::to_string(n));
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(count_attainable(n)));
    // heads over {A,S} of length k, then an all-N tail
    for (int k = 0; k <= n; ++k) {
        std::uint64_t heads = std::uint64_t(1) << k;
        for (std::uint64_t bits = 0; bits < heads; ++bits) {
            std::string s(static_cast<std::size_t>(n), 'N');
            for (int i = 0; i < k; ++i)
                s[static_cast<std::size_t>(i)] = (bits >> i) & 1 ? 'S' : 'A';
            if (k == n && s.back() == 'S')
                continue; // full-length heads must end in A
            out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_attainable(int n) {
    if (n < 1)
        throw DomainError("sequence length must be positive");
    if (n > 62)
        throw DomainError("count overflows 64 bits for n > 62");
    return (std::uint64_t(1) << n) + (std::uint64_t(1) << (n - 1)) - 1;
}

} // namespace qpr
