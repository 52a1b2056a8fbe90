#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qpr/errors.hpp"

namespace qpr {

/// Ways a sequence can fail to be the qpr-sequence of any symmetric matrix.
/// The two *violations* are conclusive over every field; the *absence* of
/// violations guarantees attainability only over characteristic 0 (a
/// witness over Q can then be produced by synthesize).
enum class Violation { EndsInS, ContainsNA, ContainsNS };

std::string violation_str(Violation v);

struct AttainabilityVerdict {
    bool attainable = false;
    std::vector<Violation> violations;

    std::string str() const; // "attainable" or "not attainable: ..."
};

/// Checks the two structural conditions: the last symbol is not S, and no
/// N is immediately followed by A or S. Input is case-insensitive; throws
/// ParseError on an empty string or characters outside {A,S,N}.
AttainabilityVerdict check_attainable(std::string_view seq);

/// All attainable sequences of length n in lexicographic order (A < N < S).
/// These are exactly the strings {A,S}^k N^(n-k), where k = n requires a
/// final A. Guarded to 1 <= n <= 20 since the output is exponential.
std::vector<std::string> enumerate_attainable(int n);

/// |enumerate_attainable(n)| in closed form: 2^n + 2^(n-1) - 1.
std::uint64_t count_attainable(int n);

} // namespace qpr
