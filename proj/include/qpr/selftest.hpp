#pragma once

#include <iosfwd>

namespace qpr {

/// Cross-module invariant suite: field axioms, determinant cross-checks,
/// rank identities, structural sequence facts, Schur identities,
/// attainability consistency, synthesis round trips, and the GF(2) survey
/// table. Prints one "ok"/"FAIL" line per group; returns true when all pass.
bool run_selftest(std::ostream& out);

} // namespace qpr
