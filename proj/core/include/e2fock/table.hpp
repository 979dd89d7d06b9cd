#pragma once

// Table emitter for the closed-form objects: U(g) matrix blocks, irreducible
// matrix elements, eigenbasis radial values, and orthogonality profiles.

#include <iosfwd>
#include <string>
#include <vector>

#include "e2fock/verify.hpp"

namespace e2fock {

/// u-matrix, irrep, basis, profile.
const std::vector<std::string>& table_kinds();

/// Writes a header line (kind, formula, parameters), then the column names for CSV,
/// then one row per entry. Scalar parameters use the first grid value; irrep takes
/// the k and n lists. Throws UsageError for unknown kinds or invalid parameters.
void run_table(const std::string& kind, const RunConfig& config, std::ostream& out);

}  // namespace e2fock
