#pragma once

#include <cstddef>
#include <string>

#include "cantor/json_io.hpp"
#include "cantor/perm.hpp"

namespace cantor {

/// Result of one end-to-end scenario. The JSON document has a fixed key
/// order and no timestamps, so repeated runs serialize byte-identically.
struct DemoReport {
  Json doc;
  bool pass = false;

  std::string to_string() const { return doc.dump(2) + "\n"; }
};

/// Builds g = θ⁻¹∘S∘θ, recomputes it through candidate elimination against
/// the oracle Φ^ρ(n) = ρ(g(n)), then recovers θ⁻¹ from the recomputed table
/// by the conjugate recursion. When transcript_path is nonempty every oracle
/// query is logged there.
DemoReport demo_successor_conjugate(const Permutation& theta,
                                    std::size_t window,
                                    std::size_t search_limit,
                                    const std::string& transcript_path = {});

/// Builds the homeomorphism pair of θ, conjugates the shift through it,
/// verifies the conjugacy, checks the uniformity moduli in both directions,
/// and reconstructs the pair's tables from the conjugate and table 0.
DemoReport demo_homeo_conjugate(const Permutation& theta, std::size_t window);

/// Reconstructs two tables from the pair-conjunction functional and a first
/// table reading positions 2,3; compares bit-exactly against the expected
/// tables and their rendered Boolean forms.
DemoReport demo_table_reconstruction();

}  // namespace cantor
