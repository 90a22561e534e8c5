#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cantor/tt.hpp"

namespace cantor {

/// Iterates the substitution step tables[n+1] = tables[n] ∘ phi starting
/// from table0. When phi is the shift conjugated by a homeomorphism Θ and
/// table0 is Θ's first table, the result lists Θ's tables 0..upto-1.
std::vector<OutputTable> reconstruct_tables(const TruthTableFunctional& phi,
                                            const OutputTable& table0,
                                            std::size_t upto,
                                            std::size_t max_use = kDefaultMaxUse);

/// Θ(phi(X)) and shift(Θ(X)) agree below w.limit for all inputs determined
/// below the union of uses.
bool verify_conjugacy(const HomeoPair& theta, const TruthTableFunctional& phi,
                      Window w);

enum class ConjugationDirection {
  inverse_outside,  // Θ⁻¹ ∘ S★ ∘ Θ
  inverse_inside,   // Θ ∘ S★ ∘ Θ⁻¹
};

/// The shift conjugated through the pair, materialized for outputs
/// 0..upto-1 (and extensible through a rule).
TruthTableFunctional conjugate_shift(
    const HomeoPair& theta, std::size_t upto,
    ConjugationDirection direction = ConjugationDirection::inverse_outside,
    std::size_t max_use = kDefaultMaxUse);

/// Human-readable form when the table matches a known pattern: "A(2)" for
/// the identity, "A(2)A(3)" for a conjunction, "A(4)A(5) -> A(6)A(7)" for an
/// implication between conjunctions of the two halves of the use set.
/// Empty string otherwise.
std::string render_table_pattern(const OutputTable& t);

}  // namespace cantor
