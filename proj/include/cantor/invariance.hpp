#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cantor/bits.hpp"
#include "cantor/generic.hpp"
#include "cantor/perm.hpp"
#include "cantor/tt.hpp"

namespace cantor {

/// Table a ↦ b certifying uniform E₀-invariance on a tested range; kept
/// monotone nondecreasing (the minimal modulus is, since agreement from a
/// refines agreement from a+1).
struct UniformModulus {
  std::vector<std::size_t> table;

  /// Normalizes by running maximum.
  static UniformModulus from_table(std::vector<std::size_t> raw);
  std::size_t at(std::size_t a) const;  // throws RangeExceeded
};

/// result(a) = outer(inner(a)); a modulus for the composed map.
UniformModulus modulus_compose(const UniformModulus& outer,
                               const UniformModulus& inner);

/// Total map on eventually periodic values, with a label for reports.
class CantorMap {
 public:
  using Fn = std::function<Real(const Real&)>;

  CantorMap() = default;
  CantorMap(std::string description, Fn fn)
      : description_(std::move(description)), fn_(std::move(fn)) {}

  Real operator()(const Real& x) const { return fn_(x); }
  const std::string& description() const { return description_; }

 private:
  std::string description_;
  Fn fn_;
};

CantorMap identity_map();
CantorMap min_drop_map();
/// Left shift: result(n) = x(n+1).
CantorMap shift_map();
CantorMap induced_map_of(const Permutation& theta);
CantorMap compose(const CantorMap& outer, const CantorMap& inner);

/// Modulus of x ↦ x∘θ at agreement point a: returns b+1 where
/// b = max{θ⁻¹(m) : m < a}; 0 when a = 0 (agreement from 0 is equality).
std::size_t perm_modulus(const Permutation& theta, std::size_t a);
UniformModulus perm_modulus_table(const Permutation& theta, std::size_t upto);

struct UniformityCounterexample {
  Real x;
  Real y;
  std::size_t a = 0;
  std::size_t b = 0;
};

/// Exhaustively tests all pairs X, Y built from heads of length w.limit over
/// the tails 0^ω and 1^ω with X =*_a Y, in a fixed lexicographic order.
/// Returns the first pair with ¬(F(X) =*_b F(Y)), or absent when the bound
/// holds on the whole universe.
std::optional<UniformityCounterexample> check_uniform(const CantorMap& f,
                                                      std::size_t a,
                                                      std::size_t b, Window w);

/// Clears the least 1-bit; identity on 0^ω.
Real min_drop(const Real& x);

/// Pair X = Y ∪ {0}, Y = {max(b,1)} refuting uniformity of min_drop at a=1:
/// X =*₁ Y while the images disagree at max(b,1) ≥ b.
std::pair<Real, Real> min_drop_counterexample(std::size_t b);

/// Requires x =*_a y (PreconditionViolated otherwise) and decides whether
/// the images under min_drop are within Hamming distance a+2. Distances are
/// counted below w extended, via eq_star, far enough to capture every
/// disagreement; a pair whose images disagree infinitely often fails.
bool check_hamming_bound(const Real& x, const Real& y, std::size_t a,
                         Window w);

/// Recovers the truth tables of the functional forced by phi above sigma:
/// outputs below modulus_b come from the supplied database; above it they
/// are tabulated by evaluating phi on σ↘X over every assignment X on
/// [0, probe_bound), keeping the positions the output provably depends on.
TruthTableFunctional extract_tt_from_forcing(
    const OracleFunctional& phi, const BitString& sigma, std::size_t modulus_b,
    const std::vector<OutputTable>& database, std::size_t upto,
    std::size_t probe_bound, std::size_t search_limit);

}  // namespace cantor
