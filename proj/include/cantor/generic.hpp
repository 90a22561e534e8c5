#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cantor/bits.hpp"

namespace cantor {

/// Monotone partial map (ρ, n, budget) ↦ {0, 1, diverged-so-far}. Supplied
/// functions must be pure and monotone: a converged answer never changes or
/// disappears when ρ is extended or the budget grows.
class OracleFunctional {
 public:
  using Fn = std::function<std::optional<int>(const BitString& rho,
                                              std::size_t n,
                                              std::size_t budget)>;

  OracleFunctional() = default;
  OracleFunctional(Fn fn, std::string description);

  std::optional<int> query(const BitString& rho, std::size_t n,
                           std::size_t budget) const;
  const std::string& description() const { return description_; }

  /// Φ^ρ(n) = ρ(g(n)) when g(n) < |ρ| and n < |g|, diverged otherwise.
  static OracleFunctional bit_of_g(std::vector<std::size_t> g);
  /// Diverges everywhere.
  static OracleFunctional never();
  /// Converges to `bit` without reading the oracle.
  static OracleFunctional constant(int bit);

 private:
  Fn fn_;
  std::string description_;
};

/// A condition σ together with the oracle functional it constrains and the
/// finite database of pairs (n, g(n)) with g(n) < |σ|.
struct ForcingInstance {
  OracleFunctional phi;
  BitString sigma;
  std::map<std::size_t, std::size_t> database;

  ForcingInstance(OracleFunctional phi_, BitString sigma_,
                  std::map<std::size_t, std::size_t> database_ = {});
};

/// One line per oracle query: ("rho", n, budget) -> 0|1|diverge.
using QueryTranscript = std::vector<std::string>;

struct HaltingExtension {
  BitString rho;
  int value;
};

/// First ρ ⪰ tau on which phi(·, n, ·) converges, found by scanning
/// extensions in length-then-lexicographic order while doubling the
/// per-query budget each stage (stage s rescans extensions of at most s
/// extra bits with budget 2^s). search_limit caps the total number of
/// queries; throws BudgetExhausted once it is spent.
HaltingExtension find_halting_extension(const OracleFunctional& phi,
                                        const BitString& tau, std::size_t n,
                                        std::size_t search_limit,
                                        QueryTranscript* transcript = nullptr);

/// Decides which of the candidates a < b cannot equal g(n): extends σ by
/// zeros to a string τ with τ(a)=0, τ(b)=1 (positions inside σ keep their
/// bits), finds a converging ρ ⪰ τ and returns the candidate whose bit
/// disagrees with the converged value. Throws InconsistentInstance when the
/// two candidates are not separated.
std::size_t eliminate_pair(const ForcingInstance& inst, std::size_t n,
                           std::size_t a, std::size_t b,
                           std::size_t search_limit,
                           QueryTranscript* transcript = nullptr);

/// Computes g(n) for an instance satisfying the density hypothesis: database
/// lookup first, otherwise a converging ρ₀ ⪰ σ bounds the candidates to
/// [|σ|, |ρ₀|-1] and pairwise elimination (always between the two smallest
/// survivors) leaves the value.
std::size_t compute_g(const ForcingInstance& inst, std::size_t n,
                      std::size_t search_limit,
                      QueryTranscript* transcript = nullptr);

struct ConvergenceBoundReport {
  bool ok = true;
  // Set when ok is false: a converging pair with g(n) ≥ |ρ|.
  BitString witness_rho;
  std::size_t witness_n = 0;
};

/// Samples `trials` pairs (ρ ⪰ σ, n < |g|) in a fixed length-then-lex order
/// and checks that every convergence satisfies g(n) < |ρ|.
ConvergenceBoundReport check_convergence_bound(const ForcingInstance& inst,
                                               const std::vector<std::size_t>& g,
                                               std::size_t trials);

/// Bounded form of the density hypothesis: for all n < n_bound and all
/// τ ⪰ σ with |τ| ≤ tau_bound there is ρ ⪰ τ with |ρ| ≤ ext_bound on which
/// phi converges to ρ(g(n)).
bool check_forcing_density(const ForcingInstance& inst,
                           const std::vector<std::size_t>& g,
                           std::size_t n_bound, std::size_t tau_bound,
                           std::size_t ext_bound);

}  // namespace cantor
