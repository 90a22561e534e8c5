#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cantor/bits.hpp"
#include "cantor/perm.hpp"

namespace cantor {

/// Composite use sets larger than this are refused unless the caller raises
/// the cap explicitly; tables grow as 2^|use|.
constexpr std::size_t kDefaultMaxUse = 20;

/// One output bit of a truth-table functional: a Boolean function of the
/// input bits at the `use` positions. Row indexing convention: the row for
/// an assignment A is Σ_i A(use[i])·2^i, i.e. use[0] contributes the least
/// significant bit.
struct OutputTable {
  std::vector<std::size_t> use;   // strictly increasing
  std::vector<std::uint8_t> table;  // 2^|use| entries

  friend bool operator==(const OutputTable&, const OutputTable&) = default;
};

/// Validating constructor for externally supplied tables.
OutputTable make_table(std::vector<std::size_t> use,
                       std::vector<std::uint8_t> table);

OutputTable identity_table(std::size_t position);

/// Value of t under the assignment described by bit_at (position ↦ bit).
template <typename BitAt>
int table_value(const OutputTable& t, BitAt&& bit_at) {
  std::size_t row = 0;
  for (std::size_t i = 0; i < t.use.size(); ++i) {
    row |= static_cast<std::size_t>(bit_at(t.use[i]) & 1) << i;
  }
  return t.table[row];
}

/// Total continuous map 2^ω → 2^ω: every output bit is a finite Boolean
/// function of the input. Holds a materialized prefix of tables plus an
/// optional generator rule for the rest. Immutable after construction apart
/// from materialize(); queries are pure.
class TruthTableFunctional {
 public:
  using Rule = std::function<OutputTable(std::size_t)>;

  TruthTableFunctional() = default;
  explicit TruthTableFunctional(std::vector<OutputTable> outputs,
                                Rule rule = nullptr,
                                std::string rule_name = {});

  std::size_t arity() const { return outputs_.size(); }
  bool has_rule() const { return static_cast<bool>(rule_); }
  const std::string& rule_name() const { return rule_name_; }
  bool has_output(std::size_t n) const {
    return n < outputs_.size() || has_rule();
  }
  const std::vector<OutputTable>& outputs() const { return outputs_; }

  /// Table for output n, materialized or rule-generated. Throws MissingTable.
  OutputTable output(std::size_t n) const;

  /// Output bit n on input x.
  int apply(const Real& x, std::size_t n) const;

  /// Extends the materialized prefix to [0, upto) through the rule.
  void materialize(std::size_t upto);

 private:
  std::vector<OutputTable> outputs_;
  Rule rule_;
  std::string rule_name_;
};

int tt_apply(const TruthTableFunctional& f, const Real& x, std::size_t n);

/// Substitutes `inner` into the inputs of a single output table: the result
/// computes t(inner(·)). Its use set is the sorted, deduplicated union of
/// inner's use sets over t.use.
OutputTable substitute_table(const OutputTable& t,
                             const TruthTableFunctional& inner,
                             std::size_t max_use = kDefaultMaxUse);

/// g after f: outputs 0..upto-1 of the map x ↦ g(f(x)).
TruthTableFunctional tt_compose(const TruthTableFunctional& g,
                                const TruthTableFunctional& f,
                                std::size_t upto,
                                std::size_t max_use = kDefaultMaxUse);

/// f★: output n reads position f(n) with the identity table.
TruthTableFunctional star_of_function(std::function<std::size_t(std::size_t)> f,
                                      std::size_t upto);
/// Same from a finite table of f; no rule beyond the table.
TruthTableFunctional star_of_table(const std::vector<std::size_t>& f);

TruthTableFunctional identity_functional(std::size_t upto);
/// S★, the left shift: output n reads position n+1.
TruthTableFunctional shift_functional(std::size_t upto);
/// Output n reads θ(n); evaluates x ↦ x∘θ.
TruthTableFunctional from_permutation(const Permutation& theta,
                                      std::size_t upto);
/// Output n is the conjunction of positions 2n and 2n+1 (rule "pair-and").
TruthTableFunctional pair_and_functional();

/// The two tables compute the same function (compared over the union of
/// their use sets).
bool tables_extensionally_equal(const OutputTable& a, const OutputTable& b);

/// Both compositions act as the identity on every position below w.limit,
/// for all inputs determined below the union of uses.
bool verify_homeo_pair(const TruthTableFunctional& fwd,
                       const TruthTableFunctional& bwd, Window w);

/// A mutually inverse pair of functionals, checked on a window.
struct HomeoPair {
  TruthTableFunctional forward;
  TruthTableFunctional backward;
  Window verified_window;

  /// Verifies the pair on w before constructing; throws Error on failure.
  static HomeoPair checked(TruthTableFunctional fwd, TruthTableFunctional bwd,
                           Window w);
  static HomeoPair from_permutation(const Permutation& theta, Window w);
};

}  // namespace cantor
