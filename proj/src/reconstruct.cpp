#include "cantor/reconstruct.hpp"

#include <algorithm>

namespace cantor {

std::vector<OutputTable> reconstruct_tables(const TruthTableFunctional& phi,
                                            const OutputTable& table0,
                                            std::size_t upto,
                                            std::size_t max_use) {
  std::vector<OutputTable> tables;
  tables.reserve(upto);
  if (upto == 0) return tables;
  tables.push_back(table0);
  for (std::size_t n = 1; n < upto; ++n) {
    tables.push_back(substitute_table(tables.back(), phi, max_use));
  }
  return tables;
}

bool verify_conjugacy(const HomeoPair& theta, const TruthTableFunctional& phi,
                      Window w) {
  for (std::size_t n = 0; n < w.limit; ++n) {
    // shift(Θ(X))(n) is Θ(X)(n+1), so the right-hand side is Θ's next table.
    OutputTable left = substitute_table(theta.forward.output(n), phi);
    OutputTable right = theta.forward.output(n + 1);
    if (!tables_extensionally_equal(left, right)) return false;
  }
  return true;
}

TruthTableFunctional conjugate_shift(const HomeoPair& theta, std::size_t upto,
                                     ConjugationDirection direction,
                                     std::size_t max_use) {
  const TruthTableFunctional& inner =
      direction == ConjugationDirection::inverse_outside ? theta.forward
                                                         : theta.backward;
  const TruthTableFunctional& outer =
      direction == ConjugationDirection::inverse_outside ? theta.backward
                                                         : theta.forward;
  // S★ after inner: output j of the middle stage is inner's table j+1.
  TruthTableFunctional middle(
      {}, [inner](std::size_t j) { return inner.output(j + 1); });
  return tt_compose(outer, middle, upto, max_use);
}

namespace {

std::string atoms(const std::vector<std::size_t>& use, std::size_t from,
                  std::size_t upto) {
  std::string s;
  for (std::size_t i = from; i < upto; ++i) {
    s += "A(" + std::to_string(use[i]) + ")";
  }
  return s;
}

bool is_conjunction(const OutputTable& t) {
  std::size_t full = t.table.size() - 1;
  for (std::size_t row = 0; row < t.table.size(); ++row) {
    if (t.table[row] != (row == full ? 1 : 0)) return false;
  }
  return true;
}

bool is_half_implication(const OutputTable& t) {
  if (t.use.empty() || t.use.size() % 2 != 0) return false;
  std::size_t k = t.use.size() / 2;
  std::size_t low_mask = (std::size_t{1} << k) - 1;
  for (std::size_t row = 0; row < t.table.size(); ++row) {
    bool lhs = (row & low_mask) == low_mask;
    bool rhs = (row >> k) == low_mask;
    if (t.table[row] != static_cast<std::uint8_t>(!lhs || rhs)) return false;
  }
  return true;
}

}  // namespace

std::string render_table_pattern(const OutputTable& t) {
  if (t.use.size() == 1 && t.table == std::vector<std::uint8_t>{0, 1}) {
    return atoms(t.use, 0, 1);
  }
  if (t.use.size() >= 2 && is_conjunction(t)) {
    return atoms(t.use, 0, t.use.size());
  }
  if (t.use.size() >= 2 && is_half_implication(t)) {
    std::size_t k = t.use.size() / 2;
    return atoms(t.use, 0, k) + " -> " + atoms(t.use, k, t.use.size());
  }
  return "";
}

}  // namespace cantor
