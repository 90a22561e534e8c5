#include "cantor/tt.hpp"

#include <algorithm>

namespace cantor {

OutputTable make_table(std::vector<std::size_t> use,
                       std::vector<std::uint8_t> table) {
  if (!std::is_sorted(use.begin(), use.end()) ||
      std::adjacent_find(use.begin(), use.end()) != use.end()) {
    throw Error("use set must be strictly increasing");
  }
  if (use.size() >= 63) {
    throw UseTooLarge("use set of " + std::to_string(use.size()) +
                      " positions cannot be tabulated");
  }
  if (table.size() != (std::size_t{1} << use.size())) {
    throw Error("table must have 2^|use| entries, got " +
                std::to_string(table.size()));
  }
  for (auto b : table) {
    if (b > 1) throw Error("table entries must be bits");
  }
  return OutputTable{std::move(use), std::move(table)};
}

OutputTable identity_table(std::size_t position) {
  return OutputTable{{position}, {0, 1}};
}

TruthTableFunctional::TruthTableFunctional(std::vector<OutputTable> outputs,
                                           Rule rule, std::string rule_name)
    : outputs_(std::move(outputs)),
      rule_(std::move(rule)),
      rule_name_(std::move(rule_name)) {}

OutputTable TruthTableFunctional::output(std::size_t n) const {
  if (n < outputs_.size()) return outputs_[n];
  if (rule_) return rule_(n);
  throw MissingTable(n);
}

int TruthTableFunctional::apply(const Real& x, std::size_t n) const {
  auto bit_at = [&x](std::size_t p) { return x.at(p); };
  if (n < outputs_.size()) return table_value(outputs_[n], bit_at);
  if (rule_) {
    OutputTable t = rule_(n);
    return table_value(t, bit_at);
  }
  throw MissingTable(n);
}

void TruthTableFunctional::materialize(std::size_t upto) {
  if (upto <= outputs_.size()) return;
  if (!rule_) throw MissingTable(outputs_.size());
  for (std::size_t n = outputs_.size(); n < upto; ++n) {
    outputs_.push_back(rule_(n));
  }
}

int tt_apply(const TruthTableFunctional& f, const Real& x, std::size_t n) {
  return f.apply(x, n);
}

OutputTable substitute_table(const OutputTable& t,
                             const TruthTableFunctional& inner,
                             std::size_t max_use) {
  std::vector<OutputTable> parts;
  parts.reserve(t.use.size());
  for (std::size_t u : t.use) parts.push_back(inner.output(u));

  std::vector<std::size_t> use;
  for (const auto& p : parts) use.insert(use.end(), p.use.begin(), p.use.end());
  std::sort(use.begin(), use.end());
  use.erase(std::unique(use.begin(), use.end()), use.end());
  if (use.size() > max_use) {
    throw UseTooLarge("composite use set has " + std::to_string(use.size()) +
                      " positions (limit " + std::to_string(max_use) + ")");
  }

  std::vector<std::uint8_t> table(std::size_t{1} << use.size());
  for (std::size_t row = 0; row < table.size(); ++row) {
    auto bit_at = [&](std::size_t p) {
      auto it = std::lower_bound(use.begin(), use.end(), p);
      return static_cast<int>((row >> (it - use.begin())) & 1);
    };
    std::size_t outer_row = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      outer_row |= static_cast<std::size_t>(table_value(parts[i], bit_at)) << i;
    }
    table[row] = t.table[outer_row];
  }
  return OutputTable{std::move(use), std::move(table)};
}

TruthTableFunctional tt_compose(const TruthTableFunctional& g,
                                const TruthTableFunctional& f,
                                std::size_t upto, std::size_t max_use) {
  std::vector<OutputTable> outputs;
  outputs.reserve(upto);
  for (std::size_t n = 0; n < upto; ++n) {
    outputs.push_back(substitute_table(g.output(n), f, max_use));
  }
  // Keep the composition extensible beyond upto when g can supply tables.
  auto rule = [g, f, max_use](std::size_t n) {
    return substitute_table(g.output(n), f, max_use);
  };
  return TruthTableFunctional(std::move(outputs), std::move(rule));
}

TruthTableFunctional star_of_function(
    std::function<std::size_t(std::size_t)> f, std::size_t upto) {
  std::vector<OutputTable> outputs;
  outputs.reserve(upto);
  for (std::size_t n = 0; n < upto; ++n) outputs.push_back(identity_table(f(n)));
  auto rule = [f](std::size_t n) { return identity_table(f(n)); };
  return TruthTableFunctional(std::move(outputs), std::move(rule));
}

TruthTableFunctional star_of_table(const std::vector<std::size_t>& f) {
  std::vector<OutputTable> outputs;
  outputs.reserve(f.size());
  for (std::size_t image : f) outputs.push_back(identity_table(image));
  return TruthTableFunctional(std::move(outputs));
}

TruthTableFunctional identity_functional(std::size_t upto) {
  return star_of_function([](std::size_t n) { return n; }, upto);
}

TruthTableFunctional shift_functional(std::size_t upto) {
  return star_of_function([](std::size_t n) { return n + 1; }, upto);
}

TruthTableFunctional from_permutation(const Permutation& theta,
                                      std::size_t upto) {
  auto rule = [theta](std::size_t n) { return identity_table(theta(n)); };
  std::vector<OutputTable> outputs;
  outputs.reserve(upto);
  for (std::size_t n = 0; n < upto; ++n) outputs.push_back(rule(n));
  return TruthTableFunctional(std::move(outputs), std::move(rule));
}

TruthTableFunctional pair_and_functional() {
  auto rule = [](std::size_t n) {
    return OutputTable{{2 * n, 2 * n + 1}, {0, 0, 0, 1}};
  };
  return TruthTableFunctional({}, rule, "pair-and");
}

bool tables_extensionally_equal(const OutputTable& a, const OutputTable& b) {
  std::vector<std::size_t> use = a.use;
  use.insert(use.end(), b.use.begin(), b.use.end());
  std::sort(use.begin(), use.end());
  use.erase(std::unique(use.begin(), use.end()), use.end());
  if (use.size() >= 26) {
    throw UseTooLarge("cannot compare tables over " +
                      std::to_string(use.size()) + " positions");
  }
  for (std::size_t row = 0; row < (std::size_t{1} << use.size()); ++row) {
    auto bit_at = [&](std::size_t p) {
      auto it = std::lower_bound(use.begin(), use.end(), p);
      return static_cast<int>((row >> (it - use.begin())) & 1);
    };
    if (table_value(a, bit_at) != table_value(b, bit_at)) return false;
  }
  return true;
}

namespace {

// t computes the input bit at `position` for every assignment over
// t.use ∪ {position}.
bool acts_as_identity_at(const OutputTable& t, std::size_t position) {
  std::vector<std::size_t> use = t.use;
  use.push_back(position);
  std::sort(use.begin(), use.end());
  use.erase(std::unique(use.begin(), use.end()), use.end());
  if (use.size() >= 26) {
    throw UseTooLarge("identity check over " + std::to_string(use.size()) +
                      " positions");
  }
  for (std::size_t row = 0; row < (std::size_t{1} << use.size()); ++row) {
    auto bit_at = [&](std::size_t p) {
      auto it = std::lower_bound(use.begin(), use.end(), p);
      return static_cast<int>((row >> (it - use.begin())) & 1);
    };
    if (table_value(t, bit_at) != bit_at(position)) return false;
  }
  return true;
}

}  // namespace

bool verify_homeo_pair(const TruthTableFunctional& fwd,
                       const TruthTableFunctional& bwd, Window w) {
  for (std::size_t n = 0; n < w.limit; ++n) {
    OutputTable round = substitute_table(bwd.output(n), fwd);
    if (!acts_as_identity_at(round, n)) return false;
    OutputTable other = substitute_table(fwd.output(n), bwd);
    if (!acts_as_identity_at(other, n)) return false;
  }
  return true;
}

HomeoPair HomeoPair::checked(TruthTableFunctional fwd, TruthTableFunctional bwd,
                             Window w) {
  if (!verify_homeo_pair(fwd, bwd, w)) {
    throw Error("functionals are not mutually inverse on the window");
  }
  return HomeoPair{std::move(fwd), std::move(bwd), w};
}

HomeoPair HomeoPair::from_permutation(const Permutation& theta, Window w) {
  return checked(cantor::from_permutation(theta, w.limit),
                 cantor::from_permutation(theta.inverted(), w.limit), w);
}

}  // namespace cantor
