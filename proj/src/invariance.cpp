#include "cantor/invariance.hpp"

#include <algorithm>

namespace cantor {

UniformModulus UniformModulus::from_table(std::vector<std::size_t> raw) {
  std::size_t running = 0;
  for (auto& b : raw) {
    running = std::max(running, b);
    b = running;
  }
  return UniformModulus{std::move(raw)};
}

std::size_t UniformModulus::at(std::size_t a) const {
  if (a >= table.size()) {
    throw RangeExceeded("modulus table covers a < " +
                        std::to_string(table.size()) + ", asked for a = " +
                        std::to_string(a));
  }
  return table[a];
}

UniformModulus modulus_compose(const UniformModulus& outer,
                               const UniformModulus& inner) {
  std::vector<std::size_t> table;
  table.reserve(inner.table.size());
  for (std::size_t b : inner.table) table.push_back(outer.at(b));
  return UniformModulus::from_table(std::move(table));
}

CantorMap identity_map() {
  return CantorMap("identity", [](const Real& x) { return x; });
}

namespace {

std::optional<std::size_t> least_one(const Real& x) {
  for (std::size_t i = 0; i < x.head().size(); ++i) {
    if (x.head().at(i)) return i;
  }
  for (std::size_t j = 0; j < x.period().size(); ++j) {
    if (x.period().at(j)) return x.head().size() + j;
  }
  return std::nullopt;
}

}  // namespace

Real min_drop(const Real& x) {
  auto pos = least_one(x);
  if (!pos) return x;
  Real widened = x.rephased(*pos + 1);
  BitString head = widened.head();
  head.set(*pos, 0);
  return Real(std::move(head), widened.period());
}

CantorMap min_drop_map() {
  return CantorMap("min-drop", [](const Real& x) { return min_drop(x); });
}

CantorMap shift_map() {
  return CantorMap("shift", [](const Real& x) {
    if (!x.head().empty()) return Real(x.head().suffix_from(1), x.period());
    BitString rotated = x.period().suffix_from(1);
    rotated.push_back(x.period().at(0));
    return Real(BitString{}, std::move(rotated));
  });
}

CantorMap induced_map_of(const Permutation& theta) {
  std::string label = theta.is_identity() ? "perm:identity" : "perm";
  return CantorMap(std::move(label),
                   [theta](const Real& x) { return induced_map(theta, x); });
}

CantorMap compose(const CantorMap& outer, const CantorMap& inner) {
  return CantorMap(outer.description() + " after " + inner.description(),
                   [outer, inner](const Real& x) { return outer(inner(x)); });
}

std::size_t perm_modulus(const Permutation& theta, std::size_t a) {
  if (a == 0) return 0;
  std::size_t b = 0;
  for (std::size_t m = 0; m < a; ++m) b = std::max(b, theta.inverse(m));
  return b + 1;
}

UniformModulus perm_modulus_table(const Permutation& theta, std::size_t upto) {
  std::vector<std::size_t> table;
  table.reserve(upto);
  for (std::size_t a = 0; a < upto; ++a) table.push_back(perm_modulus(theta, a));
  return UniformModulus::from_table(std::move(table));
}

std::optional<UniformityCounterexample> check_uniform(const CantorMap& f,
                                                      std::size_t a,
                                                      std::size_t b, Window w) {
  if (w.limit > 26) {
    throw Error("window " + std::to_string(w.limit) +
                " is too large for exhaustive pair enumeration");
  }
  const std::size_t wl = w.limit;
  const std::size_t k = std::min(a, wl);
  for (int tail = 0; tail <= 1; ++tail) {
    const BitString period(tail ? "1" : "0");
    for (std::uint64_t h = 0; h < (std::uint64_t{1} << wl); ++h) {
      BitString head = bits_msb_first(h, wl);
      Real x(head, period);
      Real fx = f(x);
      // X =*_a Y exactly when Y shares the tail rule and the head from
      // position min(a, wl) on, so only the first k bits vary.
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
        BitString other = head;
        for (std::size_t j = 0; j < k; ++j) {
          other.set(j, static_cast<int>((v >> (k - 1 - j)) & 1));
        }
        if (other == head) continue;
        Real y(other, period);
        if (!eq_star_n(fx, f(y), b)) {
          return UniformityCounterexample{x, y, a, b};
        }
      }
    }
  }
  return std::nullopt;
}

std::pair<Real, Real> min_drop_counterexample(std::size_t b) {
  std::size_t m = std::max<std::size_t>(b, 1);
  Real y = Real::from_positions({m});
  Real x = Real::from_positions({0, m});
  return {x, y};
}

bool check_hamming_bound(const Real& x, const Real& y, std::size_t a,
                         Window w) {
  if (!eq_star_n(x, y, a)) {
    throw PreconditionViolated("inputs do not agree from position " +
                               std::to_string(a));
  }
  Real fx = min_drop(x);
  Real fy = min_drop(y);
  auto agree = eq_star(fx, fy);
  if (!agree) return false;  // infinite Hamming distance
  std::size_t bound = std::max(w.limit, *agree);
  return hamming_window(fx, fy, Window(bound)) <= a + 2;
}

namespace {

// Converged value of phi on a full eventually periodic oracle, scanned with
// growing prefixes and doubling budgets. `queries` accumulates against limit.
int converge_on_real(const OracleFunctional& phi, const Real& x, std::size_t n,
                     std::size_t limit, std::size_t& queries) {
  for (std::size_t stage = 0;; ++stage) {
    if (queries >= limit) {
      throw BudgetExhausted("no convergence on the spliced oracle within " +
                            std::to_string(limit) + " queries");
    }
    ++queries;
    BitString rho;
    for (std::size_t i = 0; i < stage; ++i) rho.push_back(x.at(i));
    std::size_t budget = std::size_t{1} << std::min<std::size_t>(stage, 62);
    if (auto r = phi.query(rho, n, budget)) return *r;
  }
}

}  // namespace

TruthTableFunctional extract_tt_from_forcing(
    const OracleFunctional& phi, const BitString& sigma, std::size_t modulus_b,
    const std::vector<OutputTable>& database, std::size_t upto,
    std::size_t probe_bound, std::size_t search_limit) {
  if (database.size() < std::min(modulus_b, upto)) {
    throw MissingDatabase("database covers " +
                          std::to_string(database.size()) +
                          " outputs, need " +
                          std::to_string(std::min(modulus_b, upto)));
  }
  if (probe_bound > 24) {
    throw Error("probe bound " + std::to_string(probe_bound) +
                " is too large for exhaustive assignment enumeration");
  }

  std::vector<OutputTable> outputs;
  outputs.reserve(upto);
  for (std::size_t n = 0; n < std::min(modulus_b, upto); ++n) {
    outputs.push_back(database[n]);
  }

  const std::uint64_t assignments = std::uint64_t{1} << probe_bound;
  for (std::size_t n = std::min(modulus_b, upto); n < upto; ++n) {
    std::vector<std::uint8_t> vals(assignments);
    std::size_t queries = 0;
    for (std::uint64_t m = 0; m < assignments; ++m) {
      // Assignment m: bit p of m is the value at position p.
      BitString head;
      for (std::size_t p = 0; p < probe_bound; ++p) {
        head.push_back(static_cast<int>((m >> p) & 1));
      }
      Real spliced = splice(sigma, Real(std::move(head), BitString("0")));
      vals[m] = static_cast<std::uint8_t>(
          converge_on_real(phi, spliced, n, search_limit, queries));
    }
    // A position belongs to the use set when flipping it changes the output
    // under some assignment of the others. Positions under sigma never do.
    std::vector<std::size_t> use;
    for (std::size_t p = 0; p < probe_bound; ++p) {
      for (std::uint64_t m = 0; m < assignments; ++m) {
        if (vals[m] != vals[m ^ (std::uint64_t{1} << p)]) {
          use.push_back(p);
          break;
        }
      }
    }
    std::vector<std::uint8_t> table(std::size_t{1} << use.size());
    for (std::size_t row = 0; row < table.size(); ++row) {
      std::uint64_t m = 0;
      for (std::size_t i = 0; i < use.size(); ++i) {
        m |= static_cast<std::uint64_t>((row >> i) & 1) << use[i];
      }
      table[row] = vals[m];
    }
    outputs.push_back(OutputTable{std::move(use), std::move(table)});
  }
  return TruthTableFunctional(std::move(outputs));
}

}  // namespace cantor
