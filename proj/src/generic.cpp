#include "cantor/generic.hpp"

#include <algorithm>

namespace cantor {

OracleFunctional::OracleFunctional(Fn fn, std::string description)
    : fn_(std::move(fn)), description_(std::move(description)) {}

std::optional<int> OracleFunctional::query(const BitString& rho, std::size_t n,
                                           std::size_t budget) const {
  if (!fn_) throw Error("oracle functional has no implementation");
  return fn_(rho, n, budget);
}

OracleFunctional OracleFunctional::bit_of_g(std::vector<std::size_t> g) {
  auto fn = [g = std::move(g)](const BitString& rho, std::size_t n,
                               std::size_t) -> std::optional<int> {
    if (n >= g.size()) return std::nullopt;
    if (g[n] >= rho.size()) return std::nullopt;
    return rho.at(g[n]);
  };
  return OracleFunctional(std::move(fn), "bit-of-g");
}

OracleFunctional OracleFunctional::never() {
  return OracleFunctional(
      [](const BitString&, std::size_t, std::size_t) -> std::optional<int> {
        return std::nullopt;
      },
      "never");
}

OracleFunctional OracleFunctional::constant(int bit) {
  return OracleFunctional(
      [bit](const BitString&, std::size_t, std::size_t) -> std::optional<int> {
        return bit & 1;
      },
      "constant:" + std::to_string(bit & 1));
}

ForcingInstance::ForcingInstance(OracleFunctional phi_, BitString sigma_,
                                 std::map<std::size_t, std::size_t> database_)
    : phi(std::move(phi_)),
      sigma(std::move(sigma_)),
      database(std::move(database_)) {
  for (auto [n, value] : database) {
    if (value >= sigma.size()) {
      throw InconsistentInstance(
          "database value " + std::to_string(value) + " for n=" +
          std::to_string(n) + " is not below |sigma|=" +
          std::to_string(sigma.size()));
    }
  }
}

namespace {

std::string transcript_line(const BitString& rho, std::size_t n,
                            std::size_t budget, std::optional<int> result) {
  std::string line = "(\"" + rho.str() + "\", " + std::to_string(n) + ", " +
                     std::to_string(budget) + ") -> ";
  line += result ? std::to_string(*result) : "diverge";
  return line;
}

// Counted, optionally transcribed access to one oracle.
struct Searcher {
  const OracleFunctional& phi;
  std::size_t n;
  std::size_t limit;
  QueryTranscript* transcript;
  std::size_t used = 0;

  std::optional<int> ask(const BitString& rho, std::size_t budget) {
    if (used >= limit) {
      throw BudgetExhausted("no convergence within " + std::to_string(limit) +
                            " oracle queries");
    }
    ++used;
    auto r = phi.query(rho, n, budget);
    if (transcript) transcript->push_back(transcript_line(rho, n, budget, r));
    return r;
  }
};

}  // namespace

HaltingExtension find_halting_extension(const OracleFunctional& phi,
                                        const BitString& tau, std::size_t n,
                                        std::size_t search_limit,
                                        QueryTranscript* transcript) {
  Searcher s{phi, n, search_limit, transcript};
  for (std::size_t stage = 0;; ++stage) {
    std::size_t budget =
        stage < 63 ? std::min<std::size_t>(std::size_t{1} << stage,
                                           std::max<std::size_t>(search_limit, 1))
                   : search_limit;
    for (std::size_t extra = 0; extra <= stage; ++extra) {
      // The query cap trips long before 63 extra bits are reachable.
      assert(extra < 63);
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << extra); ++v) {
        BitString rho = tau;
        for (std::size_t j = 0; j < extra; ++j) {
          rho.push_back(static_cast<int>((v >> (extra - 1 - j)) & 1));
        }
        if (auto r = s.ask(rho, budget)) return {std::move(rho), *r};
      }
    }
  }
}

std::size_t eliminate_pair(const ForcingInstance& inst, std::size_t n,
                           std::size_t a, std::size_t b,
                           std::size_t search_limit,
                           QueryTranscript* transcript) {
  if (a >= b) throw Error("eliminate_pair needs candidates a < b");
  BitString tau = inst.sigma;
  while (tau.size() < b + 1) tau.push_back(0);
  if (a >= inst.sigma.size()) tau.set(a, 0);
  if (b >= inst.sigma.size()) tau.set(b, 1);
  HaltingExtension ext =
      find_halting_extension(inst.phi, tau, n, search_limit, transcript);
  bool drop_a = ext.rho.at(a) != ext.value;
  bool drop_b = ext.rho.at(b) != ext.value;
  if (drop_a == drop_b) {
    throw InconsistentInstance(
        "candidates " + std::to_string(a) + " and " + std::to_string(b) +
        " are not separated by the converged value");
  }
  return drop_a ? a : b;
}

std::size_t compute_g(const ForcingInstance& inst, std::size_t n,
                      std::size_t search_limit, QueryTranscript* transcript) {
  if (auto it = inst.database.find(n); it != inst.database.end()) {
    return it->second;
  }
  // Not in the database, so the value is at least |sigma|.
  HaltingExtension ext =
      find_halting_extension(inst.phi, inst.sigma, n, search_limit, transcript);
  std::size_t lo = inst.sigma.size();
  std::size_t hi = ext.rho.size();
  if (lo >= hi) {
    throw InconsistentInstance("empty candidate interval [" +
                               std::to_string(lo) + ", " + std::to_string(hi) +
                               ")");
  }
  std::vector<std::size_t> candidates;
  for (std::size_t c = lo; c < hi; ++c) candidates.push_back(c);
  while (candidates.size() > 1) {
    std::size_t gone = eliminate_pair(inst, n, candidates[0], candidates[1],
                                      search_limit, transcript);
    candidates.erase(
        std::find(candidates.begin(), candidates.end(), gone));
  }
  return candidates.front();
}

ConvergenceBoundReport check_convergence_bound(
    const ForcingInstance& inst, const std::vector<std::size_t>& g,
    std::size_t trials) {
  constexpr std::size_t kSampleBudget = 256;
  ConvergenceBoundReport report;
  if (g.empty() || trials == 0) return report;
  std::size_t done = 0;
  for (std::size_t extra = 0; done < trials; ++extra) {
    assert(extra < 63);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << extra) && done < trials;
         ++v) {
      BitString rho = inst.sigma;
      for (std::size_t j = 0; j < extra; ++j) {
        rho.push_back(static_cast<int>((v >> (extra - 1 - j)) & 1));
      }
      for (std::size_t n = 0; n < g.size() && done < trials; ++n) {
        ++done;
        auto r = inst.phi.query(rho, n, kSampleBudget);
        if (r && g[n] >= rho.size()) {
          report.ok = false;
          report.witness_rho = rho;
          report.witness_n = n;
          return report;
        }
      }
    }
  }
  return report;
}

bool check_forcing_density(const ForcingInstance& inst,
                           const std::vector<std::size_t>& g,
                           std::size_t n_bound, std::size_t tau_bound,
                           std::size_t ext_bound) {
  if (g.size() < n_bound) throw Error("g table shorter than n_bound");
  const std::size_t budget = std::max<std::size_t>(ext_bound, 1);
  const BitString& sigma = inst.sigma;
  if (tau_bound < sigma.size()) return true;  // no admissible tau: vacuous
  for (std::size_t n = 0; n < n_bound; ++n) {
    std::size_t gn = g[n];
    for (std::size_t extra = 0; extra <= tau_bound - sigma.size(); ++extra) {
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << extra); ++v) {
        BitString tau = sigma;
        for (std::size_t j = 0; j < extra; ++j) {
          tau.push_back(static_cast<int>((v >> (extra - 1 - j)) & 1));
        }
        bool found = false;
        if (ext_bound >= tau.size()) {
          for (std::size_t more = 0; !found && more <= ext_bound - tau.size();
               ++more) {
            for (std::uint64_t w = 0; w < (std::uint64_t{1} << more); ++w) {
              BitString rho = tau;
              for (std::size_t j = 0; j < more; ++j) {
                rho.push_back(static_cast<int>((w >> (more - 1 - j)) & 1));
              }
              auto r = inst.phi.query(rho, n, budget);
              if (r && gn < rho.size() && rho.at(gn) == *r) {
                found = true;
                break;
              }
            }
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

}  // namespace cantor
