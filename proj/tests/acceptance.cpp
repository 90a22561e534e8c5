// Acceptance suite: runs every headline criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "cantor/generic.hpp"
#include "cantor/invariance.hpp"
#include "cantor/pipeline.hpp"
#include "cantor/reconstruct.hpp"
#include "cantor/tt.hpp"

using namespace cantor;

namespace {

std::vector<Permutation> support5_family() {
  std::vector<std::size_t> images(5);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CANTORKIT_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string output;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    output.append(buffer, got);
  }
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

// --- criteria ---------------------------------------------------------

bool reconstruction_demo_bit_exact(std::string& detail) {
  DemoReport report = demo_table_reconstruction();
  if (!report.pass) {
    detail = "demo report failed";
    return false;
  }
  const auto& steps = report.doc.at("steps");
  if (steps[0].at("detail").at("use") !=
          Json::array({4, 5, 6, 7}) ||
      steps[1].at("detail").at("use") !=
          Json::array({8, 9, 10, 11, 12, 13, 14, 15})) {
    detail = "use sets differ";
    return false;
  }
  if (steps[0].at("detail").at("rendered") != "A(4)A(5) -> A(6)A(7)" ||
      steps[1].at("detail").at("rendered") !=
          "A(8)A(9)A(10)A(11) -> A(12)A(13)A(14)A(15)") {
    detail = "rendered forms differ";
    return false;
  }
  RunResult cli = run_cli("demo indproc");
  if (cli.exit_code != 0) {
    detail = "CLI demo exited with " + std::to_string(cli.exit_code);
    return false;
  }
  return true;
}

bool inverse_recovery_family(std::string& detail) {
  for (const auto& theta : support5_family()) {
    auto k = conjugate_successor(theta, 10);
    auto recovered = recover_inverse(k, theta.inverse(0), 10);
    for (std::size_t m = 0; m < 10; ++m) {
      if (recovered[m] != theta.inverse(m)) {
        detail = "mismatch at m=" + std::to_string(m);
        return false;
      }
    }
  }
  return true;
}

bool elimination_family(std::string& detail) {
  std::size_t sampled = 0;
  for (const auto& theta : support5_family()) {
    auto g = conjugate_successor(theta, 12);
    ForcingInstance inst(OracleFunctional::bit_of_g(g), BitString(""));
    for (std::size_t n = 0; n < 12; ++n) {
      if (compute_g(inst, n, 1000000) != g[n]) {
        detail = "computed value differs at n=" + std::to_string(n);
        return false;
      }
    }
    auto report = check_convergence_bound(inst, g, 100);
    sampled += 100;
    if (!report.ok) {
      detail = "convergence bound violated";
      return false;
    }
  }
  if (sampled < 10000) {
    detail = "only " + std::to_string(sampled) + " samples";
    return false;
  }
  return true;
}

bool modulus_family(std::string& detail) {
  Window w(12);
  for (const auto& theta : support5_family()) {
    CantorMap f = induced_map_of(theta);
    for (std::size_t a = 0; a <= 4; ++a) {
      if (check_uniform(f, a, perm_modulus(theta, a), w)) {
        detail = "modulus rejected at a=" + std::to_string(a);
        return false;
      }
    }
  }
  Permutation swap05 = Permutation::transposition(0, 5);
  if (perm_modulus(swap05, 1) != 6) {
    detail = "swap(0,5) modulus is not 6";
    return false;
  }
  if (!check_uniform(induced_map_of(swap05), 1, 5, w)) {
    detail = "b=5 unexpectedly suffices for swap(0,5)";
    return false;
  }
  return true;
}

bool min_drop_criterion(std::string& detail) {
  for (std::size_t b = 0; b <= 8; ++b) {
    auto [x, y] = min_drop_counterexample(b);
    if (!eq_star_n(x, y, 1) || eq_star_n(min_drop(x), min_drop(y), b)) {
      detail = "pair fails at b=" + std::to_string(b);
      return false;
    }
  }
  for (std::size_t a = 0; a <= 4; ++a) {
    std::size_t k = std::min<std::size_t>(a, 10);
    for (int tail = 0; tail <= 1; ++tail) {
      for (std::uint64_t h = 0; h < (std::uint64_t{1} << 10); ++h) {
        BitString head = bits_msb_first(h, 10);
        Real x(head, BitString(tail ? "1" : "0"));
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
          BitString other = head;
          for (std::size_t j = 0; j < k; ++j) {
            other.set(j, static_cast<int>((v >> (k - 1 - j)) & 1));
          }
          Real y(other, BitString(tail ? "1" : "0"));
          if (!check_hamming_bound(x, y, a, Window(10))) {
            detail = "bound fails at a=" + std::to_string(a);
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool round_trip_family(std::string& detail) {
  for (const auto& theta : support5_family()) {
    HomeoPair pair = HomeoPair::from_permutation(theta, Window(10));
    TruthTableFunctional phi = conjugate_shift(pair, 10);
    auto tables = reconstruct_tables(phi, pair.forward.output(0), 8);
    for (std::size_t n = 0; n < 8; ++n) {
      if (!(tables[n] == pair.forward.output(n))) {
        detail = "table " + std::to_string(n) + " differs";
        return false;
      }
    }
  }
  return true;
}

bool induced_inverse_identity(std::string& detail) {
  for (const auto& theta : support5_family()) {
    Permutation inverse = theta.inverted();
    for (int tail = 0; tail <= 1; ++tail) {
      BitString period(tail ? "1" : "0");
      for (std::uint64_t h = 0; h < (std::uint64_t{1} << 12); ++h) {
        Real x(bits_msb_first(h, 12), period);
        Real round = induced_map(theta, induced_map(inverse, x));
        if (eq_star(round, x) != 0) {
          detail = "composition moved an input";
          return false;
        }
      }
    }
  }
  return true;
}

bool demo_determinism(std::string& detail) {
  const std::vector<std::string> runs = {
      "demo lax --theta [[0,1],[1,0]] --window 8",
      "demo lax --theta [[0,5],[5,0]] --window 8",
      "demo homeo --theta [[0,5],[5,0]] --window 8",
      "demo indproc",
  };
  for (const auto& args : runs) {
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    if (first.exit_code != 0 || second.exit_code != 0) {
      detail = "nonzero exit for: " + args;
      return false;
    }
    if (first.output != second.output || first.output.empty()) {
      detail = "outputs differ for: " + args;
      return false;
    }
  }
  return true;
}

struct Criterion {
  std::string name;
  double time_limit_seconds;  // 0 = unconstrained
  std::function<bool(std::string&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"reconstruction demo tables 1,2 bit-exact", 1.0,
       reconstruction_demo_bit_exact},
      {"inverse recovery from successor conjugate, 120-permutation family",
       5.0, inverse_recovery_family},
      {"candidate elimination recomputes the conjugate, n<12, 10^4 samples",
       30.0, elimination_family},
      {"permutation modulus uniform on window 12, tight at swap(0,5)", 60.0,
       modulus_family},
      {"min-drop counterexamples b<=8 and hamming bound on window 10", 60.0,
       min_drop_criterion},
      {"table round trip through the conjugated shift, tables 0..7", 30.0,
       round_trip_family},
      {"induced maps of inverse permutations compose to identity, window 12",
       0.0, induced_inverse_identity},
      {"repeated demo runs are byte-identical", 0.0, demo_determinism},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.body(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && criterion.time_limit_seconds > 0 &&
        seconds > criterion.time_limit_seconds) {
      ok = false;
      detail = "over time limit of " +
               std::to_string(criterion.time_limit_seconds) + "s";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    if (ok) {
      std::cout << "PASS " << criterion.name << " (" << timing << ")\n";
    } else {
      ++failures;
      std::cout << "FAIL " << criterion.name << " (" << timing << ")"
                << (detail.empty() ? "" : ": " + detail) << "\n";
    }
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures;
}
