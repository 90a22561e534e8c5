#include "cantor/pipeline.hpp"

#include <algorithm>
#include <fstream>

#include "cantor/generic.hpp"
#include "cantor/invariance.hpp"
#include "cantor/reconstruct.hpp"
#include "cantor/tt.hpp"

namespace cantor {

namespace {

Json step(const std::string& name, bool pass, Json detail) {
  Json j;
  j["name"] = name;
  j["pass"] = pass;
  j["detail"] = std::move(detail);
  return j;
}

Json error_step(const Error& e) {
  Json detail;
  detail["message"] = e.what();
  return step("error", false, std::move(detail));
}

DemoReport finish(Json& report, Json steps, Json notes,
                  const std::string& transcript_path) {
  bool pass = true;
  for (const auto& s : steps) pass = pass && s.at("pass").get<bool>();
  report["steps"] = std::move(steps);
  report["notes"] = std::move(notes);
  report["pass"] = pass;
  report["transcript"] =
      transcript_path.empty() ? Json(nullptr) : Json(transcript_path);
  return DemoReport{std::move(report), pass};
}

}  // namespace

DemoReport demo_successor_conjugate(const Permutation& theta,
                                    std::size_t window,
                                    std::size_t search_limit,
                                    const std::string& transcript_path) {
  Json report;
  report["scenario"] = "lax";
  Json inputs;
  inputs["theta"] = permutation_to_json(theta);
  inputs["window"] = window;
  inputs["search_limit"] = search_limit;
  report["inputs"] = inputs;

  Json steps = Json::array();
  Json notes = Json::array();
  notes.push_back(
      "the closing order-theoretic conclusion quantifies over all infinite "
      "sequences and is reported, not checked, at this scale");

  QueryTranscript transcript;
  QueryTranscript* tr = transcript_path.empty() ? nullptr : &transcript;

  bool support_ok = theta.support_bound() <= window;
  {
    Json detail;
    detail["support_bound"] = theta.support_bound();
    steps.push_back(step("support-in-window", support_ok, std::move(detail)));
  }

  if (support_ok) {
    try {
      std::vector<std::size_t> g = conjugate_successor(theta, window);
      {
        Json detail;
        detail["g"] = g;
        steps.push_back(step("conjugate-successor", true, std::move(detail)));
      }

      ForcingInstance inst(OracleFunctional::bit_of_g(g), BitString{});
      std::vector<std::size_t> recovered;
      for (std::size_t n = 0; n < window; ++n) {
        recovered.push_back(compute_g(inst, n, search_limit, tr));
      }
      {
        Json detail;
        detail["recovered"] = recovered;
        steps.push_back(step("compute-g-matches-oracle", recovered == g,
                             std::move(detail)));
      }

      std::vector<std::size_t> expected_inverse;
      for (std::size_t m = 0; m < window; ++m) {
        expected_inverse.push_back(theta.inverse(m));
      }
      std::vector<std::size_t> inverse =
          recover_inverse(recovered, theta.inverse(0), window);
      {
        Json detail;
        detail["recovered"] = inverse;
        detail["expected"] = expected_inverse;
        steps.push_back(step("recover-inverse", inverse == expected_inverse,
                             std::move(detail)));
      }
    } catch (const Error& e) {
      steps.push_back(error_step(e));
    }
  }

  if (tr) {
    std::ofstream out(transcript_path);
    for (const auto& line : transcript) out << line << "\n";
  }
  return finish(report, std::move(steps), std::move(notes), transcript_path);
}

DemoReport demo_homeo_conjugate(const Permutation& theta, std::size_t window) {
  Json report;
  report["scenario"] = "homeo";
  Json inputs;
  inputs["theta"] = permutation_to_json(theta);
  inputs["window"] = window;
  report["inputs"] = inputs;

  Json steps = Json::array();
  Json notes = Json::array();
  notes.push_back(
      "the closing order-theoretic conclusion quantifies over all infinite "
      "sequences and is reported, not checked, at this scale");

  bool support_ok = theta.support_bound() <= window;
  {
    Json detail;
    detail["support_bound"] = theta.support_bound();
    steps.push_back(step("support-in-window", support_ok, std::move(detail)));
  }

  if (support_ok) {
    try {
      Window w(window);
      TruthTableFunctional fwd = from_permutation(theta, window);
      TruthTableFunctional bwd = from_permutation(theta.inverted(), window);
      bool inverse_ok = verify_homeo_pair(fwd, bwd, w);
      steps.push_back(step("verify-homeo-pair", inverse_ok, Json::object()));
      if (inverse_ok) {
        HomeoPair pair{std::move(fwd), std::move(bwd), w};
        TruthTableFunctional phi = conjugate_shift(pair, window);
        bool conj_ok = verify_conjugacy(pair, phi, w);
        steps.push_back(step("verify-conjugacy", conj_ok, Json::object()));

        constexpr std::size_t kModulusRange = 5;
        bool uniform_ok = true;
        std::vector<std::size_t> forward_b, backward_b;
        for (std::size_t a = 0; a < kModulusRange; ++a) {
          std::size_t bf = perm_modulus(theta, a);
          forward_b.push_back(bf);
          uniform_ok =
              uniform_ok && !check_uniform(induced_map_of(theta), a, bf, w);
          std::size_t bb = perm_modulus(theta.inverted(), a);
          backward_b.push_back(bb);
          uniform_ok = uniform_ok &&
                       !check_uniform(induced_map_of(theta.inverted()), a, bb, w);
        }
        {
          Json detail;
          detail["forward"] = forward_b;
          detail["backward"] = backward_b;
          steps.push_back(step("uniform-modulus", uniform_ok, std::move(detail)));
        }

        std::size_t upto = std::min<std::size_t>(window, 8);
        std::vector<OutputTable> tables =
            reconstruct_tables(phi, pair.forward.output(0), upto);
        bool exact = true;
        for (std::size_t n = 0; n < upto; ++n) {
          exact = exact && tables[n] == pair.forward.output(n);
        }
        {
          Json detail;
          detail["tables"] = upto;
          steps.push_back(step("reconstruct-tables", exact, std::move(detail)));
        }
      }
    } catch (const Error& e) {
      steps.push_back(error_step(e));
    }
  }

  return finish(report, std::move(steps), std::move(notes), {});
}

namespace {

// Expected tables for the reconstruction demo, row index per the use[0]
// least-significant convention.
const std::vector<std::uint8_t> kReconstructTable1 = {
    1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 1};

// 256 rows over use {8,...,15}: an implication between the conjunctions of
// the two halves; 0 exactly when the low half is all ones and the high half
// is not.
constexpr char kReconstructTable2[] =
    "1111111111111110"
    "1111111111111110"
    "1111111111111110"
    "1111111111111110"
    "1111111111111110"
    "1111111111111110"
    "1111111111111110"
    "1111111111111110"
    "1111111111111110"
    "1111111111111110"
    "1111111111111110"
    "1111111111111110"
    "1111111111111110"
    "1111111111111110"
    "1111111111111110"
    "1111111111111111";

std::vector<std::uint8_t> bits_of_literal(const char* literal) {
  std::vector<std::uint8_t> bits;
  for (const char* p = literal; *p; ++p) {
    bits.push_back(static_cast<std::uint8_t>(*p - '0'));
  }
  return bits;
}

Json table_step_detail(const OutputTable& t) {
  Json detail = table_to_json(t);
  std::string rendered = render_table_pattern(t);
  detail["rendered"] = rendered.empty() ? Json(nullptr) : Json(rendered);
  return detail;
}

}  // namespace

DemoReport demo_table_reconstruction() {
  Json report;
  report["scenario"] = "indproc";
  Json inputs;
  inputs["phi"] = "pair-and";
  inputs["table0"] = table_to_json(OutputTable{{2, 3}, {1, 0, 1, 1}});
  report["inputs"] = inputs;

  Json steps = Json::array();
  Json notes = Json::array();

  try {
    TruthTableFunctional phi = pair_and_functional();
    OutputTable table0{{2, 3}, {1, 0, 1, 1}};
    std::vector<OutputTable> tables = reconstruct_tables(phi, table0, 3);

    OutputTable expected1{{4, 5, 6, 7}, kReconstructTable1};
    OutputTable expected2{{8, 9, 10, 11, 12, 13, 14, 15},
                          bits_of_literal(kReconstructTable2)};

    bool ok1 = tables[1] == expected1 &&
               render_table_pattern(tables[1]) == "A(4)A(5) -> A(6)A(7)";
    steps.push_back(step("table-1-exact", ok1, table_step_detail(tables[1])));

    bool ok2 = tables[2] == expected2 &&
               render_table_pattern(tables[2]) ==
                   "A(8)A(9)A(10)A(11) -> A(12)A(13)A(14)A(15)";
    steps.push_back(step("table-2-exact", ok2, table_step_detail(tables[2])));
  } catch (const Error& e) {
    steps.push_back(error_step(e));
  }

  return finish(report, std::move(steps), std::move(notes), {});
}

}  // namespace cantor
