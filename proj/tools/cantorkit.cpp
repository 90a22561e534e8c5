#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cantor/generic.hpp"
#include "cantor/invariance.hpp"
#include "cantor/json_io.hpp"
#include "cantor/pipeline.hpp"
#include "cantor/reconstruct.hpp"
#include "cantor/tt.hpp"

namespace {

using cantor::Json;

// "never" | "constant:<bit>" | "bit-of-g:<json array or file>"
cantor::OracleFunctional oracle_from_spec(const std::string& spec) {
  if (spec == "never") return cantor::OracleFunctional::never();
  constexpr std::string_view kConstant = "constant:";
  if (spec.rfind(kConstant, 0) == 0) {
    std::string bit = spec.substr(kConstant.size());
    if (bit != "0" && bit != "1") {
      throw cantor::ParseError("constant oracle needs bit 0 or 1");
    }
    return cantor::OracleFunctional::constant(bit == "1");
  }
  constexpr std::string_view kBitOfG = "bit-of-g:";
  if (spec.rfind(kBitOfG, 0) == 0) {
    Json j = cantor::load_json_arg(spec.substr(kBitOfG.size()));
    return cantor::OracleFunctional::bit_of_g(cantor::nat_table_from_json(j));
  }
  throw cantor::ParseError(
      "unknown oracle: \"" + spec +
      "\" (expected never, constant:<bit>, or bit-of-g:<table>)");
}

void write_transcript(const std::string& path,
                      const cantor::QueryTranscript& transcript) {
  std::ofstream out(path);
  if (!out) throw cantor::Error("cannot write transcript to " + path);
  for (const auto& line : transcript) out << line << "\n";
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Desk-scale toolkit for truth-table functionals on Cantor space: "
      "recovering permutations and homeomorphisms from their shift "
      "conjugates, candidate elimination under forcing hypotheses, and "
      "uniform E0-invariance checks."};
  app.require_subcommand(1);

  // recover-perm
  std::string rp_k;
  std::size_t rp_seed = 0;
  auto* recover = app.add_subcommand(
      "recover-perm", "Recover an inverse permutation table from a successor "
                      "conjugate table by the seeded recursion");
  recover->add_option("--k", rp_k, "conjugate table (JSON array or file)")
      ->required();
  recover->add_option("--seed", rp_seed, "value of the inverse at 0")
      ->required();

  // compute-g
  std::string cg_phi, cg_sigma, cg_transcript;
  std::size_t cg_n = 0, cg_limit = 1000000;
  auto* computeg = app.add_subcommand(
      "compute-g", "Compute g(n) by dovetailed search and candidate "
                   "elimination against an oracle functional");
  computeg->add_option("--phi", cg_phi, "oracle spec")->required();
  computeg->add_option("--sigma", cg_sigma, "forcing condition (bits)");
  computeg->add_option("--n", cg_n, "argument")->required();
  computeg->add_option("--search-limit", cg_limit, "total query budget");
  computeg->add_option("--transcript", cg_transcript,
                       "write one line per oracle query to this file");

  // compose-tt
  std::string ct_outer, ct_inner;
  std::size_t ct_upto = 0;
  auto* composet = app.add_subcommand(
      "compose-tt", "Compose two truth-table functionals by substitution");
  composet->add_option("--outer", ct_outer, "outer functional (JSON or file)")
      ->required();
  composet->add_option("--inner", ct_inner, "inner functional (JSON or file)")
      ->required();
  composet->add_option("--upto", ct_upto,
                       "number of outputs (default: outer arity)");

  // reconstruct
  std::string rc_phi, rc_table0;
  std::size_t rc_upto = 0;
  auto* reconstruct = app.add_subcommand(
      "reconstruct", "Iterate the substitution recursion from table 0 of a "
                     "functional conjugating the shift");
  reconstruct->add_option("--phi", rc_phi, "functional (JSON or file)")
      ->required();
  reconstruct->add_option("--table0", rc_table0, "first table (JSON or file)")
      ->required();
  reconstruct->add_option("--upto", rc_upto, "number of tables")->required();

  // check-uniform
  std::string cu_map;
  std::size_t cu_a = 0, cu_b = 0, cu_window = 10;
  auto* checku = app.add_subcommand(
      "check-uniform", "Exhaustively test a uniformity modulus on a window");
  checku->add_option("--map", cu_map,
                     "identity | min-drop | shift | perm:<json>")
      ->required();
  checku->add_option("--a", cu_a, "input agreement point")->required();
  checku->add_option("--b", cu_b, "output agreement point")->required();
  checku->add_option("--window", cu_window, "head length of the test universe");

  // counterexample-mindrop
  std::size_t cm_b = 0;
  auto* mindrop = app.add_subcommand(
      "counterexample-mindrop",
      "Produce a pair refuting uniformity of the min-drop map at a=1");
  mindrop->add_option("--b", cm_b, "output agreement point to refute")
      ->required();

  // demo
  std::string demo_scenario, demo_theta = "[[0,5],[5,0]]", demo_transcript;
  std::size_t demo_window = 8, demo_limit = 1000000;
  auto* demo = app.add_subcommand("demo", "End-to-end pipeline scenarios");
  demo->add_option("scenario", demo_scenario, "lax | homeo | indproc")
      ->required()
      ->check(CLI::IsMember({"lax", "homeo", "indproc"}));
  demo->add_option("--theta", demo_theta, "permutation (JSON pairs or file)");
  demo->add_option("--window", demo_window, "check window");
  demo->add_option("--search-limit", demo_limit, "total query budget");
  demo->add_option("--transcript", demo_transcript,
                   "write oracle queries here (lax only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (recover->parsed()) {
      auto k = cantor::nat_table_from_json(cantor::load_json_arg(rp_k));
      auto inverse = cantor::recover_inverse(k, rp_seed, k.size());
      print_json(cantor::nat_table_to_json(inverse));
      return 0;
    }

    if (computeg->parsed()) {
      cantor::ForcingInstance inst(oracle_from_spec(cg_phi),
                                   cantor::BitString(cg_sigma));
      cantor::QueryTranscript transcript;
      cantor::QueryTranscript* tr =
          cg_transcript.empty() ? nullptr : &transcript;
      std::size_t value = cantor::compute_g(inst, cg_n, cg_limit, tr);
      if (tr) write_transcript(cg_transcript, transcript);
      print_json(Json(value));
      return 0;
    }

    if (composet->parsed()) {
      auto outer =
          cantor::functional_from_json(cantor::load_json_arg(ct_outer));
      auto inner =
          cantor::functional_from_json(cantor::load_json_arg(ct_inner));
      std::size_t upto = ct_upto ? ct_upto : outer.arity();
      if (upto == 0) {
        throw cantor::ParseError(
            "outer functional has no materialized outputs; pass --upto");
      }
      print_json(
          cantor::functional_to_json(cantor::tt_compose(outer, inner, upto)));
      return 0;
    }

    if (reconstruct->parsed()) {
      auto phi = cantor::functional_from_json(cantor::load_json_arg(rc_phi));
      auto table0 = cantor::table_from_json(cantor::load_json_arg(rc_table0));
      auto tables = cantor::reconstruct_tables(phi, table0, rc_upto);
      Json out = Json::array();
      for (const auto& t : tables) {
        Json item = cantor::table_to_json(t);
        std::string rendered = cantor::render_table_pattern(t);
        item["rendered"] = rendered.empty() ? Json(nullptr) : Json(rendered);
        out.push_back(item);
      }
      print_json(out);
      return 0;
    }

    if (checku->parsed()) {
      auto map = cantor::map_by_name(cu_map);
      auto witness =
          cantor::check_uniform(map, cu_a, cu_b, cantor::Window(cu_window));
      Json out;
      out["uniform"] = !witness.has_value();
      if (witness) {
        out["counterexample"] = cantor::counterexample_to_json(*witness);
      }
      print_json(out);
      return witness ? 1 : 0;
    }

    if (mindrop->parsed()) {
      auto [x, y] = cantor::min_drop_counterexample(cm_b);
      bool refutes = cantor::eq_star_n(x, y, 1) &&
                     !cantor::eq_star_n(cantor::min_drop(x),
                                        cantor::min_drop(y), cm_b);
      print_json(cantor::counterexample_to_json(
          cantor::UniformityCounterexample{x, y, 1, cm_b}));
      return refutes ? 0 : 1;
    }

    if (demo->parsed()) {
      cantor::DemoReport report;
      if (demo_scenario == "indproc") {
        report = cantor::demo_table_reconstruction();
      } else {
        auto theta = cantor::permutation_from_json(
            cantor::load_json_arg(demo_theta));
        report = demo_scenario == "lax"
                     ? cantor::demo_successor_conjugate(
                           theta, demo_window, demo_limit, demo_transcript)
                     : cantor::demo_homeo_conjugate(theta, demo_window);
      }
      std::cout << report.to_string();
      return report.pass ? 0 : 1;
    }
  } catch (const cantor::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cantor::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
