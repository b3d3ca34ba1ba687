#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hypercover/errors.hpp"
#include "hypercover/fuzz.hpp"
#include "hypercover/json_io.hpp"
#include "hypercover/stepping.hpp"

using namespace hypercover;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kSemanticFailure = 1;
constexpr int kUsageOrParse = 2;

Instance load_instance(const std::string& path) {
  return instance_from_json(parse_json_text(read_file(path)));
}

Card parse_rho(const std::string& text) {
  if (text == "omega") return Card::aleph0();
  std::string num = text;
  if (num.rfind("finite:", 0) == 0) num = num.substr(7);
  try {
    return Card::finite(std::stoull(num));
  } catch (...) {
    raise(Errc::parse_error, "rho wants a natural, finite:N or omega");
  }
}

bool certify(const Hypergraph& h, const WitnessedCover& wc) {
  return verify_witnessed_cover(h, wc) &&
         std::holds_alternative<WitnessedCover>(find_witness(h, wc.points()));
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump() << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) raise(Errc::parse_error, "cannot write " + out_path);
    out << j.dump() << "\n";
  }
}

int cmd_check(const std::string& file, unsigned k, const std::string& rho) {
  Instance inst = load_instance(file);
  CheckCResult cc = inst.hypergraph.check_c(k, parse_rho(rho));
  if (cc.ok()) {
    std::cout << "Ok\n";
    return kOk;
  }
  std::cout << "Violation";
  for (std::size_t i : *cc.violation) std::cout << " " << i;
  std::cout << "\n";
  return kSemanticFailure;
}

Cut cut_for(const Hypergraph& h, unsigned k, unsigned r) {
  bool all_finite = true;
  for (const EpSet& e : h.edges())
    if (!e.is_finite()) all_finite = false;
  if (all_finite) return build_closure_chain(h, k, r);

  EpSet u = h.universe();
  EpSet core;
  for (const EpSet& e : h.edges())
    if (e.is_finite()) core = core | e;
  Cut cut;
  cut.layers.push_back(EpSet());
  if (!core.empty() && !(core == u)) cut.layers.push_back(core);
  cut.layers.push_back(u);
  return cut;
}

int cmd_cover(const std::string& file, const std::string& strategy,
              unsigned k, unsigned r, const std::string& solver) {
  Instance inst = load_instance(file);
  const Hypergraph& h = inst.hypergraph;

  WitnessedCover wc;
  if (strategy == "brute") {
    wc = solve_brute(h);
  } else if (strategy == "two_tier") {
    wc = two_tier_cover(h, r, k);
  } else if (strategy == "layered") {
    Cut cut = cut_for(h, k, r);
    CoverSolver solve;
    if (solver == "brute")
      solve = [](const Hypergraph& piece) { return solve_brute(piece); };
    else if (solver == "maxwo")
      solve = [k, r](const Hypergraph& piece) {
        return solve_maxwo(piece, k, r);
      };
    else
      raise(Errc::parse_error, "solver must be brute or maxwo");
    wc = layered_cover(h, cut, solve);
  } else {
    raise(Errc::parse_error, "strategy must be two_tier, layered or brute");
  }

  if (!certify(h, wc)) {
    std::cerr << "error: produced cover failed self-verification\n";
    return kSemanticFailure;
  }
  emit(cover_to_json(wc), "");
  return kOk;
}

int cmd_maxwo(const std::string& file, unsigned k, unsigned r,
              const std::string& out) {
  Instance inst = load_instance(file);
  BlockOrder ord = build_maximizing(inst.hypergraph, k, r);
  if (!is_maximizing(ord, inst.hypergraph)) {
    std::cerr << "error: produced order failed self-verification\n";
    return kSemanticFailure;
  }
  emit(order_to_json(ord), out);
  return kOk;
}

int cmd_extract(const std::string& file, const std::string& order_file) {
  Instance inst = load_instance(file);
  BlockOrder ord = order_from_json(parse_json_text(read_file(order_file)));
  if (!is_maximizing(ord, inst.hypergraph))
    raise(Errc::not_maximizing, "the order does not maximize the family");
  WitnessedCover wc = extract_cover(ord, inst.hypergraph);
  if (!certify(inst.hypergraph, wc)) {
    std::cerr << "error: produced cover failed self-verification\n";
    return kSemanticFailure;
  }
  emit(cover_to_json(wc), "");
  return kOk;
}

int cmd_oracle(const std::string& file, unsigned bound) {
  Instance inst = load_instance(file);
  for (const auto& cover : brute_minimal_covers(inst.hypergraph, bound))
    std::cout << json(cover).dump() << "\n";
  return kOk;
}

int cmd_gen(const std::string& kind, const GenParams& params,
            std::uint64_t seed, const std::string& out) {
  Instance inst = generate(kind, params, seed);
  emit(instance_to_json(inst), out);
  return kOk;
}

int cmd_fuzz(const FuzzConfig& cfg, const std::string& out) {
  auto reports = run_fuzz(cfg);
  std::size_t failed = 0;
  std::ostringstream lines;
  for (const TrialReport& r : reports) {
    if (!r.pass()) ++failed;
    lines << report_to_json(r).dump() << "\n";
  }
  json summary{{"trials", reports.size()},
               {"passed", reports.size() - failed},
               {"failed", failed}};
  lines << summary.dump() << "\n";
  if (out.empty()) {
    std::cout << lines.str();
  } else {
    std::ofstream f(out);
    if (!f) raise(Errc::parse_error, "cannot write " + out);
    f << lines.str();
  }
  return failed == 0 ? kOk : kSemanticFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact minimal vertex covers and maximizing well-orders over "
               "eventually periodic sets"};
  app.require_subcommand(1);

  std::string file, rho = "omega", strategy = "two_tier", solver = "brute";
  std::string order_file, out, kind = "finite_ckr";
  std::string generators_csv, checks_csv;
  unsigned k = 2, r = 1, bound = 16;
  GenParams params;
  FuzzConfig fuzz_cfg;
  std::uint64_t seed = 1;

  auto* check = app.add_subcommand("check", "decide the C(k,rho) property");
  check->add_option("file", file)->required();
  check->add_option("--k", k)->required();
  check->add_option("--rho", rho, "finite:N, a natural, or omega");

  auto* cover = app.add_subcommand("cover", "produce a witnessed minimal cover");
  cover->add_option("file", file)->required();
  cover->add_option("--strategy", strategy, "two_tier | layered | brute");
  cover->add_option("--k", k);
  cover->add_option("--r", r);
  cover->add_option("--solver", solver, "sub-solver for layered");

  auto* maxwo = app.add_subcommand("maxwo", "build a maximizing well-order");
  maxwo->add_option("file", file)->required();
  maxwo->add_option("--k", k)->required();
  maxwo->add_option("--r", r)->required();
  maxwo->add_option("--out", out);

  auto* extract = app.add_subcommand("extract", "extract a cover from an order");
  extract->add_option("file", file)->required();
  extract->add_option("--order", order_file)->required();

  auto* oracle = app.add_subcommand("oracle", "list all minimal covers");
  oracle->add_option("file", file)->required();
  oracle->add_option("--bound", bound, "universe size bound");

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--kind", kind,
                  "finite_ckr | epset_ckr | sunflower_violation | mixed");
  gen->add_option("--k", params.k);
  gen->add_option("--r", params.r);
  gen->add_option("--edges", params.edges);
  gen->add_option("--verts", params.max_vertex);
  gen->add_option("--seed", seed);
  gen->add_option("--out", out);

  auto* fuzz = app.add_subcommand("fuzz", "run generator/check pairs");
  fuzz->add_option("--trials", fuzz_cfg.trials);
  fuzz->add_option("--seed", fuzz_cfg.seed);
  fuzz->add_option("--generators", generators_csv, "comma-separated filter");
  fuzz->add_option("--checks", checks_csv, "comma-separated filter");
  fuzz->add_option("--jobs", fuzz_cfg.jobs);
  fuzz->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsageOrParse;
  }

  auto split_csv = [](const std::string& csv) {
    std::vector<std::string> out_names;
    std::string cur;
    for (char c : csv) {
      if (c == ',') {
        if (!cur.empty()) out_names.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) out_names.push_back(cur);
    return out_names;
  };

  try {
    if (check->parsed()) return cmd_check(file, k, rho);
    if (cover->parsed()) return cmd_cover(file, strategy, k, r, solver);
    if (maxwo->parsed()) return cmd_maxwo(file, k, r, out);
    if (extract->parsed()) return cmd_extract(file, order_file);
    if (oracle->parsed()) return cmd_oracle(file, bound);
    if (gen->parsed()) return cmd_gen(kind, params, seed, out);
    if (fuzz->parsed()) {
      fuzz_cfg.generators = split_csv(generators_csv);
      fuzz_cfg.checks = split_csv(checks_csv);
      return cmd_fuzz(fuzz_cfg, out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::parse_error ? kUsageOrParse : kSemanticFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemanticFailure;
  }
  return kUsageOrParse;
}
