#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "auctionlab/errors.hpp"
#include "auctionlab/json_io.hpp"
#include "auctionlab/lp.hpp"
#include "auctionlab/mechanism.hpp"
#include "auctionlab/myerson.hpp"
#include "auctionlab/protocol.hpp"
#include "auctionlab/verify.hpp"

namespace {

using namespace auctionlab;

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t seed) {
  if (opt->count() > 0) return seed;
  if (const char* env = std::getenv("AUCTION_LAB_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

std::string random_bits(int n, std::mt19937_64& rng) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (char& c : s) c = (rng() & 1) ? '1' : '0';
  return s;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

void emit_json(const json& j, const std::string& out_path) {
  emit(j.dump(2) + "\n", out_path);
}

std::string outcome_name(const OutcomeSupport& o) {
  std::string s;
  if (o.bidder1) s += s.empty() ? "Bidder1" : "+Bidder1";
  if (o.bidder2) s += s.empty() ? "Bidder2" : "+Bidder2";
  if (o.none) s += s.empty() ? "None" : "+None";
  return s.empty() ? "None" : s;
}

// Distinct values in [1, n^2] with weights in [1, n]; the shapes whose
// encoded rationals stay logarithmic in n.
SingleDimDistribution random_polybounded(int support, long max_value, long max_weight,
                                         std::mt19937_64& rng) {
  std::set<long> chosen;
  std::uniform_int_distribution<long> value_dist(1, max_value);
  while (static_cast<int>(chosen.size()) < support) chosen.insert(value_dist(rng));
  std::vector<Rational> values(chosen.begin(), chosen.end());
  std::uniform_int_distribution<long> weight_dist(1, max_weight);
  std::vector<Integer> weights;
  Integer total = 0;
  for (int i = 0; i < support; ++i) {
    weights.push_back(Integer(weight_dist(rng)));
    total += weights.back();
  }
  std::vector<Rational> probs;
  for (const Integer& w : weights) probs.push_back(make_rational(w, total));
  return make_single_dim(std::move(values), std::move(probs));
}

int cmd_gen(int n, std::string x, std::string y, std::uint64_t seed, const std::string& out,
            const std::string& trace_path) {
  if (x.empty() != y.empty()) throw UsageError("--x and --y must be given together");
  if (x.empty()) {
    if (n <= 0) throw UsageError("--n is required when --x/--y are not given");
    std::mt19937_64 rng(seed);
    x = random_bits(n, rng);
    y = random_bits(n, rng);
  }
  DisjInput in = disj_input_from_strings(x, y);
  if (n > 0 && n != in.n()) throw UsageError("--n disagrees with the bit string length");
  ReductionTrace trace;
  Instance inst = build_instance(in, &trace);
  emit_json(instance_to_json(inst), out);
  if (!trace_path.empty()) emit_json(trace_to_json(trace), trace_path);
  return 0;
}

int cmd_disj(const std::string& x, const std::string& y) {
  DisjInput in = disj_input_from_strings(x, y);
  std::cout << (disj_oracle(in) ? "yes" : "no") << "\n";
  CertifiedAuction cert = certify_auction(build_instance(in, nullptr));
  OutcomeSupport at_lowest = outcome_at(cert.m, flat_index({1, 1}), flat_index({1, 1}));
  std::cout << "allocation at lowest profile: " << outcome_name(at_lowest)
            << (cert.certified ? " (certified)" : " (not certified)") << "\n";
  return 0;
}

int cmd_flow(const std::string& instance_path, bool modified, const std::string& out,
             const std::string& virtuals_path) {
  Instance inst = instance_from_json(json::parse(read_text_file(instance_path)));
  Flow fl;
  json j;
  if (modified) {
    ModifiedFlowResult mod = modified_flow(inst);
    fl = mod.flow;
    j = flow_to_json(fl);
    j["eps"] = rational_json(mod.eps);
    j["k_star"] = mod.k_star ? json(*mod.k_star) : json(nullptr);
  } else {
    fl = canonical_flow(inst);
    j = flow_to_json(fl);
  }
  emit_json(j, out);
  if (!virtuals_path.empty()) emit(virtuals_csv(inst, fl), virtuals_path);
  return 0;
}

int cmd_virtuals(const std::string& instance_path, const std::string& flow_path, bool modified,
                 const std::string& out) {
  Instance inst = instance_from_json(json::parse(read_text_file(instance_path)));
  Flow fl;
  if (!flow_path.empty())
    fl = flow_from_json(inst, json::parse(read_text_file(flow_path)));
  else if (modified)
    fl = modified_flow(inst).flow;
  else
    fl = canonical_flow(inst);
  emit(virtuals_csv(inst, fl), out);
  return 0;
}

int cmd_certify(const std::string& instance_path, const std::string& mechanism,
                const std::string& flow_path, int k_star_arg, const std::string& out) {
  Instance inst = instance_from_json(json::parse(read_text_file(instance_path)));
  Flow fl;
  Mechanism m;
  json extra;
  if (mechanism == "spa1") {
    fl = flow_path.empty() ? canonical_flow(inst)
                           : flow_from_json(inst, json::parse(read_text_file(flow_path)));
    m = spa_bidder1(inst);
  } else if (mechanism == "careful") {
    ModifiedFlowResult mod = modified_flow(inst);
    int k_star = k_star_arg;
    if (k_star <= 0) {
      if (!mod.k_star)
        throw UsageError("no tight level exists for this instance; pass --k-star");
      k_star = *mod.k_star;
    }
    fl = flow_path.empty() ? mod.flow
                           : flow_from_json(inst, json::parse(read_text_file(flow_path)));
    m = spa_careful(inst, k_star);
    extra["k_star"] = k_star;
  } else {
    throw UsageError("--mechanism must be spa1 or careful");
  }
  CertificateReport bic = bic_violations(inst, m);
  CertificateReport witness = witness_report(inst, m, fl);
  bool passed = bic.passed && witness.passed;
  json j{{"mechanism", mechanism}, {"passed", passed}};
  for (auto& [key, value] : extra.items()) j[key] = value;
  j["bic"] = report_to_json(bic);
  j["witness"] = report_to_json(witness);
  emit_json(j, out);
  return passed ? 0 : 1;
}

int cmd_lp(const std::string& instance_path, const std::string& out,
           const std::string& dump_path) {
  Instance inst = instance_from_json(json::parse(read_text_file(instance_path)));
  if (!dump_path.empty()) emit(assemble_lp(inst).dump(), dump_path);
  RevenueLpResult res = solve_revenue_lp(inst);
  auto matrix_json = [](const RatMatrix& mat) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < mat.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < mat.cols(); ++c) row.push_back(rational_json(mat(r, c)));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  InterimForm F = interim_form(inst, res.m);
  json j{{"value", rational_json(res.value)},
         {"X1", matrix_json(res.m.X[0])},
         {"X2", matrix_json(res.m.X[1])},
         {"p1", json::array()},
         {"p2", json::array()},
         {"pivots", res.pivots},
         {"rows", res.solve_rows}};
  for (const Rational& p : F.p[0]) j["p1"].push_back(rational_json(p));
  for (const Rational& p : F.p[1]) j["p2"].push_back(rational_json(p));
  emit_json(j, out);
  return 0;
}

int cmd_iron(const std::string& dist_path, const std::string& out) {
  SingleDimDistribution d = single_dim_from_json(json::parse(read_text_file(dist_path)));
  emit(iron_csv(d, iron(d)), out);
  return 0;
}

int cmd_protocol(const std::string& mode, int n, const std::string& x, const std::string& y,
                 std::uint64_t seed, const std::string& out) {
  if (mode == "single-dim") {
    if (n <= 0) throw UsageError("--n is required in single-dim mode");
    std::mt19937_64 rng(seed);
    SingleDimDistribution d1 = random_polybounded(n, static_cast<long>(n) * n, n, rng);
    SingleDimDistribution d2 = random_polybounded(n, static_cast<long>(n) * n, n, rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    Rational r1 = d1.values[static_cast<std::size_t>(pick(rng))];
    Rational r2 = d2.values[static_cast<std::size_t>(pick(rng))];
    SingleDimRun run = run_singledim_protocol(d1, r1, d2, r2);
    json j{{"mode", mode},
           {"n", n},
           {"messages", run.transcript.messages.size()},
           {"bits",
            json{{"alice", run.transcript.bits_from(1)},
                 {"bob", run.transcript.bits_from(2)},
                 {"total", run.transcript.total_bits()}}},
           {"winner", run.result.winner ? json(*run.result.winner) : json(0)},
           {"price", run.result.price ? json(rational_json(*run.result.price)) : json(nullptr)}};
    emit_json(j, out);
    return 0;
  }
  if (mode != "full") throw UsageError("--mode must be single-dim or full");
  std::string xs = x, ys = y;
  if (xs.empty() != ys.empty()) throw UsageError("--x and --y must be given together");
  if (xs.empty()) {
    if (n <= 0) throw UsageError("--n is required when --x/--y are not given");
    std::mt19937_64 rng(seed);
    xs = random_bits(n, rng);
    ys = random_bits(n, rng);
  }
  DisjInput in = disj_input_from_strings(xs, ys);
  AuctionRun run = run_auction_protocol(in);
  json j{{"mode", mode},
         {"n", in.n()},
         {"messages", run.transcript.messages.size()},
         {"bits",
          json{{"alice", run.transcript.bits_from(1)},
               {"bob", run.transcript.bits_from(2)},
               {"total", run.transcript.total_bits()}}},
         {"outcome", outcome_name(run.outcome)},
         {"certified", run.certified},
         {"disj", disj_oracle(in) ? "yes" : "no"}};
  emit_json(j, out);
  return 0;
}

int cmd_verify(std::vector<int> ns, int trials, std::uint64_t seed,
               std::vector<std::string> checks) {
  if (ns.empty()) ns = {16};
  if (checks.empty()) checks = {"reduction", "canonical", "modified"};
  for (const std::string& c : checks)
    if (c != "reduction" && c != "canonical" && c != "modified")
      throw UsageError("unknown check suite: " + c);
  bool run_reduction = false, run_canonical = false, run_modified = false;
  for (const std::string& c : checks) {
    run_reduction = run_reduction || c == "reduction";
    run_canonical = run_canonical || c == "canonical";
    run_modified = run_modified || c == "modified";
  }
  bool all_pass = true;
  for (int n : ns) {
    std::vector<DisjInput> inputs = structured_inputs(n);
    std::vector<DisjInput> extra = random_inputs(n, trials, seed + static_cast<std::uint64_t>(n));
    inputs.insert(inputs.end(), extra.begin(), extra.end());

    std::vector<std::string> order;
    std::map<std::string, std::pair<bool, std::string>> agg;
    auto fold = [&](const Suite& suite, const DisjInput& in) {
      for (const CheckLine& line : suite.lines) {
        auto it = agg.find(line.name);
        if (it == agg.end()) {
          order.push_back(line.name);
          it = agg.emplace(line.name, std::make_pair(true, std::string())).first;
        }
        if (!line.pass && it->second.first) {
          it->second.first = false;
          it->second.second = "x=" + bits_to_string(in.x) + " y=" + bits_to_string(in.y) +
                              (line.detail.empty() ? "" : " " + line.detail);
        }
      }
    };
    for (const DisjInput& in : inputs) {
      if (run_reduction) fold(check_reduction(in), in);
      if (run_canonical) fold(check_canonical(in), in);
      if (run_modified) fold(check_modified(in), in);
    }
    for (const std::string& name : order) {
      const auto& [pass, detail] = agg[name];
      all_pass = all_pass && pass;
      std::cout << (pass ? "PASS " : "FAIL ") << name << " [n=" << n << "]"
                << (pass ? "" : " " + detail) << "\n";
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic laboratory for two-day auctions"};
  app.require_subcommand(1);

  int gen_n = 0;
  std::string gen_x, gen_y, gen_out, gen_trace;
  std::uint64_t gen_seed = 0;
  CLI::App* gen = app.add_subcommand("gen", "Build an auction instance from a bit pair");
  gen->add_option("--n", gen_n, "Bit-string length (random bits when --x/--y absent)");
  gen->add_option("--x", gen_x, "Bidder One's bit string");
  gen->add_option("--y", gen_y, "Bidder Two's bit string");
  CLI::Option* gen_seed_opt = gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--out", gen_out, "Instance JSON path (default stdout)");
  gen->add_option("--trace", gen_trace, "Also write the construction trace JSON here");

  std::string disj_x, disj_y;
  CLI::App* disj = app.add_subcommand("disj", "Decide disjointness of two bit strings");
  disj->add_option("--x", disj_x, "First bit string")->required();
  disj->add_option("--y", disj_y, "Second bit string")->required();

  std::string flow_instance, flow_out, flow_virtuals;
  bool flow_modified = false;
  CLI::App* flow = app.add_subcommand("flow", "Construct a flow for an instance");
  flow->add_option("--instance", flow_instance, "Instance JSON path")->required();
  flow->add_flag("--modified", flow_modified, "Boosted flow instead of the canonical one");
  flow->add_option("--out", flow_out, "Flow JSON path (default stdout)");
  flow->add_option("--virtuals", flow_virtuals, "Also write the virtual-value CSV here");

  std::string virt_instance, virt_flow, virt_out;
  bool virt_modified = false;
  CLI::App* virt = app.add_subcommand("virtuals", "Virtual-value table for an instance");
  virt->add_option("--instance", virt_instance, "Instance JSON path")->required();
  virt->add_option("--flow", virt_flow, "Flow JSON path (default: canonical)");
  virt->add_flag("--modified", virt_modified, "Use the boosted flow");
  virt->add_option("--out", virt_out, "CSV path (default stdout)");

  std::string cert_instance, cert_mechanism = "spa1", cert_flow, cert_out;
  int cert_k_star = 0;
  CLI::App* cert = app.add_subcommand("certify", "Check a mechanism against a flow");
  cert->add_option("--instance", cert_instance, "Instance JSON path")->required();
  cert->add_option("--mechanism", cert_mechanism, "spa1 or careful");
  cert->add_option("--flow", cert_flow, "Flow JSON path (default: canonical/boosted)");
  cert->add_option("--k-star", cert_k_star, "Tie level for the careful auction");
  cert->add_option("--out", cert_out, "Report JSON path (default stdout)");

  std::string lp_instance, lp_out, lp_dump;
  CLI::App* lp = app.add_subcommand("lp", "Solve the revenue program exactly");
  lp->add_option("--instance", lp_instance, "Instance JSON path")->required();
  lp->add_option("--out", lp_out, "Solution JSON path (default stdout)");
  lp->add_option("--dump", lp_dump, "Write the assembled program as text here");

  std::string iron_dist, iron_out;
  CLI::App* iron_cmd = app.add_subcommand("iron", "Iron a one-dimensional distribution");
  iron_cmd->add_option("--dist", iron_dist, "Distribution JSON path")->required();
  iron_cmd->add_option("--out", iron_out, "CSV path (default stdout)");

  std::string proto_mode, proto_x, proto_y, proto_out;
  int proto_n = 0;
  std::uint64_t proto_seed = 0;
  CLI::App* proto = app.add_subcommand("protocol", "Run a two-party protocol");
  proto->add_option("--mode", proto_mode, "single-dim or full")->required();
  proto->add_option("--n", proto_n, "Input size");
  proto->add_option("--x", proto_x, "Bit string (full mode)");
  proto->add_option("--y", proto_y, "Bit string (full mode)");
  CLI::Option* proto_seed_opt = proto->add_option("--seed", proto_seed, "Random seed");
  proto->add_option("--out", proto_out, "Summary JSON path (default stdout)");

  std::vector<int> verify_ns;
  int verify_trials = 20;
  std::uint64_t verify_seed = 0;
  std::vector<std::string> verify_checks;
  CLI::App* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--n", verify_ns, "Input sizes (repeatable; default 16)");
  verify->add_option("--trials", verify_trials, "Random pairs per size")
      ->check(CLI::PositiveNumber);
  CLI::Option* verify_seed_opt = verify->add_option("--seed", verify_seed, "Random seed");
  verify->add_option("--checks", verify_checks,
                     "Suites to run: reduction, canonical, modified (default all)");

  try {
    app.parse(argc, argv);
    if (gen->parsed())
      return cmd_gen(gen_n, gen_x, gen_y, resolve_seed(gen_seed_opt, gen_seed), gen_out,
                     gen_trace);
    if (disj->parsed()) return cmd_disj(disj_x, disj_y);
    if (flow->parsed()) return cmd_flow(flow_instance, flow_modified, flow_out, flow_virtuals);
    if (virt->parsed()) return cmd_virtuals(virt_instance, virt_flow, virt_modified, virt_out);
    if (cert->parsed())
      return cmd_certify(cert_instance, cert_mechanism, cert_flow, cert_k_star, cert_out);
    if (lp->parsed()) return cmd_lp(lp_instance, lp_out, lp_dump);
    if (iron_cmd->parsed()) return cmd_iron(iron_dist, iron_out);
    if (proto->parsed())
      return cmd_protocol(proto_mode, proto_n, proto_x, proto_y,
                          resolve_seed(proto_seed_opt, proto_seed), proto_out);
    if (verify->parsed())
      return cmd_verify(verify_ns, verify_trials, resolve_seed(verify_seed_opt, verify_seed),
                        verify_checks);
    return 2;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
