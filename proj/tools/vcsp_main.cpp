#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "vcsp/applications.hpp"
#include "vcsp/double_cover.hpp"
#include "vcsp/generators.hpp"
#include "vcsp/hypergraph.hpp"
#include "vcsp/io.hpp"
#include "vcsp/oracle.hpp"
#include "vcsp/pipeline.hpp"
#include "vcsp/rng.hpp"

namespace {

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::optional<std::string>& path, const std::string& content,
                  std::ostream& fallback) {
  if (!path) {
    fallback << content;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + *path);
  out << content;
}

int variable_count(const vcsp::ParsedInput& input) {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, vcsp::VcspInstance>) return x.num_variables();
        else if constexpr (std::is_same_v<T, vcsp::KSatFormula>) return x.num_variables();
        else return x.n;
      },
      input);
}

void require_verifiable(int n) {
  if (n > vcsp::kMaxExhaustiveVars)
    throw UsageError("exhaustive verification supports at most " +
                     std::to_string(vcsp::kMaxExhaustiveVars) + " variables (got " +
                     std::to_string(n) + ")");
}

// Sparsifies one parsed input in its native format. Returns the output text,
// the report, and an evaluator pair for optional verification.
struct SparsifyOutcome {
  std::string text;
  vcsp::SparsifyReport report;
  std::function<double(const vcsp::VertexSet&)> original_value;
  std::function<double(const vcsp::VertexSet&)> sparsified_value;
  double weight_scale = 0.0;
};

SparsifyOutcome sparsify_any(const vcsp::ParsedInput& input, const vcsp::SamplerConfig& cfg) {
  using namespace vcsp;
  SparsifyOutcome out;
  if (const auto* inst = std::get_if<VcspInstance>(&input)) {
    auto [sparse, report] = sparsify_instance(*inst, cfg);
    out.text = to_text(sparse);
    out.report = std::move(report);
    out.original_value = [orig = *inst](const VertexSet& a) { return value(orig, a); };
    out.sparsified_value = [sp = std::move(sparse)](const VertexSet& a) { return value(sp, a); };
    out.weight_scale = inst->total_weight();
  } else if (const auto* f = std::get_if<TwoSatFormula>(&input)) {
    auto [sparse, report] = sparsify_instance(encode_2sat(*f), cfg);
    TwoSatFormula decoded = decode_2sat(sparse);
    out.text = to_text(decoded);
    out.report = std::move(report);
    out.original_value = [orig = *f](const VertexSet& a) { return two_sat_value(orig, a); };
    out.sparsified_value = [d = std::move(decoded)](const VertexSet& a) {
      return two_sat_value(d, a);
    };
    out.weight_scale = encode_2sat(*f).total_weight();
  } else if (const auto* sys = std::get_if<TwoLinSystem>(&input)) {
    auto [sparse, report] = sparsify_instance(encode_2lin(*sys), cfg);
    TwoLinSystem decoded = decode_2lin(sparse);
    out.text = to_text(decoded);
    out.report = std::move(report);
    out.original_value = [orig = *sys](const VertexSet& a) { return two_lin_value(orig, a); };
    out.sparsified_value = [d = std::move(decoded)](const VertexSet& a) {
      return two_lin_value(d, a);
    };
    out.weight_scale = encode_2lin(*sys).total_weight();
  } else {
    const auto& f = std::get<KSatFormula>(input);
    KSatFormula sparse = sparsify_ksat(f, cfg);
    out.report.eps = cfg.eps;
    out.report.seed = cfg.seed;
    out.report.total_in = f.clauses().size();
    out.report.total_out = sparse.clauses().size();
    out.report.classes.push_back({"ksat", SparsifiabilityClass::SparsifiableNontrivial,
                                  f.clauses().size(), sparse.clauses().size()});
    out.text = to_text(sparse);
    out.original_value = [orig = f](const VertexSet& a) { return k_sat_value(orig, a); };
    out.sparsified_value = [sp = std::move(sparse)](const VertexSet& a) {
      return k_sat_value(sp, a);
    };
    out.weight_scale = f.tautology_offset();
    for (const KSatClause& c : f.clauses()) out.weight_scale += c.weight;
  }
  return out;
}

int cmd_classify() {
  for (vcsp::Predicate p : vcsp::Predicate::all()) {
    std::cout << p.name() << '\t' << (p.evaluate(0, 0) ? 1 : 0) << (p.evaluate(0, 1) ? 1 : 0)
              << (p.evaluate(1, 0) ? 1 : 0) << (p.evaluate(1, 1) ? 1 : 0) << '\t'
              << to_string(vcsp::classify(p)) << '\n';
  }
  return 0;
}

int cmd_sparsify(const std::string& input_path, const vcsp::SamplerConfig& cfg, bool verify,
                 const std::optional<std::string>& out_path,
                 const std::optional<std::string>& report_path) {
  const vcsp::ParsedInput input = vcsp::parse_instance(read_file(input_path));
  SparsifyOutcome outcome = sparsify_any(input, cfg);

  int exit_code = 0;
  if (verify) {
    const int n = variable_count(input);
    require_verifiable(n);
    const vcsp::VerificationResult result = vcsp::exhaustive_max_error(
        n, outcome.original_value, outcome.sparsified_value, outcome.weight_scale);
    outcome.report.verified = result;
    if (!result.within(cfg.eps)) exit_code = kExitVerificationFailure;
  }

  write_output(out_path, outcome.text, std::cout);
  write_output(report_path, to_json_text(outcome.report), out_path ? std::cout : std::cerr);
  return exit_code;
}

int cmd_gamma(const std::string& input_path, const std::optional<std::string>& out_path) {
  const vcsp::ParsedInput input = vcsp::parse_instance(read_file(input_path));
  const auto* inst = std::get_if<vcsp::VcspInstance>(&input);
  if (!inst) throw UsageError("gamma expects a vcsp file");
  // The cover acts on the union digraph of all constraints.
  vcsp::WeightedDigraph g(inst->num_variables());
  for (const vcsp::Constraint& c : inst->constraints()) g.add_edge(c.u, c.v, c.weight);
  write_output(out_path, to_text(vcsp::gamma(g)), std::cout);
  return 0;
}

int cmd_verify(const std::string& original_path, const std::string& sparsified_path, double eps) {
  using namespace vcsp;
  ParsedInput original = parse_instance(read_file(original_path));
  ParsedInput sparsified = parse_instance(read_file(sparsified_path));
  // A mixed-arity wcnf can sparsify into one whose clauses are all short, so
  // 2SAT and k-SAT views of the wcnf family compare as k-SAT.
  if (original.index() != sparsified.index()) {
    for (ParsedInput* side : {&original, &sparsified})
      if (const auto* f = std::get_if<TwoSatFormula>(side)) *side = to_ksat(*f);
  }
  if (original.index() != sparsified.index())
    throw UsageError("the two instances use different formats");
  const int n = variable_count(original);
  if (n != variable_count(sparsified))
    throw UsageError("the two instances disagree on variable count");
  require_verifiable(n);

  VerificationResult result;
  if (const auto* a = std::get_if<VcspInstance>(&original)) {
    result = exhaustive_max_error(*a, std::get<VcspInstance>(sparsified));
  } else if (const auto* f = std::get_if<TwoSatFormula>(&original)) {
    const auto& g = std::get<TwoSatFormula>(sparsified);
    result = exhaustive_max_error(
        n, [&](const VertexSet& s) { return two_sat_value(*f, s); },
        [&](const VertexSet& s) { return two_sat_value(g, s); },
        encode_2sat(*f).total_weight());
  } else if (const auto* sys = std::get_if<TwoLinSystem>(&original)) {
    const auto& g = std::get<TwoLinSystem>(sparsified);
    result = exhaustive_max_error(
        n, [&](const VertexSet& s) { return two_lin_value(*sys, s); },
        [&](const VertexSet& s) { return two_lin_value(g, s); },
        encode_2lin(*sys).total_weight());
  } else {
    const auto& f = std::get<KSatFormula>(original);
    const auto& g = std::get<KSatFormula>(sparsified);
    double scale = f.tautology_offset();
    for (const KSatClause& c : f.clauses()) scale += c.weight;
    result = exhaustive_max_error(
        n, [&](const VertexSet& s) { return k_sat_value(f, s); },
        [&](const VertexSet& s) { return k_sat_value(g, s); }, scale);
  }

  std::cout << to_json_text(result);
  return result.within(eps) ? 0 : kExitVerificationFailure;
}

int cmd_demo(int n, int m, std::uint64_t seed, int k, int a) {
  using namespace vcsp;
  const WeightedDigraph g = random_strongly_asymmetric_digraph(n, m, 0.5, 2.0, seed);
  std::cout << "strongly asymmetric digraph: " << n << " vertices, " << g.num_edges()
            << " edges\n\n";

  std::cout << "And: dropping any edge breaks the (1 +- eps) guarantee\n";
  bool all_witnessed = true;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    WeightedDigraph candidate(g.num_vertices());
    for (std::size_t j = 0; j < g.num_edges(); ++j)
      if (j != i)
        candidate.add_edge(g.edges()[j].src, g.edges()[j].dst, g.edges()[j].weight);
    const Edge& e = g.edges()[i];
    const auto witness = and_completeness_check(g, candidate);
    if (!witness) {
      all_witnessed = false;
      continue;
    }
    const VertexSet& s = *witness;
    std::cout << "  drop (" << e.src << "->" << e.dst << ", w=" << format_weight(e.weight)
              << "): witness S={" << e.src << "," << e.dst
              << "}, And value " << format_weight(predicate_value(g, predicates::and_(), s))
              << " vs " << format_weight(predicate_value(candidate, predicates::and_(), s))
              << '\n';
  }

  const auto [x, y, z] = sum_mod_k_witness(k, a);
  std::cout << "\nSum_" << a << " (mod " << k << "): witness triple x=" << x << " y=" << y
            << " z=" << z << '\n';
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    const std::vector<int> assign = demonstrate_sum_nonsparsifiable(g, i, k, a);
    WeightedDigraph without(g.num_vertices());
    for (std::size_t j = 0; j < g.num_edges(); ++j)
      if (j != i)
        without.add_edge(g.edges()[j].src, g.edges()[j].dst, g.edges()[j].weight);
    const double with_value = sum_mod_k_value(g, assign, k, a);
    const double without_value = sum_mod_k_value(without, assign, k, a);
    std::cout << "  drop (" << e.src << "->" << e.dst << "): value "
              << format_weight(with_value) << " vs " << format_weight(without_value) << '\n';
    if (without_value != 0.0 || with_value != e.weight) all_witnessed = false;
  }
  return all_witnessed ? 0 : kExitVerificationFailure;
}

int cmd_bench(const std::string& input_path, const std::vector<double>& eps_list, int seeds,
              bool verify, double oversample, const std::optional<std::string>& out_path) {
  const vcsp::ParsedInput input = vcsp::parse_instance(read_file(input_path));
  if (verify) require_verifiable(variable_count(input));

  std::ostringstream csv;
  csv << "eps,seed,total_in,total_out";
  if (verify) csv << ",max_rel_error,zero_mismatch";
  csv << '\n';
  for (double eps : eps_list) {
    for (int seed = 0; seed < seeds; ++seed) {
      vcsp::SamplerConfig cfg{eps, static_cast<std::uint64_t>(seed), oversample,
                              vcsp::LeverageMode::Exact};
      cfg.validate();
      const SparsifyOutcome outcome = sparsify_any(input, cfg);
      csv << vcsp::format_weight(eps) << ',' << seed << ',' << outcome.report.total_in << ','
          << outcome.report.total_out;
      if (verify) {
        const vcsp::VerificationResult result =
            vcsp::exhaustive_max_error(variable_count(input), outcome.original_value,
                                       outcome.sparsified_value, outcome.weight_scale);
        csv << ',' << vcsp::format_weight(result.max_rel_error) << ','
            << (result.zero_mismatch ? 1 : 0);
      }
      csv << '\n';
    }
  }
  write_output(out_path, csv.str(), std::cout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-variable boolean VCSP sparsifier"};
  app.require_subcommand(1);

  std::string input_path, original_path, sparsified_path;
  std::optional<std::string> out_path, report_path;
  double eps = 0.25;
  double oversample = 8.0;
  std::uint64_t seed = 0;
  bool verify = false;
  int demo_n = 6, demo_m = 8, demo_k = 3, demo_a = 0;
  std::vector<double> eps_list = {0.1, 0.25, 0.5, 0.75, 0.9};
  int bench_seeds = 5;

  app.add_subcommand("classify", "print the 16 predicates and their sparsifiability classes");

  CLI::App* sparsify = app.add_subcommand("sparsify", "sparsify an instance file");
  sparsify->add_option("input", input_path, "instance file (vcsp/wcnf/2lin)")->required();
  sparsify->add_option("--eps", eps, "accuracy in (0,1)")->capture_default_str();
  sparsify->add_option("--seed", seed, "sampling seed")->capture_default_str();
  sparsify->add_option("--oversample", oversample, "oversampling constant")
      ->capture_default_str();
  sparsify->add_flag("--verify", verify, "exhaustively verify the output (n <= 24)");
  sparsify->add_option("--out", out_path, "write the sparsified instance here");
  sparsify->add_option("--report", report_path, "write the JSON report here");

  CLI::App* gamma_cmd = app.add_subcommand("gamma", "print the bipartite double cover");
  gamma_cmd->add_option("input", input_path, "vcsp instance file")->required();
  gamma_cmd->add_option("--out", out_path, "write the cover listing here");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "exhaustively compare two instances (n <= 24)");
  verify_cmd->add_option("original", original_path, "original instance")->required();
  verify_cmd->add_option("sparsified", sparsified_path, "candidate sparsifier")->required();
  verify_cmd->add_option("--eps", eps, "acceptance threshold")->capture_default_str();

  CLI::App* demo = app.add_subcommand(
      "demo-nonsparsifiable", "demonstrate the And and Sum_a lower-bound witnesses");
  demo->add_option("--n", demo_n, "vertex count")->capture_default_str();
  demo->add_option("--edges", demo_m, "edge count")->capture_default_str();
  demo->add_option("--seed", seed, "generator seed")->capture_default_str();
  demo->add_option("--k", demo_k, "alphabet size (>= 3)")->capture_default_str();
  demo->add_option("--a", demo_a, "target residue")->capture_default_str();

  CLI::App* bench = app.add_subcommand("bench", "sweep eps and seeds, emit CSV");
  bench->add_option("input", input_path, "instance file")->required();
  bench->add_option("--eps-list", eps_list, "eps values to sweep")->capture_default_str();
  bench->add_option("--seeds", bench_seeds, "seeds per eps")->capture_default_str();
  bench->add_flag("--verify", verify, "record exhaustive max error per run");
  bench->add_option("--oversample", oversample, "oversampling constant")->capture_default_str();
  bench->add_option("--out", out_path, "write the CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand("classify")) return cmd_classify();
    if (app.got_subcommand("sparsify")) {
      vcsp::SamplerConfig cfg{eps, seed, oversample, vcsp::LeverageMode::Exact};
      cfg.validate();
      return cmd_sparsify(input_path, cfg, verify, out_path, report_path);
    }
    if (app.got_subcommand("gamma")) return cmd_gamma(input_path, out_path);
    if (app.got_subcommand("verify")) return cmd_verify(original_path, sparsified_path, eps);
    if (app.got_subcommand("demo-nonsparsifiable"))
      return cmd_demo(demo_n, demo_m, seed, demo_k, demo_a);
    if (app.got_subcommand("bench"))
      return cmd_bench(input_path, eps_list, bench_seeds, verify, oversample, out_path);
  } catch (const vcsp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
