#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "turan/canonical.hpp"
#include "turan/construct.hpp"
#include "turan/embedding.hpp"
#include "turan/formulas.hpp"
#include "turan/forest.hpp"
#include "turan/graph.hpp"
#include "turan/oracle.hpp"
#include "turan/report.hpp"

namespace {

using namespace turan;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitMismatch = 3;

std::chrono::milliseconds default_timeout() {
  if (const char* env = std::getenv("TURAN_TIMEOUT")) {
    try {
      return std::chrono::milliseconds(static_cast<long long>(std::stod(env) * 1000));
    } catch (...) {
      throw ParseError("TURAN_TIMEOUT must be a number of seconds");
    }
  }
  return std::chrono::milliseconds(300000);
}

void emit(const std::string& payload, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw Error("cannot open output file: " + output_path);
  out << payload;
}

SmallGraph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.pop_back();
  if (text.empty()) throw ParseError("graph file is empty: " + path);
  if (text.front() == '{') return graph_from_json(nlohmann::json::parse(text));
  return decode_graph6(text);
}

std::string render_graph(const SmallGraph& g, const std::string& format,
                         const ConstructionDescriptor* desc) {
  if (format == "graph6") return encode_graph6(g) + "\n";
  if (format == "dot") return to_dot(g);
  if (format == "json" || format == "table") {
    nlohmann::json j = {{"graph", graph_to_json(g)}, {"graph6", encode_graph6(g)}};
    if (desc) j["descriptor"] = descriptor_to_json(*desc);
    return j.dump(2) + "\n";
  }
  throw ParseError("unknown format: " + format);
}

std::string verification_table(const VerificationReport& rep) {
  std::ostringstream out;
  out << "    n   formula  construction    oracle  verdict          unique\n";
  for (const auto& r : rep.rows) {
    out << std::setw(5) << r.n << std::setw(10) << r.formula_value << std::setw(14)
        << r.construction_edges;
    if (r.oracle_value)
      out << std::setw(10) << *r.oracle_value;
    else
      out << std::setw(10) << "-";
    out << "  " << std::left << std::setw(15) << verdict_name(r.verdict) << std::right;
    if (r.construction_unique)
      out << (*r.construction_unique ? "  yes" : "  NO");
    out << "\n";
  }
  if (rep.detected_threshold)
    out << "equality holds on [" << *rep.detected_threshold << ", " << rep.oracle_scan_limit
        << "] (oracle-checked range; not extrapolated)\n";
  else
    out << "no equality threshold detected in the oracle-checked range\n";
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Turan numbers of path and star forests: formulas, extremal "
               "constructions, containment checks, and an exact search oracle"};
  app.require_subcommand(1);

  std::string spec_text, format = "table", output_path, graph_path, range_text, variant;
  int n = 0, oracle_cap = 9, workers = 1, star_index = 0, n_max = 20;
  bool all_extremal = false;
  double timeout_s = -1;

  auto* formula = app.add_subcommand("formula", "evaluate the Turan formula for a forest");
  formula->add_option("spec", spec_text, "forest spec, e.g. \"P4+P2\" or \"2*S3+S2\"")
      ->required();
  formula->add_option("--n", n, "host graph order")->required();
  formula->add_option("--format", format, "table|json");

  auto* construct = app.add_subcommand("construct", "build the known extremal graph");
  construct->add_option("spec", spec_text)->required();
  construct->add_option("--n", n)->required();
  construct->add_option("--variant", variant, "g1|g2 (order-4 forests)");
  construct->add_option("--index", star_index, "star-forest index i (default: argmax)");
  construct->add_option("--format", format, "graph6|json|dot");
  construct->add_option("--output", output_path, "write to file instead of stdout");

  auto* check = app.add_subcommand("check", "test whether a host graph contains the forest");
  check->add_option("graph", graph_path, "host graph file (.g6 or JSON)")->required();
  check->add_option("spec", spec_text)->required();

  auto* oracle = app.add_subcommand("oracle", "exact ex(n, F) by exhaustive search");
  oracle->add_option("spec", spec_text)->required();
  oracle->add_option("--n", n)->required();
  oracle->add_flag("--all-extremal", all_extremal, "enumerate every extremal class");
  oracle->add_option("--workers", workers, "worker threads");
  oracle->add_option("--timeout", timeout_s, "seconds (default: TURAN_TIMEOUT or 300)");
  oracle->add_option("--output", output_path);

  auto* verify = app.add_subcommand("verify", "compare formula, construction and oracle over a range");
  verify->add_option("spec", spec_text)->required();
  verify->add_option("--range", range_text, "A..B")->required();
  verify->add_option("--oracle-cap", oracle_cap, "largest n for exact search");
  verify->add_option("--workers", workers);
  verify->add_option("--timeout", timeout_s);
  verify->add_option("--format", format, "table|json");
  verify->add_option("--output", output_path);

  auto* conjecture = app.add_subcommand("conjecture",
                                        "scan for a Goldberg--Magdon-Ismail counterexample");
  conjecture->add_option("spec", spec_text)->required();
  conjecture->add_option("--n-max", n_max, "scan limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  OracleOptions oracle_opt;
  oracle_opt.workers = workers;
  oracle_opt.timeout = timeout_s >= 0
                           ? std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000))
                           : default_timeout();

  if (formula->parsed()) {
    const auto spec = parse_forest(spec_text);
    const auto ev = turan_formula(spec, n);
    if (format == "json") {
      std::cout << evaluation_to_json(ev).dump(2) << "\n";
    } else {
      std::cout << "ex(" << n << ", " << render_forest(spec) << ") = " << ev.value << "  ["
                << theorem_name(ev.theorem) << "]\n";
      if (ev.argmax_i) std::cout << "argmax i = " << *ev.argmax_i << "\n";
      if (!ev.uniqueness.empty()) std::cout << "extremal graphs: " << ev.uniqueness << "\n";
      if (ev.asymptotic_caveat)
        std::cout << "note: proven only for sufficiently large n; use `verify` to probe "
                     "small n\n";
    }
    return kExitOk;
  }

  if (construct->parsed()) {
    const auto spec = parse_forest(spec_text);
    Construction cons = [&] {
      if (!variant.empty()) {
        if (classify(spec) != ForestClass::Order4Mixed)
          throw DomainError("--variant applies only to a*P4+b*S3 forests");
        int a = 0, b = 0;
        for (const auto& c : spec.components()) (c.kind == TreeKind::Path ? a : b) += 1;
        if (variant != "g1" && variant != "g2") throw ParseError("--variant must be g1 or g2");
        return order4_extremal(a, b, n, variant == "g1" ? Order4Variant::G1 : Order4Variant::G2);
      }
      if (star_index > 0) return star_extremal(spec, n, star_index);
      return extremal_construction(spec, n);
    }();
    if (find_embedding(cons.graph, spec)) {
      std::cerr << "error: construction contains its own forest; this is a bug signal\n";
      return kExitMismatch;
    }
    if (format == "table") format = "graph6";
    emit(render_graph(cons.graph, format, &cons.descriptor), output_path);
    return kExitOk;
  }

  if (check->parsed()) {
    const auto spec = parse_forest(spec_text);
    const auto host = load_graph_file(graph_path);
    if (auto emb = find_embedding(host, spec)) {
      nlohmann::json j = {{"verdict", "contains"},
                          {"witness", embedding_to_json(spec, *emb)}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "F-free\n";
    }
    return kExitOk;
  }

  if (oracle->parsed()) {
    const auto spec = parse_forest(spec_text);
    oracle_opt.enumerate_all = all_extremal;
    try {
      const auto cons = extremal_construction(spec, n);
      if (find_embedding(cons.graph, spec)) {
        std::cerr << "error: construction contains its own forest; this is a bug signal\n";
        return kExitMismatch;
      }
      oracle_opt.bound_hint = cons.graph.edge_count();
    } catch (const Error&) {
      // no construction in range: search unseeded
    }
    const auto res = exact_turan(spec, n, oracle_opt);
    emit(oracle_result_to_json(spec, res).dump(2) + "\n", output_path);
    if (res.timed_out) {
      std::cerr << "error: oracle timed out; result is partial\n";
      return kExitComputation;
    }
    return kExitOk;
  }

  if (verify->parsed()) {
    const auto spec = parse_forest(spec_text);
    const auto dots = range_text.find("..");
    if (dots == std::string::npos) throw ParseError("--range must look like A..B");
    const int lo = std::stoi(range_text.substr(0, dots));
    const int hi = std::stoi(range_text.substr(dots + 2));
    const auto rep = verify_range(spec, lo, hi, oracle_cap, oracle_opt);
    if (format == "json")
      emit(verification_to_json(spec, rep).dump(2) + "\n", output_path);
    else
      emit(verification_table(rep), output_path);
    return kExitOk;
  }

  if (conjecture->parsed()) {
    const auto spec = parse_forest(spec_text);
    if (auto rep = goldberg_counterexample(spec, n_max)) {
      std::cout << conjecture_to_json(*rep).dump(2) << "\n";
    } else {
      std::cout << "no counterexample found up to " << n_max << "\n";
    }
    return kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const turan::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const turan::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const turan::UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const turan::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  } catch (const turan::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  }
}
